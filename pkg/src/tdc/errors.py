"""Exception taxonomy shared by every module."""


class TdcError(Exception):
    """Base class for all errors raised by this package."""


class InvalidParameter(TdcError, ValueError):
    pass


class InvalidColoring(TdcError, ValueError):
    pass


class ParseError(TdcError, ValueError):
    """Malformed graph text. ``line`` and ``position`` are 1-based when known."""

    def __init__(self, message: str, line: int | None = None, position: int | None = None):
        where = []
        if line is not None:
            where.append(f"line {line}")
        if position is not None:
            where.append(f"byte {position}")
        super().__init__(f"{message} ({', '.join(where)})" if where else message)
        self.message = message
        self.line = line
        self.position = position


class NoTdcExists(TdcError):
    """The graph has an isolated vertex, so no total dominator coloring exists."""


class InstanceTooLarge(TdcError):
    pass


class BudgetExceeded(TdcError):
    """Search stopped on a node or time budget.

    ``upper_bound`` and ``witness`` hold the best total dominator coloring
    found before stopping.
    """

    def __init__(self, message: str, upper_bound: int, witness=None, nodes_explored: int = 0):
        super().__init__(f"{message}; best known upper bound {upper_bound}")
        self.upper_bound = upper_bound
        self.witness = witness
        self.nodes_explored = nodes_explored
