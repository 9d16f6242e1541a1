"""Text formats for graphs: a plain edge list and graph6."""

from __future__ import annotations

from tdc.errors import InvalidParameter, ParseError
from tdc.graph import Graph

GRAPH6_MAX_ORDER = 62


def from_edge_list(text: str) -> Graph:
    """Parse ``n`` on the first line, then one ``i j`` pair per non-empty line.

    >>> from_edge_list("3\\n0 1\\n1 2").sorted_edges()
    [(0, 1), (1, 2)]
    """
    lines = text.splitlines()
    header_idx = next((k for k, line in enumerate(lines) if line.strip()), None)
    if header_idx is None:
        raise ParseError("empty edge list, expected vertex count", line=1)
    try:
        n = int(lines[header_idx].strip())
    except ValueError:
        raise ParseError(f"bad vertex count {lines[header_idx].strip()!r}", line=header_idx + 1) from None
    if n < 0:
        raise ParseError(f"negative vertex count {n}", line=header_idx + 1)

    edges: set[tuple[int, int]] = set()
    for lineno, line in enumerate(lines[header_idx + 1 :], start=header_idx + 2):
        fields = line.split()
        if not fields:
            continue
        if len(fields) != 2:
            raise ParseError(f"expected two vertex ids, got {line.strip()!r}", line=lineno)
        try:
            i, j = int(fields[0]), int(fields[1])
        except ValueError:
            raise ParseError(f"non-integer vertex id in {line.strip()!r}", line=lineno) from None
        if not (0 <= i < n and 0 <= j < n):
            raise ParseError(f"vertex id out of range 0..{n - 1} in {line.strip()!r}", line=lineno)
        if i == j:
            raise ParseError(f"self-loop at vertex {i}", line=lineno)
        key = (min(i, j), max(i, j))
        if key in edges:
            raise ParseError(f"duplicate edge {key}", line=lineno)
        edges.add(key)
    return Graph(n, frozenset(edges))


def to_edge_list(g: Graph) -> str:
    return "\n".join([str(g.n)] + [f"{i} {j}" for i, j in g.sorted_edges()]) + "\n"


def to_graph6(g: Graph) -> str:
    if g.n > GRAPH6_MAX_ORDER:
        raise InvalidParameter(f"graph6 writer supports n <= {GRAPH6_MAX_ORDER}, got {g.n}")
    bits = [1 if (i, j) in g.edges else 0 for j in range(1, g.n) for i in range(j)]
    bits += [0] * (-len(bits) % 6)
    out = [chr(63 + g.n)]
    for k in range(0, len(bits), 6):
        val = 0
        for b in bits[k : k + 6]:
            val = (val << 1) | b
        out.append(chr(63 + val))
    return "".join(out)


def from_graph6(text: str) -> Graph:
    data = text.strip()
    if data.startswith(">>graph6<<"):
        data = data[len(">>graph6<<") :]
    if not data:
        raise ParseError("empty graph6 string", position=1)
    for pos, ch in enumerate(data, start=1):
        if not 63 <= ord(ch) <= 126:
            raise ParseError(f"invalid graph6 character {ch!r}", position=pos)
    n = ord(data[0]) - 63
    if n > GRAPH6_MAX_ORDER:
        raise ParseError(f"graph6 orders above {GRAPH6_MAX_ORDER} are not supported", position=1)
    npairs = n * (n - 1) // 2
    expected = 1 + (npairs + 5) // 6
    if len(data) != expected:
        raise ParseError(f"graph6 body for n={n} needs {expected} bytes, got {len(data)}", position=min(len(data), expected) + 1)
    bits = []
    for ch in data[1:]:
        val = ord(ch) - 63
        bits.extend((val >> s) & 1 for s in range(5, -1, -1))
    edges = set()
    k = 0
    for j in range(1, n):
        for i in range(j):
            if bits[k]:
                edges.add((i, j))
            k += 1
    if any(bits[npairs:]):
        raise ParseError("nonzero padding bits in graph6 body", position=len(data))
    return Graph(n, frozenset(edges))


def read_graph6_file(text: str) -> list[Graph]:
    graphs = []
    for lineno, line in enumerate(text.splitlines(), start=1):
        if not line.strip():
            continue
        try:
            graphs.append(from_graph6(line))
        except ParseError as exc:
            raise ParseError(exc.message, line=lineno, position=exc.position) from None
    return graphs
