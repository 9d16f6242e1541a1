"""Family spec micro-grammar used on the command line.

``name:param[,param]`` builds a base graph; ``myc:`` and ``comp:`` prefixes
apply the Mycielskian and the complement, innermost (rightmost) first::

    cycle:7            path:3            wheel:5
    complete:4         multipartite:2,3
    comp:cycle:6       myc:path:3        myc:myc:complete:3
"""

from __future__ import annotations

from tdc import graph as G
from tdc.errors import InvalidParameter

_BASE = {
    "path": G.path,
    "cycle": G.cycle,
    "wheel": G.wheel,
    "complete": G.complete,
}
_PREFIXES = {"myc": G.mycielskian, "comp": G.complement}


def parse_family(spec: str) -> G.Graph:
    tokens = spec.strip().split(":")
    ops = []
    while tokens and tokens[0] in _PREFIXES:
        ops.append(_PREFIXES[tokens.pop(0)])
    if len(tokens) != 2:
        raise InvalidParameter(f"bad family spec {spec!r}; expected e.g. cycle:7 or myc:path:3")
    name, params = tokens
    try:
        values = [int(p) for p in params.split(",")]
    except ValueError:
        raise InvalidParameter(f"non-integer parameter in family spec {spec!r}") from None
    if name in ("multipartite", "kpartite"):
        g = G.complete_multipartite(values)
    elif name in _BASE:
        if len(values) != 1:
            raise InvalidParameter(f"family {name!r} takes exactly one parameter")
        g = _BASE[name](values[0])
    else:
        known = ", ".join(sorted([*_BASE, "multipartite"]))
        raise InvalidParameter(f"unknown family {name!r}; known: {known}")
    for op in reversed(ops):
        g = op(g)
    return g
