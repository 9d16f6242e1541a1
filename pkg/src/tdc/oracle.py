"""Brute-force reference for the total dominator chromatic number.

Deliberately naive: every set partition of the vertices is generated as a
restricted growth string and tested with :func:`is_total_dominator`. Nothing
here is shared with the branch-and-bound solver.
"""

from __future__ import annotations

import time
from typing import Iterator

from tdc.coloring import Coloring, is_total_dominator
from tdc.errors import InstanceTooLarge, NoTdcExists
from tdc.graph import Graph
from tdc.solver import SolveResult

MAX_ORDER = 10


def restricted_growth_strings(n: int) -> Iterator[tuple[int, ...]]:
    """Restricted growth strings of length n in lexicographic order.

    a[0] = 0 and a[i] <= 1 + max(a[:i]); these are in bijection with the set
    partitions of n elements (Knuth, TAOCP 7.2.1.5, Algorithm H).
    """
    if n == 0:
        yield ()
        return
    a = [0] * n
    b = [1] * n  # b[i] = 1 + max(a[:i])
    while True:
        yield tuple(a)
        j = n - 1
        while j > 0 and a[j] == b[j]:
            j -= 1
        if j == 0:
            return
        a[j] += 1
        for i in range(j + 1, n):
            a[i] = 0
            b[i] = max(b[i - 1], a[i - 1] + 1)


def all_tdcs(g: Graph) -> Iterator[Coloring]:
    for rgs in restricted_growth_strings(g.n):
        f = Coloring(rgs)
        if is_total_dominator(g, f):
            yield f


def brute_force_chi_d_t(g: Graph) -> SolveResult:
    if g.n > MAX_ORDER:
        raise InstanceTooLarge(f"brute force is limited to n <= {MAX_ORDER}, got {g.n}")
    if g.n == 0 or g.min_degree() < 1:
        raise NoTdcExists("graph has an isolated vertex")
    start = time.monotonic()
    best = None
    scanned = 0
    for rgs in restricted_growth_strings(g.n):
        scanned += 1
        f = Coloring(rgs)
        if (best is None or f.k < best.k) and is_total_dominator(g, f):
            best = f
    return SolveResult(best.k, best, scanned, time.monotonic() - start)
