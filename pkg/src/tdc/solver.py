"""Exact total dominator chromatic number by branch and bound.

Vertices are colored one at a time in a fixed order. A vertex takes an
existing color (lowest index first) or opens the next new color, so each set
partition is visited at most once. Every color class carries the common
neighborhood of its current members; a vertex outside all of these can only be
dominated by a class made entirely of still-uncolored neighbors. Vertices in
that state that have pairwise disjoint uncolored neighborhoods each need their
own new class, which gives the lower bound used for pruning. A vertex with no
uncolored neighbor left in that state kills the branch outright, and at a full
assignment the bound is exactly the total-domination test.
"""

from __future__ import annotations

import enum
import multiprocessing as mp
import os
import time
from dataclasses import dataclass, field
from typing import Iterator

from tdc.coloring import Coloring, is_total_dominator
from tdc.errors import BudgetExceeded, InvalidParameter, NoTdcExists
from tdc.graph import Graph, _bits

_CHECK_EVERY = 512


class VertexOrder(enum.Enum):
    DEGENERACY = "degeneracy"
    MAX_DEGREE_FIRST = "max-degree"
    NATURAL = "natural"


@dataclass(frozen=True)
class SearchConfig:
    node_budget: int | None = None
    time_budget: float | None = None
    order: VertexOrder = VertexOrder.DEGENERACY
    workers: int = 1

    def __post_init__(self) -> None:
        if self.node_budget is not None and self.node_budget <= 0:
            raise InvalidParameter("node budget must be positive")
        if self.time_budget is not None and self.time_budget <= 0:
            raise InvalidParameter("time budget must be positive")
        if self.workers < 1:
            raise InvalidParameter("worker count must be >= 1")


@dataclass(frozen=True)
class SolveResult:
    value: int
    witness: Coloring
    nodes_explored: int = 0
    elapsed: float = field(default=0.0, compare=False)


def vertex_order(g: Graph, policy: VertexOrder = VertexOrder.DEGENERACY) -> list[int]:
    n = g.n
    if policy is VertexOrder.NATURAL:
        return list(range(n))
    if policy is VertexOrder.MAX_DEGREE_FIRST:
        return sorted(range(n), key=lambda v: (-g.degree(v), v))
    # smallest-last: peel minimum-degree vertices, then color in reverse
    adj = list(g.adjacency)
    alive = (1 << n) - 1
    removed = []
    for _ in range(n):
        v = min(_bits(alive), key=lambda u: ((adj[u] & alive).bit_count(), u))
        removed.append(v)
        alive &= ~(1 << v)
    return removed[::-1]


def _require_tdc_possible(g: Graph) -> None:
    if g.n == 0:
        raise NoTdcExists("the empty graph has no total dominator coloring")
    isolated = [v for v in range(g.n) if g.adjacency[v] == 0]
    if isolated:
        raise NoTdcExists(f"vertex {isolated[0]} is isolated")


class _Stop(Exception):
    pass


class _Search:
    """Mutable DFS state over one graph and one vertex order."""

    def __init__(self, adj: tuple[int, ...], order: list[int], node_budget=None, deadline=None, shared=None):
        self.adj = adj
        self.order = order
        self.n = n = len(order)
        self.full = (1 << n) - 1
        # rest[p] = vertices not yet colored when order[p] is about to be colored
        self.rest = [0] * (n + 1)
        for p in range(n - 1, -1, -1):
            self.rest[p] = self.rest[p + 1] | 1 << order[p]
        self.color = [-1] * n
        self.cls = [0] * n
        self.dom = [0] * n
        self.nodes = 0
        self.node_budget = node_budget
        self.deadline = deadline
        self.shared = shared
        self.budget_hit = False
        # optimisation mode
        self.bound = n + 1
        self.best: tuple[int, ...] | None = None
        self.target = 0

    # -- bookkeeping --------------------------------------------------------

    def _tick(self) -> None:
        self.nodes += 1
        if self.node_budget is not None and self.nodes > self.node_budget:
            self.budget_hit = True
            raise _Stop
        if self.nodes % _CHECK_EVERY:
            return
        if self.deadline is not None and time.monotonic() >= self.deadline:
            self.budget_hit = True
            raise _Stop
        if self.shared is not None:
            shared_bound = self.shared.value
            if shared_bound < self.bound:
                self.bound = shared_bound
            if self.bound <= self.target:
                raise _Stop

    def lower_bound(self, p: int, used: int) -> int:
        """Colors any completion of the current partial coloring must use,
        or ``n + 1`` if no completion is a total dominator coloring."""
        covered = 0
        dom = self.dom
        for c in range(used):
            covered |= dom[c]
        needy = self.full & ~covered
        if not needy:
            return used
        rest = self.rest[p]
        adj = self.adj
        taken = 0
        extra = 0
        while needy:
            low = needy & -needy
            needy ^= low
            avail = adj[low.bit_length() - 1] & rest
            if not avail:
                return self.n + 1
            if not avail & taken:
                extra += 1
                taken |= avail
        return used + extra

    # -- optimisation -------------------------------------------------------

    def optimise(self, p: int, used: int) -> None:
        self._tick()
        if p == self.n:
            self.bound = used
            self.best = tuple(self.color)
            if self.shared is not None:
                with self.shared.get_lock():
                    if used < self.shared.value:
                        self.shared.value = used
            if used <= self.target:
                raise _Stop
            return
        v = self.order[p]
        bit = 1 << v
        av = self.adj[v]
        cls, dom, color = self.cls, self.dom, self.color
        for c in range(used):
            if cls[c] & av:
                continue
            old_cls, old_dom = cls[c], dom[c]
            cls[c] = old_cls | bit
            dom[c] = old_dom & av
            color[v] = c
            if self.lower_bound(p + 1, used) < self.bound:
                self.optimise(p + 1, used)
            cls[c], dom[c] = old_cls, old_dom
        if used + 1 < self.bound:
            cls[used] = bit
            dom[used] = av
            color[v] = used
            if self.lower_bound(p + 1, used + 1) < self.bound:
                self.optimise(p + 1, used + 1)
            cls[used] = dom[used] = 0
        color[v] = -1

    # -- enumeration --------------------------------------------------------

    def enumerate(self, p: int, used: int, k: int) -> Iterator[tuple[int, ...]]:
        self._tick()
        if p == self.n:
            if used == k:
                yield tuple(self.color)
            return
        if used + (self.n - p) < k:
            return
        v = self.order[p]
        bit = 1 << v
        av = self.adj[v]
        cls, dom, color = self.cls, self.dom, self.color
        for c in range(used):
            if cls[c] & av:
                continue
            old_cls, old_dom = cls[c], dom[c]
            cls[c] = old_cls | bit
            dom[c] = old_dom & av
            color[v] = c
            if self.lower_bound(p + 1, used) <= k:
                yield from self.enumerate(p + 1, used, k)
            cls[c], dom[c] = old_cls, old_dom
        if used < k:
            cls[used] = bit
            dom[used] = av
            color[v] = used
            if self.lower_bound(p + 1, used + 1) <= k:
                yield from self.enumerate(p + 1, used + 1, k)
            cls[used] = dom[used] = 0
        color[v] = -1

    # -- prefixes for parallel fan-out --------------------------------------

    def prefixes(self, depth: int) -> list[tuple[tuple[int, ...], int]]:
        """Partial colorings of the first ``depth`` vertices, in DFS order."""
        out = []

        def walk(p: int, used: int) -> None:
            if p == depth:
                out.append((tuple(self.color[self.order[q]] for q in range(depth)), used))
                return
            v = self.order[p]
            bit, av = 1 << v, self.adj[v]
            for c in range(min(used + 1, self.bound - 1)):
                if c < used and self.cls[c] & av:
                    continue
                old_cls, old_dom = self.cls[c], self.dom[c]
                self.cls[c] = old_cls | bit
                self.dom[c] = (old_dom & av) if c < used else av
                self.color[v] = c
                nused = max(used, c + 1)
                if self.lower_bound(p + 1, nused) < self.bound:
                    walk(p + 1, nused)
                self.cls[c], self.dom[c] = old_cls, old_dom
            self.color[v] = -1

        walk(0, 0)
        return out

    def load_prefix(self, colors: tuple[int, ...]) -> None:
        self.color = [-1] * self.n
        self.cls = [0] * self.n
        self.dom = [0] * self.n
        for p, c in enumerate(colors):
            v = self.order[p]
            self.dom[c] = self.adj[v] if not self.cls[c] else self.dom[c] & self.adj[v]
            self.cls[c] |= 1 << v
            self.color[v] = c


def _greedy_upper_bound(g: Graph, order: list[int]) -> Coloring:
    """Greedy proper coloring, then repair: every vertex that dominates no
    class gets its lowest-numbered neighbor moved into a fresh singleton class."""
    n = g.n
    adj = g.adjacency
    color = [-1] * n
    for v in order:
        taken = {color[u] for u in _bits(adj[v]) if color[u] >= 0}
        color[v] = next(c for c in range(n) if c not in taken)
    while True:
        f = Coloring(tuple(color)).canonical()
        masks = f.class_masks
        bad = next((v for v in range(n) if not any(m & ~adj[v] == 0 for m in masks)), None)
        if bad is None:
            return f
        color = list(f.assignment)
        u = (adj[bad] & -adj[bad]).bit_length() - 1
        color[u] = f.k


def _witness(order: list[int], colors_by_vertex: tuple[int, ...]) -> Coloring:
    return Coloring(colors_by_vertex).canonical()


# ---------------------------------------------------------------------------
# parallel workers

_worker_state: dict = {}


def _init_worker(adj, order, shared, node_budget, deadline_in):
    _worker_state.update(
        adj=adj, order=order, shared=shared, node_budget=node_budget,
        deadline=None if deadline_in is None else time.monotonic() + deadline_in,
    )


def _solve_prefix(args):
    prefix, used, target = args
    st = _worker_state
    search = _Search(st["adj"], st["order"], st["node_budget"], st["deadline"], st["shared"])
    search.bound = st["shared"].value
    search.target = target
    if search.bound <= target:
        return None, 0, False
    search.load_prefix(prefix)
    if search.lower_bound(len(prefix), used) < search.bound:
        try:
            search.optimise(len(prefix), used)
        except _Stop:
            pass
    found = (len(set(search.best)), search.best) if search.best is not None else None
    return found, search.nodes, search.budget_hit


def chi_d_t(g: Graph, cfg: SearchConfig | None = None) -> SolveResult:
    """Total dominator chromatic number with an optimal witness.

    The witness is the first optimal coloring in the search's DFS order, so it
    depends only on the graph and the vertex-order policy, never on the
    worker count.
    """
    cfg = cfg or SearchConfig()
    _require_tdc_possible(g)
    start = time.monotonic()
    deadline = None if cfg.time_budget is None else start + cfg.time_budget
    order = vertex_order(g, cfg.order)
    lower = chromatic_number(g)
    seed = _greedy_upper_bound(g, order)
    if cfg.workers > 1:
        value, nodes = _parallel_value(g, order, seed, lower, cfg, start)
        # deterministic witness: first DFS leaf with `value` colors
        search = _Search(g.adjacency, order, None, None)
        search.bound = value + 1
        search.target = value
        try:
            search.optimise(0, 0)
        except _Stop:
            pass
        nodes += search.nodes
    else:
        search = _Search(g.adjacency, order, cfg.node_budget, deadline)
        search.bound = seed.k + 1
        search.target = lower
        try:
            search.optimise(0, 0)
        except _Stop:
            pass
        if search.budget_hit:
            best = _witness(order, search.best) if search.best is not None else seed
            if best.k > seed.k:
                best = seed
            raise BudgetExceeded("search budget exhausted", best.k, best, search.nodes)
        nodes = search.nodes
    witness = _witness(order, search.best)
    if not is_total_dominator(g, witness):
        raise AssertionError(f"internal error: witness {witness} is not a TDC")
    return SolveResult(witness.k, witness, nodes, time.monotonic() - start)


def _parallel_value(g: Graph, order, seed: Coloring, lower: int, cfg: SearchConfig, start: float):
    probe = _Search(g.adjacency, order)
    probe.bound = seed.k + 1
    depth = 0
    jobs = [((), 0)]
    while depth < g.n and len(jobs) < 8 * cfg.workers:
        depth += 1
        jobs = probe.prefixes(depth)
    ctx = mp.get_context("fork") if "fork" in mp.get_all_start_methods() else mp.get_context()
    shared = ctx.Value("i", seed.k + 1)
    remaining = None if cfg.time_budget is None else max(cfg.time_budget - (time.monotonic() - start), 1e-3)
    nodes = 0
    budget_hit = False
    best = None
    with ctx.Pool(cfg.workers, _init_worker, (g.adjacency, order, shared, cfg.node_budget, remaining)) as pool:
        for found, n_nodes, hit in pool.imap(_solve_prefix, [(p, u, lower) for p, u in jobs]):
            nodes += n_nodes
            budget_hit |= hit
            if found is not None and (best is None or found[0] < best[0]):
                best = found
    if budget_hit:
        witness = Coloring(best[1]).canonical() if best is not None and best[0] < seed.k else seed
        raise BudgetExceeded("search budget exhausted", witness.k, witness, nodes)
    value = best[0] if best is not None else seed.k
    return min(value, seed.k), nodes


def enumerate_optimal_tdc(
    g: Graph,
    k: int,
    order: VertexOrder = VertexOrder.DEGENERACY,
    check_optimal: bool = True,
    node_budget: int | None = None,
) -> Iterator[Coloring]:
    """Every total dominator coloring with exactly ``k`` classes, once per set
    partition, in canonical color numbering.

    Raises :class:`InvalidParameter` when ``k`` exceeds the optimum (checked
    unless ``check_optimal`` is false); a ``k`` below the optimum yields nothing.
    Exceeding ``node_budget`` raises :class:`BudgetExceeded`.
    """
    _require_tdc_possible(g)
    if check_optimal:
        opt = chi_d_t(g).value
        if k > opt:
            raise InvalidParameter(f"k={k} exceeds the optimum {opt}")
    search = _Search(g.adjacency, vertex_order(g, order), node_budget)
    try:
        for colors in search.enumerate(0, 0, k):
            yield Coloring(colors).canonical()
    except _Stop:
        raise BudgetExceeded("enumeration budget exhausted", k, None, search.nodes) from None


def chromatic_number(g: Graph) -> int:
    """Exact chromatic number by backtracking over k = 1, 2, ..."""
    n = g.n
    if n == 0:
        return 0
    if g.m == 0:
        return 1
    adj = g.adjacency
    order = vertex_order(g, VertexOrder.DEGENERACY)
    color = [-1] * n

    def extend(p: int, used: int, k: int) -> bool:
        if p == n:
            return True
        v = order[p]
        forbidden = {color[u] for u in _bits(adj[v])}
        for c in range(min(used + 1, k)):
            if c in forbidden:
                continue
            color[v] = c
            if extend(p + 1, max(used, c + 1), k):
                return True
        color[v] = -1
        return False

    for k in range(2, n + 1):
        if extend(0, 0, k):
            return k
    return n


def default_workers() -> int:
    try:
        return max(1, int(os.environ.get("TDC_WORKERS", "1")))
    except ValueError:
        return 1
