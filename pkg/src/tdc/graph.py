"""Simple undirected graphs on vertices ``0..n-1`` and the constructions used
throughout the package: standard families, complement, Mycielskian, and
exhaustive enumeration of small graphs.

Graphs are immutable values. Equality is structural (same ``n`` and the same
edge set), so two graphs are equal only if their labelings agree; use
:func:`is_isomorphic` to compare up to relabeling.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from functools import cached_property
from itertools import combinations
from typing import Iterable, Iterator, Sequence

from tdc.errors import InvalidParameter

MAX_ENUMERATION_ORDER = 8


@dataclass(frozen=True)
class Graph:
    n: int
    edges: frozenset[tuple[int, int]] = field(default_factory=frozenset)

    def __post_init__(self) -> None:
        if self.n < 0:
            raise InvalidParameter(f"vertex count must be nonnegative, got {self.n}")
        normalized = set()
        for e in self.edges:
            i, j = e
            if i == j:
                raise InvalidParameter(f"self-loop at vertex {i}")
            if i > j:
                i, j = j, i
            if i < 0 or j >= self.n:
                raise InvalidParameter(f"edge ({i}, {j}) out of range for n={self.n}")
            normalized.add((i, j))
        object.__setattr__(self, "edges", frozenset(normalized))

    @property
    def m(self) -> int:
        return len(self.edges)

    @cached_property
    def adjacency(self) -> tuple[int, ...]:
        """Open neighborhoods as bitmasks: bit ``u`` of ``adjacency[v]`` is set iff uv is an edge."""
        adj = [0] * self.n
        for i, j in self.edges:
            adj[i] |= 1 << j
            adj[j] |= 1 << i
        return tuple(adj)

    def has_edge(self, i: int, j: int) -> bool:
        return bool(self.adjacency[i] >> j & 1)

    def neighbors(self, v: int) -> frozenset[int]:
        return frozenset(_bits(self.adjacency[v]))

    def degree(self, v: int) -> int:
        return self.adjacency[v].bit_count()

    def min_degree(self) -> int:
        return min((a.bit_count() for a in self.adjacency), default=0)

    def max_degree(self) -> int:
        return max((a.bit_count() for a in self.adjacency), default=0)

    def sorted_edges(self) -> list[tuple[int, int]]:
        return sorted(self.edges)

    def relabel(self, perm: Sequence[int]) -> Graph:
        """Return the graph with vertex ``v`` renamed to ``perm[v]``."""
        if sorted(perm) != list(range(self.n)):
            raise InvalidParameter("relabeling must be a permutation of the vertices")
        return Graph(self.n, frozenset((perm[i], perm[j]) for i, j in self.edges))

    def __repr__(self) -> str:
        return f"Graph(n={self.n}, edges={self.sorted_edges()})"


def _bits(mask: int) -> Iterator[int]:
    while mask:
        low = mask & -mask
        yield low.bit_length() - 1
        mask ^= low


# ---------------------------------------------------------------------------
# families


def path(n: int) -> Graph:
    if n < 1:
        raise InvalidParameter(f"path needs n >= 1, got {n}")
    return Graph(n, frozenset((i, i + 1) for i in range(n - 1)))


def cycle(n: int) -> Graph:
    if n < 3:
        raise InvalidParameter(f"cycle needs n >= 3, got {n}")
    return Graph(n, frozenset((i, (i + 1) % n) for i in range(n)))


def wheel(n: int) -> Graph:
    """Wheel of order n+1: hub 0 joined to the rim cycle on 1..n."""
    if n < 3:
        raise InvalidParameter(f"wheel needs n >= 3, got {n}")
    rim = {(1 + i, 1 + (i + 1) % n) for i in range(n)}
    spokes = {(0, v) for v in range(1, n + 1)}
    return Graph(n + 1, frozenset(rim | spokes))


def complete(n: int) -> Graph:
    if n < 1:
        raise InvalidParameter(f"complete graph needs n >= 1, got {n}")
    return Graph(n, frozenset(combinations(range(n), 2)))


def complete_multipartite(parts: Sequence[int]) -> Graph:
    if not parts:
        raise InvalidParameter("complete multipartite graph needs at least one part")
    if any(p < 1 for p in parts):
        raise InvalidParameter(f"part sizes must be >= 1, got {list(parts)}")
    owner = [idx for idx, size in enumerate(parts) for _ in range(size)]
    n = len(owner)
    return Graph(n, frozenset((i, j) for i, j in combinations(range(n), 2) if owner[i] != owner[j]))


def complement(g: Graph) -> Graph:
    return Graph(g.n, frozenset(e for e in combinations(range(g.n), 2) if e not in g.edges))


def mycielskian(g: Graph) -> Graph:
    """Mycielskian with the fixed layout: originals ``0..n-1``, shadow of
    ``v`` at ``n+v``, apex at ``2n``."""
    n = g.n
    edges = set(g.edges)
    for i, j in g.edges:
        edges.add((n + i, j))
        edges.add((n + j, i))
    w = 2 * n
    edges.update((n + i, w) for i in range(n))
    return Graph(2 * n + 1, frozenset(edges))


def iterated_mycielskian(g: Graph, t: int) -> Graph:
    if t < 0:
        raise InvalidParameter(f"iteration count must be >= 0, got {t}")
    for _ in range(t):
        g = mycielskian(g)
    return g


def disjoint_union(*graphs: Graph) -> Graph:
    edges: set[tuple[int, int]] = set()
    offset = 0
    for g in graphs:
        edges.update((i + offset, j + offset) for i, j in g.edges)
        offset += g.n
    return Graph(offset, frozenset(edges))


# ---------------------------------------------------------------------------
# canonical form and isomorphism


def _pair_order(n: int) -> list[tuple[int, int]]:
    # upper triangle, column-major: (0,1), (0,2), (1,2), (0,3), ...
    return [(i, j) for j in range(1, n) for i in range(j)]


def canonical_form(g: Graph) -> Graph:
    """Relabeling of ``g`` whose upper-triangle adjacency bitstring (column-major,
    the graph6 bit order) is lexicographically least over all vertex
    permutations.

    Exhaustive over permutations, with two exact prunings: a prefix that is
    already larger than the best found is abandoned, and of two twin vertices
    (equal open or closed neighborhoods) only the first is tried at a given
    position, since swapping twins is an automorphism.
    """
    n = g.n
    if n <= 1:
        return g
    adj = g.adjacency
    twin_of: list[set[int]] = [set() for _ in range(n)]
    for a, b in combinations(range(n), 2):
        ma, mb = adj[a] & ~(1 << b), adj[b] & ~(1 << a)
        if ma == mb:
            twin_of[a].add(b)
            twin_of[b].add(a)

    best: list[int] | None = None
    best_perm: list[int] = []
    perm: list[int] = []
    cols: list[int] = []

    def column(v: int) -> int:
        col = 0
        for u in perm:
            col = (col << 1) | (adj[v] >> u & 1)
        return col

    def search(used: int) -> None:
        nonlocal best, best_perm
        j = len(perm)
        if j == n:
            if best is None or cols < best:
                best = cols.copy()
                best_perm = perm.copy()
            return
        tried: list[int] = []
        for v in range(n):
            if used >> v & 1:
                continue
            if any(t in twin_of[v] for t in tried):
                continue
            tried.append(v)
            if j == 0:
                perm.append(v)
                search(used | 1 << v)
                perm.pop()
                continue
            col = column(v)
            cols.append(col)
            if best is not None and cols > best[: len(cols)]:
                cols.pop()
                continue
            perm.append(v)
            search(used | 1 << v)
            perm.pop()
            cols.pop()

    search(0)
    # best_perm[new_label] = old vertex
    inverse = [0] * n
    for new, old in enumerate(best_perm):
        inverse[old] = new
    return g.relabel(inverse)


def canonical_key(g: Graph) -> str:
    from tdc.formats import to_graph6

    return to_graph6(canonical_form(g))


def is_isomorphic(g: Graph, h: Graph) -> bool:
    if g.n != h.n or g.m != h.m:
        return False
    if sorted(map(int.bit_count, g.adjacency)) != sorted(map(int.bit_count, h.adjacency)):
        return False
    return canonical_form(g) == canonical_form(h)


# ---------------------------------------------------------------------------
# enumeration


def _graph_from_mask(n: int, pairs: list[tuple[int, int]], mask: int) -> Graph:
    return Graph(n, frozenset(p for b, p in enumerate(pairs) if mask >> b & 1))


def _isomorphism_classes(n: int) -> list[Graph]:
    """Canonical representatives of every graph on n vertices, grown one vertex at a time."""
    classes = [Graph(1)]
    for k in range(2, n + 1):
        seen: dict[Graph, None] = {}
        for g in classes:
            for nbrs in range(1 << (k - 1)):
                extra = frozenset((i, k - 1) for i in range(k - 1) if nbrs >> i & 1)
                seen.setdefault(canonical_form(Graph(k, g.edges | extra)), None)
        classes = list(seen)
    from tdc.formats import to_graph6

    return sorted(classes, key=lambda g: (g.m, to_graph6(g)))


def enumerate_graphs(n: int, min_degree: int = 0, dedup_isomorphs: bool = False) -> Iterator[Graph]:
    """Yield every labeled graph on ``n`` vertices with minimum degree at least
    ``min_degree``, or one canonical representative per isomorphism class when
    ``dedup_isomorphs`` is set.

    Labeled order is by the edge bitmask over the column-major pair order;
    deduplicated order is by edge count, then graph6 text.
    """
    if not 1 <= n <= MAX_ENUMERATION_ORDER:
        raise InvalidParameter(f"enumeration supports 1 <= n <= {MAX_ENUMERATION_ORDER}, got {n}")
    if dedup_isomorphs:
        for g in _isomorphism_classes(n):
            if g.min_degree() >= min_degree:
                yield g
        return
    pairs = _pair_order(n)
    for mask in range(1 << len(pairs)):
        g = _graph_from_mask(n, pairs, mask)
        if g.min_degree() >= min_degree:
            yield g


def relabel_random(g: Graph, rng) -> Graph:
    perm = list(range(g.n))
    rng.shuffle(perm)
    return g.relabel(perm)


def from_edges(n: int, edges: Iterable[tuple[int, int]]) -> Graph:
    return Graph(n, frozenset(tuple(e) for e in edges))
