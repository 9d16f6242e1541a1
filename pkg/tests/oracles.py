"""Hypothesis strategies and brute-force oracles shared by the tests.

None of these reuse the package's search code."""

from itertools import combinations, permutations, product

from hypothesis import strategies as st

from tdc.coloring import empty_private_classes
from tdc.graph import Graph
from tdc.oracle import all_tdcs


@st.composite
def graphs(draw, min_n=1, max_n=7, min_degree=0):
    n = draw(st.integers(min_n, max_n))
    pairs = list(combinations(range(n), 2))
    mask = draw(st.lists(st.booleans(), min_size=len(pairs), max_size=len(pairs)))
    g = Graph(n, frozenset(p for p, keep in zip(pairs, mask) if keep))
    if min_degree:
        # attach each low-degree vertex to its successor so the draw stays valid
        extra = set(g.edges)
        for v in range(n):
            if g.degree(v) < min_degree and n > 1:
                u = (v + 1) % n
                extra.add((min(u, v), max(u, v)))
        g = Graph(n, frozenset(extra))
    return g


def tdc_graphs(min_n=2, max_n=7):
    return graphs(min_n=min_n, max_n=max_n, min_degree=1)


def brute_canonical_bits(g: Graph) -> tuple[int, ...]:
    """Least column-major adjacency bitstring over all n! relabelings."""
    best = None
    for perm in permutations(range(g.n)):
        bits = tuple(int(g.has_edge(perm[i], perm[j])) for j in range(1, g.n) for i in range(j))
        if best is None or bits < best:
            best = bits
    return best


def brute_class(g: Graph) -> str:
    """Class decision straight from the definition, over every set partition."""
    tdcs = list(all_tdcs(g))
    k = min(f.k for f in tdcs)
    return "One" if any(empty_private_classes(g, f) for f in tdcs if f.k == k) else "Two"


def brute_proper_colorable(g: Graph, k: int) -> bool:
    return any(all(c[i] != c[j] for i, j in g.edges) for c in product(range(k), repeat=g.n))
