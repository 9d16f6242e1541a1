from itertools import combinations
from math import comb

import pytest
from hypothesis import given, settings

from oracles import brute_canonical_bits, graphs
from tdc.errors import InvalidParameter
from tdc.graph import (Graph, canonical_form, complement, complete, complete_multipartite, cycle,
                       enumerate_graphs, is_isomorphic, iterated_mycielskian, mycielskian, path, wheel)


def test_path_examples():
    assert path(1) == Graph(1)
    assert path(2).sorted_edges() == [(0, 1)]
    assert path(4).sorted_edges() == [(0, 1), (1, 2), (2, 3)]
    assert path(7).m == 6


@pytest.mark.parametrize("n", [3, 4, 6, 9])
def test_cycle_is_2_regular_connected(n):
    g = cycle(n)
    assert g.n == n and g.m == n
    assert all(g.degree(v) == 2 for v in range(n))
    seen, frontier = {0}, [0]
    while frontier:
        v = frontier.pop()
        for u in g.neighbors(v) - seen:
            seen.add(u)
            frontier.append(u)
    assert len(seen) == n


def test_cycle4_is_bipartite():
    g = cycle(4)
    assert all((i + j) % 2 == 1 for i, j in g.edges)


def test_wheel_layout():
    assert is_isomorphic(wheel(3), complete(4))
    w4 = wheel(4)
    assert (w4.n, w4.m, w4.degree(0)) == (5, 8, 4)
    w5 = wheel(5)
    assert (w5.n, w5.m) == (6, 10)
    rim = Graph(5, frozenset((i - 1, j - 1) for i, j in w5.edges if i != 0))
    assert is_isomorphic(rim, cycle(5))


def test_complete_and_multipartite():
    assert complete(5).m == comb(5, 2)
    assert complete(3) == complete_multipartite([1, 1, 1])
    assert is_isomorphic(complete_multipartite([2, 2]), cycle(4))
    star = complete_multipartite([1, 3])
    assert star.m == 3 and star.degree(0) == 3


@pytest.mark.parametrize("bad", [lambda: path(0), lambda: cycle(2), lambda: wheel(2), lambda: complete(0),
                                 lambda: complete_multipartite([]), lambda: complete_multipartite([2, 0])])
def test_invalid_parameters(bad):
    with pytest.raises(InvalidParameter):
        bad()


def test_graph_rejects_bad_edges():
    with pytest.raises(InvalidParameter):
        Graph(3, frozenset({(1, 1)}))
    with pytest.raises(InvalidParameter):
        Graph(3, frozenset({(0, 3)}))
    assert Graph(3, frozenset({(2, 0), (0, 2)})).edges == {(0, 2)}


def test_complement_examples():
    assert complement(complete(4)).m == 0
    assert is_isomorphic(complement(path(4)), path(4))
    assert is_isomorphic(complement(cycle(5)), cycle(5))


def test_mycielskian_examples():
    assert is_isomorphic(mycielskian(path(2)), cycle(5))
    grotzsch = mycielskian(cycle(5))
    assert (grotzsch.n, grotzsch.m) == (11, 20)
    single = mycielskian(Graph(1))
    assert (single.n, single.m) == (3, 1)
    assert single.edges == {(1, 2)}


def test_mycielskian_layout():
    g = path(3)
    m = mycielskian(g)
    n, w = g.n, 2 * g.n
    for i in range(n):
        assert m.neighbors(n + i) == {j for j in g.neighbors(i)} | {w}
    assert m.neighbors(w) == set(range(n, 2 * n))


def test_iterated_mycielskian():
    k3 = complete(3)
    assert iterated_mycielskian(k3, 0) == k3
    assert iterated_mycielskian(k3, 1).n == 7
    assert iterated_mycielskian(k3, 2).n == 15
    with pytest.raises(InvalidParameter):
        iterated_mycielskian(k3, -1)


@given(graphs())
def test_complement_is_an_involution(g):
    assert complement(complement(g)) == g
    assert complement(g).m == comb(g.n, 2) - g.m


@given(graphs())
def test_mycielskian_counts(g):
    m = mycielskian(g)
    assert m.n == 2 * g.n + 1
    assert m.m == 3 * g.m + g.n


@given(graphs(min_n=2, min_degree=1))
def test_mycielskian_min_degree(g):
    assert mycielskian(g).min_degree() >= 2


def _no_isolated_labeled_count(n):
    # inclusion-exclusion over the set of isolated vertices
    return sum((-1) ** k * comb(n, k) * 2 ** comb(n - k, 2) for k in range(n + 1))


def test_enumerate_examples():
    assert [g.sorted_edges() for g in enumerate_graphs(2, 1)] == [[(0, 1)]]
    brute = 0
    for mask in range(8):
        edges = [p for b, p in enumerate(combinations(range(3), 2)) if mask >> b & 1]
        if {v for e in edges for v in e} == {0, 1, 2}:
            brute += 1
    assert brute == 4
    assert sum(1 for _ in enumerate_graphs(3, 1)) == brute


@pytest.mark.parametrize("n", [1, 2, 3, 4, 5])
def test_enumerate_labeled_counts(n):
    assert sum(1 for _ in enumerate_graphs(n, 1)) == _no_isolated_labeled_count(n)
    assert sum(1 for _ in enumerate_graphs(n)) == 2 ** comb(n, 2)


def test_enumerate_labeled_has_no_duplicates():
    seen = list(enumerate_graphs(4))
    assert len(seen) == len(set(seen))


def test_dedup_matches_brute_canonicalisation():
    classes = {brute_canonical_bits(g) for g in enumerate_graphs(4, 1)}
    assert len(classes) == 7
    deduped = list(enumerate_graphs(4, 1, dedup_isomorphs=True))
    assert len(deduped) == 7
    assert {brute_canonical_bits(g) for g in deduped} == classes


@pytest.mark.parametrize("n,expected", [(1, 1), (2, 2), (3, 4), (4, 11), (5, 34), (6, 156), (7, 1044)])
def test_isomorphism_class_counts(n, expected):
    # number of unlabeled graphs on n vertices (OEIS A000088)
    assert sum(1 for _ in enumerate_graphs(n, dedup_isomorphs=True)) == expected


def test_enumerate_range():
    with pytest.raises(InvalidParameter):
        next(enumerate_graphs(0))
    with pytest.raises(InvalidParameter):
        next(enumerate_graphs(9))


@settings(max_examples=60)
@given(graphs(max_n=6))
def test_canonical_form_matches_brute_force(g):
    c = canonical_form(g)
    bits = tuple(int(c.has_edge(i, j)) for j in range(1, c.n) for i in range(j))
    assert bits == brute_canonical_bits(g)


@given(graphs(max_n=7))
def test_canonical_form_ignores_labels(g):
    import random

    perm = list(range(g.n))
    random.Random(g.m).shuffle(perm)
    assert canonical_form(g.relabel(perm)) == canonical_form(g)
    assert is_isomorphic(g, g.relabel(perm))


def test_accessors():
    w = wheel(5)
    assert w.max_degree() == 5 and w.min_degree() == 3
    assert w.has_edge(0, 3) and not w.has_edge(1, 3)
