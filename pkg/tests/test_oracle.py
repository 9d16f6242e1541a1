import pytest

from tdc.errors import InstanceTooLarge, NoTdcExists
from tdc.graph import Graph, cycle, path
from tdc.oracle import brute_force_chi_d_t, restricted_growth_strings


def _bell(n):
    # Bell triangle
    row = [1]
    for _ in range(n):
        nxt = [row[-1]]
        for x in row:
            nxt.append(nxt[-1] + x)
        row = nxt
    return row[0]


@pytest.mark.parametrize("n", range(0, 9))
def test_rgs_count_is_bell(n):
    strings = list(restricted_growth_strings(n))
    assert len(strings) == _bell(n)
    assert len(set(strings)) == len(strings)
    assert strings == sorted(strings)


@pytest.mark.parametrize("n", range(1, 7))
def test_rgs_growth_condition(n):
    for a in restricted_growth_strings(n):
        assert a[0] == 0
        assert all(a[i] <= 1 + max(a[:i]) for i in range(1, n))


def test_brute_force_examples():
    assert brute_force_chi_d_t(cycle(6)).value == 4
    assert brute_force_chi_d_t(path(3)).value == 2


def test_brute_force_limits():
    with pytest.raises(InstanceTooLarge):
        brute_force_chi_d_t(path(11))
    with pytest.raises(NoTdcExists):
        brute_force_chi_d_t(Graph(3, frozenset({(0, 1)})))
