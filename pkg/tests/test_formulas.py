import pytest
from hypothesis import given, settings

from oracles import tdc_graphs
from tdc import formulas as F
from tdc.coloring import Coloring, empty_private_classes, is_total_dominator
from tdc.errors import InvalidParameter
from tdc.graph import complete, cycle, mycielskian, path
from tdc.oracle import all_tdcs
from tdc.solver import chi_d_t


@pytest.mark.parametrize("fn,n,value,cls", [
    (F.formula_wheel, 4, 3, "One"),
    (F.formula_wheel, 5, 4, "One"),
    (F.formula_cycle, 4, 2, "Two"),
    (F.formula_cycle, 6, 4, "Two"),
    (F.formula_cycle, 10, 8, "One"),
    (F.formula_path, 2, 2, "Two"),
    (F.formula_path, 4, 3, "One"),
    (F.formula_path, 6, 4, "Two"),
    (F.formula_complement_cycle, 5, 4, "Two"),
    (F.formula_complement_cycle, 8, 4, "One"),
    (F.formula_complement_path, 4, 3, "One"),
    (F.formula_complete, 5, 5, "One"),
    (F.formula_iterated_complete3, 2, 5, "One"),
])
def test_formula_examples(fn, n, value, cls):
    p = fn(n)
    assert (p.chi_d_t, p.predicted_class) == (value, cls)


@pytest.mark.parametrize("fn,n,value", [
    (F.formula_myc_wheel, 4, 4), (F.formula_myc_wheel, 5, 5),
    (F.formula_myc_cycle, 4, 4), (F.formula_myc_cycle, 6, 6), (F.formula_myc_cycle, 9, 8),
    (F.formula_myc_path, 2, 4), (F.formula_myc_path, 4, 4), (F.formula_myc_path, 5, 5),
    (F.formula_myc_complement_cycle, 6, 5), (F.formula_myc_complement_path, 4, 4),
])
def test_mycielskian_formula_examples(fn, n, value):
    assert fn(n).chi_d_t == value


def test_inapplicable_ranges():
    assert not F.formula_cycle(2).applicable
    assert not F.formula_myc_complement_cycle(3).applicable
    assert not F.formula_myc_complement_path(3).applicable


def test_cycle_proof_reading_differs_only_at_small_n():
    diffs = [n for n in range(3, 30) if F.cycle_class_from_proof(n) != F.formula_cycle(n).predicted_class]
    assert diffs == [4, 5]


def test_construct_cycle_examples():
    c12 = F.construct_cycle_tdc(12)
    assert c12.is_tdc and c12.colors == 8
    c6 = F.construct_cycle_tdc(6)
    assert c6.coloring == Coloring((0, 1, 0, 1, 2, 3)) and c6.is_tdc
    c4 = F.construct_cycle_tdc(4)
    assert c4.is_tdc == is_total_dominator(cycle(4), c4.coloring)
    assert not F.construct_cycle_tdc(3).is_tdc


@pytest.mark.parametrize("n", range(3, 13))
def test_valid_cycle_constructions_never_beat_the_optimum(n):
    c = F.construct_cycle_tdc(n)
    assert c.is_tdc == is_total_dominator(cycle(n), c.coloring)
    if c.is_tdc:
        assert c.colors >= chi_d_t(cycle(n)).value


def test_construct_mycielskian_complete3():
    g, f = complete(3), Coloring((0, 1, 2))
    lifted = F.construct_mycielskian_tdc(g, f)
    assert lifted.k == 5 and is_total_dominator(mycielskian(g), lifted)
    tight = F.construct_mycielskian_tdc(g, f, 0)
    assert tight.k == 4 and is_total_dominator(mycielskian(g), tight)


def test_construct_mycielskian_rejects_bad_input():
    with pytest.raises(InvalidParameter):
        F.construct_mycielskian_tdc(path(2), Coloring((0, 1)), 0)
    with pytest.raises(InvalidParameter):
        F.construct_mycielskian_tdc(path(3), Coloring((0, 0, 1)))
    with pytest.raises(InvalidParameter):
        F.construct_mycielskian_tdc(complete(3), Coloring((0, 1, 2)), 3)


@settings(max_examples=40, deadline=None)
@given(tdc_graphs(max_n=5))
def test_constructions_are_tdcs_for_every_optimal_coloring(g):
    k = chi_d_t(g).value
    mg = mycielskian(g)
    for f in all_tdcs(g):
        if f.k != k:
            continue
        assert is_total_dominator(mg, F.construct_mycielskian_tdc(g, f))
        for i in empty_private_classes(g, f):
            lifted = F.construct_mycielskian_tdc(g, f, i)
            assert lifted.k == k + 1 and is_total_dominator(mg, lifted)


def test_proof_witnesses():
    assert F.path_class_witness(6).claim_holds
    assert F.path_class_witness(5).claim_holds
    w = F.cycle_class_witness(10)
    assert w.is_tdc and w.coloring.k == 8
    with pytest.raises(InvalidParameter):
        F.cycle_class_witness(9)
    with pytest.raises(InvalidParameter):
        F.complement_pairs_witness(6, of_path=False)
    assert F.complement_pairs_witness(8, of_path=False).is_tdc
