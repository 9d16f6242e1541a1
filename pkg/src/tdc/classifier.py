"""Class One / Class Two membership and instance-level checks of the
Mycielskian results.

A graph is Class One when some optimal total dominator coloring has a class
with an empty private neighborhood, Class Two otherwise. Deciding Class Two
means exhausting every optimal coloring, so enumeration runs under a node
budget and reports ``INCONCLUSIVE`` rather than guessing when it runs out.
"""

from __future__ import annotations

import enum
from dataclasses import dataclass

from tdc.coloring import Coloring, empty_private_classes
from tdc.errors import BudgetExceeded, InvalidParameter
from tdc.graph import Graph, mycielskian
from tdc.solver import SearchConfig, _require_tdc_possible, chi_d_t, enumerate_optimal_tdc

DEFAULT_ENUMERATION_BUDGET = 5_000_000


class Verdict(enum.Enum):
    ONE = "One"
    TWO = "Two"
    INCONCLUSIVE = "Inconclusive"


@dataclass(frozen=True)
class ClassVerdict:
    verdict: Verdict
    chi_d_t: int
    witness: Coloring | None
    empty_pn_class: int | None
    colorings_examined: int

    def to_json(self) -> dict:
        return {
            "verdict": self.verdict.value,
            "chi_d_t": self.chi_d_t,
            "witness": None if self.witness is None else str(self.witness),
            "empty_pn_class": self.empty_pn_class,
            "colorings_examined": self.colorings_examined,
        }


@dataclass(frozen=True)
class TheoremCheck:
    graph: str
    chi_g: int
    chi_mg: int
    delta: int
    verdict: ClassVerdict
    consistent: bool

    def to_json(self) -> dict:
        return {
            "graph": self.graph,
            "chi_d_t": self.chi_g,
            "chi_d_t_mycielskian": self.chi_mg,
            "delta": self.delta,
            "class": self.verdict.verdict.value,
            "consistent": self.consistent,
        }


def classify(g: Graph, cfg: SearchConfig | None = None, budget: int | None = DEFAULT_ENUMERATION_BUDGET) -> ClassVerdict:
    _require_tdc_possible(g)
    cfg = cfg or SearchConfig()
    k = chi_d_t(g, cfg).value
    examined = 0
    first: Coloring | None = None
    try:
        for f in enumerate_optimal_tdc(g, k, cfg.order, check_optimal=False, node_budget=budget):
            examined += 1
            if first is None:
                first = f
            empty = empty_private_classes(g, f)
            if empty:
                return ClassVerdict(Verdict.ONE, k, f, empty[0], examined)
    except BudgetExceeded:
        return ClassVerdict(Verdict.INCONCLUSIVE, k, None, None, examined)
    return ClassVerdict(Verdict.TWO, k, first, None, examined)


def verify_mycielskian_bounds(g: Graph, cfg: SearchConfig | None = None) -> int:
    """chi_d_t(M(g)) - chi_d_t(g); the bounds claim says this is 1 or 2."""
    _require_tdc_possible(g)
    delta = chi_d_t(mycielskian(g), cfg).value - chi_d_t(g, cfg).value
    assert delta in (1, 2), f"Mycielskian bound violated: delta={delta}"
    return delta


def verify_class_theorem(g: Graph, name: str | None = None, cfg: SearchConfig | None = None,
                         budget: int | None = DEFAULT_ENUMERATION_BUDGET) -> TheoremCheck:
    """Compare the Class verdict with chi_d_t(M(g)) - chi_d_t(g).

    ``consistent`` is false when the pair contradicts "Class One iff the
    increase is exactly 1"; an inconclusive verdict is never consistent.
    """
    _require_tdc_possible(g)
    from tdc.formats import to_graph6

    chi_g = chi_d_t(g, cfg).value
    chi_mg = chi_d_t(mycielskian(g), cfg).value
    verdict = classify(g, cfg, budget)
    delta = chi_mg - chi_g
    if verdict.verdict is Verdict.INCONCLUSIVE:
        consistent = False
    else:
        consistent = (delta == 1) == (verdict.verdict is Verdict.ONE) and delta in (1, 2)
    return TheoremCheck(name or to_graph6(g), chi_g, chi_mg, delta, verdict, consistent)


def verify_class1_lemma(g: Graph, cfg: SearchConfig | None = None,
                        budget: int | None = DEFAULT_ENUMERATION_BUDGET) -> bool | None:
    """Whether M(g) is Class One for a Class One graph ``g``.

    Returns None when a classification is inconclusive. Raises
    :class:`InvalidParameter` when ``g`` itself is not Class One.
    """
    base = classify(g, cfg, budget)
    if base.verdict is Verdict.INCONCLUSIVE:
        return None
    if base.verdict is not Verdict.ONE:
        raise InvalidParameter("the lemma applies only to Class One graphs")
    lifted = classify(mycielskian(g), cfg, budget)
    if lifted.verdict is Verdict.INCONCLUSIVE:
        return None
    return lifted.verdict is Verdict.ONE
