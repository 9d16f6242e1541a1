"""Mechanical audit of every published closed form and class claim against
exact computation.

Each claim is evaluated per parameter value and yields one
:class:`ClaimReport`. Statuses:

* ``Agree`` / ``Disagree``: prediction and exact value both defined.
* ``Inapplicable``: the parameter lies outside every printed case.
* ``Inconclusive``: the instance is too large or a search budget ran out.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache
from typing import Callable, Iterable

from tdc import formulas as F
from tdc.classifier import Verdict, classify
from tdc.errors import BudgetExceeded, InvalidParameter, NoTdcExists
from tdc.graph import (Graph, complement, complete, complete_multipartite, cycle, iterated_mycielskian,
                       mycielskian, path, wheel)
from tdc.solver import SearchConfig, chi_d_t

AGREE, DISAGREE, INAPPLICABLE, INCONCLUSIVE = "Agree", "Disagree", "Inapplicable", "Inconclusive"
DEFAULT_MAX_ORDER = 15


@dataclass(frozen=True)
class ClaimReport:
    claim_id: str
    n: int
    predicted: object
    computed: object
    status: str
    notes: str = ""

    def to_json(self) -> dict:
        return {
            "claim_id": self.claim_id,
            "n": self.n,
            "predicted": self.predicted,
            "computed": self.computed,
            "status": self.status,
            "notes": self.notes,
        }


class _TooLarge(Exception):
    pass


class _Context:
    def __init__(self, cfg: SearchConfig, max_order: int, class_budget: int | None):
        self.cfg = cfg
        self.max_order = max_order
        self.class_budget = class_budget
        self.chi = lru_cache(maxsize=None)(self._chi)
        self.klass = lru_cache(maxsize=None)(self._klass)

    def _guard(self, g: Graph) -> None:
        if g.n > self.max_order:
            raise _TooLarge(f"order {g.n} exceeds the audit cap {self.max_order}")

    def _chi(self, g: Graph) -> int:
        self._guard(g)
        return chi_d_t(g, self.cfg).value

    def _klass(self, g: Graph) -> str:
        self._guard(g)
        v = classify(g, self.cfg, self.class_budget)
        if v.verdict is Verdict.INCONCLUSIVE:
            raise _TooLarge("class enumeration budget exhausted")
        return v.verdict.value


def _compare(claim: str, n: int, predicted, computed, notes: str = "") -> ClaimReport:
    status = AGREE if predicted == computed else DISAGREE
    return ClaimReport(claim, n, predicted, computed, status, notes)


# -- claim evaluators -------------------------------------------------------

_FAMILIES: dict[str, tuple[Callable[[int], Graph], Callable[[int], F.FormulaPrediction], int]] = {
    "wheel": (wheel, F.formula_wheel, 3),
    "cycle": (cycle, F.formula_cycle, 3),
    "path": (path, F.formula_path, 2),
    "comp-cycle": (lambda n: complement(cycle(n)), F.formula_complement_cycle, 4),
    "comp-path": (lambda n: complement(path(n)), F.formula_complement_path, 4),
    "complete": (complete, F.formula_complete, 2),
}

_MYC_FORMULAS: dict[str, Callable[[int], F.FormulaPrediction]] = {
    "wheel": F.formula_myc_wheel,
    "cycle": F.formula_myc_cycle,
    "path": F.formula_myc_path,
    "comp-cycle": F.formula_myc_complement_cycle,
    "comp-path": F.formula_myc_complement_path,
}


def _value_claim(family: str) -> Callable[[int, _Context], ClaimReport]:
    build, formula, _ = _FAMILIES[family]

    def run(n: int, ctx: _Context) -> ClaimReport:
        pred = formula(n)
        if not pred.applicable:
            return ClaimReport(family, n, None, None, INAPPLICABLE, "no printed case covers this n")
        return _compare(family, n, pred.chi_d_t, ctx.chi(build(n)))

    return run


def _myc_claim(family: str) -> Callable[[int, _Context], ClaimReport]:
    build = _FAMILIES[family][0]
    formula = _MYC_FORMULAS[family]
    claim = f"myc-{family}"

    def run(n: int, ctx: _Context) -> ClaimReport:
        pred = formula(n)
        if not pred.applicable:
            return ClaimReport(claim, n, None, None, INAPPLICABLE, "no printed case covers this n")
        g = build(n)
        computed = ctx.chi(mycielskian(g))
        notes = ""
        try:
            base = ctx.chi(g)
            notes = f"chi_d_t(G)={base}, increase {computed - base}"
        except NoTdcExists:
            pass
        return _compare(claim, n, pred.chi_d_t, computed, notes)

    return run


def _class_claim(family: str) -> Callable[[int, _Context], ClaimReport]:
    build, formula, _ = _FAMILIES[family]
    claim = f"class-{family}"

    def run(n: int, ctx: _Context) -> ClaimReport:
        pred = formula(n)
        if not pred.applicable or pred.predicted_class == F.UNSPECIFIED:
            return ClaimReport(claim, n, None, None, INAPPLICABLE, "no class is asserted for this n")
        computed = ctx.klass(build(n))
        notes = ""
        if family == "cycle":
            proof = F.cycle_class_from_proof(n)
            if proof != pred.predicted_class:
                verdict = "agrees" if proof == computed else "disagrees"
                notes = f"statement predicts {pred.predicted_class}; proof text asserts {proof}, which {verdict}"
        return _compare(claim, n, pred.predicted_class, computed, notes)

    return run


def _iterated_k3(t: int, ctx: _Context) -> ClaimReport:
    pred = F.formula_iterated_complete3(t)
    if not pred.applicable:
        return ClaimReport("iterated-k3", t, None, None, INAPPLICABLE, "t must be >= 0")
    return _compare("iterated-k3", t, pred.chi_d_t, ctx.chi(iterated_mycielskian(complete(3), t)),
                    f"M^{t}(K_3) on {2 ** t * 4 - 1} vertices")


def _integer_partitions(n: int, max_part: int | None = None) -> list[tuple[int, ...]]:
    max_part = n if max_part is None else max_part
    if n == 0:
        return [()]
    out = []
    for first in range(min(n, max_part), 0, -1):
        out += [(first,) + rest for rest in _integer_partitions(n - first, first)]
    return out


def _multipartite(n: int, ctx: _Context) -> ClaimReport:
    """Complete p-partite graphs of order n (p >= 2) are Class Two iff p = 2."""
    shapes = [p for p in _integer_partitions(n) if len(p) >= 2]
    if not shapes:
        return ClaimReport("class-multipartite", n, None, None, INAPPLICABLE, "no p >= 2 partition of n")
    predicted, computed = {}, {}
    for parts in shapes:
        key = "+".join(map(str, parts))
        predicted[key] = F.TWO if len(parts) == 2 else F.ONE
        computed[key] = ctx.klass(complete_multipartite(parts))
    wrong = [k for k in predicted if predicted[k] != computed[k]]
    return _compare("class-multipartite", n, predicted, computed, f"mismatched shapes: {', '.join(wrong)}" if wrong else "")


def _converse_k2(n: int, ctx: _Context) -> ClaimReport:
    """Counterexample to the converse: K_2 claimed Class One, M(K_2) = C_5 not."""
    k2 = complete(2)
    predicted = {"K2": F.ONE, "M(K2)": F.TWO}
    computed = {"K2": ctx.klass(k2), "M(K2)": ctx.klass(mycielskian(k2))}
    return _compare("converse-k2", n, predicted, computed, "parameter unused")


def _construct_cycle(n: int, ctx: _Context) -> ClaimReport:
    """The cycle proof's coloring should be a TDC using exactly chi_d_t(C_n) colors."""
    c = F.construct_cycle_tdc(n)
    optimum = ctx.chi(cycle(n))
    predicted = {"is_tdc": True, "colors": F.formula_cycle(n).chi_d_t}
    computed = {"is_tdc": c.is_tdc, "colors": c.colors}
    notes = f"coloring {c.coloring}; chi_d_t(C_{n})={optimum}" + (f"; {c.note}" if c.note else "")
    return _compare("construct-cycle", n, predicted, computed, notes)


def _proof_witness(claim: str, make: Callable[[int], F.ProofWitness], build: Callable[[int], Graph]):
    def run(n: int, ctx: _Context) -> ClaimReport:
        try:
            w = make(n)
        except InvalidParameter as exc:
            return ClaimReport(claim, n, None, None, INAPPLICABLE, str(exc))
        optimum = ctx.chi(build(n))
        predicted = {"is_tdc": True, "optimal": True, "claim_holds": True}
        computed = {"is_tdc": w.is_tdc, "optimal": w.coloring.k == optimum, "claim_holds": w.claim_holds}
        claimed = "every class private" if w.claimed_empty_class is None else f"class {w.claimed_empty_class} has empty pn"
        notes = (f"coloring {w.coloring} ({w.coloring.k} colors, chi_d_t={optimum}); claimed {claimed}; "
                 f"classes with empty pn: {list(w.empty_classes)}")
        return _compare(claim, n, predicted, computed, notes)

    return run


# claim id -> (evaluator, default first n, default last n)
CLAIMS: dict[str, tuple[Callable[[int, _Context], ClaimReport], int, int]] = {
    "wheel": (_value_claim("wheel"), 3, 9),
    "cycle": (_value_claim("cycle"), 3, 12),
    "path": (_value_claim("path"), 2, 12),
    "comp-cycle": (_value_claim("comp-cycle"), 4, 12),
    "comp-path": (_value_claim("comp-path"), 4, 12),
    "complete": (_value_claim("complete"), 2, 8),
    "myc-wheel": (_myc_claim("wheel"), 3, 6),
    "myc-cycle": (_myc_claim("cycle"), 3, 7),
    "myc-path": (_myc_claim("path"), 2, 7),
    "myc-comp-cycle": (_myc_claim("comp-cycle"), 4, 7),
    "myc-comp-path": (_myc_claim("comp-path"), 4, 7),
    "class-wheel": (_class_claim("wheel"), 3, 9),
    "class-cycle": (_class_claim("cycle"), 3, 12),
    "class-path": (_class_claim("path"), 2, 12),
    "class-comp-cycle": (_class_claim("comp-cycle"), 4, 12),
    "class-comp-path": (_class_claim("comp-path"), 4, 12),
    "class-complete": (_class_claim("complete"), 3, 8),
    "class-multipartite": (_multipartite, 2, 7),
    "converse-k2": (_converse_k2, 2, 2),
    "iterated-k3": (_iterated_k3, 0, 2),
    "construct-cycle": (_construct_cycle, 3, 12),
    "proof-class-path": (_proof_witness("proof-class-path", F.path_class_witness, path), 3, 12),
    "proof-class-cycle": (_proof_witness("proof-class-cycle", F.cycle_class_witness, cycle), 10, 10),
    "proof-class-comp-cycle": (_proof_witness(
        "proof-class-comp-cycle", lambda n: F.complement_pairs_witness(n, of_path=False),
        lambda n: complement(cycle(n))), 7, 12),
    "proof-class-comp-path": (_proof_witness(
        "proof-class-comp-path", lambda n: F.complement_pairs_witness(n, of_path=True),
        lambda n: complement(path(n))), 5, 12),
}


def audit(
    claims: Iterable[str] | None = None,
    n_from: int | None = None,
    n_to: int | None = None,
    cfg: SearchConfig | None = None,
    max_order: int = DEFAULT_MAX_ORDER,
    class_budget: int | None = 5_000_000,
) -> list[ClaimReport]:
    """Evaluate the selected claims (all by default) over their parameter
    ranges; ``n_from``/``n_to`` override each claim's default range."""
    selected = list(CLAIMS) if claims is None else list(claims)
    unknown = [c for c in selected if c not in CLAIMS]
    if unknown:
        raise InvalidParameter(f"unknown claim id(s): {', '.join(unknown)}")
    ctx = _Context(cfg or SearchConfig(), max_order, class_budget)
    reports = []
    for claim in selected:
        run, lo, hi = CLAIMS[claim]
        lo = lo if n_from is None else n_from
        hi = hi if n_to is None else n_to
        for n in range(lo, hi + 1):
            reports.append(_run_one(claim, run, n, ctx))
    return reports


def _run_one(claim: str, run, n: int, ctx: _Context) -> ClaimReport:
    try:
        return run(n, ctx)
    except _TooLarge as exc:
        return ClaimReport(claim, n, None, None, INCONCLUSIVE, str(exc))
    except BudgetExceeded as exc:
        return ClaimReport(claim, n, None, None, INCONCLUSIVE, str(exc))
    except NoTdcExists as exc:
        return ClaimReport(claim, n, None, None, INAPPLICABLE, f"no TDC exists: {exc}")
    except InvalidParameter as exc:
        return ClaimReport(claim, n, None, None, INAPPLICABLE, str(exc))
