"""Published closed forms for chi_d_t, transcribed exactly as printed, and the
colorings their proofs construct.

Every prediction is the literal case arithmetic, typos included. Nothing here
corrects a formula; :mod:`tdc.audit` measures each one against exact solving.
"""

from __future__ import annotations

from dataclasses import dataclass
from math import ceil

from tdc.coloring import Coloring, is_total_dominator, private_neighborhood
from tdc.errors import InvalidParameter
from tdc.graph import Graph, cycle

ONE, TWO, UNSPECIFIED = "One", "Two", "Unspecified"


@dataclass(frozen=True)
class FormulaPrediction:
    family: str
    n: int
    chi_d_t: int | None  # None: outside every printed case
    predicted_class: str = UNSPECIFIED
    source: str = ""

    @property
    def applicable(self) -> bool:
        return self.chi_d_t is not None


def _inapplicable(family: str, n: int, source: str) -> FormulaPrediction:
    return FormulaPrediction(family, n, None, UNSPECIFIED, source)


def formula_wheel(n: int) -> FormulaPrediction:
    if n < 3:
        return _inapplicable("wheel", n, "wheel")
    return FormulaPrediction("wheel", n, 3 if n % 2 == 0 else 4, ONE, "wheel")


def formula_cycle(n: int) -> FormulaPrediction:
    if n < 3:
        return _inapplicable("cycle", n, "cycle")
    q, r = divmod(n, 6)
    if n == 4:
        value = 2
    elif r in (0, 1, 2, 4):
        value = 4 * q + r
    else:
        value = 4 * q + r - 1
    # printed statement: Class One iff n != 4, 5 and n = 4 (mod 6)
    cls = ONE if (n not in (4, 5) and r == 4) else TWO
    return FormulaPrediction("cycle", n, value, cls, "cycle")


def cycle_class_from_proof(n: int) -> str:
    """Class the cycle proof text asserts: it opens by placing C_4 and C_5 in
    Class One, which the printed statement excludes."""
    if n in (4, 5):
        return ONE
    return formula_cycle(n).predicted_class


def formula_path(n: int) -> FormulaPrediction:
    if n < 2:
        return _inapplicable("path", n, "path")
    c = ceil(n / 3)
    value = 2 * c - 1 if n % 3 == 1 else 2 * c
    cls = TWO if (n == 2 or n % 3 == 0) else ONE
    return FormulaPrediction("path", n, value, cls, "path")


def formula_complement_cycle(n: int) -> FormulaPrediction:
    if n < 4:
        return _inapplicable("comp-cycle", n, "complement-cycle")
    value = 4 if n in (4, 5) else ceil(n / 2)
    cls = TWO if n in (4, 5, 6) else ONE
    return FormulaPrediction("comp-cycle", n, value, cls, "complement-cycle")


def formula_complement_path(n: int) -> FormulaPrediction:
    if n < 4:
        return _inapplicable("comp-path", n, "complement-path")
    value = 3 if n == 4 else ceil(n / 2)
    return FormulaPrediction("comp-path", n, value, ONE, "complement-path")


def formula_complete(n: int) -> FormulaPrediction:
    if n < 1:
        return _inapplicable("complete", n, "complete")
    return FormulaPrediction("complete", n, n, ONE if n >= 3 else UNSPECIFIED, "complete")


def formula_myc_wheel(n: int) -> FormulaPrediction:
    if n < 3:
        return _inapplicable("myc-wheel", n, "mycielskian-wheel")
    return FormulaPrediction("myc-wheel", n, 4 if n % 2 == 0 else 5, UNSPECIFIED, "mycielskian-wheel")


def formula_myc_cycle(n: int) -> FormulaPrediction:
    if n < 3:
        return _inapplicable("myc-cycle", n, "mycielskian-cycle")
    q, r = divmod(n, 6)
    if n in (4, 5):
        value = n
    elif r in (0, 1, 2):
        value = 4 * q + r + 2
    else:
        value = 4 * q + r + 1
    return FormulaPrediction("myc-cycle", n, value, UNSPECIFIED, "mycielskian-cycle")


def formula_myc_path(n: int) -> FormulaPrediction:
    if n < 2:
        return _inapplicable("myc-path", n, "mycielskian-path")
    c = ceil(n / 3)
    if n == 2:
        value = 4
    elif n % 3 == 1:
        value = 2 * c
    elif n % 3 == 0:
        value = 2 * c + 2
    else:
        value = 2 * c + 1
    return FormulaPrediction("myc-path", n, value, UNSPECIFIED, "mycielskian-path")


def formula_myc_complement_cycle(n: int) -> FormulaPrediction:
    # stated for n >= 3, but the printed cases start at 4
    if n < 4:
        return _inapplicable("myc-comp-cycle", n, "mycielskian-complement-cycle")
    if n in (4, 5):
        value = 6
    elif n == 6:
        value = 5
    else:
        value = ceil(n / 2) + 1
    return FormulaPrediction("myc-comp-cycle", n, value, UNSPECIFIED, "mycielskian-complement-cycle")


def formula_myc_complement_path(n: int) -> FormulaPrediction:
    # stated for n >= 2, but the printed cases start at 4
    if n < 4:
        return _inapplicable("myc-comp-path", n, "mycielskian-complement-path")
    value = 4 if n == 4 else ceil(n / 2) + 1
    return FormulaPrediction("myc-comp-path", n, value, UNSPECIFIED, "mycielskian-complement-path")


def formula_iterated_complete3(t: int) -> FormulaPrediction:
    if t < 0:
        return _inapplicable("iterated-k3", t, "iterated-mycielskian")
    return FormulaPrediction("iterated-k3", t, 3 + t, ONE, "iterated-mycielskian")


# ---------------------------------------------------------------------------
# constructions


@dataclass(frozen=True)
class Construction:
    coloring: Coloring
    colors: int
    is_tdc: bool
    note: str = ""


# tail patterns appended after the way-1 blocks, by n mod 6; letters are fresh colors
_CYCLE_TAILS = {
    0: "",
    1: "e",          # epsilon
    2: "te",         # theta, epsilon
    3: "ete",        # epsilon, theta, epsilon
    4: "pste",       # pi, varsigma, theta, epsilon
    5: "pspte",      # pi, varsigma, pi, theta, epsilon
}


def construct_cycle_tdc(n: int) -> Construction:
    """The cycle proof's coloring: floor(n/6) blocks colored a,b,a,b,c,d with
    four fresh colors each, then the tail for n mod 6 in fresh colors.

    The result is checked, not repaired; for several residues the recipe is
    not a total dominator coloring and the report says so.
    """
    if n < 3:
        raise InvalidParameter(f"cycle needs n >= 3, got {n}")
    q, r = divmod(n, 6)
    assignment: list[int] = []
    for block in range(q):
        base = 4 * block
        assignment += [base, base + 1, base, base + 1, base + 2, base + 3]
    tail_colors: dict[str, int] = {}
    for letter in _CYCLE_TAILS[r]:
        assignment.append(tail_colors.setdefault(letter, 4 * q + len(tail_colors)))
    f = Coloring(tuple(assignment))
    ok = is_total_dominator(cycle(n), f)
    note = "" if ok else ("not proper" if any(
        assignment[i] == assignment[(i + 1) % n] for i in range(n)) else "some vertex dominates no class")
    return Construction(f, f.k, ok, note)


def construct_mycielskian_tdc(g: Graph, f: Coloring, empty_pn_class: int | None = None) -> Coloring:
    """Lift a TDC of ``g`` to one of its Mycielskian.

    Without ``empty_pn_class``: the original classes, then all shadows as one
    class, then the apex alone (k + 2 colors). With it: the apex joins that
    class and the shadows form one more class (k + 1 colors); the class must
    have an empty private neighborhood.
    """
    if f.n != g.n:
        raise InvalidParameter(f"coloring has {f.n} entries for a graph on {g.n} vertices")
    if not is_total_dominator(g, f):
        raise InvalidParameter("input coloring is not a total dominator coloring")
    n, k = g.n, f.k
    shadows = [k] * n
    if empty_pn_class is None:
        apex = k + 1
    else:
        if not 0 <= empty_pn_class < k:
            raise InvalidParameter(f"color index {empty_pn_class} out of range 0..{k - 1}")
        if private_neighborhood(g, f, empty_pn_class):
            raise InvalidParameter(f"class {empty_pn_class} has a nonempty private neighborhood")
        apex = empty_pn_class
    return Coloring(f.assignment + tuple(shadows) + (apex,))


@dataclass(frozen=True)
class ProofWitness:
    """A coloring a class-membership proof writes down, with the color class
    it says has an empty private neighborhood (None when the proof claims
    every class has a private neighbor)."""

    graph: Graph
    coloring: Coloring
    claimed_empty_class: int | None
    is_tdc: bool
    empty_classes: tuple[int, ...]

    @property
    def claim_holds(self) -> bool:
        if not self.is_tdc:
            return False
        if self.claimed_empty_class is None:
            return not self.empty_classes
        return self.claimed_empty_class in self.empty_classes


def _witness(g: Graph, colors_1based: list[int], claimed: int | None) -> ProofWitness:
    f = Coloring(tuple(c - 1 for c in colors_1based))
    from tdc.coloring import empty_private_classes

    ok = is_total_dominator(g, f)
    empty = tuple(empty_private_classes(g, f)) if ok else ()
    return ProofWitness(g, f, None if claimed is None else claimed - 1, ok, empty)


def _path_blocks(blocks: int) -> list[int]:
    out = []
    for k in range(blocks):
        out += [1 + 2 * k, 2 + 2 * k, 1 + 2 * k]
    return out


def path_class_witness(n: int) -> ProofWitness:
    """Colorings from the path class proof. For n = 3l+2 and n = 3l+1 the class
    colored 2l-1 is claimed to have no private neighbor; for n = 3l the
    coloring is claimed to be the unique optimum, with every class private."""
    from tdc.graph import path

    if n < 3:
        raise InvalidParameter(f"the path class proof constructs colorings for n >= 3, got {n}")
    ell, r = divmod(n, 3)
    if r == 0:
        return _witness(path(n), _path_blocks(ell), None)
    if r == 2:
        colors = _path_blocks(ell - 1) + [2 * ell - 1, 2 * ell, 2 * ell + 1, 2 * ell + 2, 2 * ell - 1]
    else:
        colors = _path_blocks(ell - 1) + [2 * ell - 1, 2 * ell, 2 * ell + 1, 2 * ell - 1]
    return _witness(path(n), colors, 2 * ell - 1)


def cycle_class_witness(n: int) -> ProofWitness:
    """Coloring from the cycle class proof for n = 6l+4, l >= 1; the class of
    v_{n-3} (a singleton) is claimed to have no private neighbor."""
    if n < 10 or n % 6 != 4:
        raise InvalidParameter(f"the cycle class construction needs n = 6l+4 with l >= 1, got {n}")
    ell = n // 6
    colors = []
    for k in range(ell):
        colors += [1 + 4 * k, 2 + 4 * k, 1 + 4 * k, 2 + 4 * k, 3 + 4 * k, 4 + 4 * k]
    colors += [4 * ell + m for m in range(1, 5)]
    return _witness(cycle(n), colors, colors[n - 4])


def complement_pairs_witness(n: int, of_path: bool) -> ProofWitness:
    """Consecutive pairs {v_1,v_2}, {v_3,v_4}, ... (plus {v_n} for odd n) on
    the complement of C_n or P_n; the second pair is claimed to have no
    private neighbor."""
    from tdc.graph import complement, path

    if n < 5 or (not of_path and n < 7):
        raise InvalidParameter(f"no pair construction is given for n={n}")
    colors = [i // 2 + 1 for i in range(n)]
    g = complement(path(n) if of_path else cycle(n))
    return _witness(g, colors, 2)
