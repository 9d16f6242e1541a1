"""Colorings and the predicates built on them: proper coloring, total
dominator coloring (TDC), common and private neighborhoods.

A vertex *dominates* a color class when it is adjacent to every member of the
class. Neighborhoods are open, so a vertex never dominates its own class.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import cached_property
from typing import Iterable, Sequence

from tdc.errors import InvalidColoring, InvalidParameter
from tdc.graph import Graph, _bits


@dataclass(frozen=True)
class Coloring:
    """Vertex -> color index. Colors are exactly ``0..k-1``, none unused."""

    assignment: tuple[int, ...]

    def __post_init__(self) -> None:
        assignment = tuple(int(c) for c in self.assignment)
        object.__setattr__(self, "assignment", assignment)
        if not assignment:
            return
        if min(assignment) < 0:
            raise InvalidColoring(f"negative color index in {list(assignment)}")
        k = max(assignment) + 1
        if len(set(assignment)) != k:
            missing = sorted(set(range(k)) - set(assignment))
            raise InvalidColoring(f"color classes {missing} are empty")

    @classmethod
    def from_classes(cls, n: int, classes: Iterable[Iterable[int]]) -> Coloring:
        assignment = [-1] * n
        for color, members in enumerate(classes):
            for v in members:
                if not 0 <= v < n:
                    raise InvalidColoring(f"vertex {v} out of range for n={n}")
                if assignment[v] != -1:
                    raise InvalidColoring(f"vertex {v} appears in two classes")
                assignment[v] = color
        if -1 in assignment:
            raise InvalidColoring(f"vertex {assignment.index(-1)} is uncolored")
        return cls(tuple(assignment))

    @classmethod
    def parse(cls, text: str) -> Coloring:
        try:
            return cls(tuple(int(tok) for tok in text.split()))
        except ValueError:
            raise InvalidColoring(f"bad coloring text {text!r}") from None

    def __str__(self) -> str:
        return " ".join(map(str, self.assignment))

    @property
    def n(self) -> int:
        return len(self.assignment)

    @property
    def k(self) -> int:
        return max(self.assignment) + 1 if self.assignment else 0

    @cached_property
    def classes(self) -> tuple[frozenset[int], ...]:
        members: list[set[int]] = [set() for _ in range(self.k)]
        for v, c in enumerate(self.assignment):
            members[c].add(v)
        return tuple(frozenset(s) for s in members)

    @cached_property
    def class_masks(self) -> tuple[int, ...]:
        masks = [0] * self.k
        for v, c in enumerate(self.assignment):
            masks[c] |= 1 << v
        return tuple(masks)

    def canonical(self) -> Coloring:
        """Renumber colors by first appearance, so vertex 0 has color 0."""
        relabel: dict[int, int] = {}
        for c in self.assignment:
            relabel.setdefault(c, len(relabel))
        return Coloring(tuple(relabel[c] for c in self.assignment))

    def permute_colors(self, perm: Sequence[int]) -> Coloring:
        return Coloring(tuple(perm[c] for c in self.assignment))


def _check_length(g: Graph, f: Coloring) -> None:
    if f.n != g.n:
        raise InvalidColoring(f"coloring has {f.n} entries for a graph on {g.n} vertices")


def is_proper(g: Graph, f: Coloring) -> bool:
    _check_length(g, f)
    a = f.assignment
    return all(a[i] != a[j] for i, j in g.edges)


def dominated_classes(g: Graph, f: Coloring, v: int) -> list[int]:
    """Colors whose whole class lies in the open neighborhood of ``v``."""
    nv = g.adjacency[v]
    return [c for c, mask in enumerate(f.class_masks) if mask & ~nv == 0]


def is_total_dominator(g: Graph, f: Coloring) -> bool:
    """True iff ``f`` is proper and every vertex dominates some color class."""
    if not is_proper(g, f):
        return False
    masks = f.class_masks
    return all(any(mask & ~nv == 0 for mask in masks) for nv in g.adjacency)


def common_neighborhood(g: Graph, s: Iterable[int]) -> frozenset[int]:
    s = set(s)
    if not s:
        raise InvalidParameter("common neighborhood of an empty set is undefined")
    common = (1 << g.n) - 1
    for v in s:
        if not 0 <= v < g.n:
            raise InvalidParameter(f"vertex {v} out of range for n={g.n}")
        common &= g.adjacency[v]
    return frozenset(_bits(common))


def private_neighborhood(g: Graph, f: Coloring, i: int) -> frozenset[int]:
    """Vertices dominating class ``i`` and no other class."""
    _check_length(g, f)
    if not 0 <= i < f.k:
        raise InvalidParameter(f"color index {i} out of range 0..{f.k - 1}")
    return frozenset(v for v in range(g.n) if dominated_classes(g, f, v) == [i])


def private_neighborhoods(g: Graph, f: Coloring) -> list[frozenset[int]]:
    _check_length(g, f)
    pn: list[set[int]] = [set() for _ in range(f.k)]
    for v in range(g.n):
        dom = dominated_classes(g, f, v)
        if len(dom) == 1:
            pn[dom[0]].add(v)
    return [frozenset(s) for s in pn]


def empty_private_classes(g: Graph, f: Coloring) -> list[int]:
    return [c for c, s in enumerate(private_neighborhoods(g, f)) if not s]
