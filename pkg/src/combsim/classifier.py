"""Structural predicates and the decision rule for ``Cs = Sym``.

Every predicate depends only on which pairs have equal distances, so each
function accepts a :class:`SemimetricSpace`, an :class:`EqualityPattern` or a
:class:`~combsim.generators.PatternId`. Internally all of them work on the
edge-label string (block index of each lexicographic pair).

Every permutation of a finite semimetric space is a combinatorial
self-similarity exactly when the space is discrete, strongly rigid, or
weakly rigid with all 3-point subspaces isometric. The last case only occurs
on 4 points, where it is the rectangle-type pattern: the three perfect
matchings of K4 as blocks.
"""
from __future__ import annotations

import functools
from collections import Counter
from dataclasses import asdict, dataclass
from itertools import combinations

from .errors import InvariantViolation, TooFewPoints
from .perm import is_symmetric_group
from .space import EqualityPattern, SemimetricSpace, pair_index
from .similarity import EXHAUSTIVE, self_similarity_group


def _n_labels(obj) -> tuple[int, tuple]:
    if isinstance(obj, SemimetricSpace):
        return obj.n, obj.labels
    if isinstance(obj, EqualityPattern):
        return obj.n, obj.rgs()
    return obj.n, tuple(obj.rgs)


@functools.lru_cache(maxsize=None)
def _triangle_edges(n: int) -> tuple[tuple[int, int, int], ...]:
    idx = pair_index(n)
    return tuple(
        (idx[i, j], idx[i, k], idx[j, k]) for i, j, k in combinations(range(n), 3)
    )


def is_discrete(obj) -> bool:
    """At most one nonzero distance value."""
    _, labels = _n_labels(obj)
    return len(set(labels)) <= 1


def is_strongly_rigid(obj) -> bool:
    """Distinct pairs always have distinct distances."""
    _, labels = _n_labels(obj)
    return len(set(labels)) == len(labels)


def is_weakly_rigid(obj) -> bool:
    """Every triangle is scalene (vacuously true below 3 points)."""
    n, labels = _n_labels(obj)
    for a, b, c in _triangle_edges(n):
        la, lb, lc = labels[a], labels[b], labels[c]
        if la == lb or la == lc or lb == lc:
            return False
    return True


def has_equilateral_triangle(obj) -> bool:
    n, labels = _n_labels(obj)
    return any(labels[a] == labels[b] == labels[c] for a, b, c in _triangle_edges(n))


def three_point_subspaces_all_isometric(obj) -> bool:
    """All triangles carry the same multiset of side lengths."""
    n, labels = _n_labels(obj)
    if n < 3:
        raise TooFewPoints(f"need at least 3 points, got {n}")
    tris = _triangle_edges(n)
    first = sorted(labels[e] for e in tris[0])
    return all(sorted(labels[e] for e in t) == first for t in tris[1:])


def _is_matching_factorization(n: int, labels) -> bool:
    if n != 4:
        return False
    blocks: dict = {}
    for (i, j), lab in zip(pair_index(4), labels):
        blocks.setdefault(lab, []).append((i, j))
    if sorted(len(b) for b in blocks.values()) != [2, 2, 2]:
        return False
    return all(not set(p) & set(q) for p, q in blocks.values())


def _is_rectangle_by_triangles(n: int, labels, obj) -> bool:
    return n == 4 and is_weakly_rigid(obj) and three_point_subspaces_all_isometric(obj)


def is_rectangle_type(obj) -> bool:
    """Four points whose equality blocks are the three perfect matchings of K4.

    Checked both as a matching condition and as "weakly rigid with all
    triangles isometric"; disagreement raises :class:`InvariantViolation`.
    """
    n, labels = _n_labels(obj)
    by_matching = _is_matching_factorization(n, labels)
    if by_matching != _is_rectangle_by_triangles(n, labels, obj):
        raise InvariantViolation(f"rectangle-type tests disagree on {obj!r}")
    return by_matching


def cs_equals_sym_structural(obj) -> bool:
    """Decide ``Cs = Sym`` from the pattern, without any permutation search."""
    n, _ = _n_labels(obj)
    if is_discrete(obj) or is_strongly_rigid(obj):
        return True
    return n >= 3 and is_weakly_rigid(obj) and three_point_subspaces_all_isometric(obj)


@dataclass(frozen=True)
class Classification:
    discrete: bool
    strongly_rigid: bool
    weakly_rigid: bool
    rectangle_type: bool
    cs_equals_sym: bool

    def __post_init__(self):
        if self.strongly_rigid and not self.weakly_rigid:
            raise InvariantViolation("strongly rigid but not weakly rigid")
        if self.rectangle_type and not self.weakly_rigid:
            raise InvariantViolation("rectangle type but not weakly rigid")
        expected = self.discrete or self.strongly_rigid or self.rectangle_type
        if self.cs_equals_sym != expected:
            raise InvariantViolation(f"cs_equals_sym={self.cs_equals_sym}, flags give {expected}")

    def as_dict(self) -> dict[str, bool]:
        return asdict(self)


def classify(obj) -> Classification:
    return Classification(
        discrete=is_discrete(obj),
        strongly_rigid=is_strongly_rigid(obj),
        weakly_rigid=is_weakly_rigid(obj),
        rectangle_type=is_rectangle_type(obj),
        cs_equals_sym=cs_equals_sym_structural(obj),
    )


@dataclass(frozen=True)
class Crosscheck:
    structural: bool
    brute_force: bool

    @property
    def agree(self) -> bool:
        return self.structural == self.brute_force


def theorem_crosscheck(space: SemimetricSpace, mode: str = EXHAUSTIVE, cap=None) -> Crosscheck:
    """Compare the structural verdict with a full group computation."""
    return Crosscheck(
        structural=cs_equals_sym_structural(space),
        brute_force=is_symmetric_group(self_similarity_group(space, mode, cap)),
    )


def block_size_profile(obj) -> tuple[int, ...]:
    _, labels = _n_labels(obj)
    return tuple(sorted(Counter(labels).values(), reverse=True))
