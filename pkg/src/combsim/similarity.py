"""Combinatorial similarities, isometries and weak similarities.

A bijection ``psi`` from the points of ``source`` to the points of ``target``
is a combinatorial similarity when some bijection ``f`` between the value
sets satisfies::

    d_source(x, y) == f(d_target(psi(x), psi(y)))    for all x, y

Equivalently, ``psi`` maps pairs of equal distance to pairs of equal
distance and pairs of unequal distance to pairs of unequal distance. The
value map ``f`` therefore goes target values -> source values.

Two group-search modes are provided:

``"exhaustive"``
    Filter every permutation through :func:`induced_value_map`. This is the
    oracle and is refused above the degree cap.
``"pruned"``
    Backtracking over partial point maps with the partial value map kept in
    both directions; a branch dies at the first inconsistency. Candidates are
    tried in ascending order so results come out in lexicographic order,
    identical to the exhaustive filter.
"""
from __future__ import annotations

from collections import Counter
from dataclasses import dataclass
from fractions import Fraction
from typing import Iterator, Sequence

from .errors import DegreeTooLarge, SizeMismatch
from .perm import (
    PermGroup,
    Permutation,
    all_permutations,
    default_cap,
    group_from_elements,
)
from .space import SemimetricSpace, format_value, pairs

EXHAUSTIVE = "exhaustive"
PRUNED = "pruned"
MODES = (EXHAUSTIVE, PRUNED)


@dataclass(frozen=True)
class ValueBijection:
    """Finite bijection between distance values, stored as sorted pairs."""

    pairs: tuple[tuple[Fraction, Fraction], ...]

    def __post_init__(self):
        dom = [a for a, _ in self.pairs]
        cod = [b for _, b in self.pairs]
        if len(set(dom)) != len(dom) or len(set(cod)) != len(cod):
            raise ValueError("value map is not a bijection")
        if self.pairs and dict(self.pairs).get(Fraction(0), Fraction(0)) != 0:
            raise ValueError("value map must send 0 to 0")

    @classmethod
    def from_dict(cls, mapping: dict) -> "ValueBijection":
        return cls(tuple(sorted(mapping.items())))

    def as_dict(self) -> dict[Fraction, Fraction]:
        return dict(self.pairs)

    def __call__(self, v) -> Fraction:
        return self.as_dict()[v]

    @property
    def domain(self) -> tuple[Fraction, ...]:
        return tuple(a for a, _ in self.pairs)

    def is_identity(self) -> bool:
        return all(a == b for a, b in self.pairs)

    def is_increasing(self) -> bool:
        images = [b for _, b in self.pairs]
        return all(x < y for x, y in zip(images, images[1:]))

    def __str__(self):
        return "{" + ", ".join(f"{format_value(a)}->{format_value(b)}" for a, b in self.pairs) + "}"


@dataclass(frozen=True)
class SimilarityWitness:
    """``psi``: source point -> target point; ``f``: target value -> source value."""

    psi: Permutation
    f: ValueBijection

    def verify(self, source: SemimetricSpace, target: SemimetricSpace) -> bool:
        fmap = self.f.as_dict()
        p = self.psi.images
        n = source.n
        return all(
            source.d(x, y) == fmap.get(target.d(p[x], p[y]))
            for x in range(n)
            for y in range(n)
        )


def _check_sizes(source, target, psi=None):
    if source.n != target.n:
        raise SizeMismatch(f"spaces have {source.n} and {target.n} points")
    if psi is not None and psi.degree != source.n:
        raise SizeMismatch(f"bijection has degree {psi.degree}, spaces have {source.n} points")


def _induced(source, target, images) -> dict | None:
    """Target-value -> source-value map induced by ``images``, or None."""
    ds, dt = source.dist, target.dist
    fwd: dict = {}
    back: dict = {}
    for i, j in pairs(source.n):
        a = ds[i][j]
        b = dt[images[i]][images[j]]
        got = fwd.get(b)
        if got is None:
            if a in back:
                return None
            fwd[b] = a
            back[a] = b
        elif got != a:
            return None
    return fwd


def induced_value_map(
    source: SemimetricSpace, target: SemimetricSpace, psi: Permutation
) -> ValueBijection | None:
    """The value bijection making ``psi`` a combinatorial similarity, if any."""
    _check_sizes(source, target, psi)
    fwd = _induced(source, target, psi.images)
    if fwd is None:
        return None
    fwd[Fraction(0)] = Fraction(0)
    return ValueBijection.from_dict(fwd)


def is_combinatorial_similarity(source, target, psi) -> bool:
    return induced_value_map(source, target, psi) is not None


def is_isometry(source: SemimetricSpace, target: SemimetricSpace, psi: Permutation) -> bool:
    _check_sizes(source, target, psi)
    ds, dt, p = source.dist, target.dist, psi.images
    return all(ds[i][j] == dt[p[i]][p[j]] for i, j in pairs(source.n))


def is_weak_similarity(source: SemimetricSpace, target: SemimetricSpace, psi: Permutation) -> bool:
    """True iff ``psi`` preserves the order of distances in both directions."""
    f = induced_value_map(source, target, psi)
    return f is not None and f.is_increasing()


# -- group search ----------------------------------------------------------


def _exhaustive(source, target, cap) -> Iterator[Permutation]:
    for p in all_permutations(source.n, cap):
        if _induced(source, target, p.images) is not None:
            yield p


def _backtrack(source, target) -> Iterator[Permutation]:
    n = source.n
    ds, dt = source.dist, target.dist
    images = [0] * n
    used = [False] * n
    fwd: dict = {}
    back: dict = {}

    def extend(k):
        if k == n:
            yield Permutation._trusted(tuple(images))
            return
        for c in range(n):
            if used[c]:
                continue
            added = []
            ok = True
            for j in range(k):
                a = ds[j][k]
                b = dt[images[j]][c]
                got = fwd.get(b)
                if got is None:
                    if a in back:
                        ok = False
                        break
                    fwd[b] = a
                    back[a] = b
                    added.append(b)
                elif got != a:
                    ok = False
                    break
            if ok:
                images[k] = c
                used[c] = True
                yield from extend(k + 1)
                used[c] = False
            for b in added:
                del back[fwd.pop(b)]

    yield from extend(0)


def block_size_multiset(space: SemimetricSpace) -> Counter:
    return Counter(Counter(space.labels).values())


def similarities(
    source: SemimetricSpace,
    target: SemimetricSpace,
    mode: str = EXHAUSTIVE,
    cap: int | None = None,
) -> Iterator[Permutation]:
    """All combinatorial similarities ``source -> target`` in lexicographic order."""
    _check_sizes(source, target)
    if mode == EXHAUSTIVE:
        yield from _exhaustive(source, target, default_cap() if cap is None else cap)
    elif mode == PRUNED:
        if block_size_multiset(source) != block_size_multiset(target):
            return
        yield from _backtrack(source, target)
    else:
        raise ValueError(f"unknown mode {mode!r}; expected one of {MODES}")


def self_similarity_group(
    space: SemimetricSpace, mode: str = EXHAUSTIVE, cap: int | None = None
) -> PermGroup:
    """The group of all combinatorial self-similarities of ``space``."""
    return group_from_elements(similarities(space, space, mode, cap), space.n)


def self_isometry_group(
    space: SemimetricSpace, mode: str = EXHAUSTIVE, cap: int | None = None
) -> PermGroup:
    if mode == EXHAUSTIVE:
        cap = default_cap() if cap is None else cap
        elems = (p for p in all_permutations(space.n, cap) if is_isometry(space, space, p))
    elif mode == PRUNED:
        # an isometry is a similarity whose value map is the identity
        elems = (
            p for p in _backtrack(space, space)
            if is_isometry(space, space, p)
        )
    else:
        raise ValueError(f"unknown mode {mode!r}; expected one of {MODES}")
    return group_from_elements(elems, space.n)


def are_combinatorially_similar(
    a: SemimetricSpace, b: SemimetricSpace
) -> SimilarityWitness | None:
    """A witness ``a -> b`` if the spaces are combinatorially similar, else None.

    Rejects early on different sizes or different block-size multisets, then
    runs the pruned search and returns the lexicographically first bijection.
    """
    if a.n != b.n or block_size_multiset(a) != block_size_multiset(b):
        return None
    for psi in _backtrack(a, b):
        return SimilarityWitness(psi, induced_value_map(a, b, psi))
    return None


def check_cap(n: int, cap: int | None = None) -> None:
    cap = default_cap() if cap is None else cap
    if n > cap:
        raise DegreeTooLarge(n, cap)


def relabel(space: SemimetricSpace, psi: Sequence[int] | Permutation) -> SemimetricSpace:
    """The space ``B`` with ``B(psi x, psi y) = space(x, y)``."""
    images = psi.images if isinstance(psi, Permutation) else tuple(psi)
    n = space.n
    inv = [0] * n
    for i, j in enumerate(images):
        inv[j] = i
    d = space.dist
    return SemimetricSpace([[d[inv[x]][inv[y]] for y in range(n)] for x in range(n)], validate=False)
