"""Permutations of ``range(n)`` and explicit finite permutation groups.

Composition convention: ``compose(p, q)`` (also ``p * q``) is the map
``i -> p(q(i))``, i.e. ``q`` is applied first.
"""
from __future__ import annotations

import math
import os
from dataclasses import dataclass
from itertools import permutations as _itperms
from typing import Iterable, Iterator

from .errors import DegreeMismatch, DegreeTooLarge, MissingIdentity, NotClosed

DEFAULT_CAP = 8
CAP_ENV_VAR = "COMBSIM_CAP"


def default_cap() -> int:
    """Brute-force degree cap: ``$COMBSIM_CAP`` if set, else 8."""
    raw = os.environ.get(CAP_ENV_VAR)
    if raw:
        return int(raw)
    return DEFAULT_CAP


@dataclass(frozen=True, order=True)
class Permutation:
    """A bijection of ``range(n)`` stored as its image array."""

    images: tuple[int, ...]

    def __init__(self, images: Iterable[int]):
        images = tuple(int(i) for i in images)
        if sorted(images) != list(range(len(images))):
            raise ValueError(f"{list(images)} is not a permutation of 0..{len(images) - 1}")
        object.__setattr__(self, "images", images)

    @classmethod
    def identity(cls, n: int) -> "Permutation":
        return cls(range(n))

    @classmethod
    def from_cycles(cls, n: int, *cycles: Iterable[int]) -> "Permutation":
        img = list(range(n))
        for cyc in cycles:
            cyc = list(cyc)
            for a, b in zip(cyc, cyc[1:] + cyc[:1]):
                img[a] = b
        return cls(img)

    @property
    def degree(self) -> int:
        return len(self.images)

    def __call__(self, i: int) -> int:
        return self.images[i]

    def __mul__(self, other: "Permutation") -> "Permutation":
        return compose(self, other)

    def is_identity(self) -> bool:
        return all(i == x for i, x in enumerate(self.images))

    def cycles(self) -> list[tuple[int, ...]]:
        """Nontrivial cycles, each starting at its smallest point."""
        seen = set()
        out = []
        for start in range(self.degree):
            if start in seen:
                continue
            cyc = [start]
            seen.add(start)
            nxt = self.images[start]
            while nxt != start:
                cyc.append(nxt)
                seen.add(nxt)
                nxt = self.images[nxt]
            if len(cyc) > 1:
                out.append(tuple(cyc))
        return out

    def __str__(self):
        return "[" + ", ".join(str(i) for i in self.images) + "]"

    def __repr__(self):
        return f"Permutation({list(self.images)})"


def compose(p: Permutation, q: Permutation) -> Permutation:
    """``i -> p(q(i))``."""
    if p.degree != q.degree:
        raise DegreeMismatch(f"cannot compose degree {p.degree} with degree {q.degree}")
    pi = p.images
    return Permutation._trusted(tuple(pi[j] for j in q.images))


def inverse(p: Permutation) -> Permutation:
    inv = [0] * p.degree
    for i, j in enumerate(p.images):
        inv[j] = i
    return Permutation._trusted(tuple(inv))


def _trusted(images: tuple[int, ...]) -> Permutation:
    # skips the bijection check; callers guarantee it
    obj = object.__new__(Permutation)
    object.__setattr__(obj, "images", images)
    return obj


Permutation._trusted = staticmethod(_trusted)


def all_permutations(n: int, cap: int | None = None) -> Iterator[Permutation]:
    """Every permutation of ``range(n)`` once, in lexicographic image order."""
    cap = default_cap() if cap is None else cap
    if n < 1:
        raise ValueError("degree must be at least 1")
    if n > cap:
        raise DegreeTooLarge(n, cap)
    for images in _itperms(range(n)):
        yield _trusted(images)


class PermGroup:
    """A finite permutation group held as an explicit, validated element set."""

    __slots__ = ("n", "elements", "_sorted")

    def __init__(self, n: int, elements: frozenset[Permutation]):
        self.n = n
        self.elements = elements
        self._sorted = None

    @property
    def order(self) -> int:
        return len(self.elements)

    def sorted_elements(self) -> list[Permutation]:
        if self._sorted is None:
            self._sorted = sorted(self.elements)
        return self._sorted

    def __contains__(self, p) -> bool:
        return p in self.elements

    def __iter__(self):
        return iter(self.sorted_elements())

    def __len__(self):
        return len(self.elements)

    def __eq__(self, other):
        if not isinstance(other, PermGroup):
            return NotImplemented
        return self.n == other.n and self.elements == other.elements

    def __hash__(self):
        return hash((self.n, self.elements))

    def issubgroup(self, other: "PermGroup") -> bool:
        return self.n == other.n and self.elements <= other.elements

    def conjugate(self, g: Permutation) -> "PermGroup":
        """The group ``g H g^-1``."""
        gi = inverse(g)
        return PermGroup(self.n, frozenset(compose(compose(g, h), gi) for h in self.elements))

    def __repr__(self):
        return f"PermGroup(n={self.n}, order={self.order})"


def group_from_elements(perms: Iterable[Permutation], n: int | None = None) -> PermGroup:
    """Validate that ``perms`` is a group and wrap it.

    Closure is checked by growing the subgroup generated by a greedily chosen
    generating set inside the candidate set; the first product that leaves
    the set is reported through :class:`NotClosed`. This costs roughly
    ``|G| log^2 |G|`` compositions instead of ``|G|^2``.
    """
    elements = frozenset(perms)
    if n is None:
        if not elements:
            raise MissingIdentity("empty element set")
        n = next(iter(elements)).degree
    for p in elements:
        if p.degree != n:
            raise DegreeMismatch(f"element {p} has degree {p.degree}, expected {n}")
    ident = Permutation.identity(n)
    if ident not in elements:
        raise MissingIdentity("the identity is not in the set")

    gens: list[Permutation] = []
    span = {ident}
    for g in sorted(elements):
        if g in span:
            continue
        gens.append(g)
        # rebuild the span of gens; every new element is a product h * s
        # with h already in the span, so an escape gives a witness pair
        frontier = list(span)
        while frontier:
            nxt = []
            for h in frontier:
                for s in gens:
                    hs = compose(h, s)
                    if hs not in span:
                        if hs not in elements:
                            raise NotClosed(h, s)
                        span.add(hs)
                        nxt.append(hs)
            frontier = nxt
    for g in elements:
        if inverse(g) not in elements:  # unreachable for a closed finite set
            raise NotClosed(g, g)
    return PermGroup(n, elements)


def symmetric_group(n: int, cap: int | None = None) -> PermGroup:
    return PermGroup(n, frozenset(all_permutations(n, cap)))


def is_symmetric_group(g: PermGroup) -> bool:
    return g.order == math.factorial(g.n)
