"""Finite semimetric spaces, their value sets and distance-equality patterns.

Points are the integers ``0..n-1``. Distances are exact :class:`~fractions.Fraction`
values; two distances are equal only when they denote the same rational.

Unordered pairs ``(i, j)`` with ``i < j`` are always listed in lexicographic
order; that order indexes edge labels and restricted-growth strings throughout
the package.
"""
from __future__ import annotations

import functools
from dataclasses import dataclass
from fractions import Fraction
from itertools import combinations
from typing import Iterable, Sequence

from .errors import (
    EmptySubset,
    IndexOutOfRange,
    ParseError,
    ValidationError,
)

__all__ = [
    "SemimetricSpace",
    "EqualityPattern",
    "pairs",
    "to_value",
    "format_value",
    "parse_space",
    "serialize_space",
    "value_set",
    "equality_pattern",
    "subspace",
    "pattern_fingerprint",
    "check_triangle_inequality",
    "is_metric",
]


@functools.lru_cache(maxsize=None)
def pairs(n: int) -> tuple[tuple[int, int], ...]:
    """Unordered pairs of ``range(n)`` in lexicographic order."""
    return tuple(combinations(range(n), 2))


@functools.lru_cache(maxsize=None)
def pair_index(n: int) -> dict[tuple[int, int], int]:
    return {p: k for k, p in enumerate(pairs(n))}


def to_value(x) -> Fraction:
    """Convert an int, Fraction or rational literal to an exact distance value.

    Floats are read through their shortest decimal repr, so ``0.1`` becomes
    ``1/10`` rather than the binary expansion.
    """
    if isinstance(x, Fraction):
        return x
    if isinstance(x, bool):
        raise TypeError("booleans are not distances")
    if isinstance(x, int):
        return Fraction(x)
    if isinstance(x, float):
        x = repr(x)
    if isinstance(x, str):
        try:
            return Fraction(x.strip())
        except (ValueError, ZeroDivisionError) as exc:
            raise ParseError(f"malformed number {x!r}") from exc
    raise TypeError(f"cannot use {type(x).__name__} as a distance")


def format_value(v: Fraction) -> str:
    if v.denominator == 1:
        return str(v.numerator)
    return f"{v.numerator}/{v.denominator}"


class SemimetricSpace:
    """A finite set ``{0..n-1}`` with a validated symmetric distance table.

    Instances are immutable and hashable.

    >>> s = SemimetricSpace([[0, 1], [1, 0]])
    >>> s.n, s.d(0, 1)
    (2, Fraction(1, 1))
    """

    __slots__ = ("_dist", "_labels", "_hash")

    def __init__(self, dist: Sequence[Sequence], *, validate: bool = True):
        rows = tuple(tuple(to_value(x) for x in row) for row in dist)
        n = len(rows)
        if n == 0:
            raise ValidationError(
                "a semimetric space needs at least one point", axiom="nonempty"
            )
        for i, row in enumerate(rows):
            if len(row) != n:
                raise ParseError(f"row {i} has {len(row)} entries, expected {n}")
        if validate:
            _check_semimetric(rows)
        self._dist = rows
        self._labels = None
        self._hash = None

    @property
    def n(self) -> int:
        return len(self._dist)

    @property
    def dist(self) -> tuple[tuple[Fraction, ...], ...]:
        return self._dist

    def d(self, i: int, j: int) -> Fraction:
        return self._dist[i][j]

    @property
    def labels(self) -> tuple[int, ...]:
        """Block index of every pair, numbered by first occurrence.

        This is the restricted-growth string of the equality pattern.
        """
        if self._labels is None:
            seen: dict[Fraction, int] = {}
            out = []
            for i, j in pairs(self.n):
                out.append(seen.setdefault(self._dist[i][j], len(seen)))
            self._labels = tuple(out)
        return self._labels

    def pair_values(self) -> tuple[Fraction, ...]:
        return tuple(self._dist[i][j] for i, j in pairs(self.n))

    def __eq__(self, other):
        if not isinstance(other, SemimetricSpace):
            return NotImplemented
        return self._dist == other._dist

    def __hash__(self):
        if self._hash is None:
            self._hash = hash(self._dist)
        return self._hash

    def __repr__(self):
        body = "; ".join(" ".join(format_value(v) for v in row) for row in self._dist)
        return f"SemimetricSpace(n={self.n}, [{body}])"

    @classmethod
    def from_pair_values(cls, n: int, values: Sequence) -> "SemimetricSpace":
        """Build a space from the distances of the lexicographic pairs."""
        ps = pairs(n)
        if len(values) != len(ps):
            raise ValueError(f"expected {len(ps)} pair values, got {len(values)}")
        table = [[Fraction(0)] * n for _ in range(n)]
        for (i, j), v in zip(ps, values):
            table[i][j] = table[j][i] = to_value(v)
        return cls(table)


def _check_semimetric(rows) -> None:
    n = len(rows)
    for i in range(n):
        for j in range(n):
            v = rows[i][j]
            if v < 0:
                raise ValidationError(
                    f"positivity violated at ({i}, {j}): negative entry {format_value(v)}",
                    axiom="positivity",
                    location=(i, j),
                )
            if i == j:
                if v != 0:
                    raise ValidationError(
                        f"positivity violated at point {i}: nonzero diagonal entry {format_value(v)}",
                        axiom="positivity",
                        location=i,
                    )
                continue
            if v != rows[j][i]:
                raise ValidationError(
                    f"symmetry violated at ({i}, {j}): "
                    f"{format_value(v)} != {format_value(rows[j][i])}",
                    axiom="symmetry",
                    location=(i, j),
                )
            if v == 0:
                raise ValidationError(
                    f"positivity violated at ({i}, {j}): zero distance between distinct points",
                    axiom="positivity",
                    location=(i, j),
                )


def check_triangle_inequality(space: SemimetricSpace) -> None:
    """Raise ValidationError unless ``space`` is a metric space."""
    d = space.dist
    n = space.n
    for x in range(n):
        for y in range(x + 1, n):
            for z in range(n):
                if z == x or z == y:
                    continue
                if d[x][y] > d[x][z] + d[z][y]:
                    raise ValidationError(
                        f"triangle inequality violated: d({x}, {y}) > d({x}, {z}) + d({z}, {y})",
                        axiom="triangle",
                        location=(x, y, z),
                    )


def is_metric(space: SemimetricSpace) -> bool:
    try:
        check_triangle_inequality(space)
    except ValidationError:
        return False
    return True


def parse_space(text: str | Iterable[str]) -> SemimetricSpace:
    """Parse the matrix text format.

    The first significant line holds ``n``; the next ``n`` lines hold ``n``
    whitespace-separated rational literals each (``3``, ``3.5`` or ``7/2``).
    Lines starting with ``#`` and blank lines are ignored.
    """
    lines = text.splitlines() if isinstance(text, str) else list(text)
    body = [ln.strip() for ln in lines]
    body = [ln for ln in body if ln and not ln.startswith("#")]
    if not body:
        raise ParseError("empty input: expected the point count on the first line")
    try:
        n = int(body[0])
    except ValueError:
        raise ParseError(f"first line must be the integer point count, got {body[0]!r}") from None
    if n < 1:
        raise ValidationError(
            f"a semimetric space needs at least one point, got n={n}", axiom="nonempty"
        )
    rows = body[1:]
    if len(rows) != n:
        raise ParseError(f"expected {n} matrix rows, found {len(rows)}")
    table = []
    for i, ln in enumerate(rows):
        tokens = ln.split()
        if len(tokens) != n:
            raise ParseError(f"row {i} has {len(tokens)} entries, expected {n}")
        table.append([to_value(t) for t in tokens])
    return SemimetricSpace(table)


def serialize_space(space: SemimetricSpace) -> str:
    lines = [str(space.n)]
    for row in space.dist:
        lines.append(" ".join(format_value(v) for v in row))
    return "\n".join(lines) + "\n"


def value_set(space: SemimetricSpace) -> tuple[Fraction, ...]:
    """The distinct distances of ``space`` in ascending order, 0 included."""
    return tuple(sorted({Fraction(0), *space.pair_values()}))


@dataclass(frozen=True)
class EqualityPattern:
    """Partition of the unordered pairs of ``range(n)`` by distance equality.

    Blocks are ordered by decreasing size, ties broken by smallest member
    pair; pairs inside a block are sorted. Use :meth:`from_labels` to build
    one from arbitrary block labels.
    """

    n: int
    blocks: tuple[tuple[tuple[int, int], ...], ...]

    def __post_init__(self):
        seen = [p for b in self.blocks for p in b]
        if sorted(seen) != list(pairs(self.n)) or any(not b for b in self.blocks):
            raise ValueError("blocks must partition the unordered pairs into nonempty sets")
        if self.blocks != _canonical_blocks(self.blocks):
            raise ValueError("blocks are not in canonical order")

    @classmethod
    def from_labels(cls, n: int, labels: Sequence) -> "EqualityPattern":
        groups: dict = {}
        for p, lab in zip(pairs(n), labels, strict=True):
            groups.setdefault(lab, []).append(p)
        return cls(n, _canonical_blocks(tuple(tuple(g) for g in groups.values())))

    @property
    def block_sizes(self) -> tuple[int, ...]:
        return tuple(len(b) for b in self.blocks)

    def rgs(self) -> tuple[int, ...]:
        """Restricted-growth string over the lexicographic pair order."""
        block_of = {p: k for k, b in enumerate(self.blocks) for p in b}
        remap: dict[int, int] = {}
        return tuple(remap.setdefault(block_of[p], len(remap)) for p in pairs(self.n))


def _canonical_blocks(blocks):
    blocks = [tuple(sorted(b)) for b in blocks]
    blocks.sort(key=lambda b: (-len(b), b[0]))
    return tuple(blocks)


def equality_pattern(space: SemimetricSpace) -> EqualityPattern:
    return EqualityPattern.from_labels(space.n, space.labels)


def subspace(space: SemimetricSpace, points: Sequence[int]) -> SemimetricSpace:
    """Restrict ``space`` to ``points``; new point ``k`` is old ``points[k]``."""
    points = list(points)
    if not points:
        raise EmptySubset("subspace needs at least one point")
    for p in points:
        if not 0 <= p < space.n:
            raise IndexOutOfRange(f"point {p} outside 0..{space.n - 1}")
    if len(set(points)) != len(points):
        raise ValueError("subspace points must be distinct")
    d = space.dist
    return SemimetricSpace([[d[a][b] for b in points] for a in points], validate=False)


def pattern_fingerprint(pattern: EqualityPattern) -> str:
    """Deterministic text key: ``n=<n>|<block sizes>|<blocks>``.

    Equal patterns give equal strings. Relabelled (isomorphic) patterns
    generally do not; only the size multiset is relabelling-invariant.
    """
    sizes = ",".join(str(s) for s in pattern.block_sizes)
    blocks = "/".join(".".join(f"{i}-{j}" for i, j in b) for b in pattern.blocks)
    return f"n={pattern.n}|{sizes}|{blocks}"


def fingerprint_sizes(fingerprint: str) -> tuple[int, ...]:
    """Recover the block-size multiset from a fingerprint string."""
    field = fingerprint.split("|")[1]
    return tuple(int(s) for s in field.split(",")) if field else ()
