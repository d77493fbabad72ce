"""Named example spaces, seeded random spaces and pattern enumeration.

Equality patterns are enumerated as restricted-growth strings (RGS) over the
lexicographic pair order ``(0,1), (0,2), ..., (n-2,n-1)``. Since a semimetric
needs no triangle inequality, giving block ``i`` the distance ``i + 1``
realises every pattern, so enumerating patterns covers every semimetric
space up to the values of its distances.

Random generation uses :class:`random.Random` (Mersenne Twister) seeded with
the given integer, so results are reproducible across platforms.
"""
from __future__ import annotations

import functools
import random
import string
from dataclasses import dataclass
from fractions import Fraction
from typing import Iterator, Sequence

from .errors import BadBlockCount, DegreeTooLarge, InvalidRGS, NonPositiveParameter
from .perm import Permutation
from .similarity import relabel
from .space import SemimetricSpace, to_value

PATTERN_CAP = 5
_DIGITS = string.digits + string.ascii_lowercase


@dataclass(frozen=True)
class PatternId:
    """An equality pattern as ``n`` plus its restricted-growth string."""

    n: int
    rgs: tuple[int, ...]

    def __post_init__(self):
        object.__setattr__(self, "rgs", tuple(self.rgs))
        m = self.n * (self.n - 1) // 2
        if self.n < 1 or len(self.rgs) != m:
            raise InvalidRGS(f"n={self.n} needs an RGS of length {m}, got {len(self.rgs)}")
        top = -1
        for k, x in enumerate(self.rgs):
            if not 0 <= x <= top + 1:
                raise InvalidRGS(f"position {k}: {x} breaks restricted growth")
            top = max(top, x)

    def __str__(self):
        return "".join(_DIGITS[x] for x in self.rgs)

    @classmethod
    def parse(cls, n: int, text: str) -> "PatternId":
        try:
            return cls(n, tuple(_DIGITS.index(ch) for ch in text.strip().lower()))
        except ValueError:
            raise InvalidRGS(f"bad RGS digit in {text!r}") from None

    @property
    def block_count(self) -> int:
        return max(self.rgs) + 1 if self.rgs else 0


def rectangle_example() -> SemimetricSpace:
    """The 3-4-5 rectangle: sides 3 and 4 alternate around the cycle 0-1-2-3."""
    return SemimetricSpace.from_pair_values(4, _quad(3, 4, 5))


def _quad(s, t, diag):
    # pair order: 01 02 03 12 13 23
    return [s, diag, t, t, diag, s]


def pseudolinear(s, t) -> SemimetricSpace:
    """d(0,1)=d(2,3)=s, d(1,2)=d(3,0)=t, d(1,3)=d(2,0)=s+t."""
    s, t = to_value(s), to_value(t)
    if s <= 0 or t <= 0:
        raise NonPositiveParameter(f"s and t must be positive, got s={s}, t={t}")
    return SemimetricSpace.from_pair_values(4, _quad(s, t, s + t))


def discrete_space(n: int, k=1) -> SemimetricSpace:
    k = to_value(k)
    if n < 1:
        raise ValueError("n must be at least 1")
    if k <= 0:
        raise NonPositiveParameter(f"k must be positive, got {k}")
    return SemimetricSpace([[0 if i == j else k for j in range(n)] for i in range(n)])


def strongly_rigid_space(n: int, metric_mode: bool = False) -> SemimetricSpace:
    """All pair distances distinct.

    Plain mode uses ``1, 2, ..., m``; metric mode uses ``1 + k/m`` for
    ``k < m``, all inside ``[1, 2)``, so every triangle inequality holds.
    """
    if n < 1:
        raise ValueError("n must be at least 1")
    m = n * (n - 1) // 2
    if metric_mode:
        vals = [1 + Fraction(k, m) for k in range(m)]
    else:
        vals = list(range(1, m + 1))
    return SemimetricSpace.from_pair_values(n, vals)


@functools.lru_cache(maxsize=None)
def _stirling2(m: int, k: int) -> int:
    if m == k:
        return 1
    if k == 0 or k > m:
        return 0
    return k * _stirling2(m - 1, k) + _stirling2(m - 1, k - 1)


def random_surjection(m: int, k: int, rng: random.Random) -> list[int]:
    """Uniform random surjection ``range(m) -> range(k)``.

    Draws a uniform set partition into ``k`` blocks via the Stirling
    recurrence, then a uniform labelling of its blocks.
    """
    kinds = []
    kk = k
    for i in range(m, 0, -1):
        # item i-1 is a singleton in S(i-1, kk-1) of the S(i, kk) partitions
        if rng.randrange(_stirling2(i, kk)) < _stirling2(i - 1, kk - 1):
            kinds.append(True)
            kk -= 1
        else:
            kinds.append(False)
    kinds.reverse()
    blocks = []
    count = 0
    for new in kinds:
        if new:
            blocks.append(count)
            count += 1
        else:
            blocks.append(rng.randrange(count))
    labels = list(range(k))
    rng.shuffle(labels)
    return [labels[b] for b in blocks]


def random_space(n: int, block_count: int, seed: int) -> SemimetricSpace:
    """Random space on ``n`` points with exactly ``block_count`` distinct distances.

    Pairs are assigned to blocks uniformly among all surjections; block ``b``
    gets distance ``b + 1``. Deterministic in ``seed``.
    """
    m = n * (n - 1) // 2
    if n < 1:
        raise ValueError("n must be at least 1")
    if m == 0:
        if block_count not in (0, 1):
            raise BadBlockCount(f"a one-point space has no pairs, got block_count={block_count}")
        return SemimetricSpace([[0]])
    if not 1 <= block_count <= m:
        raise BadBlockCount(f"block_count must lie in 1..{m}, got {block_count}")
    rng = random.Random(seed)
    labels = random_surjection(m, block_count, rng)
    return SemimetricSpace.from_pair_values(n, [b + 1 for b in labels])


def random_revalued_copy(space: SemimetricSpace, seed: int) -> tuple[SemimetricSpace, Permutation]:
    """A relabelled copy of ``space`` with fresh distinct distance values.

    Returns ``(copy, psi)`` where point ``x`` of ``space`` becomes point
    ``psi(x)`` of the copy. Values are distinct random rationals, so the copy
    is combinatorially similar to ``space`` but generally not isometric.
    """
    rng = random.Random(seed)
    images = list(range(space.n))
    rng.shuffle(images)
    psi = Permutation(images)
    olds = sorted(set(space.pair_values()))
    news: set[Fraction] = set()
    while len(news) < len(olds):
        news.add(Fraction(rng.randint(1, 1000), rng.randint(1, 12)))
    new_vals = list(news)
    rng.shuffle(new_vals)
    remap = dict(zip(olds, new_vals))
    revalued = SemimetricSpace.from_pair_values(space.n, [remap[v] for v in space.pair_values()])
    return relabel(revalued, psi), psi


def enumerate_rgs(m: int) -> Iterator[tuple[int, ...]]:
    """Every restricted-growth string of length ``m``, in lexicographic order."""
    if m == 0:
        yield ()
        return
    a = [0] * m
    # pm[k] = max(a[:k]) for k >= 1
    pm = [0] * m
    while True:
        yield tuple(a)
        k = m - 1
        while k > 0 and a[k] == pm[k] + 1:
            k -= 1
        if k == 0:
            return
        a[k] += 1
        top = max(pm[k], a[k])
        for j in range(k + 1, m):
            a[j] = 0
            pm[j] = top


def enumerate_patterns(n: int, cap: int = PATTERN_CAP) -> Iterator[PatternId]:
    """Every equality pattern on ``n`` points, in lexicographic RGS order."""
    if n < 1:
        raise ValueError("n must be at least 1")
    if n > cap:
        raise DegreeTooLarge(n, cap)
    for rgs in enumerate_rgs(n * (n - 1) // 2):
        yield PatternId(n, rgs)


def space_from_pattern(p: PatternId | Sequence[int], n: int | None = None) -> SemimetricSpace:
    """Realise a pattern with block ``i`` at distance ``i + 1``."""
    if not isinstance(p, PatternId):
        p = PatternId(n, tuple(p))
    return SemimetricSpace.from_pair_values(p.n, [x + 1 for x in p.rgs])


def pattern_id(space: SemimetricSpace) -> PatternId:
    return PatternId(space.n, space.labels)


def rectangle_pattern() -> PatternId:
    return pattern_id(rectangle_example())
