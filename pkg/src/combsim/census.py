"""Exhaustive census of equality patterns on a small number of points.

For every pattern the order of ``Cs`` is computed by brute force over all
``n!`` permutations, and compared with the structural verdict from
:mod:`combsim.classifier`.

The brute-force side is vectorised over patterns. A permutation ``p`` is a
combinatorial self-similarity iff it preserves the relation "pairs ``e`` and
``e'`` have equal distance" on every pair of pairs; that relation is stored
as one boolean per pair of edges, and each permutation is applied as a
gather on those columns.
"""
from __future__ import annotations

import math
from dataclasses import dataclass, field

import numpy as np

from . import classifier as C
from .generators import PATTERN_CAP, PatternId, enumerate_patterns
from .perm import all_permutations
from .space import pair_index, pairs


def edge_permutation(n: int, images) -> np.ndarray:
    """Index array ``e -> index of the image of pair e``."""
    idx = pair_index(n)
    out = np.empty(len(idx), dtype=np.intp)
    for k, (i, j) in enumerate(pairs(n)):
        a, b = images[i], images[j]
        out[k] = idx[(a, b) if a < b else (b, a)]
    return out


def cs_orders(n: int, rgs_rows) -> np.ndarray:
    """``|Cs|`` for every row of restricted-growth strings (one per pattern)."""
    m = n * (n - 1) // 2
    rows = list(rgs_rows)
    R = np.asarray(rows, dtype=np.int16).reshape(len(rows), m)
    counts = np.zeros(len(rows), dtype=np.int64)
    if m < 2:
        counts[:] = math.factorial(n)
        return counts
    a, b = np.triu_indices(m, 1)
    equal = R[:, a] == R[:, b]
    for p in all_permutations(n, cap=n):
        e = edge_permutation(n, p.images)
        counts += ((R[:, e[a]] == R[:, e[b]]) == equal).all(axis=1)
    return counts


@dataclass
class Census:
    n: int
    total: int = 0
    full: int = 0
    disagreements: int = 0
    flag_counts: dict[str, int] = field(default_factory=dict)
    exceptional: int = 0
    equilateral_violations: int = 0
    full_ids: list[str] = field(default_factory=list)
    disagreement_ids: list[str] = field(default_factory=list)
    patterns: list[PatternId] = field(default_factory=list, repr=False)
    orders: list[int] = field(default_factory=list, repr=False)

    def summary(self) -> dict:
        """Key-value results in a fixed order."""
        out = {
            "n": self.n,
            "total": self.total,
            "full": self.full,
            "disagreements": self.disagreements,
        }
        for k in FLAGS:
            out[f"count_{k}"] = self.flag_counts.get(k, 0)
        out["exceptional"] = self.exceptional
        out["equilateral_violations"] = self.equilateral_violations
        out["full_ids"] = ",".join(self.full_ids)
        return out


FLAGS = ("discrete", "strongly_rigid", "weakly_rigid", "rectangle_type", "cs_equals_sym")


def run_census(n: int, cap: int = PATTERN_CAP) -> Census:
    """Enumerate every pattern on ``n`` points and cross-check both verdicts.

    ``exceptional`` counts full-group patterns that are neither strongly
    rigid nor discrete. ``equilateral_violations`` counts full-group patterns
    with an equilateral triangle that are not discrete (expected 0).
    """
    pats = list(enumerate_patterns(n, cap))
    orders = cs_orders(n, [p.rgs for p in pats])
    full_order = math.factorial(n)
    census = Census(n=n, total=len(pats), flag_counts={k: 0 for k in FLAGS})
    census.patterns = pats
    census.orders = orders.tolist()
    for p, order in zip(pats, census.orders):
        cls = C.classify(p)
        for k, v in cls.as_dict().items():
            census.flag_counts[k] += v
        brute = order == full_order
        if brute:
            census.full += 1
            census.full_ids.append(str(p))
            if not (cls.discrete or cls.strongly_rigid):
                census.exceptional += 1
            if n >= 3 and C.has_equilateral_triangle(p) and not cls.discrete:
                census.equilateral_violations += 1
        if brute != cls.cs_equals_sym:
            census.disagreements += 1
            census.disagreement_ids.append(str(p))
    return census
