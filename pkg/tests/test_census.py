import math
import random

import pytest

from combsim import enumerate_patterns, self_similarity_group, space_from_pattern
from combsim.census import cs_orders, run_census


@pytest.mark.parametrize("n", [1, 2, 3, 4])
def test_vectorised_orders_match_group_search(n):
    pats = list(enumerate_patterns(n))
    orders = cs_orders(n, [p.rgs for p in pats])
    for p, order in zip(pats, orders):
        assert order == self_similarity_group(space_from_pattern(p)).order


def test_vectorised_orders_match_group_search_sample_n5():
    pats = list(enumerate_patterns(5))
    rng = random.Random(0)
    sample = rng.sample(pats, 1500) + [pats[0], pats[-1]]
    orders = cs_orders(5, [p.rgs for p in sample])
    for p, order in zip(sample, orders):
        assert order == self_similarity_group(space_from_pattern(p)).order


def test_census_small():
    c = run_census(3)
    assert (c.total, c.full, c.disagreements) == (5, 2, 0)
    assert c.full_ids == ["000", "012"]
    c = run_census(4)
    assert (c.total, c.full, c.disagreements, c.exceptional) == (203, 3, 0, 1)
    assert c.full_ids == ["000000", "012210", "012345"]
    assert all(math.factorial(4) % o == 0 for o in c.orders)


def test_census_summary_key_order():
    keys = list(run_census(3).summary())
    assert keys[:4] == ["n", "total", "full", "disagreements"]
