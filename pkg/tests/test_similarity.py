from fractions import Fraction
from itertools import permutations

import pytest

from combsim import (
    Permutation,
    SemimetricSpace,
    all_permutations,
    are_combinatorially_similar,
    discrete_space,
    induced_value_map,
    is_isometry,
    is_weak_similarity,
    pseudolinear,
    rectangle_example,
    self_isometry_group,
    self_similarity_group,
    strongly_rigid_space,
    value_set,
)
from combsim.errors import DegreeTooLarge, SizeMismatch
from combsim.similarity import ValueBijection, relabel

from conftest import definitional_group, definitional_similarity, definitional_weak, table

CYCLE4 = Permutation([1, 2, 3, 0])  # z1 -> z2 -> z3 -> z4 -> z1


def test_identity_gives_identity_value_map(rect, aab):
    for s in (rect, aab, discrete_space(4)):
        f = induced_value_map(s, s, Permutation.identity(s.n))
        assert f.is_identity() and f.domain == value_set(s)


def test_rectangle_cycle_swaps_sides(rect):
    f = induced_value_map(rect, rect, CYCLE4)
    assert f.as_dict() == {0: 0, 3: 4, 4: 3, 5: 5}
    assert f.as_dict() == definitional_similarity(table(rect), table(rect), CYCLE4.images)
    assert not is_isometry(rect, rect, CYCLE4)
    assert not is_weak_similarity(rect, rect, CYCLE4)


def test_three_cycle_breaks_isosceles(aab):
    assert induced_value_map(aab, aab, Permutation([1, 2, 0])) is None


def test_isometry_examples(rect):
    assert is_isometry(rect, rect, Permutation.identity(4))
    d = discrete_space(4, 3)
    assert all(is_isometry(d, d, p) for p in all_permutations(4))


def test_weak_similarity_identity_and_isometry(rect):
    assert is_weak_similarity(rect, rect, Permutation.identity(4))
    assert is_weak_similarity(rect, rect, Permutation([1, 0, 3, 2]))


def test_weak_similarity_between_spaces():
    a = SemimetricSpace.from_pair_values(3, [1, 2, 3])
    b = SemimetricSpace.from_pair_values(3, [10, 20, 30])
    c = SemimetricSpace.from_pair_values(3, [30, 20, 10])
    e = Permutation.identity(3)
    assert is_weak_similarity(a, b, e) and not is_isometry(a, b, e)
    assert not is_weak_similarity(a, c, e)
    assert induced_value_map(a, c, e) is not None


def test_size_mismatch(rect, aab):
    with pytest.raises(SizeMismatch):
        induced_value_map(rect, aab, Permutation.identity(4))
    with pytest.raises(SizeMismatch):
        is_isometry(rect, rect, Permutation.identity(3))


def test_group_examples(rect, aab):
    assert self_similarity_group(rect).order == 24
    assert self_isometry_group(rect).sorted_elements() == [
        Permutation(p) for p in [(0, 1, 2, 3), (1, 0, 3, 2), (2, 3, 0, 1), (3, 2, 1, 0)]
    ]
    assert self_similarity_group(aab).sorted_elements() == [
        Permutation([0, 1, 2]), Permutation([2, 1, 0])
    ]
    sq = self_similarity_group(pseudolinear(1, 1))
    assert sq.order == 8
    assert set(sq.elements) == {Permutation(p) for p in definitional_group(table(pseudolinear(1, 1)))}
    assert self_isometry_group(discrete_space(4)).order == 24
    assert self_isometry_group(SemimetricSpace.from_pair_values(3, [1, 2, 4])).order == 1


@pytest.mark.parametrize("mode", ["exhaustive", "pruned"])
def test_degenerate_sizes(mode):
    one = SemimetricSpace([[0]])
    two = SemimetricSpace([[0, 5], [5, 0]])
    assert self_similarity_group(one, mode).order == 1
    assert self_similarity_group(two, mode).order == 2


def test_cap_and_pruned_mode():
    big = strongly_rigid_space(9)
    with pytest.raises(DegreeTooLarge):
        self_similarity_group(big)
    # all distances distinct: every permutation is a similarity, but check
    # a smaller, faster-to-list case in pruned mode beyond a lowered cap
    s = strongly_rigid_space(5)
    with pytest.raises(DegreeTooLarge):
        self_similarity_group(s, cap=4)
    assert self_similarity_group(s, "pruned", cap=4).order == 120


def test_unknown_mode(rect):
    with pytest.raises(ValueError):
        self_similarity_group(rect, "fast")


def test_are_combinatorially_similar_examples(rect):
    w = are_combinatorially_similar(rect, rect)
    assert w.psi == Permutation.identity(4) and w.f.is_identity()
    a = pseudolinear(1, 2)
    w = are_combinatorially_similar(a, rect)
    assert w is not None and w.verify(a, rect)
    assert are_combinatorially_similar(pseudolinear(1, 1), rect) is None
    # size mismatch and size-multiset mismatch reject without search
    assert are_combinatorially_similar(rect, discrete_space(3)) is None
    assert are_combinatorially_similar(rect, discrete_space(4)) is None


def test_similarity_matches_brute_force_over_bijections(rect):
    a = pseudolinear(1, 1)
    assert not any(
        definitional_similarity(table(a), table(rect), p) for p in permutations(range(4))
    )


def test_witness_verify_detects_bad_map(rect):
    w = are_combinatorially_similar(rect, rect)
    bad = type(w)(CYCLE4, w.f)
    assert not bad.verify(rect, rect)


def test_value_bijection_validation():
    with pytest.raises(ValueError):
        ValueBijection(((Fraction(1), Fraction(2)), (Fraction(3), Fraction(2))))
    with pytest.raises(ValueError):
        ValueBijection(((Fraction(0), Fraction(1)), (Fraction(1), Fraction(0))))


def test_relabel_is_an_isometry(rect):
    psi = Permutation([2, 0, 3, 1])
    b = relabel(rect, psi)
    assert is_isometry(rect, b, psi)


@pytest.mark.parametrize("vals", [[1, 1, 2, 3, 3, 1], [1, 2, 3, 4, 5, 5], [2, 2, 2, 2, 1, 1]])
def test_weak_matches_definition(vals):
    s = SemimetricSpace.from_pair_values(4, vals)
    t = table(s)
    for p in all_permutations(4):
        assert is_weak_similarity(s, s, p) == definitional_weak(t, t, p.images)
        assert (induced_value_map(s, s, p) is not None) == (
            definitional_similarity(t, t, p.images) is not None
        )


def test_rectangle_group_matches_definition():
    r = rectangle_example()
    assert {p.images for p in self_similarity_group(r).elements} == definitional_group(table(r))
