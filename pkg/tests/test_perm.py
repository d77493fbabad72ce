import math

import pytest

from combsim import (
    Permutation,
    all_permutations,
    compose,
    group_from_elements,
    inverse,
    is_symmetric_group,
)
from combsim.errors import DegreeMismatch, DegreeTooLarge, MissingIdentity, NotClosed
from combsim.perm import PermGroup, default_cap


def test_compose_convention():
    # (1 2) and (2 3) in 1-based cycle notation; (p q)(i) = p(q(i))
    p = Permutation([1, 0, 2])
    q = Permutation([0, 2, 1])
    assert compose(p, q) == Permutation([1, 2, 0])
    assert compose(q, p) == Permutation([2, 0, 1])
    assert p * q == compose(p, q)


def test_compose_identity_and_inverse():
    q = Permutation([2, 0, 3, 1])
    e = Permutation.identity(4)
    assert compose(e, q) == q and compose(q, e) == q
    assert compose(q, inverse(q)) == e and compose(inverse(q), q) == e


def test_compose_degree_mismatch():
    with pytest.raises(DegreeMismatch):
        compose(Permutation([0, 1]), Permutation([0, 1, 2]))


def test_inverse_examples():
    assert inverse(Permutation.identity(3)) == Permutation.identity(3)
    t = Permutation([0, 3, 2, 1])
    assert inverse(t) == t
    assert inverse(Permutation([1, 2, 3, 0])) == Permutation([3, 0, 1, 2])


def test_permutation_rejects_non_bijection():
    with pytest.raises(ValueError):
        Permutation([0, 0, 1])


def test_cycles():
    assert Permutation([1, 2, 0, 3]).cycles() == [(0, 1, 2)]
    assert Permutation.from_cycles(4, (0, 3), (1, 2)) == Permutation([3, 2, 1, 0])


def test_all_permutations():
    assert list(all_permutations(1)) == [Permutation([0])]
    three = list(all_permutations(3))
    assert len(three) == 6
    assert three[0] == Permutation([0, 1, 2]) and three[-1] == Permutation([2, 1, 0])
    assert three == sorted(three)
    assert sum(1 for _ in all_permutations(5)) == 120
    for n in range(1, 7):
        assert len(set(all_permutations(n))) == math.factorial(n)


def test_all_permutations_cap(monkeypatch):
    with pytest.raises(DegreeTooLarge):
        list(all_permutations(9))
    with pytest.raises(DegreeTooLarge):
        list(all_permutations(4, cap=3))
    assert sum(1 for _ in all_permutations(4, cap=4)) == 24
    monkeypatch.setenv("COMBSIM_CAP", "3")
    assert default_cap() == 3
    with pytest.raises(DegreeTooLarge):
        list(all_permutations(4))


def test_group_from_elements():
    e = Permutation.identity(3)
    triv = group_from_elements({e})
    assert triv.order == 1 and not is_symmetric_group(triv)
    sym3 = group_from_elements(all_permutations(3))
    assert sym3.order == 6 and is_symmetric_group(sym3)


def test_group_not_closed_reports_witness():
    c = Permutation([1, 2, 0])
    with pytest.raises(NotClosed) as info:
        group_from_elements({Permutation.identity(3), c})
    p, q = info.value.witness
    assert compose(p, q) not in {Permutation.identity(3), c}


def test_group_missing_identity_and_degree():
    with pytest.raises(MissingIdentity):
        group_from_elements({Permutation([1, 0])})
    with pytest.raises(DegreeMismatch):
        group_from_elements({Permutation([0, 1]), Permutation([0, 1, 2])})


def test_is_symmetric_group_order_8():
    # dihedral group of the square 0-1-2-3
    r = Permutation([1, 2, 3, 0])
    s = Permutation([0, 3, 2, 1])
    elems = set()
    frontier = [Permutation.identity(4)]
    while frontier:
        g = frontier.pop()
        if g in elems:
            continue
        elems.add(g)
        frontier += [compose(g, r), compose(g, s)]
    d4 = group_from_elements(elems)
    assert d4.order == 8 and not is_symmetric_group(d4)


def test_conjugate_and_subgroup():
    sym3 = group_from_elements(all_permutations(3))
    t = PermGroup(3, frozenset({Permutation.identity(3), Permutation([1, 0, 2])}))
    g = Permutation([2, 0, 1])
    conj = t.conjugate(g)
    assert conj.order == 2 and conj.issubgroup(sym3)
    # g (0 1) g^-1 swaps g(0) and g(1)
    assert Permutation([2, 1, 0]) in conj
