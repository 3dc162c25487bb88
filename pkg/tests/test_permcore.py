import pytest
from hypothesis import given
from hypothesis import strategies as st

from spinal.permcore import (
    Perm,
    PermGroup,
    collapse_word,
    compose,
    derived_subgroup,
    enumerate_group,
    inverse,
    is_perfect,
    perm_order,
    subgroup_generated,
)


def perms(m):
    return st.permutations(range(m)).map(Perm)


def test_right_action_convention():
    p = Perm.from_cycles(3, (0, 1))
    q = Perm.from_cycles(3, (1, 2))
    # 0 -> 1 under p, then 1 -> 2 under q
    assert compose(p, q)[0] == 2
    assert (p * q)[0] == 2


def test_left_conjugation():
    p = Perm.from_cycles(4, (0, 1, 2, 3))
    a = Perm.from_cycles(4, (0, 1))
    assert a.conjugate_by(p) == p * a * ~p


def test_rejects_non_permutation():
    with pytest.raises(ValueError):
        Perm([0, 0, 1])


def test_cycle_notation():
    assert str(Perm.identity(3)) == "()"
    assert str(Perm.from_cycles(4, (0, 2), (1, 3))) == "(0 2)(1 3)"


@given(perms(6), perms(6), perms(6))
def test_group_axioms(p, q, r):
    assert compose(compose(p, q), r) == compose(p, compose(q, r))
    assert compose(p, inverse(p)).is_identity()
    assert compose(Perm.identity(6), p) == p


@given(perms(7))
def test_order_is_minimal(p):
    n = perm_order(p)
    assert (p ** n).is_identity()
    assert all(not (p ** k).is_identity() for k in range(1, n))


def test_enumeration_sizes():
    a4 = [Perm.from_cycles(4, (0, 1, 2)), Perm.from_cycles(4, (1, 2, 3))]
    assert len(enumerate_group(a4)) == 12
    assert enumerate_group(a4)[0].is_identity()
    d4 = PermGroup(4, {"s": Perm.from_cycles(4, (1, 3)), "r": Perm.from_cycles(4, (0, 1, 2, 3))})
    assert d4.order == 8
    assert d4.is_transitive() and not d4.is_regular()
    assert not d4.is_abelian()


def test_derived_and_perfect():
    a4 = [Perm.from_cycles(4, (0, 1, 2)), Perm.from_cycles(4, (1, 2, 3))]
    assert len(derived_subgroup(a4)) == 4
    assert not is_perfect(a4)
    a5 = [Perm.from_cycles(5, (0, 1, 2, 3, 4)), Perm.from_cycles(5, (0, 1, 2))]
    assert is_perfect(a5)
    assert subgroup_generated([], 3) == {Perm.identity(3)}


def test_transversal_and_mp_sets():
    d4 = PermGroup(4, {"s": Perm.from_cycles(4, (1, 3)), "r": Perm.from_cycles(4, (0, 1, 2, 3))})
    for x, t in d4.transversal.items():
        assert t[0] == x
    assert d4.transversal[0].is_identity()
    assert all(p[0] == 2 for p in d4.mp_from_zero(2))
    assert len(d4.mp_from_zero(2)) == 2


def test_names():
    d4 = PermGroup(4, {"s": Perm.from_cycles(4, (1, 3)), "r": Perm.from_cycles(4, (0, 1, 2, 3))})
    assert d4.name_of(d4.identity) == "1"
    assert d4.name_of(d4.gens["s"] * d4.gens["r"]) == "s r"
    assert collapse_word(["r", "r", "s"]) == "r^2 s"
