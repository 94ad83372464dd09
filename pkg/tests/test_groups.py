"""Tests for the concrete finite-group layer: constructors, encodings,
homomorphism extension and isomorphism testing."""

import math

import pytest

from ebrmaps.groups import (
    FiniteGroup,
    MarkedGroup,
    alternating,
    are_isomorphic,
    cyclic,
    dicyclic,
    dihedral,
    direct_product,
    extend_generator_map,
    extends_to_isomorphism,
    greedy_generators,
    multiplicative_units,
    quotient,
    semidirect,
    subgroup_closure,
    symmetric,
    validate_group_table,
)


def test_cyclic_basics():
    for n in (1, 2, 3, 8, 12):
        g = cyclic(n)
        assert g.order == n
        assert g.identity == 0
        assert g.is_abelian()
        if n > 1:
            assert g.element_orders[1] == n
        validate_group_table(g)
    with pytest.raises(ValueError):
        cyclic(0)


def test_cyclic_element_orders():
    g = cyclic(12)
    # ord(k) = 12 / gcd(k, 12)
    assert list(g.element_orders) == [1, 12, 6, 4, 3, 12, 2, 12, 3, 4, 6, 12]
    assert g.involutions() == [6]


def test_dihedral_is_of_order_n():
    # The constructor takes the ORDER of the group, not the polygon size.
    for n in (4, 6, 8, 20):
        marked = dihedral(n)
        g = marked.group
        assert g.order == n
        validate_group_table(g)
        m = n // 2
        # rotations occupy 0..m-1, reflections m..n-1
        assert all(g.element_orders[i] == m // math.gcd(i, m) for i in range(m))
        assert all(g.element_orders[i] == 2 for i in range(m, n))
        # the two marks are reflections whose product has order m
        a, b = marked.marked
        assert g.element_orders[a] == 2 and g.element_orders[b] == 2
        assert g.element_orders[g.mul[a][b]] == m
    with pytest.raises(ValueError):
        dihedral(7)
    with pytest.raises(ValueError):
        dihedral(0)


def test_dihedral_degenerate_order_two():
    marked = dihedral(2)
    assert marked.group.order == 2
    assert marked.marked == (1, 1)


def test_dicyclic():
    q8 = dicyclic(2)
    assert q8.order == 8
    assert not q8.is_abelian()
    # Q8 has a unique involution
    assert len(q8.involutions()) == 1
    q16 = dicyclic(4)
    assert q16.order == 16
    assert len(q16.involutions()) == 1
    validate_group_table(q8)
    validate_group_table(q16)


def test_symmetric_and_alternating():
    s4 = symmetric(4)
    assert s4.order == 24
    assert len(s4.perms) == 24
    assert sorted(s4.element_orders) == sorted([1] + [2] * 9 + [3] * 8 + [4] * 6)
    a5 = alternating(5)
    assert a5.order == 60
    assert not a5.is_abelian()
    validate_group_table(s4)


def test_direct_product():
    g = direct_product(cyclic(4), cyclic(2))
    assert g.order == 8
    assert g.is_abelian()
    assert sorted(g.element_orders) == [1, 2, 2, 2, 4, 4, 4, 4]
    # the encoding is (x, y) -> x * |B| + y
    a, b = direct_product(cyclic(3), cyclic(5)), cyclic(15)
    assert are_isomorphic(a, b)


def test_semidirect_builds_dihedral():
    c6 = cyclic(6)
    inversion = tuple(c6.inv)
    identity = tuple(range(6))
    g = semidirect(c6, cyclic(2), (identity, inversion), name="C6:C2")
    assert g.order == 12
    assert are_isomorphic(g, dihedral(12).group)


def test_semidirect_rejects_non_action():
    c4 = cyclic(4)
    bad = (tuple(range(4)), (0, 2, 1, 3))  # not an automorphism of C4
    with pytest.raises(ValueError):
        semidirect(c4, cyclic(2), bad)


def test_quotient_of_dihedral_by_center():
    d8 = dihedral(8).group
    center = {0, 2}  # identity and the half-turn rotation
    q = quotient(d8, center)
    assert q.order == 4
    assert q.is_abelian()
    assert sorted(q.element_orders) == [1, 2, 2, 2]  # Klein four group


def test_quotient_rejects_non_normal_subset():
    d8 = dihedral(8).group
    with pytest.raises(ValueError):
        quotient(d8, {0, 4})  # a reflection generates a non-normal C2


def test_multiplicative_units():
    u8 = multiplicative_units(8)
    assert u8.order == 4
    assert sorted(u8.units) == [1, 3, 5, 7]
    assert sorted(u8.element_orders) == [1, 2, 2, 2]
    u5 = multiplicative_units(5)
    assert u5.order == 4
    assert 4 in u5.element_orders  # 2 and 3 generate


def test_subgroup_closure():
    d8 = dihedral(8).group
    assert subgroup_closure(d8, (0,)) == (0,)
    refl = 4
    assert set(subgroup_closure(d8, (refl,))) == {0, refl}
    assert len(subgroup_closure(d8, dihedral(8).marked)) == 8
    assert set(subgroup_closure(d8, (1,))) == {0, 1, 2, 3}


def test_extend_generator_map_homomorphism():
    # C4 -> C2 sending the generator to the involution: a genuine quotient map
    img = extend_generator_map(cyclic(4), (1,), cyclic(2), (1,))
    assert img == (0, 1, 0, 1)
    # no homomorphism C4 -> C6 can send an order-4 element to an order-3 one
    assert extend_generator_map(cyclic(4), (1,), cyclic(6), (2,)) is None
    # generators that do not generate raise
    with pytest.raises(ValueError):
        extend_generator_map(cyclic(4), (2,), cyclic(2), (1,))


def test_extends_to_isomorphism():
    d8 = dihedral(8)
    # reflection marks can be rotated by an (inner) automorphism
    other = MarkedGroup(d8.group, (6, 7))
    img = extends_to_isomorphism(d8, other)
    assert img is not None
    assert sorted(img) == list(range(8))
    # marks of mismatched orders cannot correspond
    bad = MarkedGroup(d8.group, (4, 1))
    assert extends_to_isomorphism(d8, bad) is None


def test_are_isomorphic_positive():
    assert are_isomorphic(dicyclic(2), dicyclic(2))
    assert are_isomorphic(
        direct_product(cyclic(2), cyclic(4)), direct_product(cyclic(4), cyclic(2))
    )
    assert are_isomorphic(symmetric(3), dihedral(6).group)


def test_are_isomorphic_negative():
    assert not are_isomorphic(dihedral(8).group, dicyclic(2))  # D8 vs Q8
    assert not are_isomorphic(cyclic(8), direct_product(cyclic(4), cyclic(2)))
    assert not are_isomorphic(dihedral(24).group, dicyclic(6))
    assert not are_isomorphic(cyclic(4), cyclic(5))


def test_greedy_generators():
    for g in (cyclic(12), dihedral(16).group, symmetric(4)):
        gens = greedy_generators(g)
        assert len(subgroup_closure(g, gens)) == g.order


def test_marked_group_requires_generation():
    d8 = dihedral(8).group
    with pytest.raises(ValueError):
        MarkedGroup(d8, (1,))  # the rotation alone generates C4 only
    with pytest.raises(ValueError):
        MarkedGroup(d8, (4, 9))  # out of range


def test_finite_group_rejects_bad_tables():
    with pytest.raises(ValueError):
        FiniteGroup(((0, 1), (1, 1)))  # element 1 has no inverse
    with pytest.raises(ValueError):
        FiniteGroup(((1, 0), (0, 0)))  # no two-sided identity... or broken
    with pytest.raises(ValueError):
        FiniteGroup(())
