import itertools

import pytest

from diagcat import (
    A2_ONE,
    A2_ZERO,
    CF_CIRCLE,
    CF_EMPTY,
    CircleForest,
    FiniteMonoid,
    ReesL2Element,
    SDPElement,
    Spectrum,
    a2_image,
    a21_elements,
    a21_mul,
    a21_pair,
    a21_star,
    compose_cobordism,
    genus_pair,
    rees_mul,
    rees_star,
    sdp_mul,
    sdp_star,
    sigma,
)
from diagcat.auxmonoids import (
    JE_INT,
    JE_NAT,
    JE_PARITY,
    cf_times,
    je_mul,
    je_pair,
    je_s,
)
from diagcat.errors import InstanceMismatch, NotAssociative, NotClosed


def test_circle_forest_rendering():
    assert str(CF_EMPTY) == "0"
    assert str(CF_CIRCLE) == "(0)"
    assert str(CF_CIRCLE.enclose()) == "((0))"
    assert str(CF_CIRCLE + CF_CIRCLE.enclose()) == "(0) + ((0))"
    assert str(cf_times(CF_CIRCLE, 3)) == "(0) + (0) + (0)"


def test_circle_forest_is_commutative_and_cancellative_free():
    a, b = CF_CIRCLE, CF_CIRCLE.enclose()
    assert a + b == b + a
    assert (a + b) + a == a + (b + a)
    assert a != b
    assert CF_EMPTY + a == a
    assert sorted(map(str, (a + b + a).indecomposables())) == ["((0))", "(0)", "(0)"]


def test_ideal_extension_products():
    # integers act by clipping on the pair ideal
    assert je_mul(je_s(JE_INT, 2), je_pair(JE_INT, 5, 7)) == je_pair(JE_INT, 7, 7)
    assert je_mul(je_pair(JE_INT, 5, 7), je_s(JE_INT, 2)) == je_pair(JE_INT, 5, 9)
    assert je_mul(je_pair(JE_INT, 1, 2), je_pair(JE_INT, 3, 4)) == je_pair(JE_INT, 1, 4)
    assert je_mul(je_s(JE_INT, 1), je_s(JE_INT, 2)) == je_s(JE_INT, 3)


def test_ideal_extension_instances_are_separate():
    with pytest.raises(InstanceMismatch):
        je_mul(je_s(JE_INT, 1), je_s(JE_PARITY, 1))
    assert je_mul(je_s(JE_NAT, 1), je_s(JE_NAT, 2)) == je_s(JE_NAT, 3)


def test_band_with_zero_table():
    els = a21_elements()
    assert len(els) == 6
    assert a21_mul(a21_pair(0, 1), a21_pair(1, 0)) is A2_ZERO
    assert a21_mul(a21_pair(0, 0), a21_pair(1, 1)) == a21_pair(0, 1)
    assert a21_mul(a21_pair(1, 0), a21_pair(0, 1)) == a21_pair(1, 1)
    for x in els:
        assert a21_mul(A2_ONE, x) == x == a21_mul(x, A2_ONE)
        assert a21_mul(A2_ZERO, x) is A2_ZERO


def test_band_involution():
    assert a21_star(a21_pair(0, 1)) == a21_pair(1, 0)
    assert a21_star(A2_ZERO) is A2_ZERO and a21_star(A2_ONE) is A2_ONE
    for x, y in itertools.product(a21_elements(), repeat=2):
        assert a21_star(a21_star(x)) == x
        assert a21_star(a21_mul(x, y)) == a21_mul(a21_star(y), a21_star(x))


def test_band_is_not_a_regular_star_semigroup():
    x = a21_pair(0, 1)
    assert a21_mul(a21_mul(x, a21_star(x)), x) is A2_ZERO


def test_genus_pair_collapse():
    assert a2_image(genus_pair(0, Spectrum(), 1)) == a21_pair(0, 1)
    assert a2_image(genus_pair(0, Spectrum({1: 3}), 0)) == a21_pair(0, 0)
    assert a2_image(genus_pair(0, Spectrum({2: 1}), 1)) is A2_ZERO
    x = genus_pair(1, Spectrum({0: 1}), 0)
    y = genus_pair(0, Spectrum(), 1)
    assert a2_image(compose_cobordism(x, y)) == a21_mul(a2_image(x), a2_image(y))
    assert a2_image(sigma(x)) == a21_star(a2_image(x))


def test_shift_product_frozen():
    # odd heights swap the two coordinates before adding
    a = SDPElement(CF_CIRCLE, CF_EMPTY, 1)
    b = SDPElement(CF_CIRCLE.enclose(), CF_EMPTY, 1)
    assert sdp_mul(a, a) == SDPElement(CF_CIRCLE, CF_CIRCLE, 2)
    aba = sdp_mul(sdp_mul(a, b), a)
    assert aba == SDPElement(CF_CIRCLE + CF_CIRCLE, CF_CIRCLE.enclose(), 3)


def test_shift_star_is_an_involution():
    a = SDPElement(CF_CIRCLE, CF_CIRCLE.enclose(), 2)
    assert sdp_star(sdp_star(a)) == a
    b = SDPElement(CF_EMPTY, CF_CIRCLE, -1)
    assert sdp_star(sdp_mul(a, b)) == sdp_mul(sdp_star(b), sdp_star(a))


def test_rees_products():
    z = ReesL2Element(CF_EMPTY, CF_EMPTY, CF_EMPTY)
    assert rees_mul(z, z) == ReesL2Element(CF_EMPTY, CF_CIRCLE, CF_EMPTY)
    assert rees_star(rees_star(z)) == z
    a = ReesL2Element(CF_CIRCLE, CF_EMPTY, CF_EMPTY)
    assert rees_star(rees_mul(a, z)) == rees_mul(rees_star(z), rees_star(a))


def test_finite_monoid_from_table():
    els = a21_elements()
    index = {x: i for i, x in enumerate(els)}
    table = [[index[a21_mul(x, y)] for y in els] for x in els]
    fm = FiniteMonoid(table, labels=[str(x) for x in els])
    assert fm.size == 6
    assert fm.one == index[A2_ONE]
    assert fm.units() == (fm.one,)
    assert len(fm.idempotents()) == 5
    i01 = index[a21_pair(0, 1)]
    assert fm.index_period(i01) == (1, 1)


def test_finite_monoid_rejects_bad_tables():
    with pytest.raises(NotClosed):
        FiniteMonoid([[0, 1], [1, 7]])
    with pytest.raises(NotAssociative):
        FiniteMonoid([[0, 1, 2], [1, 2, 1], [2, 0, 0]])
