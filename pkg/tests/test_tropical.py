from __future__ import annotations

import math

import pytest
from hypothesis import given
from hypothesis import strategies as st

from charone import INF, Bool, Rmax, Zmin, zmin_add, zmin_frobenius, zmin_mul

exps = st.one_of(st.integers(-10**30, 10**30), st.just(INF))
zmins = exps.map(Zmin)


def test_add_examples():
    assert zmin_add(Zmin(2), Zmin(5)) == Zmin(2)
    assert zmin_add(Zmin(3), Zmin(INF)) == Zmin(3)
    assert zmin_add(Zmin(3), Zmin(3)) == Zmin(3)


def test_mul_examples():
    assert zmin_mul(Zmin(2), Zmin(5)) == Zmin(7)
    assert zmin_mul(Zmin(4), Zmin(0)) == Zmin(4)
    assert zmin_mul(Zmin(4), Zmin(INF)) == Zmin(INF)


def test_frobenius_examples():
    assert zmin_frobenius(Zmin(3), 2) == Zmin(6)
    assert zmin_frobenius(Zmin(INF), 7) == Zmin(INF)
    assert zmin_frobenius(Zmin(0), 5) == Zmin(0)
    with pytest.raises(ValueError):
        zmin_frobenius(Zmin(1), 0)


@given(zmins, zmins, zmins)
def test_semiring_axioms(x, y, z):
    assert (x + y) + z == x + (y + z)
    assert (x * y) * z == x * (y * z)
    assert x + y == y + x and x * y == y * x
    assert x * (y + z) == x * y + x * z
    assert x + x == x
    assert x + Zmin.zero() == x and x * Zmin.one() == x
    assert x * Zmin.zero() == Zmin.zero()


@given(zmins, zmins, st.integers(1, 100), st.integers(1, 100))
def test_frobenius_is_multiplicative_endomorphism(x, y, k, k2):
    assert x.frobenius(k).frobenius(k2) == x.frobenius(k * k2)
    assert (x + y).frobenius(k) == x.frobenius(k) + y.frobenius(k)
    assert (x * y).frobenius(k) == x.frobenius(k) * y.frobenius(k)


@pytest.mark.parametrize("k", range(1, 101))
def test_frobenius_fixes_boolean_copy(k):
    for b in (Bool(0), Bool(1)):
        assert b.to_zmin().frobenius(k) == b.to_zmin()


def test_zmax_view_negates():
    assert Zmin.from_zmax(3) == Zmin(-3)
    assert Zmin.from_zmax(-math.inf) == Zmin(INF)
    assert Zmin(INF).to_zmax() == -math.inf
    # max in Z_max corresponds to min in Z_min
    assert Zmin.from_zmax(max(2, 7)) == Zmin.from_zmax(2) + Zmin.from_zmax(7)


def test_infinity_is_a_tag_not_an_integer():
    assert Zmin(INF).exp is INF
    with pytest.raises(TypeError):
        Zmin(1.5)
    with pytest.raises(TypeError):
        Zmin(True)
    assert Zmin(10**100) + Zmin(INF) == Zmin(10**100)


def test_json_round_trip():
    for x in (Zmin(0), Zmin(-7), Zmin(INF)):
        assert Zmin.from_json(x.to_json()) == x
    assert Zmin(INF).to_json() == {"exp": "inf"}
    assert Zmin(4).to_json() == {"exp": 4}


def test_bool_and_rmax():
    assert Bool(1) + Bool(1) == Bool(1)
    assert Bool(1) * Bool(0) == Bool(0)
    with pytest.raises(ValueError):
        Bool(2)
    x, y = Rmax(0.5), Rmax(2.0)
    assert (x + y).value == 2.0 and (x * y).value == 1.0
    assert Rmax(4.0).frobenius(0.5).value == pytest.approx(2.0)
    # Fr_u is an automorphism: it commutes with max and products
    u = 1.7
    assert (x + y).frobenius(u).value == pytest.approx((x.frobenius(u) + y.frobenius(u)).value)
    assert (x * y).frobenius(u).value == pytest.approx((x.frobenius(u) * y.frobenius(u)).value)
    assert Rmax.from_zmin(Zmin(2), 0.5).value == 0.25
    assert Rmax.from_zmin(Zmin(INF), 0.5).value == 0.0
