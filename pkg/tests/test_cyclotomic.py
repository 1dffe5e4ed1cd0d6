import cmath
from fractions import Fraction

import pytest
import sympy
from hypothesis import given, settings
from hypothesis import strategies as st

from cyclocat.cyclotomic import CycScalar, RootPower, cyclotomic_poly, embed, order


def test_small_cyclotomic_polynomials():
    assert cyclotomic_poly(1) == (-1, 1)
    assert cyclotomic_poly(4) == (1, 0, 1)
    assert cyclotomic_poly(6) == (1, -1, 1)


@pytest.mark.parametrize("n", range(1, 65))
def test_cyclotomic_poly_matches_sympy(n):
    x = sympy.Symbol("x")
    expected = sympy.Poly(sympy.cyclotomic_poly(n, x), x).all_coeffs()[::-1]
    assert cyclotomic_poly(n) == tuple(int(c) for c in expected)


@pytest.mark.parametrize("n", range(1, 65))
def test_primitive_root_is_a_zero(n):
    t = cmath.exp(2j * cmath.pi / n)
    assert abs(sum(c * t**i for i, c in enumerate(cyclotomic_poly(n)))) < 1e-9


def test_embed_examples():
    assert embed(RootPower(4, 2)) == CycScalar.rational(4, -1)
    assert embed(RootPower(5, 0)) == CycScalar.one(5)
    assert embed(RootPower(2, 1)) == CycScalar.rational(2, -1)


def test_field_examples():
    total = CycScalar.zero(5)
    for e in range(5):
        total = total + embed(RootPower(5, e))
    assert total.is_zero()
    assert RootPower(5, 3) * RootPower(5, 4) == RootPower(5, 2)
    assert RootPower(7, 2).inverse() == RootPower(7, 5)
    assert embed(RootPower(7, 2)).inverse() == embed(RootPower(7, 5))


def test_order_examples():
    assert order(RootPower(12, 4)) == 3
    assert order(RootPower(7, 0)) == 1
    assert order(RootPower(8, 6)) == 4


def test_inverse_of_zero_raises():
    with pytest.raises(ZeroDivisionError):
        CycScalar.zero(5).inverse()
    with pytest.raises(ZeroDivisionError):
        CycScalar.one(5) / CycScalar.zero(5)


def test_modulus_checks():
    with pytest.raises(ValueError):
        RootPower(0, 1)
    with pytest.raises(ValueError):
        CycScalar.one(3) + CycScalar.one(4)


@pytest.mark.parametrize("n", range(1, 25))
def test_embed_is_multiplicative_exhaustive(n):
    for a in range(n):
        for b in range(n):
            assert embed(RootPower(n, a)) * embed(RootPower(n, b)) == embed(RootPower(n, a + b))


@given(st.integers(1, 64), st.integers(), st.integers())
def test_embed_is_multiplicative(n, a, b):
    assert embed(RootPower(n, a)) * embed(RootPower(n, b)) == embed(RootPower(n, a + b))


@given(st.integers(1, 64), st.integers(0, 63), st.integers(0, 63))
def test_embed_is_injective(n, a, b):
    assert (embed(RootPower(n, a)) == embed(RootPower(n, b))) == ((a - b) % n == 0)


@given(st.integers(1, 64), st.integers())
def test_root_power_to_the_n_is_one(n, e):
    assert (RootPower(n, e) ** n).is_one()
    assert embed(RootPower(n, e)) ** n == CycScalar.one(n)


def scalars(n, height=1000):
    return st.lists(st.integers(-height, height), max_size=n).map(lambda cs: CycScalar(n, cs))


@st.composite
def scalar_triples(draw):
    n = draw(st.integers(1, 24))
    return tuple(draw(scalars(n, 50)) for _ in range(3))


@settings(max_examples=60)
@given(scalar_triples())
def test_field_axioms(xyz):
    x, y, z = xyz
    n = x.n
    assert (x + y) * z == x * z + y * z
    assert (x * y) * z == x * (y * z)
    assert x * y == y * x
    assert x - x == CycScalar.zero(n)
    if not x.is_zero():
        assert x * x.inverse() == CycScalar.one(n)
        assert (y / x) * x == y


@st.composite
def scalar_with_n(draw):
    n = draw(st.integers(1, 64))
    return draw(scalars(n))


@settings(max_examples=80)
@given(scalar_with_n(), st.integers(0, 3))
def test_float_cross_check(x, k):
    # exact arithmetic agrees with evaluation at exp(2 pi i / n)
    t = cmath.exp(2j * cmath.pi / x.n)
    y = x * embed(RootPower(x.n, k)) + CycScalar.rational(x.n, Fraction(1, 3))
    assert abs(y.to_complex() - (x.to_complex() * t**k + 1 / 3)) < 1e-9 * max(1, abs(y.to_complex()))


@given(scalar_with_n())
def test_json_round_trip(x):
    assert CycScalar.from_json(x.to_json()) == x
    assert all("/" in c for c in x.to_json()["coeffs"])


def test_as_monomial():
    x = embed(RootPower(7, 3)) * Fraction(2, 5)
    assert x.as_monomial() == (Fraction(2, 5), 3)
    assert (CycScalar.one(7) + embed(RootPower(7, 1))).as_monomial() is None
