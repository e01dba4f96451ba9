from fractions import Fraction

import pytest
from hypothesis import given
from hypothesis import strategies as st

from toroidal_weyl.scalar import ONE, ZERO, Scalar, parse, root_of_unity, sqrt2, zeta_power

small = st.fractions(min_value=-5, max_value=5, max_denominator=6)
scalars = st.lists(small, min_size=8, max_size=8).map(Scalar.from_coeffs)


@given(scalars, scalars, scalars)
def test_ring_axioms(a, b, c):
    assert a + b == b + a
    assert a * b == b * a
    assert (a + b) + c == a + (b + c)
    assert (a * b) * c == a * (b * c)
    assert a * (b + c) == a * b + a * c
    assert a + ZERO == a and a * ONE == a
    assert a - a == ZERO


@given(scalars)
def test_inverse(a):
    if a.is_zero():
        with pytest.raises(ZeroDivisionError):
            a.inverse()
    else:
        assert a * a.inverse() == ONE


@given(scalars)
def test_text_roundtrip(a):
    assert parse(str(a)) == a


def test_roots_of_unity():
    z = zeta_power(1)
    assert z ** 24 == ONE
    assert z ** 12 == Scalar.of(-1)
    for r in (2, 3, 4, 6, 8, 12, 24):
        xi = root_of_unity(r)
        assert xi ** r == ONE
        assert all(xi ** k != ONE for k in range(1, r))
        assert sum((xi ** k for k in range(r)), ZERO) == ZERO


def test_sqrt2():
    assert sqrt2() * sqrt2() == Scalar.of(2)
    assert abs(sqrt2().to_complex() - 2 ** 0.5) < 1e-12


def test_rational_embedding():
    assert Scalar.of(Fraction(3, 4)).to_fraction() == Fraction(3, 4)
    assert Scalar.of(2) / 4 == Scalar.of(Fraction(1, 2))
