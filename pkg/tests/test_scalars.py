from fractions import Fraction

import pytest
from hypothesis import given, strategies as st

from quadmod.scalars import GaussianRational as Q, I, ONE, ZERO, rational_sqrt, rational_sqrt_upper

fractions = st.fractions(min_value=-100, max_value=100, max_denominator=50)
gaussians = st.builds(Q, fractions, fractions)


def test_basic_arithmetic():
    z = Q(1, 2)
    assert z * z.conjugate() == Q(5)
    assert I * I == -ONE
    assert (Q(3, 4) / Q(3, 4)) == ONE
    assert Q(Fraction(3, 5), Fraction(4, 5)).modulus() == 1
    assert Q(1, 1).modulus() is None
    assert complex(Q(Fraction(1, 2), -3)) == complex(0.5, -3)


def test_string_forms():
    assert str(I) == "i"
    assert str(Q(0, Fraction(3, 4))) == "3/4·i"
    assert str(Q(1, -2)) == "(1 - 2·i)"
    assert str(Q(Fraction(-5, 3))) == "-5/3"


def test_sqrt_helpers():
    assert rational_sqrt(Fraction(9, 4)) == Fraction(3, 2)
    assert rational_sqrt(2) is None
    up = rational_sqrt_upper(2, 1000)
    assert up * up >= 2 and up - Fraction(1414, 1000) < Fraction(2, 1000)


@given(gaussians, gaussians)
def test_field_laws(a, b):
    assert a + b == b + a
    assert a * b == b * a
    assert (a * b).conjugate() == a.conjugate() * b.conjugate()
    assert a.conjugate().conjugate() == a
    n = a.abs2()
    assert isinstance(n, Fraction) and n >= 0
    assert (a * a.conjugate()).is_real()
    if b != ZERO:
        assert (a / b) * b == a


@given(gaussians)
def test_hash_consistent_with_equality(a):
    assert hash(a + ZERO) == hash(a)
    if a.is_real():
        assert hash(a) == hash(a.re)


def test_division_by_zero():
    with pytest.raises(ZeroDivisionError):
        ONE / ZERO
