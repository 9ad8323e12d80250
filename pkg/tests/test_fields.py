from fractions import Fraction

import pytest
from hypothesis import given, strategies as st

from pfident.fields import DEFAULT_TOLERANCE, Tolerance, ensure_finite, is_exact, near_equal

fractions = st.fractions(min_value=-(10**6), max_value=10**6, max_denominator=10**6)


def test_near_equal_exact_identical():
    assert near_equal(Fraction(1, 3), Fraction(1, 3))


def test_near_equal_exact_distinct():
    assert not near_equal(Fraction(1, 3), Fraction(2, 3))


def test_near_equal_complex_within_tolerance():
    assert near_equal(1.0 + 0j, 1.0 + 1e-12j, Tolerance(rel=1e-9))


def test_near_equal_complex_outside_tolerance():
    assert not near_equal(1.0 + 0j, 1.0 + 1e-6j, Tolerance(rel=1e-9, abs_floor=1e-15))


def test_near_equal_mixed_fields_rejected():
    with pytest.raises(TypeError):
        near_equal(Fraction(1), 1.0 + 0j)


def test_near_equal_non_finite_rejected():
    with pytest.raises(ValueError, match="non-finite operand"):
        near_equal(float("nan"), 1.0)
    with pytest.raises(ValueError, match="non-finite operand"):
        near_equal(1.0, complex(float("inf"), 0.0))


def test_ensure_finite_passes_exact_through():
    assert ensure_finite(Fraction(-7, 2)) == Fraction(-7, 2)


def test_is_exact():
    assert is_exact(Fraction(1, 2))
    assert is_exact(3)
    assert not is_exact(3.0)
    assert not is_exact(1 + 2j)
    assert not is_exact(True)


def test_tolerance_validation():
    with pytest.raises(ValueError):
        Tolerance(rel=0.0)
    with pytest.raises(ValueError):
        Tolerance(rel=1e-9, abs_floor=-1.0)
    assert DEFAULT_TOLERANCE.rel > 0


@given(fractions, fractions, fractions)
def test_exact_arithmetic_field_laws(a, b, c):
    assert a + b == b + a
    assert a * b == b * a
    assert (a + b) + c == a + (b + c)
    assert (a * b) * c == a * (b * c)
    assert a * (b + c) == a * b + a * c


@given(fractions, fractions)
def test_exact_results_stay_normalized(a, b):
    for value in (a + b, a - b, a * b):
        assert value.denominator > 0
        from math import gcd

        assert gcd(value.numerator, value.denominator) == 1


@given(st.complex_numbers(max_magnitude=1e6, allow_nan=False, allow_infinity=False))
def test_near_equal_reflexive(z):
    assert near_equal(z, z)


@given(
    st.complex_numbers(max_magnitude=1e6, allow_nan=False, allow_infinity=False),
    st.complex_numbers(max_magnitude=1e6, allow_nan=False, allow_infinity=False),
)
def test_near_equal_symmetric(a, b):
    assert near_equal(a, b) == near_equal(b, a)
