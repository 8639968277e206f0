"""Exact scalar field Q(sqrt2), mode coercion, and text round trips."""

from fractions import Fraction

import pytest
from hypothesis import given, strategies as st

from nact.errors import ModeMismatch, ParseError
from nact.scalars import (
    ABS_TOL,
    EXACT,
    FLOAT,
    QSqrt2,
    SQRT2,
    SQRT2_HALF,
    abs_value,
    as_mode_scalar,
    format_value,
    parse_value,
    scalar_is_zero,
    scalars_equal,
    sign,
    sqrt_exact,
)

fractions = st.fractions(min_value=-(10**6), max_value=10**6, max_denominator=10**4)
nonzero_fractions = fractions.filter(lambda v: v != 0)


def qsqrt2s():
    return st.builds(QSqrt2, fractions, nonzero_fractions)


def test_qsqrt2_demotes_to_fraction():
    assert QSqrt2(Fraction(3, 2), 0) == Fraction(3, 2)
    assert isinstance(QSqrt2(1, 1) - QSqrt2(0, 1), Fraction)


def test_sqrt2_squares_to_two():
    assert SQRT2 * SQRT2 == 2
    assert SQRT2_HALF * SQRT2_HALF == Fraction(1, 2)


@given(qsqrt2s(), qsqrt2s())
def test_field_multiplication_commutes(x, y):
    assert x * y == y * x


@given(qsqrt2s())
def test_multiplicative_inverse(x):
    assert x * (1 / x) == 1


@given(qsqrt2s())
def test_order_agrees_with_floats(x):
    """The exact sign never disagrees with the float image (well separated)."""
    f = float(x)
    if abs(f) > 1e-6:
        assert (x > 0) == (f > 0)


@given(qsqrt2s(), qsqrt2s())
def test_order_total(x, y):
    assert (x < y) + (x == y) + (y < x) == 1


def test_sign_and_abs():
    assert sign(QSqrt2(-3, 2)) == -1  # -3 + 2*sqrt2 < 0
    assert sign(QSqrt2(-1, 1)) == 1  # sqrt2 > 1
    assert abs_value(QSqrt2(1, -1)) == QSqrt2(-1, 1)
    assert sign(Fraction(0)) == 0


def test_sqrt_exact():
    assert sqrt_exact(Fraction(9, 4)) == Fraction(3, 2)
    assert sqrt_exact(Fraction(2)) == SQRT2
    assert sqrt_exact(Fraction(1, 2)) == SQRT2_HALF
    assert sqrt_exact(Fraction(3)) is None
    assert sqrt_exact(Fraction(-1)) is None


def test_as_mode_scalar_rejects_floats_in_exact_mode():
    with pytest.raises(ModeMismatch):
        as_mode_scalar(0.5, EXACT)
    assert as_mode_scalar(Fraction(1, 2), FLOAT) == 0.5
    assert as_mode_scalar(QSqrt2(0, 1), FLOAT) == pytest.approx(2**0.5)


def test_format_pinned_values():
    assert format_value(Fraction(3, 2), EXACT) == "3/2"
    assert format_value(Fraction(-4), EXACT) == "-4"
    assert format_value(QSqrt2(0, 1), EXACT) == "sqrt2"
    assert format_value(QSqrt2(0, -1), EXACT) == "-sqrt2"
    assert format_value(QSqrt2(Fraction(1, 2), Fraction(-3, 4)), EXACT) == "1/2-3/4*sqrt2"


def test_parse_pinned_values():
    assert parse_value("3/2", EXACT) == Fraction(3, 2)
    assert parse_value(7, EXACT) == Fraction(7)
    assert parse_value("sqrt2", EXACT) == QSqrt2(0, 1)
    assert parse_value("-sqrt2", EXACT) == QSqrt2(0, -1)
    assert parse_value("1/2-3/4*sqrt2", EXACT) == QSqrt2(Fraction(1, 2), Fraction(-3, 4))
    assert parse_value("-1/2+sqrt2", EXACT) == QSqrt2(Fraction(-1, 2), 1)
    assert parse_value("2*sqrt2", EXACT) == QSqrt2(0, 2)


def test_parse_rejects_garbage():
    for bad in ("", "one", "1..2", "sqrt3", True, None, [1]):
        with pytest.raises(ParseError):
            parse_value(bad, EXACT)


def test_parse_float_mode():
    assert parse_value("1/2", FLOAT) == 0.5
    assert parse_value(0.25, FLOAT) == 0.25
    assert parse_value("sqrt2", FLOAT) == pytest.approx(2**0.5)
    with pytest.raises(ParseError):
        parse_value("nan", FLOAT)


@given(fractions)
def test_fraction_text_round_trip(v):
    assert parse_value(format_value(v, EXACT), EXACT) == v


@given(qsqrt2s())
def test_qsqrt2_text_round_trip(v):
    assert parse_value(format_value(v, EXACT), EXACT) == v


def test_float_equality_tolerance():
    assert scalars_equal(1.0, 1.0 + ABS_TOL / 2, FLOAT)
    assert not scalars_equal(1.0, 1.0 + 1e-6, FLOAT)
    assert scalar_is_zero(ABS_TOL / 2, FLOAT)
    assert not scalar_is_zero(1e-6, FLOAT)


def test_exact_equality_is_literal():
    assert scalars_equal(Fraction(1, 3), Fraction(1, 3), EXACT)
    assert not scalars_equal(Fraction(1, 3), Fraction(1, 3) + Fraction(1, 10**12), EXACT)
    assert not scalars_equal(QSqrt2(1, 1), Fraction(1), EXACT)
