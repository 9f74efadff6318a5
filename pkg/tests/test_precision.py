"""Tests for error-tracked reals: interval arithmetic, display, contexts.

The central invariant is containment: feeding exact rationals through any
chain of BoundedReal operations must yield an interval that contains the
exact rational result.
"""

from fractions import Fraction

import mpmath
import pytest
from hypothesis import given, strategies as st
from mpmath import mp, mpf

from bernfac.precision import (
    BoundedReal,
    PrecisionContext,
    PrecisionError,
    certified_eval,
    format_bound,
    is_certified,
    make_context,
    mpf_to_fraction,
    round_to_digits,
)


# -- contexts -----------------------------------------------------------------

def test_context_guard_policy():
    assert make_context(20).guard_digits == 10
    assert make_context(95).guard_digits == 10
    assert make_context(100).guard_digits == 10
    assert make_context(101).guard_digits == 11
    assert make_context(200).guard_digits == 20
    assert make_context(20).working_digits == 30


def test_context_validation():
    with pytest.raises(ValueError):
        PrecisionContext(0, 10)
    with pytest.raises(ValueError):
        PrecisionContext(20, 9)
    with pytest.raises(ValueError):
        make_context(0)


def test_context_widened():
    ctx = make_context(20)
    wider = ctx.widened(15)
    assert wider.target_digits == 20
    assert wider.guard_digits == 25


def test_workprec_scopes_mpmath_dps():
    ctx = make_context(40)
    before = mp.dps
    with ctx.workprec():
        assert mp.dps == 50
    assert mp.dps == before


# -- mpf <-> Fraction ---------------------------------------------------------

def test_mpf_to_fraction_exact_dyadics():
    assert mpf_to_fraction(mpf(0)) == 0
    assert mpf_to_fraction(mpf(3)) == 3
    assert mpf_to_fraction(mpf("0.5")) == Fraction(1, 2)
    assert mpf_to_fraction(mpf("-2.75")) == Fraction(-11, 4)


def test_mpf_to_fraction_keeps_high_precision_values():
    with mp.workdps(50):
        x = mpf(1) / mpf(3)
    # conversion outside the workdps block must not re-round x
    f = mpf_to_fraction(x)
    assert abs(f - Fraction(1, 3)) < Fraction(1, 10**45)


def test_mpf_to_fraction_rejects_non_finite():
    with pytest.raises(ValueError):
        mpf_to_fraction(mpf("inf"))


# -- constructors -------------------------------------------------------------

def test_exact_small_int_has_zero_error():
    x = BoundedReal.exact(12345)
    assert x.abs_err == 0
    assert x.contains(12345)


def test_exact_huge_int_is_contained():
    n = 10**60 + 7
    x = BoundedReal.exact(n)
    assert x.abs_err > 0
    assert x.contains(n)


def test_exact_fraction_dyadic_and_generic():
    assert BoundedReal.exact(Fraction(3, 8)).abs_err == 0
    y = BoundedReal.exact(Fraction(1, 3))
    assert y.abs_err > 0
    assert y.contains(Fraction(1, 3))


def test_exact_passthrough_and_float():
    x = BoundedReal.exact(Fraction(1, 3))
    assert BoundedReal.exact(x) is x
    assert BoundedReal.exact(0.5).abs_err == 0


def test_exact_rejects_strings():
    with pytest.raises(TypeError):
        BoundedReal.exact("1.5")


def test_negative_error_rejected():
    with pytest.raises(ValueError):
        BoundedReal(mpf(1), mpf(-1))


def test_non_finite_rejected():
    with pytest.raises(PrecisionError):
        BoundedReal(mpf("nan"), mpf(0))


# -- interval containment under arithmetic ------------------------------------

fractions_st = st.fractions(
    min_value=Fraction(-1000), max_value=Fraction(1000), max_denominator=10**6
)


@given(fractions_st, fractions_st)
def test_add_sub_mul_contain_exact_result(a, b):
    xa = BoundedReal.exact(a)
    xb = BoundedReal.exact(b)
    assert (xa + xb).contains(a + b)
    assert (xa - xb).contains(a - b)
    assert (xa * xb).contains(a * b)


@given(fractions_st, fractions_st)
def test_division_contains_exact_result(a, b):
    if abs(b) < Fraction(1, 100):
        b = b + 1
    assert (BoundedReal.exact(a) / BoundedReal.exact(b)).contains(a / b)


@given(fractions_st)
def test_mixed_operand_promotion(a):
    x = BoundedReal.exact(a)
    assert (2 * x).contains(2 * a)
    assert (x + Fraction(1, 3)).contains(a + Fraction(1, 3))
    assert (1 - x).contains(1 - a)
    assert (-x).contains(-a)
    assert abs(x).contains(abs(a))


def test_division_by_interval_containing_zero():
    wide = BoundedReal(mpf("0.001"), mpf("0.01"))
    with pytest.raises(PrecisionError):
        BoundedReal.exact(1) / wide


def test_rtruediv():
    x = BoundedReal.exact(4)
    assert (1 / x).contains(Fraction(1, 4))


@given(fractions_st, st.integers(min_value=0, max_value=12))
def test_pow_int_contains_exact_power(a, n):
    assert BoundedReal.exact(a).pow_int(n).contains(a**n)


def test_pow_int_negative_exponent():
    x = BoundedReal.exact(Fraction(3, 2))
    assert x.pow_int(-2).contains(Fraction(4, 9))


def test_power_rational_exponent():
    x = BoundedReal.exact(Fraction(9, 4)).power(Fraction(1, 2))
    assert x.contains(Fraction(3, 2))
    y = BoundedReal.exact(Fraction(9, 4)).sqrt()
    assert y.contains(Fraction(3, 2))


def test_exp_log_roundtrip_contains():
    for q in (Fraction(1, 3), Fraction(7, 2), Fraction(100)):
        x = BoundedReal.exact(q)
        assert x.log().exp().contains(q)


def test_exp_error_propagation_is_outward():
    x = BoundedReal(mpf(1), mpf("1e-10"))
    y = x.exp()
    # interval [e^(1-d), e^(1+d)] must sit inside value +- abs_err
    lo = mpmath.exp(mpf(1) - mpf("1e-10"))
    hi = mpmath.exp(mpf(1) + mpf("1e-10"))
    assert y.lower() <= lo and hi <= y.upper()


def test_log_rejects_interval_touching_zero():
    with pytest.raises(PrecisionError):
        BoundedReal(mpf("1e-5"), mpf("1e-4")).log()


def test_interval_views():
    x = BoundedReal(mpf(2), mpf("0.5"))
    assert x.lower() <= mpf("1.5")
    assert x.upper() >= mpf("2.5")
    assert x.abs_upper() >= mpf("2.5")
    assert float(x) == 2.0


def test_agrees_with_overlapping_and_disjoint():
    a = BoundedReal(mpf(1), mpf("0.1"))
    b = BoundedReal(mpf("1.15"), mpf("0.1"))
    c = BoundedReal(mpf(2), mpf("0.1"))
    assert a.agrees_with(b)
    assert not a.agrees_with(c)


# -- decimal display ----------------------------------------------------------

def test_round_to_digits_counts_all_printed_digits():
    x = BoundedReal.exact(Fraction(123456, 1000))
    assert round_to_digits(x, 6) == "123.456"
    assert round_to_digits(x, 4) == "123.4"
    assert round_to_digits(x, 3) == "123"


def test_round_to_digits_leading_zero_counts():
    x = BoundedReal.exact(Fraction(1, 2))
    assert round_to_digits(x, 3) == "0.50"
    # below 10^(1-d) the display switches to d significant digits
    assert round_to_digits(x, 1) == "5e-1"


def test_round_to_digits_truncates_toward_zero():
    assert round_to_digits(BoundedReal.exact(Fraction(1999, 1000)), 3) == "1.99"
    assert round_to_digits(BoundedReal.exact(Fraction(-1999, 1000)), 3) == "-1.99"


def test_round_to_digits_scientific_branches():
    big = BoundedReal.exact(Fraction(12345, 10))
    assert round_to_digits(big, 2) == "1.2e+3"
    small = BoundedReal.exact(Fraction(1, 1000))
    assert round_to_digits(small, 3) == "1.00e-3"
    edge = BoundedReal.exact(Fraction(1, 100))
    assert round_to_digits(edge, 3) == "0.01"


def test_round_to_digits_zero():
    assert round_to_digits(BoundedReal.exact(0), 4) == "0.000"
    assert round_to_digits(BoundedReal.exact(0), 1) == "0"


def test_round_to_digits_uncertified_marker():
    rough = BoundedReal(mpf(1), mpf("0.1"))
    assert round_to_digits(rough, 5) == "1.0000~"
    assert round_to_digits(rough, 1) == "1"
    assert is_certified(rough, 1)
    assert not is_certified(rough, 5)


def test_round_to_digits_validates_digits():
    with pytest.raises(ValueError):
        round_to_digits(BoundedReal.exact(1), 0)


@given(fractions_st, st.integers(min_value=1, max_value=12))
def test_round_to_digits_prefix_consistency(a, d):
    # a certified longer display starts with the shorter one up to the dot
    x = BoundedReal.exact(a)
    s_long = round_to_digits(x, d + 1).rstrip("~")
    s_short = round_to_digits(x, d).rstrip("~")
    if "e" not in s_long and "e" not in s_short:
        assert s_long.startswith(s_short.rstrip("."))


def test_format_bound():
    assert format_bound(mpf(0)) == "0"
    assert format_bound(mpf("6.002e-4")) == "6.002e-4"
    assert format_bound(mpf("1.948e-12")) == "1.948e-12"
    assert format_bound(mpf("0.123"), sig=2) == "1.2e-1"


# -- certified evaluation -----------------------------------------------------

def test_certified_eval_retries_with_wider_guard():
    calls = []

    def fn(ctx):
        calls.append(ctx.guard_digits)
        if ctx.guard_digits < 20:
            return BoundedReal(mpf(1), mpf(1))
        return BoundedReal(mpf(1), mpf("1e-30"))

    result = certified_eval(fn, make_context(10))
    assert calls == [10, 20]
    assert is_certified(result, 10)


def test_certified_eval_gives_up():
    def fn(ctx):
        return BoundedReal(mpf(1), mpf(1))

    with pytest.raises(PrecisionError):
        certified_eval(fn, make_context(10))
