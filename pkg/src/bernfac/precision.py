"""Working-precision management and error-tracked reals.

Every inexact quantity in this package is a BoundedReal: an mpmath float
paired with a rigorous absolute error bound. Bounds are propagated outward
(rounded away from zero), so the interval value +- abs_err always contains
the mathematically exact result, provided the inputs' intervals contained
theirs. Exact data (integers, rationals) is kept in fractions.Fraction and
enters BoundedReal arithmetic only at the last moment.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Callable, Union

from mpmath import mp, mpf
import mpmath


class PrecisionError(ArithmeticError):
    """An operation could not certify the requested precision."""


@dataclass(frozen=True)
class PrecisionContext:
    """Target output digits plus guard digits for intermediate work."""

    target_digits: int
    guard_digits: int

    def __post_init__(self) -> None:
        if self.target_digits < 1:
            raise ValueError("target_digits must be at least 1")
        if self.guard_digits < 10:
            raise ValueError("guard_digits must be at least 10")

    @property
    def working_digits(self) -> int:
        return self.target_digits + self.guard_digits

    def workprec(self):
        """Context manager installing the working precision in mpmath."""
        return mp.workdps(self.working_digits)

    def widened(self, extra: int) -> "PrecisionContext":
        """Same target, more guard digits."""
        return PrecisionContext(self.target_digits, self.guard_digits + extra)


def make_context(target_digits: int) -> PrecisionContext:
    """Context with the default guard policy: max(10, ceil(target/10))."""
    if target_digits < 1:
        raise ValueError("target_digits must be at least 1")
    return PrecisionContext(target_digits, max(10, -(-target_digits // 10)))


# Directed helpers. All error accumulation goes through these so that
# rounding in the bound arithmetic itself can only enlarge the bound.

def _add_up(*xs) -> mpf:
    acc = mpf(0)
    for x in xs:
        acc = mpmath.fadd(acc, x, rounding="u")
    return acc


def _mul_up(x, y) -> mpf:
    return mpmath.fmul(x, y, rounding="u")


def _div_up(x, y) -> mpf:
    return mpmath.fdiv(x, y, rounding="u")


def _div_down(x, y) -> mpf:
    return mpmath.fdiv(x, y, rounding="d")


def _sub_down(x, y) -> mpf:
    # Lower bound for x - y, used for "bounded away from zero" checks.
    return mpmath.fsub(x, y, rounding="d")


def _neg_exact(v) -> mpf:
    # Unary minus on an mpf re-rounds the mantissa to the ambient precision,
    # which would silently shift values produced under a higher workprec.
    return mpmath.fneg(v, exact=True)


def _abs_exact(v) -> mpf:
    # Same hazard as _neg_exact: abs() re-rounds at the ambient precision.
    return _neg_exact(v) if v < 0 else v


def _ulp_slop(v) -> mpf:
    """Generous bound on the rounding error of one mpmath op that produced v.

    Basic mpf arithmetic is correctly rounded (<= 0.5 ulp) and the
    transcendental functions used here are accurate to ~1 ulp, so
    |v| * 2^(4 - prec) covers a single operation with a wide margin.
    """
    if v == 0:
        return mpf(0)
    return _mul_up(abs(v), mpf(2) ** (4 - mp.prec))


def mpf_to_fraction(v) -> Fraction:
    """Exact rational value of a finite mpf (mpfs are dyadic rationals).

    Never reconstructs an existing mpf: mpf(x) rounds to the *ambient*
    precision, which would silently truncate values produced under a
    higher working precision.
    """
    if not isinstance(v, mpf):
        v = mpf(v)
    if not mpmath.isfinite(v):
        raise ValueError(f"cannot convert {v} to a fraction")
    sign, man, exp, _ = v._mpf_
    if man == 0:
        return Fraction(0)
    frac = Fraction(int(man)) * Fraction(2) ** int(exp)
    return -frac if sign else frac


@dataclass(frozen=True)
class BoundedReal:
    """A real number known to lie in [value - abs_err, value + abs_err]."""

    value: mpf
    abs_err: mpf

    def __post_init__(self) -> None:
        # mpf(x) would re-round an existing mpf to the ambient precision,
        # so only non-mpf inputs are converted
        if not isinstance(self.value, mpf):
            object.__setattr__(self, "value", mpf(self.value))
        if not isinstance(self.abs_err, mpf):
            object.__setattr__(self, "abs_err", mpf(self.abs_err))
        if not mpmath.isfinite(self.value) or not mpmath.isfinite(self.abs_err):
            raise PrecisionError("non-finite BoundedReal")
        if self.abs_err < 0:
            raise ValueError("abs_err must be nonnegative")

    # -- constructors ------------------------------------------------------

    @staticmethod
    def exact(x: Union[int, Fraction, float, mpf]) -> "BoundedReal":
        """Wrap a number, exactly if representable, else with an ulp bound."""
        if isinstance(x, BoundedReal):
            return x
        if isinstance(x, int):
            v = mpf(x)
            err = mpf(0) if mpf_to_fraction(v) == x else _ulp_slop(v)
            return BoundedReal(v, err)
        if isinstance(x, Fraction):
            if x.denominator == 1:
                return BoundedReal.exact(int(x))
            v = mpmath.fdiv(mpf(x.numerator), mpf(x.denominator))
            err = mpf(0) if mpf_to_fraction(v) == x else _ulp_slop(v)
            return BoundedReal(v, err)
        if isinstance(x, float) or isinstance(x, mpf):
            return BoundedReal(mpf(x), mpf(0))
        raise TypeError(f"cannot promote {type(x).__name__} to BoundedReal")

    # -- interval views ----------------------------------------------------

    def upper(self) -> mpf:
        return mpmath.fadd(self.value, self.abs_err, rounding="u")

    def lower(self) -> mpf:
        return mpmath.fsub(self.value, self.abs_err, rounding="d")

    def abs_upper(self) -> mpf:
        return _add_up(_abs_exact(self.value), self.abs_err)

    def contains(self, x: Union[int, Fraction, mpf]) -> bool:
        """Whether the exact number x lies in the certified interval."""
        if isinstance(x, mpf) or isinstance(x, float):
            x = mpf_to_fraction(mpf(x))
        gap = abs(mpf_to_fraction(self.value) - x)
        return gap <= mpf_to_fraction(self.abs_err)

    def agrees_with(self, other: "BoundedReal") -> bool:
        """Whether the two certified intervals overlap (exact test)."""
        gap = abs(mpf_to_fraction(self.value) - mpf_to_fraction(other.value))
        return gap <= mpf_to_fraction(self.abs_err) + mpf_to_fraction(other.abs_err)

    def __float__(self) -> float:
        return float(self.value)

    # -- ring operations ---------------------------------------------------

    def __add__(self, other) -> "BoundedReal":
        o = BoundedReal.exact(other)
        v = self.value + o.value
        return BoundedReal(v, _add_up(self.abs_err, o.abs_err, _ulp_slop(v)))

    __radd__ = __add__

    def __neg__(self) -> "BoundedReal":
        return BoundedReal(_neg_exact(self.value), self.abs_err)

    def __sub__(self, other) -> "BoundedReal":
        return self + (-BoundedReal.exact(other))

    def __rsub__(self, other) -> "BoundedReal":
        return BoundedReal.exact(other) + (-self)

    def __mul__(self, other) -> "BoundedReal":
        o = BoundedReal.exact(other)
        v = self.value * o.value
        err = _add_up(
            _mul_up(_abs_exact(self.value), o.abs_err),
            _mul_up(_abs_exact(o.value), self.abs_err),
            _mul_up(self.abs_err, o.abs_err),
            _ulp_slop(v),
        )
        return BoundedReal(v, err)

    __rmul__ = __mul__

    def __truediv__(self, other) -> "BoundedReal":
        o = BoundedReal.exact(other)
        denom_low = _sub_down(_abs_exact(o.value), o.abs_err)
        if denom_low <= 0:
            raise PrecisionError("division by an interval containing zero")
        v = self.value / o.value
        num = _add_up(
            _mul_up(_abs_exact(o.value), self.abs_err),
            _mul_up(_abs_exact(self.value), o.abs_err),
        )
        err = _add_up(_div_up(num, _mul_up(_abs_exact(o.value), denom_low)), _ulp_slop(v))
        return BoundedReal(v, err)

    def __rtruediv__(self, other) -> "BoundedReal":
        return BoundedReal.exact(other) / self

    def __abs__(self) -> "BoundedReal":
        return BoundedReal(_abs_exact(self.value), self.abs_err)

    # -- transcendental operations -----------------------------------------

    def exp(self) -> "BoundedReal":
        v = mpmath.exp(self.value)
        # |e^(x+d) - e^x| <= e^x (e^d - 1) <= e^x * d * e^d for d >= 0
        d = self.abs_err
        growth = _mul_up(d, mpmath.exp(_add_up(d, _ulp_slop(d))))
        err = _add_up(_mul_up(_add_up(v, _ulp_slop(v)), growth), _ulp_slop(v))
        return BoundedReal(v, err)

    def log(self) -> "BoundedReal":
        low = _sub_down(self.value, self.abs_err)
        if low <= 0:
            raise PrecisionError("log of an interval touching zero")
        v = mpmath.log(self.value)
        # |log(x+d) - log(x)| <= d / (x - d) over the interval
        err = _add_up(_div_up(self.abs_err, low), _ulp_slop(v))
        return BoundedReal(v, err)

    def pow_int(self, n: int) -> "BoundedReal":
        if n == 0:
            return BoundedReal.exact(1)
        if n < 0:
            return BoundedReal.exact(1) / self.pow_int(-n)
        result = BoundedReal.exact(1)
        base = self
        while n:
            if n & 1:
                result = result * base
            n >>= 1
            if n:
                base = base * base
        return result

    def power(self, e: Union[int, Fraction]) -> "BoundedReal":
        """x^e for rational e; non-integer exponents require x > 0."""
        if isinstance(e, int) or (isinstance(e, Fraction) and e.denominator == 1):
            return self.pow_int(int(e))
        return (self.log() * BoundedReal.exact(e)).exp()

    def sqrt(self) -> "BoundedReal":
        return self.power(Fraction(1, 2))

    def __repr__(self) -> str:
        return f"BoundedReal({mpmath.nstr(self.value, 12)}, err<={mpmath.nstr(self.abs_err, 3)})"


def _decimal_exponent(a: Fraction) -> int:
    """Exact floor(log10(a)) for a positive rational."""
    assert a > 0
    # float estimate, then exact adjustment by comparing with powers of 10
    num, den = a.numerator, a.denominator
    est = (num.bit_length() - den.bit_length()) * 0.30103
    e = int(est) - 2
    while a >= Fraction(10) ** (e + 1):
        e += 1
    while a < Fraction(10) ** e:
        e -= 1
    return e


def round_to_digits(x: BoundedReal, digits: int) -> str:
    """Truncated d-digit decimal string for a certified value.

    d counts printed digit characters: integer-part digits plus fractional
    digits, with the leading "0" of a value below one counting as the
    single integer digit (so d=21 prints 1.046...098 and 0.996...433 at
    the same length, the table convention). Values needing scientific
    notation (magnitude >= 10^d or below 10^(1-d)) get d significant
    digits instead. The expansion is truncated toward zero. If the error
    bound does not pin down the printed digits (abs_err >= half a unit in
    the last printed place), a trailing '~' marks the value as not
    certified at this length.
    """
    if digits < 1:
        raise ValueError("digits must be at least 1")
    val = mpf_to_fraction(x.value)
    err = mpf_to_fraction(x.abs_err)
    neg = val < 0
    a = -val if neg else val
    if a == 0:
        body = "0" if digits == 1 else "0." + "0" * (digits - 1)
        certified = err < Fraction(1, 2) * Fraction(10) ** (1 - digits)
        return body + ("" if certified else "~")
    e = _decimal_exponent(a)
    if 0 <= e < digits:
        mantissa = int(a * Fraction(10) ** (digits - 1 - e))  # truncation
        s = str(mantissa)
        body = s[: e + 1] + ("." + s[e + 1 :] if e + 1 < digits else "")
        last_place = e - digits + 1
    elif -digits < e < 0:
        frac_digits = digits - 1
        mantissa = int(a * Fraction(10) ** frac_digits)
        body = "0." + str(mantissa).rjust(frac_digits, "0")
        last_place = -frac_digits
    else:
        mantissa = int(a * Fraction(10) ** (digits - 1 - e))
        s = str(mantissa)
        suffix = f"e+{e}" if e > 0 else f"e-{-e}"
        body = s[0] + ("." + s[1:] if digits > 1 else "") + suffix
        last_place = e - digits + 1
    if neg:
        body = "-" + body
    certified = err < Fraction(1, 2) * Fraction(10) ** last_place
    return body + ("" if certified else "~")


def is_certified(x: BoundedReal, digits: int) -> bool:
    """Whether x's bound pins down a truncated d-digit display."""
    return not round_to_digits(x, digits).endswith("~")


def format_bound(x, sig: int = 4) -> str:
    """Scientific-notation display of an error bound, rounded to sig digits."""
    v = mpf(x)
    if v == 0:
        return "0"
    return mpmath.nstr(v, sig, min_fixed=1, max_fixed=0, strip_zeros=False)


def certified_eval(
    fn: Callable[[PrecisionContext], BoundedReal], ctx: PrecisionContext
) -> BoundedReal:
    """Evaluate fn, retrying once with doubled guard if not certified.

    Raises PrecisionError if even the retry cannot certify target_digits.
    """
    result = fn(ctx)
    if is_certified(result, ctx.target_digits):
        return result
    retry = PrecisionContext(ctx.target_digits, 2 * ctx.guard_digits)
    result = fn(retry)
    if not is_certified(result, ctx.target_digits):
        raise PrecisionError(
            f"could not certify {ctx.target_digits} digits even with "
            f"{retry.guard_digits} guard digits"
        )
    return result
