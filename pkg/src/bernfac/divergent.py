"""Divergent asymptotic series: optimal truncation with certified bounds.

The series handled here have terms t_j = c_j * x^-(2j-1) whose magnitudes
first decrease and then blow up. Truncating just before the first
non-decrease and bounding the remainder by the first omitted term is the
classical optimal-truncation rule; for the alternating Stirling-type tails
used here the Lindelof bound theta_m in (0,1) makes the first omitted term
a rigorous error bound, with its sign giving one-sided information.
"""

from __future__ import annotations

import math
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Callable, Union

import mpmath
from mpmath import mp, mpf

from bernfac.precision import (
    BoundedReal,
    PrecisionContext,
    PrecisionError,
    _add_up,
    _mul_up,
)
from bernfac.special import bernoulli, log_two_pi


class NoDecreaseError(PrecisionError):
    """The series terms never decreased: x is below the usable range."""


@dataclass(frozen=True)
class DivergentTail:
    """Tail sum_{j >= j_start} coeff(j) * x^-(2j-1) in the divergent sense."""

    coeff: Callable[[int], Union[Fraction, BoundedReal]]
    j_start: int
    description: str


@dataclass(frozen=True)
class TruncationResult:
    """Optimal truncation of a divergent tail at a fixed argument.

    partial_sum covers j_start <= j < m_opt. The true tail value equals
    partial_sum + theta * (first omitted term) with theta in (0,1), so
    remainder_bound = |omitted_term| is a rigorous error bound and the
    sign of omitted_term gives the direction of the residual.
    """

    partial_sum: BoundedReal
    m_opt: int
    remainder_bound: mpf
    omitted_term: BoundedReal
    theta_interval: tuple = (Fraction(0), Fraction(1))


def stirling_tail() -> DivergentTail:
    """Correction tail of log Gamma(x+1): sum B_2j/(2j(2j-1)) x^-(2j-1)."""
    return DivergentTail(
        coeff=lambda j: Fraction(bernoulli(2 * j), 2 * j * (2 * j - 1)),
        j_start=1,
        description="stirling",
    )


def dk_tail(k: int) -> DivergentTail:
    """D_k tail: sum N_{2j,k} x^-(2j-1) with N_{m,k} = B_m/(m(m-1)k^(m-1)).

    dk_tail(1) coincides with stirling_tail term by term.
    """
    if k < 1:
        raise ValueError("dk_tail needs k >= 1")
    return DivergentTail(
        coeff=lambda j: Fraction(
            bernoulli(2 * j), 2 * j * (2 * j - 1) * k ** (2 * j - 1)
        ),
        j_start=1,
        description=f"dk[{k}]",
    )


def eval_optimal(
    tail: DivergentTail,
    x: Union[BoundedReal, int, Fraction],
    ctx: PrecisionContext,
    j_max: int = 100_000,
) -> TruncationResult:
    """Sum a divergent tail to its smallest term at argument x.

    Terms are scanned from j_start; at the first j whose magnitude fails
    to decrease strictly, the scan stops with m_opt = j: the partial sum
    keeps j_start..j-1 and t_j becomes the certified remainder bound.
    Raises NoDecreaseError when even the second term fails to decrease.
    """
    with ctx.workprec():
        xb = x if isinstance(x, BoundedReal) else BoundedReal.exact(x)
        if xb.lower() <= 0:
            raise ValueError("eval_optimal needs x > 0")
        inv2 = (BoundedReal.exact(1) / xb).pow_int(2)
        xpow = (BoundedReal.exact(1) / xb).pow_int(2 * tail.j_start - 1)
        floor_mag = mpf(10) ** (-(4 * ctx.working_digits + 30))

        j = tail.j_start
        term = BoundedReal.exact(tail.coeff(j)) * xpow
        partial = BoundedReal.exact(0)
        prev_mag = term.abs_upper()
        if prev_mag == 0:
            return TruncationResult(partial, j, mpf(0), term)
        while True:
            xpow = xpow * inv2
            j += 1
            if j - tail.j_start > j_max:
                raise PrecisionError(f"no smallest term within {j_max} terms")
            nxt = BoundedReal.exact(tail.coeff(j)) * xpow
            mag = nxt.abs_upper()
            if mag >= prev_mag or prev_mag < floor_mag:
                m_opt = j - 1
                if m_opt == tail.j_start:
                    raise NoDecreaseError(
                        f"terms of {tail.description} never decrease at x={x}"
                    )
                return TruncationResult(partial, m_opt, prev_mag, term)
            partial = partial + term
            term = nxt
            prev_mag = mag


def log_factorial(
    x: Union[int, Fraction, BoundedReal], ctx: PrecisionContext
) -> BoundedReal:
    """Certified log(x!) = log Gamma(x+1) for real x > 0 via Stirling.

    Arguments too small for the Stirling tail to reach working precision
    are promoted: log(x!) = log((x+N)!) - sum_{j=1..N} log(x+j).
    """
    with ctx.workprec():
        xb = x if isinstance(x, BoundedReal) else BoundedReal.exact(x)
        if xb.lower() <= 0:
            raise ValueError("log_factorial needs x > 0")
        wd = ctx.working_digits
        goal = mpf(10) ** (-(wd + 2))
        # smallest Stirling term at argument X is ~ e^(-2 pi X); require
        # e^(-2 pi X) < goal, i.e. X > wd * ln(10)/(2 pi) ~ 0.3665 wd
        threshold = int(0.3665 * (wd + 6)) + 2
        for _ in range(6):
            N = max(0, threshold - int(xb.lower()))
            big = xb + N
            trunc = eval_optimal(stirling_tail(), big, ctx)
            if trunc.remainder_bound < goal * 100:
                base = (
                    log_two_pi(ctx) / 2
                    + (big + Fraction(1, 2)) * big.log()
                    - big
                )
                total = base + trunc.partial_sum
                total = BoundedReal(
                    total.value, _add_up(total.abs_err, trunc.remainder_bound)
                )
                for j in range(1, N + 1):
                    total = total - (xb + j).log()
                return total
            threshold *= 2
        raise PrecisionError("log_factorial promotion did not converge")
