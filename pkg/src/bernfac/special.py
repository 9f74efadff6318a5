"""Exact Bernoulli and harmonic numbers, and certified special functions.

The zeta values and derivatives are computed by Euler-Maclaurin summation
with a certified remainder: for completely monotone integrands the error of
the truncated correction series is bounded by the first omitted term, which
is what the returned BoundedReal carries (plus accumulated rounding).
"""

from __future__ import annotations

import math
import threading
from dataclasses import dataclass
from fractions import Fraction
from typing import Union

import mpmath
from mpmath import mp, mpf

from bernfac.precision import (
    BoundedReal,
    PrecisionContext,
    PrecisionError,
    _add_up,
    _mul_up,
)

_lock = threading.Lock()


# -- exact integer sequences ------------------------------------------------

def _tangent_numbers(m: int) -> list:
    """T_1..T_m by the triangle recurrence (all-integer)."""
    T = [0] * (m + 1)
    if m >= 1:
        T[1] = 1
    for k in range(2, m + 1):
        T[k] = (k - 1) * T[k - 1]
    for k in range(2, m + 1):
        for j in range(k, m + 1):
            T[j] = (j - k) * T[j - 1] + (j - k + 2) * T[j]
    return T


_bern_even: list = [Fraction(1)]  # _bern_even[m] = B_{2m}


def _extend_bernoulli(upto_even_index: int) -> None:
    m_max = upto_even_index // 2
    with _lock:
        if m_max < len(_bern_even):
            return
        T = _tangent_numbers(m_max)
        for m in range(len(_bern_even), m_max + 1):
            num = (-1) ** (m - 1) * 2 * m * T[m]
            den = 2 ** (2 * m) * (2 ** (2 * m) - 1)
            _bern_even.append(Fraction(num, den))


def bernoulli(n: int) -> Fraction:
    """Exact Bernoulli number B_n (B_1 = -1/2 convention)."""
    if n < 0:
        raise ValueError("Bernoulli numbers need n >= 0")
    if n == 1:
        return Fraction(-1, 2)
    if n % 2 == 1:
        return Fraction(0)
    _extend_bernoulli(n)
    return _bern_even[n // 2]


@dataclass(frozen=True)
class BernoulliTable:
    """Exact table of B_0..B_max_index with structural self-checks run."""

    max_index: int
    entries: tuple

    def __getitem__(self, n: int) -> Fraction:
        if not 0 <= n <= self.max_index:
            raise IndexError(f"B_{n} outside table (max {self.max_index})")
        return self.entries[n]


def _check_von_staudt_clausen(n: int, b: Fraction) -> None:
    # denominator of B_n (even n >= 2) is the product of primes p with (p-1) | n
    den = 1
    for p in range(2, n + 2):
        if all(p % q for q in range(2, int(math.isqrt(p)) + 1)):
            if n % (p - 1) == 0:
                den *= p
    if b.denominator != den:
        raise AssertionError(f"von Staudt-Clausen failed at B_{n}")


def bernoulli_table(max_index: int) -> BernoulliTable:
    """B_0..B_max_index, cross-checked two ways before being returned.

    The tangent-number values are verified against the defining recurrence
    sum(C(n+1,j) B_j, j=0..n) = 0 for every even n <= min(max_index, 64),
    and von Staudt-Clausen denominators are checked throughout.
    """
    if max_index < 0:
        raise ValueError("max_index must be nonnegative")
    entries = tuple(bernoulli(n) for n in range(max_index + 1))
    for n in range(2, min(max_index, 64) + 1, 2):
        total = sum(
            Fraction(math.comb(n + 1, j)) * entries[j] for j in range(n + 1)
        )
        if total != 0:
            raise AssertionError(f"defining recurrence failed at B_{n}")
    for n in range(2, max_index + 1, 2):
        _check_von_staudt_clausen(n, entries[n])
    return BernoulliTable(max_index, entries)


_harmonic_cache: list = [Fraction(0)]


def harmonic(n: int) -> Fraction:
    """Exact harmonic number H_n."""
    if n < 0:
        raise ValueError("harmonic numbers need n >= 0")
    with _lock:
        while len(_harmonic_cache) <= n:
            k = len(_harmonic_cache)
            _harmonic_cache.append(_harmonic_cache[-1] + Fraction(1, k))
        return _harmonic_cache[n]


# -- engine-rounded constants -----------------------------------------------

def _const(getter) -> BoundedReal:
    v = +getter  # rounds the constant generator at current precision
    slop = _mul_up(abs(v), mpf(2) ** (4 - mp.prec))
    return BoundedReal(v, slop)


def pi_const(ctx: PrecisionContext) -> BoundedReal:
    with ctx.workprec():
        return _const(mp.pi)


def euler_gamma(ctx: PrecisionContext) -> BoundedReal:
    """Euler's constant, certified to working precision."""
    with ctx.workprec():
        return _const(mp.euler)


def log_two_pi(ctx: PrecisionContext) -> BoundedReal:
    with ctx.workprec():
        two_pi = _const(mp.pi) * 2
        return two_pi.log()


# -- Riemann zeta at integers via Euler-Maclaurin ----------------------------

def _pochhammer(s: int, m: int) -> int:
    """Rising factorial s(s+1)...(s+m-1)."""
    acc = 1
    for i in range(m):
        acc *= s + i
    return acc


def zeta_int(s: int, ctx: PrecisionContext) -> BoundedReal:
    """zeta(s) for integer s >= 2 with a certified error bound."""
    if s < 2:
        raise ValueError("zeta_int needs s >= 2")
    with ctx.workprec():
        wd = ctx.working_digits
        goal = mpf(10) ** (-(wd + 2))

        # For large s the direct sum already meets the goal at a tiny cutoff.
        # Tail bound: sum_{v>V} v^-s < V^(1-s)/(s-1).
        if s > 3:
            V = 2
            while V <= 64:
                if mpf(V) ** (1 - s) / (s - 1) < goal:
                    partial = BoundedReal.exact(0)
                    for v in range(1, V + 1):
                        partial = partial + BoundedReal.exact(
                            Fraction(1, v**s)
                        )
                    return BoundedReal(
                        partial.value, _add_up(partial.abs_err, goal)
                    )
                V *= 2

        N = max(10, (3 * wd) // 4)
        for _ in range(8):
            result = _zeta_em(s, N, goal)
            if result is not None:
                return result
            N *= 2
        raise PrecisionError(f"Euler-Maclaurin for zeta({s}) did not converge")


def _zeta_em(s: int, N: int, goal: mpf):
    """One Euler-Maclaurin attempt; None if the series bottomed out early.

    zeta(s) = sum_{v<N} v^-s + N^(1-s)/(s-1) + N^(-s)/2
              + sum_j B_2j/(2j)! * (s)_{2j-1} * N^(1-s-2j)  [+ remainder]
    with |remainder| <= first omitted correction term (the integrand
    x^-s is completely monotone on (0, inf)).
    """
    partial = mpf(0)
    for v in range(1, N):
        partial += mpf(v) ** (-s)
    acc = partial + mpf(N) ** (1 - s) / (s - 1) + mpf(N) ** (-s) / 2
    err = _mul_up(abs(acc), mpf(2) ** (6 - mp.prec) * (N + 4))
    prev_mag = None
    j = 1
    while True:
        c = Fraction(bernoulli(2 * j), math.factorial(2 * j)) * _pochhammer(
            s, 2 * j - 1
        )
        term = BoundedReal.exact(c).value * mpf(N) ** (1 - s - 2 * j)
        mag = abs(term)
        if mag < goal:
            return BoundedReal(acc, _add_up(err, mag))
        if prev_mag is not None and mag >= prev_mag:
            return None  # divergence reached before the goal; enlarge N
        acc += term
        err = _add_up(err, _mul_up(abs(term), mpf(2) ** (5 - mp.prec)))
        prev_mag = mag
        j += 1


def zeta_prime_int(s: int, ctx: PrecisionContext) -> BoundedReal:
    """zeta'(s) for integer s >= 2 with a certified error bound.

    Euler-Maclaurin on g(x) = log(x) x^-s. The derivatives expand as
    g^(m)(x) = (-1)^m x^(-s-m) ((s)_m log x - c_m) with
    c_m = sum_{i=1..m} C(m,i) (i-1)! (s)_{m-i}, so both the correction
    terms and an integral bound for the remainder are explicit.
    """
    if s < 2:
        raise ValueError("zeta_prime_int needs s >= 2")
    with ctx.workprec():
        wd = ctx.working_digits
        goal = mpf(10) ** (-(wd + 2))

        if s > 3:
            # |zeta'(s) + sum_{v<=V} log(v) v^-s| <= integral tail
            V = 2
            while V <= 64:
                logV = mpf(math.log(V + 1))
                tail = mpf(V) ** (1 - s) * (logV / (s - 1) + mpf(1) / (s - 1) ** 2)
                if tail < goal:
                    acc = BoundedReal.exact(0)
                    for v in range(2, V + 1):
                        t = BoundedReal.exact(v).log() * BoundedReal.exact(
                            Fraction(-1, v**s)
                        )
                        acc = acc + t
                    return BoundedReal(acc.value, _add_up(acc.abs_err, tail))
                V *= 2

        N = max(10, (3 * wd) // 4)
        for _ in range(8):
            result = _zeta_prime_em(s, N, goal)
            if result is not None:
                return result
            N *= 2
        raise PrecisionError(f"Euler-Maclaurin for zeta'({s}) did not converge")


def _c_coeff(s: int, m: int) -> int:
    return sum(
        math.comb(m, i) * math.factorial(i - 1) * _pochhammer(s, m - i)
        for i in range(1, m + 1)
    )


def _zeta_prime_em(s: int, N: int, goal: mpf):
    logN = mpmath.log(N)
    acc = mpf(0)
    for v in range(2, N):
        acc += mpmath.log(v) * mpf(v) ** (-s)
    # integral of log(x) x^-s over (N, inf) plus boundary term g(N)/2
    acc += mpf(N) ** (1 - s) * (logN / (s - 1) + mpf(1) / (s - 1) ** 2)
    acc += logN * mpf(N) ** (-s) / 2
    err = _mul_up(abs(acc) + 1, mpf(2) ** (7 - mp.prec) * (N + 4))
    prev_mag = None
    j = 1
    while True:
        m = 2 * j - 1
        bfac = BoundedReal.exact(
            Fraction(bernoulli(2 * j), math.factorial(2 * j))
        ).value
        # correction term -B_2j/(2j)! g^(2j-1)(N); the odd derivative order
        # contributes (-1)^(2j-1) = -1, so the signs cancel
        core = _pochhammer(s, m) * logN - _c_coeff(s, m)
        term = bfac * mpf(N) ** (1 - s - 2 * j) * core
        # remainder bound via |B_2p|/(2p)! int |g^(2p)|
        mm = 2 * j
        int_log = mpf(N) ** (1 - s - mm) * (
            logN / (s + mm - 1) + mpf(1) / (s + mm - 1) ** 2
        )
        int_plain = mpf(N) ** (1 - s - mm) / (s + mm - 1)
        bound = _mul_up(
            abs(bfac),
            _add_up(
                _mul_up(mpf(_pochhammer(s, mm)), int_log),
                _mul_up(mpf(_c_coeff(s, mm)), int_plain),
            ),
        )
        if bound < goal:
            return BoundedReal(-acc, _add_up(err, bound))
        mag = abs(term)
        if prev_mag is not None and mag >= prev_mag:
            return None
        acc += term
        err = _add_up(err, _mul_up(abs(term) + 1, mpf(2) ** (6 - mp.prec)))
        prev_mag = mag
        j += 1


def zeta_neg_int(r: int) -> Fraction:
    """Exact zeta(-r) = (-1)^r B_{r+1}/(r+1) for integer r >= 0."""
    if r < 0:
        raise ValueError("zeta_neg_int needs r >= 0")
    return Fraction((-1) ** r) * bernoulli(r + 1) / (r + 1)


def zeta_prime_neg(r: int, ctx: PrecisionContext) -> BoundedReal:
    """zeta'(-r) for integer r >= 0, via real closed forms.

    r = 0:    -log(2 pi)/2.
    even r:   (-1)^(r/2) r! zeta(r+1) / (2 (2 pi)^r)   [functional equation]
    odd r:    (B_{r+1}/(r+1)) (H_r - gamma - log 2 pi)
              - 2 (-1)^((r+1)/2) r! zeta'(r+1) / (2 pi)^(r+1).
    """
    if r < 0:
        raise ValueError("zeta_prime_neg needs r >= 0")
    with ctx.workprec():
        if r == 0:
            return -log_two_pi(ctx) / 2
        two_pi = pi_const(ctx) * 2
        if r % 2 == 0:
            sign = (-1) ** (r // 2)
            return (
                BoundedReal.exact(sign * math.factorial(r))
                * zeta_int(r + 1, ctx)
                / (two_pi.pow_int(r) * 2)
            )
        lead = BoundedReal.exact(bernoulli(r + 1) / (r + 1)) * (
            BoundedReal.exact(harmonic(r)) - euler_gamma(ctx) - log_two_pi(ctx)
        )
        sign = (-1) ** ((r + 1) // 2)
        corr = (
            BoundedReal.exact(2 * sign * math.factorial(r))
            * zeta_prime_int(r + 1, ctx)
            / two_pi.pow_int(r + 1)
        )
        return lead - corr


def log_gamma_rational(x: Fraction, ctx: PrecisionContext) -> BoundedReal:
    """log Gamma(x) for rational x > 0, certified."""
    x = Fraction(x)
    if x <= 0:
        raise ValueError("log_gamma_rational needs x > 0")
    from bernfac.divergent import log_factorial  # deferred to avoid a cycle

    with ctx.workprec():
        # Gamma(x) = (x-1)! formally: log Gamma(x) = log_factorial(x) - log x
        return log_factorial(x, ctx) - BoundedReal.exact(x).log()


# -- Dedekind eta on the imaginary axis --------------------------------------

def dedekind_eta_imag(t: Union[BoundedReal, Fraction, int], ctx: PrecisionContext) -> BoundedReal:
    """eta(i t) = e^(-pi t/12) prod_{v>=1} (1 - e^(-2 pi v t)) for t > 0.

    The product is cut once the geometric tail bound for the remaining
    log-factors drops below working precision; that bound is folded into
    the result's abs_err.
    """
    with ctx.workprec():
        tb = t if isinstance(t, BoundedReal) else BoundedReal.exact(t)
        if tb.lower() <= 0:
            raise ValueError("dedekind_eta_imag needs t > 0")
        pi_t = pi_const(ctx) * tb
        prefactor = (-pi_t / 12).exp()
        q = (-pi_t * 2).exp()  # e^(-2 pi t), in (0, 1)
        goal = mpf(10) ** (-(ctx.working_digits + 2))
        prod = BoundedReal.exact(1)
        qpow = BoundedReal.exact(1)
        v = 0
        while True:
            v += 1
            qpow = qpow * q
            prod = prod * (BoundedReal.exact(1) - qpow)
            # remaining factors: 0 < -sum_{w>v} log(1-q^w) < q^(v+1)/(1-q)^2
            tail = qpow.abs_upper() * q.abs_upper() / (1 - q.abs_upper()) ** 2
            if tail < goal:
                break
            if v > 10_000_000:
                raise PrecisionError("eta product did not converge")
        result = prefactor * prod
        # multiplicative tail: true = computed * exp(theta * tail), theta in (0,1)
        return BoundedReal(
            result.value,
            _add_up(result.abs_err, _mul_up(result.abs_upper(), 2 * tail)),
        )


# -- abelian group counting ---------------------------------------------------

_partition_cache: list = [1]


def partition_count(n: int) -> int:
    """p(n), the number of integer partitions, by pentagonal recurrence."""
    if n < 0:
        raise ValueError("partition_count needs n >= 0")
    with _lock:
        while len(_partition_cache) <= n:
            m = len(_partition_cache)
            total = 0
            k = 1
            while True:
                g1 = k * (3 * k - 1) // 2
                g2 = k * (3 * k + 1) // 2
                if g1 > m:
                    break
                sign = -1 if k % 2 == 0 else 1
                total += sign * _partition_cache[m - g1]
                if g2 <= m:
                    total += sign * _partition_cache[m - g2]
                k += 1
            _partition_cache.append(total)
        return _partition_cache[n]


def abelian_group_count(n: int) -> int:
    """Number of abelian groups of order n: prod p(e_i) over prime powers."""
    if n < 1:
        raise ValueError("abelian_group_count needs n >= 1")
    result = 1
    m = n
    p = 2
    while p * p <= m:
        if m % p == 0:
            e = 0
            while m % p == 0:
                m //= p
                e += 1
            result *= partition_count(e)
        p += 1 if p == 2 else 2
    if m > 1:
        result *= partition_count(1)
    return result
