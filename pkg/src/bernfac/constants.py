"""Certified values of the asymptotic constants of this package.

Each constant is the finite leftover of a product that otherwise grows
without bound: zeta products C1..C3, the Glaisher-type constants A_r of
prod v^(v^r), the factorial-product constants F_k, F_inf and F_{r,k},
and the Bernoulli-product constants B1, B2, B3, B'. Every route the
mathematics offers is implemented: closed forms in Gamma values and A_r,
divergent series summed to the smallest term, an explicit linear-system
solution, and a refined tail-bracketing sum for F_inf. Routes are
cross-checked against each other; every value carries a certified bound.
"""

from __future__ import annotations

import math
import threading
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Union

import mpmath
from mpmath import mp, mpf

from bernfac.asymptotic import n_coeff, s_r_weighted
from bernfac.divergent import DivergentTail, eval_optimal
from bernfac.precision import (
    BoundedReal,
    PrecisionContext,
    PrecisionError,
    _add_up,
    _decimal_exponent,
    _mul_up,
    format_bound,
    mpf_to_fraction,
    round_to_digits,
)
from bernfac.special import (
    bernoulli,
    euler_gamma,
    harmonic,
    log_gamma_rational,
    log_two_pi,
    pi_const,
    zeta_int,
    zeta_neg_int,
    zeta_prime_neg,
)


@dataclass(frozen=True)
class ConstantReport:
    """One computed constant: certified value plus how it was obtained."""

    name: str
    value: BoundedReal
    method: str  # closed_form | divergent_series | linear_system | refined_sum
    params: dict = field(default_factory=dict)
    components: tuple = ()

    def digits(self, d: int) -> str:
        return round_to_digits(self.value, d)


# Memo cache: write-once per (operation, arguments, context) key. Concurrent
# readers may race to compute the same entry; setdefault keeps the first
# result, and all routes are deterministic, so no digit can ever change.
_cache: dict = {}
_cache_lock = threading.Lock()


def _memo(key, compute):
    with _cache_lock:
        if key in _cache:
            return _cache[key]
    value = compute()
    with _cache_lock:
        return _cache.setdefault(key, value)


def _ctx_key(ctx: PrecisionContext):
    return (ctx.target_digits, ctx.guard_digits)


def clear_cache() -> None:
    with _cache_lock:
        _cache.clear()


# -- display helpers for interval endpoints -----------------------------------

def _compose_decimal(mantissa: int, e: int, digits: int) -> str:
    s = str(mantissa)
    assert len(s) == digits
    if 0 <= e < digits:
        return s[: e + 1] + ("." + s[e + 1 :] if e + 1 < digits else "")
    if e < 0:
        return "0." + "0" * (-e - 1) + s
    return s[0] + ("." + s[1:] if digits > 1 else "") + f"e+{e}"


def floor_to_digits(a: Fraction, digits: int) -> str:
    """Largest d-digit decimal not exceeding the positive rational a."""
    assert a > 0
    e = _decimal_exponent(a)
    return _compose_decimal(int(a * Fraction(10) ** (digits - 1 - e)), e, digits)


def ceil_to_digits(a: Fraction, digits: int) -> str:
    """Smallest d-digit decimal not below the positive rational a."""
    assert a > 0
    e = _decimal_exponent(a)
    scaled = a * Fraction(10) ** (digits - 1 - e)
    m = int(scaled)
    if scaled > m:
        m += 1
        if m == 10 ** digits:
            m //= 10
            e += 1
    return _compose_decimal(m, e, digits)


# -- zeta products C1, C2, C3 --------------------------------------------------

def _zeta_product_cutoff(ctx: PrecisionContext) -> int:
    """Smallest N' with 2^(-N'+3/N') below a tenth of the target tolerance.

    The comparison is exact: 2^(-N'+3/N') < t iff 8 < (t 2^N')^N'.
    """
    tol = Fraction(1, 10 ** (ctx.target_digits + 3))
    n_prime = 4
    while (tol * Fraction(2) ** n_prime) ** n_prime <= 8:
        n_prime += 1
    return n_prime


def c_constant(which: int, ctx: PrecisionContext) -> ConstantReport:
    """C1 = prod_{v>=2} zeta(v), C2 = even-index part, C3 = odd-index part."""
    if which not in (1, 2, 3):
        raise ValueError("c_constant selects 1, 2 or 3")

    def compute():
        with ctx.workprec():
            n_prime = _zeta_product_cutoff(ctx)
            start, step = {1: (2, 1), 2: (2, 2), 3: (3, 2)}[which]
            prod = BoundedReal.exact(1)
            for s in range(start, n_prime + 1, step):
                prod = prod * zeta_int(s, ctx)
            # remaining factors multiply by e^delta with
            # 0 <= delta < b = 2^(1-N') >= 2^(-N'+3/N'); e^b - 1 <= b + b^2
            b = mpf(2) ** (1 - n_prime)
            widen = _mul_up(prod.upper(), _add_up(b, _mul_up(b, b)))
            value = BoundedReal(prod.value, _add_up(prod.abs_err, widen))
        return ConstantReport(
            name=f"C{which}",
            value=value,
            method="closed_form",
            params={"N_prime": n_prime, "tail_log_bound": format_bound(b)},
        )

    return _memo(("C", which, _ctx_key(ctx)), compute)


# -- Glaisher-type constants A_r ----------------------------------------------

def log_glaisher_a(r: int, ctx: PrecisionContext) -> BoundedReal:
    """log A_r = -zeta(-r) H_r - zeta'(-r)."""
    if r < 0:
        raise ValueError("log_glaisher_a needs r >= 0")

    def compute():
        with ctx.workprec():
            exact_part = -zeta_neg_int(r) * harmonic(r)
            return BoundedReal.exact(exact_part) - zeta_prime_neg(r, ctx)

    return _memo(("logA", r, _ctx_key(ctx)), compute)


def glaisher_a(r: int, ctx: PrecisionContext) -> ConstantReport:
    """A_r, the asymptotic constant of prod_{v<=n} v^(v^r)."""

    def compute():
        with ctx.workprec():
            value = log_glaisher_a(r, ctx).exp()
        return ConstantReport(
            name="A" if r == 1 else f"A_{r}",
            value=value,
            method="closed_form",
            params={"r": r},
        )

    return _memo(("A", r, _ctx_key(ctx)), compute)


# -- factorial-product constants F_k ------------------------------------------

def f_k_log_closed(k: int, ctx: PrecisionContext) -> BoundedReal:
    """Certified log F_k by the closed form in log A and log Gamma(v/k).

    For k >= 3 an independent rearrangement that never evaluates
    Gamma(1/k) must agree within the summed bounds.
    """
    if k < 1:
        raise ValueError("f_k_log_closed needs k >= 1")

    def compute():
        with ctx.workprec():
            la = log_glaisher_a(1, ctx)
            l2p = log_two_pi(ctx)
            kf = Fraction(k)
            main = (
                la * (-(kf + 1 / kf))
                + BoundedReal.exact(Fraction(1, 12 * k))
                + l2p * Fraction(k, 4)
            )
            if k > 1:
                main = main - BoundedReal.exact(k).log() * Fraction(1, 12 * k)
            for nu in range(1, k):
                main = main - log_gamma_rational(Fraction(nu, k), ctx) * Fraction(
                    nu, k
                )
            if k >= 3:
                alt = (
                    la * (-(kf + 1 / kf))
                    + l2p * (kf / 4 + 1 / (2 * kf) - Fraction(1, 2))
                    + BoundedReal.exact(k).log() * Fraction(5, 12 * k)
                    + BoundedReal.exact(Fraction(1, 12 * k))
                )
                for nu in range(2, k):
                    alt = alt - log_gamma_rational(
                        Fraction(nu, k), ctx
                    ) * Fraction(nu - 1, k)
                if not main.agrees_with(alt):
                    raise PrecisionError(
                        f"the two closed routes for log F_{k} disagree"
                    )
            return main

    return _memo(("logFk", k, _ctx_key(ctx)), compute)


def f_k_closed(k: int, ctx: PrecisionContext) -> ConstantReport:
    """F_k by closed form."""

    def compute():
        with ctx.workprec():
            value = f_k_log_closed(k, ctx).exp()
        return ConstantReport(
            name=f"F_{k}",
            value=value,
            method="closed_form",
            params={"k": k, "cross_checked": k >= 3},
        )

    return _memo(("Fk", k, _ctx_key(ctx)), compute)


def f_rk_series(r: int, k: int, ctx: PrecisionContext) -> ConstantReport:
    """F_{r,k} by optimal truncation of its divergent series.

    Odd r sums N_{2j,k} zeta(2j-(r+1)) over j > (r+1)/2; even r starts
    with gamma N_{r+2,k} and sums over j > r/2 + 1. The remainder bound
    (in log space) is the first omitted term.
    """
    if k < 1 or r < 0:
        raise ValueError("f_rk_series needs k >= 1, r >= 0")

    def compute():
        with ctx.workprec():
            big_r = (r + 1) // 2
            if r % 2 == 1:
                j_start = big_r + 1
                prefix = BoundedReal.exact(0)
            else:
                j_start = big_r + 2
                prefix = euler_gamma(ctx) * n_coeff(r + 2, k)
            tail = DivergentTail(
                coeff=lambda j: n_coeff(2 * j, k) * zeta_int(2 * j - (r + 1), ctx),
                j_start=j_start,
                description=f"series of log F({r},{k})",
            )
            trunc = eval_optimal(tail, 1, ctx)
            log_val = prefix + trunc.partial_sum
            log_val = BoundedReal(
                log_val.value, _add_up(log_val.abs_err, trunc.remainder_bound)
            )
            value = log_val.exp()
        return ConstantReport(
            name=f"F_{k}" if r == 0 else f"F({r},{k})",
            value=value,
            method="divergent_series",
            params={
                "r": r,
                "k": k,
                "m": trunc.m_opt,
                "bound": format_bound(trunc.remainder_bound),
                "bound_float": float(trunc.remainder_bound),
            },
        )

    return _memo(("Frk-series", r, k, _ctx_key(ctx)), compute)


def f_k_series(k: int, ctx: PrecisionContext) -> ConstantReport:
    """F_k by its divergent series (the r=0 case of f_rk_series)."""
    rep = f_rk_series(0, k, ctx)
    params = {key: rep.params[key] for key in ("k", "m", "bound", "bound_float")}
    return ConstantReport(
        name=f"F_{k}", value=rep.value, method="divergent_series", params=params
    )


def m_matrix(k: int) -> list:
    """The k x k integer matrix of the telescoping relations among F_{k,l}."""
    if k < 2:
        raise ValueError("m_matrix needs k >= 2")
    rows = [[0] * k for _ in range(k)]
    for i in range(k - 1):
        rows[i][i] = 1
        rows[i][i + 1] = -1
    for j in range(k):
        rows[k - 1][j] = 1
    return rows


def m_tilde_matrix(k: int) -> list:
    """The explicit adjugate-style inverse: M_k^(-1) = (1/k) m_tilde."""
    if k < 2:
        raise ValueError("m_tilde_matrix needs k >= 2")
    return [
        [
            1 if j == k - 1 else (k - 1 - j if i <= j else -(j + 1))
            for j in range(k)
        ]
        for i in range(k)
    ]


def f_k_via_linear_system(k: int, ctx: PrecisionContext) -> ConstantReport:
    """F_k by solving the k x k system with the explicit inverse.

    The right side is b_{l+1} = (1/2)log 2pi - log Gamma(1 - l/k) for
    l = 0..k-2 and b_k = (1/2)log 2pi - log A + 1/12 + (5/12)log k;
    the solution components x_{l+1} are the asymptotic constants of the
    shifted products prod (kv-l)! and are returned for cross-checks.
    log F_k is extracted from x_1 = log F_k + (1/4)log 2pi + k log A.
    """
    if k < 2:
        raise ValueError("the linear-system route needs k >= 2")

    def compute():
        with ctx.workprec():
            l2p = log_two_pi(ctx)
            la = log_glaisher_a(1, ctx)
            b = []
            for l in range(k - 1):
                bl = l2p * Fraction(1, 2)
                if l > 0:
                    bl = bl - log_gamma_rational(Fraction(k - l, k), ctx)
                b.append(bl)
            b.append(
                l2p * Fraction(1, 2)
                - la
                + BoundedReal.exact(Fraction(1, 12))
                + BoundedReal.exact(k).log() * Fraction(5, 12)
            )
            mt = m_tilde_matrix(k)
            x = []
            for i in range(k):
                acc = BoundedReal.exact(0)
                for j in range(k):
                    if mt[i][j]:
                        acc = acc + b[j] * Fraction(mt[i][j])
                x.append(acc * Fraction(1, k))
            log_fk = x[0] - l2p * Fraction(1, 4) - la * k
            value = log_fk.exp()
        return ConstantReport(
            name=f"F_{k}",
            value=value,
            method="linear_system",
            params={"k": k, "det": k},
            components=tuple(x),
        )

    return _memo(("Fk-linsys", k, _ctx_key(ctx)), compute)


# -- F_inf ---------------------------------------------------------------------

def f_infty_weak(ctx: PrecisionContext) -> ConstantReport:
    """Enclosure of F_inf straight from its divergent series.

    The series gamma^2/12 + sum_{j>=2} B_2j zeta(2j-1)^2 / (2j(2j-1)) is
    summed to the smallest term; the signed first omitted term brackets
    log F_inf one-sidedly, giving an interval after exponentiation.
    """

    def compute():
        with ctx.workprec():
            g = euler_gamma(ctx)
            prefix = g * g * Fraction(1, 12)
            tail = DivergentTail(
                coeff=lambda j: Fraction(bernoulli(2 * j), 2 * j * (2 * j - 1))
                * zeta_int(2 * j - 1, ctx).pow_int(2),
                j_start=2,
                description="series of log F_inf",
            )
            trunc = eval_optimal(tail, 1, ctx)
            s = prefix + trunc.partial_sum
            shifted = s + trunc.omitted_term
            lo_log, hi_log = (
                (shifted, s) if trunc.omitted_term.value < 0 else (s, shifted)
            )
            lo = lo_log.exp()
            hi = hi_log.exp()
            mid = (lo + hi) * Fraction(1, 2)
            err = max(
                mpmath.fsub(hi.upper(), mid.value, rounding="u"),
                mpmath.fsub(mid.value, lo.lower(), rounding="u"),
            )
            value = BoundedReal(mid.value, err)
            lower_str = floor_to_digits(mpf_to_fraction(lo.lower()), 6)
            upper_str = ceil_to_digits(mpf_to_fraction(hi.upper()), 6)
        return ConstantReport(
            name="F_inf",
            value=value,
            method="divergent_series",
            params={
                "m": trunc.m_opt,
                "bound": format_bound(trunc.remainder_bound),
                "bound_float": float(trunc.remainder_bound),
                "lower": lower_str,
                "upper": upper_str,
            },
        )

    return _memo(("Finf-weak", _ctx_key(ctx)), compute)


def f_infty_refined(n: int, m: int, ctx: PrecisionContext) -> ConstantReport:
    """F_inf to full precision by bracketing the divergent remainder.

    Writing log F_k = gamma/(12k) + sum_{j<m} (series terms)
    + eta_k * (j=m term) defines eta_k in (0,1) computably from the
    exact F_k, k <= n. Summing over k brackets the multiplier theta of
    the j=m term of the log F_inf series inside (theta_min, theta_max),
    whose width times |B_2m| zeta(2m-1)^2/(2m(2m-1)) is the remainder
    error bound. The value is taken at the midpoint of the bracket, so
    the certified abs_err uses the half width; the reported bound keeps
    the full width for comparability.
    """
    if m <= 2:
        raise ValueError("f_infty_refined needs m > 2")
    if n < 1:
        raise ValueError("f_infty_refined needs n >= 1")

    def compute():
        # eta_k comes from a catastrophic cancellation: the series partial
        # sums reach magnitude ~ the j=m term, so double guard digits
        inner = PrecisionContext(ctx.target_digits, 2 * ctx.guard_digits)
        with inner.workprec():
            g = euler_gamma(inner)
            z = zeta_int(2 * m - 1, inner)
            etas = []
            for k in range(1, n + 1):
                partial = g * Fraction(1, 12 * k)
                for j in range(2, m):
                    partial = partial + n_coeff(2 * j, k) * zeta_int(
                        2 * j - 1, inner
                    )
                t_mk = n_coeff(2 * m, k) * z
                eta = (f_k_log_closed(k, inner) - partial) / t_mk
                if not (eta.lower() > 0 and eta.upper() < 1):
                    raise PrecisionError(
                        f"eta_{k} = {eta!r} not certified inside (0,1)"
                    )
                etas.append(eta)
            s_eta = BoundedReal.exact(0)
            s_eta_m1 = BoundedReal.exact(0)
            s_plain = Fraction(0)
            for k, eta in enumerate(etas, start=1):
                w = Fraction(1, k ** (2 * m - 1))
                s_eta = s_eta + eta * w
                s_eta_m1 = s_eta_m1 + (eta - 1) * w
                s_plain += w
            theta_min = s_eta / z
            theta_max = BoundedReal.exact(1) + s_eta_m1 / z
            if not (theta_min.lower() > 0 and theta_max.upper() < 1):
                raise PrecisionError("theta bracket escaped (0,1)")
            r_term = Fraction(bernoulli(2 * m), 2 * m * (2 * m - 1))
            r_signed = BoundedReal.exact(r_term) * z.pow_int(2)
            r_abs = abs(r_signed)
            theta_err = (
                BoundedReal.exact(1) - BoundedReal.exact(s_plain) / z
            ) * r_abs
            base = g * g * Fraction(1, 12)
            for j in range(2, m):
                base = base + Fraction(
                    bernoulli(2 * j), 2 * j * (2 * j - 1)
                ) * zeta_int(2 * j - 1, inner).pow_int(2)
            theta_mid = (theta_min + theta_max) * Fraction(1, 2)
            half_width = (theta_max - theta_min) * Fraction(1, 2)
            log_val = base + theta_mid * r_signed
            log_val = BoundedReal(
                log_val.value,
                _add_up(
                    log_val.abs_err,
                    _mul_up(half_width.upper(), r_abs.upper()),
                ),
            )
            value = log_val.exp()
            value_bound = _mul_up(theta_err.upper(), value.upper())
        return ConstantReport(
            name="F_inf",
            value=value,
            method="refined_sum",
            params={
                "n": n,
                "m": m,
                "theta_min": mpmath.nstr(theta_min.value, 12),
                "theta_max": mpmath.nstr(theta_max.value, 12),
                "theta_min_float": float(theta_min.value),
                "theta_max_float": float(theta_max.value),
                "log_bound": format_bound(theta_err.upper()),
                "bound": format_bound(value_bound),
                "bound_float": float(value_bound),
            },
        )

    return _memo(("Finf-refined", n, m, _ctx_key(ctx)), compute)


# -- F_{r,1} closed forms -------------------------------------------------------

def f_r1_alpha(r: int, j: int) -> Fraction:
    """Exponent of A_j (j >= 1) or the constant term (j = 0) in log F_{r,1}."""
    if r < 1 or j < 0 or j > r + 1:
        raise ValueError("f_r1_alpha needs r >= 1 and 0 <= j <= r+1")
    if j == 0:
        if r % 2 == 1:
            return Fraction(bernoulli(r + 1), 2 * r * (r + 1))
        return sum(
            Fraction(math.comb(r, i)) * bernoulli(r - i) * bernoulli(i + 2)
            / ((i + 1) ** 2 * (i + 2))
            for i in range(r + 1)
        )
    if (r - j) % 2 == 0:
        return Fraction(0)
    delta = Fraction(1) if j == r + 1 else Fraction(0)
    return -delta - Fraction(math.comb(r + 1, j)) * bernoulli(r + 1 - j) / (r + 1)


def f_r1_log(r: int, ctx: PrecisionContext) -> BoundedReal:
    """Certified log F_{r,1} via the A_j exponent table.

    Cross-checked against the direct weighted-power-sum form
    (1/2)log A_r - log A_{r+1} + S_r(1; N_{1+<>,1} - log A_<>).
    """
    if r < 0:
        raise ValueError("f_r1_log needs r >= 0")

    def compute():
        with ctx.workprec():
            if r == 0:
                main = (
                    BoundedReal.exact(Fraction(1, 12))
                    + log_glaisher_a(0, ctx) * Fraction(1, 2)
                    - log_glaisher_a(1, ctx) * 2
                )
            else:
                main = BoundedReal.exact(f_r1_alpha(r, 0))
                for j in range(1, r + 2):
                    a = f_r1_alpha(r, j)
                    if a != 0:
                        main = main + log_glaisher_a(j, ctx) * a

            def weight(i: int) -> BoundedReal:
                return BoundedReal.exact(n_coeff(i + 1, 1)) - log_glaisher_a(
                    i, ctx
                )

            alt = (
                log_glaisher_a(r, ctx) * Fraction(1, 2)
                - log_glaisher_a(r + 1, ctx)
                + s_r_weighted(r, 1, weight)
            )
            if not main.agrees_with(alt):
                raise PrecisionError(
                    f"the two closed routes for log F({r},1) disagree"
                )
            return main

    return _memo(("logFr1", r, _ctx_key(ctx)), compute)


def f_r1(r: int, ctx: PrecisionContext) -> ConstantReport:
    """F_{r,1} by the A_j-form closed expression."""

    def compute():
        with ctx.workprec():
            value = f_r1_log(r, ctx).exp()
        alphas = {}
        if r > 0:
            alphas = {
                str(j): str(f_r1_alpha(r, j))
                for j in range(r + 2)
                if f_r1_alpha(r, j) != 0
            }
        return ConstantReport(
            name=f"F({r},1)",
            value=value,
            method="closed_form",
            params={"r": r, "alpha": alphas},
        )

    return _memo(("Fr1", r, _ctx_key(ctx)), compute)


def f_r1_log_zeta_form(r: int, ctx: PrecisionContext) -> BoundedReal:
    """log F_{r,1} for odd r as a real zeta series.

    (-1)^((r-1)/2) (r!/2) [ |B_{r+1}|/(r (r+1)!)
      + sum_{j=1..(r-1)/2} |B_{r+1-2j}| zeta(2j+1)/((r+1-2j)! (2pi)^(2j))
      - (r+2) zeta(r+2)/(2pi)^(r+1) ].
    """
    if r < 1 or r % 2 == 0:
        raise ValueError("the zeta form applies to odd r >= 1")
    with ctx.workprec():
        two_pi = pi_const(ctx) * 2
        acc = BoundedReal.exact(
            Fraction(abs(bernoulli(r + 1)), r * math.factorial(r + 1))
        )
        for j in range(1, (r - 1) // 2 + 1):
            acc = acc + zeta_int(2 * j + 1, ctx) * Fraction(
                abs(bernoulli(r + 1 - 2 * j)), math.factorial(r + 1 - 2 * j)
            ) / two_pi.pow_int(2 * j)
        acc = acc - zeta_int(r + 2, ctx) * Fraction(r + 2) / two_pi.pow_int(r + 1)
        sign = (-1) ** ((r - 1) // 2)
        return acc * Fraction(sign * math.factorial(r), 2)


# -- Bernoulli-product constants -----------------------------------------------

def b_family(ctx: PrecisionContext) -> tuple:
    """B1, B2, B3 and B' with internal consistency checks.

    B2 = C2 2^(5/24) e^(1/24) / A^(1/2); B1 = B2 (2pi)^(1/2);
    B3 = B2 sqrt(2); B' = C2 e^(1/24) / (2^(5/4) A^(1/2)).
    Verified: B1 = C2 F_2 A^2 (2pi)^(1/4) and B' = 2^(1/24) 2^(-3/2) B2.
    """

    def compute():
        with ctx.workprec():
            c2 = c_constant(2, ctx).value
            la = log_glaisher_a(1, ctx)
            log2 = BoundedReal.exact(2).log()
            l2p = log_two_pi(ctx)
            core = (
                log2 * Fraction(5, 24)
                + BoundedReal.exact(Fraction(1, 24))
                - la * Fraction(1, 2)
            )
            b2 = c2 * core.exp()
            b1 = b2 * (l2p * Fraction(1, 2)).exp()
            b3 = b2 * (log2 * Fraction(1, 2)).exp()
            bprime = b2 * (log2 * Fraction(-35, 24)).exp()
            direct = c2 * (
                BoundedReal.exact(Fraction(1, 24))
                - log2 * Fraction(5, 4)
                - la * Fraction(1, 2)
            ).exp()
            if not bprime.agrees_with(direct):
                raise PrecisionError("the two routes for B' disagree")
            alt_b1 = c2 * (
                f_k_log_closed(2, ctx) + la * 2 + l2p * Fraction(1, 4)
            ).exp()
            if not b1.agrees_with(alt_b1):
                raise PrecisionError("the F_2-based route for B1 disagrees")
        reports = tuple(
            ConstantReport(name=name, value=value, method="closed_form")
            for name, value in (
                ("B1", b1),
                ("B2", b2),
                ("B3", b3),
                ("Bprime", bprime),
            )
        )
        return reports

    return _memo(("Bfam", _ctx_key(ctx)), compute)


# -- constants of the Gamma-power product --------------------------------------

def gamma_product_constants(ctx: PrecisionContext) -> tuple:
    """The two constants of prod_{v<n} Gamma(v/n)^v as n grows.

    Returns (e^((1-gamma)/12)/A, (2pi)^(1/4)/A).
    """

    def compute():
        with ctx.workprec():
            la = log_glaisher_a(1, ctx)
            first = (
                (BoundedReal.exact(1) - euler_gamma(ctx)) * Fraction(1, 12) - la
            ).exp()
            second = (log_two_pi(ctx) * Fraction(1, 4) - la).exp()
        return (first, second)

    return _memo(("gamma-prod", _ctx_key(ctx)), compute)
