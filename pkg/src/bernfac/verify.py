"""Exact big-integer and rational oracles confronting the asymptotic formulas.

Two kinds of checks live here. Identity checks build both sides of an exact
identity out of big integers or rationals and compare them for exact equality,
never through floating point. Ratio checks compute the log of an exact finite
product, subtract the log of the matching asymptotic formula with its
constant, and require the absolute gap to shrink along an increasing n-grid.

The suites are deliberately independent of the series machinery they test:
product logs come from exact integers (bit length plus mantissa, wrapped with
an ulp bound), not from Stirling-type expansions.
"""

import math
import os
from array import array
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Callable, Iterable, List, Optional, Sequence, Tuple, Union

from .asymptotic import milnor_f_log, milnor_g_log, p_rk_log, q_r_log, s_r
from .constants import (
    b_family,
    c_constant,
    f_k_log_closed,
    f_rk_series,
    gamma_product_constants,
    log_glaisher_a,
    m_matrix,
    m_tilde_matrix,
)
from .precision import BoundedReal, PrecisionContext, make_context
from .special import (
    bernoulli,
    dedekind_eta_imag,
    log_gamma_rational,
    log_two_pi,
    partition_count,
    pi_const,
)

DEFAULT_BIT_CAP = 1 << 26
BIT_CAP_ENV = "BERNFAC_ORACLE_BIT_CAP"

DEFAULT_RATIO_GRID = (25, 50, 100)
DEFAULT_MILNOR_GRID = (10, 100, 1000)


class VerificationFailure(Exception):
    """An exact identity check failed; carries the offending report."""

    def __init__(self, report):
        super().__init__(report.line())
        self.report = report


# -- report types -------------------------------------------------------------

def _params_compact(params: dict) -> str:
    return ",".join(f"{key}={value}" for key, value in params.items())


def _params_record(params: dict) -> dict:
    out = {}
    for key, value in params.items():
        if isinstance(value, (int, float, str, bool)) or value is None:
            out[key] = value
        else:
            out[key] = str(value)
    return out


@dataclass(frozen=True)
class IdentityReport:
    """One exact or interval-certified identity check."""

    name: str
    params: dict
    lhs: object
    rhs: object
    status: str  # "exact-equal" | "within-bounds" | "FAIL"
    gap: float = 0.0

    def line(self) -> str:
        inner = _params_compact(self.params)
        return f"{self.name}[{inner}] {self.status} gap={self.gap:.3e}"

    def record(self) -> dict:
        return {
            "name": self.name,
            "params": _params_record(self.params),
            "status": self.status,
            "gap": self.gap,
        }


@dataclass(frozen=True)
class RatioReport:
    """Log-gap of exact product vs asymptotic formula along an n-grid."""

    name: str
    gaps: tuple  # ((n, float gap), ...) sorted by n
    monotone_tail: bool
    offending: tuple = ()

    def __post_init__(self):
        ns = [n for n, _ in self.gaps]
        if ns != sorted(ns):
            raise ValueError("gap entries must be sorted by n")

    @property
    def status(self) -> str:
        return "decreasing" if self.monotone_tail else "FAIL"

    def line(self) -> str:
        pairs = ",".join(f"{n}:{g:.3e}" for n, g in self.gaps)
        tail = "" if self.monotone_tail else f" offending={self.offending}"
        return f"{self.name} gaps={pairs} {self.status}{tail}"

    def record(self) -> dict:
        return {
            "name": self.name,
            "gaps": [[n, g] for n, g in self.gaps],
            "monotone_tail": self.monotone_tail,
            "status": self.status,
        }


def report_lines(reports: Iterable) -> List[str]:
    return [report.line() for report in reports]


def report_records(reports: Iterable) -> List[dict]:
    return [report.record() for report in reports]


# -- exact oracles ------------------------------------------------------------

def _bit_cap() -> int:
    return int(os.environ.get(BIT_CAP_ENV, DEFAULT_BIT_CAP))


def exact_factorial_product(k: int, n: int, r: int) -> int:
    """Exact prod_{v=1..n} (k v)!^(v^r) as a big integer.

    Refuses (OverflowError) when the projected bit size exceeds the cap
    configured via the BERNFAC_ORACLE_BIT_CAP environment variable.
    """
    if k < 1 or n < 0 or r < 0:
        raise ValueError("need k >= 1, n >= 0, r >= 0")
    projected = sum(
        v ** r * math.lgamma(k * v + 1) for v in range(1, n + 1)
    ) / math.log(2)
    cap = _bit_cap()
    if projected > cap:
        raise OverflowError(
            f"projected {projected:.3e} bits exceeds cap {cap}"
        )
    product = 1
    fact = 1
    arg = 0
    for v in range(1, n + 1):
        for i in range(arg + 1, k * v + 1):
            fact *= i
        arg = k * v
        product *= pow(fact, v ** r)
    return product


def exact_bernoulli_product(n: int, mode: str = "plain") -> Fraction:
    """Exact prod_{v=1..n} |B_{2v}| / divisor with divisor 1, 2v, or 4v."""
    divisors = {"plain": 0, "over_2nu": 2, "over_4nu": 4}
    if mode not in divisors:
        raise ValueError(f"unknown mode {mode!r}")
    scale = divisors[mode]
    acc = Fraction(1)
    for v in range(1, n + 1):
        term = abs(bernoulli(2 * v))
        if scale:
            term /= scale * v
        acc *= term
    return acc


def log_exact_int(n: int, ctx: PrecisionContext) -> BoundedReal:
    """Certified log of an exact positive integer of any bit size."""
    if n < 1:
        raise ValueError("need n >= 1")
    with ctx.workprec():
        return BoundedReal.exact(n).log()


def log_exact_fraction(q: Fraction, ctx: PrecisionContext) -> BoundedReal:
    """Certified log of an exact positive rational."""
    if q <= 0:
        raise ValueError("need q > 0")
    with ctx.workprec():
        num = log_exact_int(q.numerator, ctx)
        den = log_exact_int(q.denominator, ctx)
        return num - den


# -- identity suite -----------------------------------------------------------

def _expect_equal(reports, name, params, lhs, rhs):
    if lhs == rhs:
        reports.append(IdentityReport(name, params, lhs, rhs, "exact-equal"))
    else:
        report = IdentityReport(name, params, lhs, rhs, "FAIL", gap=float("inf"))
        reports.append(report)
        raise VerificationFailure(report)


def _expect_within(reports, name, params, value: BoundedReal, target: Fraction):
    mid_minus = value - BoundedReal.exact(target)
    gap = abs(float(mid_minus.value)) / max(1.0, abs(float(target)))
    if value.contains(target):
        reports.append(
            IdentityReport(name, params, target, value, "within-bounds", gap)
        )
    else:
        report = IdentityReport(name, params, target, value, "FAIL", gap)
        reports.append(report)
        raise VerificationFailure(report)


def _factorial_power_split(reports, max_n):
    """n!^(n+1) == prod v! * prod v^v, checked for every n <= max_n."""
    fact = 1
    prod_fact = 1
    prod_pow = 1
    for n in range(1, max_n + 1):
        fact *= n
        prod_fact *= fact
        prod_pow *= n ** n
        lhs = pow(fact, n + 1)
        rhs = prod_fact * prod_pow
        _expect_equal(reports, "factorial-power-split", {"n": n}, lhs, rhs)


def _shifted_factorial_identities(reports, max_k, max_n):
    """Merge and telescope identities for shifted factorial products.

    F_{k,l}(n) = prod_{v<=n} (kv-l)! satisfies
    F_{k,0}(n) ... F_{k,k-1}(n) = prod_{v<=kn} v!   and
    F_{k,l}(n) = F_{k,l+1}(n) * prod_{v<=n} (kv-l) for 0 <= l < k-1.
    """
    limit = max_k * max_n
    fact_table = [1] * (limit + 1)
    for m in range(1, limit + 1):
        fact_table[m] = fact_table[m - 1] * m
    superfact = [1] * (limit + 1)
    for m in range(1, limit + 1):
        superfact[m] = superfact[m - 1] * fact_table[m]

    for k in range(1, max_k + 1):
        f_kl = [1] * k
        poch = [1] * k
        for n in range(1, max_n + 1):
            for l in range(k):
                f_kl[l] *= fact_table[k * n - l]
                poch[l] *= k * n - l
            merged = 1
            for value in f_kl:
                merged *= value
            _expect_equal(
                reports,
                "shifted-factorial-merge",
                {"k": k, "n": n},
                merged,
                superfact[k * n],
            )
            for l in range(k - 1):
                _expect_equal(
                    reports,
                    "shifted-factorial-telescope",
                    {"k": k, "l": l, "n": n},
                    f_kl[l],
                    f_kl[l + 1] * poch[l],
                )


def _weighted_factorial_split(reports, max_r, max_n):
    """n!^(S_r(n)) * prod v^(v^r) == prod v!^(v^r) * prod v^(S_r(v))."""
    for r in range(0, max_r + 1):
        fact = 1
        prod_pow = 1
        prod_fact = 1
        prod_s = 1
        s_run = 0
        for n in range(1, max_n + 1):
            fact *= n
            weight = n ** r
            s_run += weight
            prod_pow *= pow(n, weight)
            prod_fact *= pow(fact, weight)
            prod_s *= pow(n, s_run)
            assert s_run == s_r(r, n)
            lhs = pow(fact, s_run) * prod_pow
            rhs = prod_fact * prod_s
            _expect_equal(
                reports, "weighted-factorial-split", {"r": r, "n": n}, lhs, rhs
            )


def _rising_product_gamma(reports, max_n, ctx):
    """prod_{v<=n} (v - a) == Gamma(n+1-a) / Gamma(1-a), within bounds."""
    alphas = (
        Fraction(0),
        Fraction(1, 2),
        Fraction(1, 3),
        Fraction(2, 3),
        Fraction(1, 4),
        Fraction(1, 5),
    )
    with ctx.workprec():
        for alpha in alphas:
            base = log_gamma_rational(1 - alpha, ctx)
            product = Fraction(1)
            for n in range(1, max_n + 1):
                product *= n - alpha
                rhs = (log_gamma_rational(n + 1 - alpha, ctx) - base).exp()
                _expect_within(
                    reports,
                    "rising-product-gamma",
                    {"alpha": str(alpha), "n": n},
                    rhs,
                    product,
                )


def _telescope_matrix_inverse(reports, max_k):
    """M_k times its explicit inverse candidate equals k * identity."""
    for k in range(2, max_k + 1):
        m = m_matrix(k)
        mt = m_tilde_matrix(k)
        product = [
            [sum(m[i][t] * mt[t][j] for t in range(k)) for j in range(k)]
            for i in range(k)
        ]
        expected = [[k if i == j else 0 for j in range(k)] for i in range(k)]
        _expect_equal(
            reports, "telescope-matrix-inverse", {"k": k}, product, expected
        )


def _even_lattice_mass(reports):
    """Mass of even unimodular lattices in dimension 8, exactly."""
    mass = abs(bernoulli(4)) / 8 * exact_bernoulli_product(3, "over_4nu")
    _expect_equal(
        reports,
        "even-lattice-mass-at-8",
        {"dimension": 8},
        mass,
        Fraction(1, 696729600),
    )


def identity_suite() -> List[IdentityReport]:
    """Run every exact identity check; any failure raises VerificationFailure."""
    reports: List[IdentityReport] = []
    ctx = make_context(20)
    _factorial_power_split(reports, 30)
    _shifted_factorial_identities(reports, 5, 20)
    _weighted_factorial_split(reports, 4, 15)
    _rising_product_gamma(reports, 50, ctx)
    _telescope_matrix_inverse(reports, 50)
    _even_lattice_mass(reports)
    return reports


# -- ratio suite --------------------------------------------------------------

def _gap_pairs(grid, gap_fn) -> Tuple[tuple, bool, tuple]:
    gaps = tuple((n, gap_fn(n)) for n in grid)
    offending = ()
    monotone = True
    for (n1, g1), (n2, g2) in zip(gaps, gaps[1:]):
        if not g2 < g1:
            monotone = False
            offending = (n1, n2)
            break
    return gaps, monotone, offending


def _log_pi(ctx) -> BoundedReal:
    return log_two_pi(ctx) - BoundedReal.exact(2).log()


def _factorial_progression_gap(k, ctx) -> Callable[[int], float]:
    """Gap for prod (kv)! against its closed-constant asymptotic formula."""
    log_fk = f_k_log_closed(k, ctx)
    log_a1 = log_glaisher_a(1, ctx)
    log_2pi = log_two_pi(ctx)
    log_k = log_exact_int(k, ctx)

    def gap(n: int) -> float:
        with ctx.workprec():
            lhs = log_exact_int(exact_factorial_product(k, n, 0), ctx)
            log_n = log_exact_int(n, ctx)
            rhs = log_fk + k * log_a1 + Fraction(1, 4) * log_2pi
            rhs = rhs + (Fraction(k, 2) * n * (n + 1)) * (
                log_k + log_n - Fraction(3, 2)
            )
            rhs = rhs + Fraction(n, 2) * (
                log_2pi + log_k + Fraction(k, 2) - 1 + log_n
            )
            rhs = rhs + (
                Fraction(1, 4) + Fraction(k, 12) + Fraction(1, 12 * k)
            ) * log_n
            return abs(float((lhs - rhs).value))

    return gap


def _bernoulli_product_gap(which: str, ctx) -> Callable[[int], float]:
    """Gap for the two Bernoulli-product asymptotics (abs and over-2nu)."""
    family = {report.name: report for report in b_family(ctx)}
    log_b1 = family["B1"].value.log()
    log_b2 = family["B2"].value.log()
    log_2pi = log_two_pi(ctx)
    log_2 = BoundedReal.exact(2).log()
    log_pi = log_2pi - log_2

    def gap(n: int) -> float:
        with ctx.workprec():
            log_n = log_exact_int(n, ctx)
            core = log_n - log_pi - Fraction(3, 2)
            if which == "abs":
                lhs = log_exact_fraction(exact_bernoulli_product(n, "plain"), ctx)
                rhs = log_b1 + (n * (n + 1)) * core
                rhs = rhs + Fraction(n, 2) * (4 * log_2 + log_pi + log_n)
                rhs = rhs + Fraction(11, 24) * log_n
            else:
                lhs = log_exact_fraction(
                    exact_bernoulli_product(n, "over_2nu"), ctx
                )
                rhs = log_b2 + (n * n) * core
                rhs = rhs + Fraction(n, 2) * (2 * log_2 + log_n - log_pi - 1)
                rhs = rhs - Fraction(1, 24) * log_n
            return abs(float((lhs - rhs).value))

    return gap


def _lattice_mass_gap(ctx) -> Callable[[int], float]:
    """Gap for the even-unimodular mass formula asymptotic (needs 4 | n)."""
    family = {report.name: report for report in b_family(ctx)}
    log_b3 = family["B3"].value.log()
    log_2pi = log_two_pi(ctx)
    log_2 = BoundedReal.exact(2).log()
    log_pi = log_2pi - log_2

    def gap(n: int) -> float:
        if n % 4:
            raise ValueError("lattice mass needs 4 | n")
        with ctx.workprec():
            mass = abs(bernoulli(n)) / (2 * n) * exact_bernoulli_product(
                n - 1, "over_4nu"
            )
            lhs = log_exact_fraction(mass, ctx)
            log_n = log_exact_int(n, ctx)
            rhs = log_b3 + (n * n) * (log_n - log_pi - Fraction(3, 2))
            rhs = rhs - Fraction(n, 2) * (2 * log_2 + log_n - log_pi - 1)
            rhs = rhs - Fraction(1, 24) * log_n
            return abs(float((lhs - rhs).value))

    return gap


def _power_tower_gap(r, ctx) -> Callable[[int], float]:
    """Gap for prod v^(v^r) against the generalized Glaisher asymptotic."""
    log_ar = log_glaisher_a(r, ctx)

    def gap(n: int) -> float:
        with ctx.workprec():
            lhs = BoundedReal.exact(0)
            for v in range(2, n + 1):
                lhs = lhs + v ** r * log_exact_int(v, ctx)
            rhs = log_ar + q_r_log(r, n, ctx)
            return abs(float((lhs - rhs).value))

    return gap


def _weighted_progression_gap(r, k, ctx) -> Callable[[int], float]:
    """Gap for prod (kv)!^(v^r) against its series-constant asymptotic."""
    log_frk = f_rk_series(r, k, ctx).value.log()
    log_ar = log_glaisher_a(r, ctx)
    log_ar1 = log_glaisher_a(r + 1, ctx)

    def gap(n: int) -> float:
        with ctx.workprec():
            lhs = log_exact_int(exact_factorial_product(k, n, r), ctx)
            rhs = log_frk + Fraction(1, 2) * log_ar + k * log_ar1
            rhs = rhs + p_rk_log(r, k, n, ctx)
            rhs = rhs + Fraction(1, 2) * q_r_log(r, n, ctx)
            rhs = rhs + k * q_r_log(r + 1, n, ctx)
            return abs(float((lhs - rhs).value))

    return gap


def _gamma_ratio_product_gap(ctx) -> Callable[[int], float]:
    """Gap for prod Gamma(v/n)^v against its closed-constant asymptotic."""
    first, second = gamma_product_constants(ctx)
    log_g1 = first.log()
    log_g2 = second.log()

    def gap(n: int) -> float:
        with ctx.workprec():
            lhs = BoundedReal.exact(0)
            for v in range(1, n):
                lhs = lhs + v * log_gamma_rational(Fraction(v, n), ctx)
            log_n = log_exact_int(n, ctx)
            rhs = log_g1 + (n * n) * log_g2 - Fraction(1, 12) * log_n
            return abs(float((lhs - rhs).value))

    return gap


def _multiple_of_four_grid(grid) -> tuple:
    adjusted = []
    for n in grid:
        m = n - (n % 4)
        if m >= 4 and m not in adjusted:
            adjusted.append(m)
    return tuple(adjusted)


def _ratio_targets(ctx) -> dict:
    return {
        "factorial-progression-k1": lambda grid: (
            grid, _factorial_progression_gap(1, ctx)),
        "factorial-progression-k2": lambda grid: (
            grid, _factorial_progression_gap(2, ctx)),
        "factorial-progression-k3": lambda grid: (
            grid, _factorial_progression_gap(3, ctx)),
        "bernoulli-product-abs": lambda grid: (
            grid, _bernoulli_product_gap("abs", ctx)),
        "bernoulli-product-over-2nu": lambda grid: (
            grid, _bernoulli_product_gap("over_2nu", ctx)),
        "lattice-mass": lambda grid: (
            _multiple_of_four_grid(grid), _lattice_mass_gap(ctx)),
        "power-tower-r1": lambda grid: (grid, _power_tower_gap(1, ctx)),
        "power-tower-r2": lambda grid: (grid, _power_tower_gap(2, ctx)),
        "power-tower-r3": lambda grid: (grid, _power_tower_gap(3, ctx)),
        "weighted-progression-r1-k2": lambda grid: (
            grid, _weighted_progression_gap(1, 2, ctx)),
        "gamma-ratio-product": lambda grid: (
            grid, _gamma_ratio_product_gap(ctx)),
    }


def ratio_suite(
    targets: Optional[Sequence[str]] = None,
    n_grid: Optional[Sequence[int]] = None,
    ctx: Optional[PrecisionContext] = None,
) -> List[RatioReport]:
    """Log-gap decrease checks for every asymptotic product formula."""
    ctx = ctx or make_context(20)
    grid = tuple(n_grid or DEFAULT_RATIO_GRID)
    if list(grid) != sorted(set(grid)):
        raise ValueError("n_grid must be strictly increasing")
    table = _ratio_targets(ctx)
    if targets is None:
        targets = list(table)
    reports = []
    for name in targets:
        if name not in table:
            raise ValueError(f"unknown ratio target {name!r}")
        used_grid, gap_fn = table[name](grid)
        gaps, monotone, offending = _gap_pairs(used_grid, gap_fn)
        reports.append(RatioReport(name, gaps, monotone, offending))
    return reports


# -- eta product, abelian average, Milnor equivalence -------------------------

def primes_up_to(limit: int) -> List[int]:
    """All primes <= limit by a plain sieve of Eratosthenes."""
    if limit < 2:
        return []
    sieve = bytearray([1]) * (limit + 1)
    sieve[0] = sieve[1] = 0
    for p in range(2, int(limit ** 0.5) + 1):
        if sieve[p]:
            sieve[p * p :: p] = bytearray(len(sieve[p * p :: p]))
    return [p for p in range(2, limit + 1) if sieve[p]]


def eta_identity_check(prime_bound: int, ctx: PrecisionContext) -> IdentityReport:
    """Compare prod_{p<=P} p^(1/12) eta(i log p / pi) with 1/C2.

    Each factor equals prod_v (1 - p^(-2v)) < 1, so the truncated product
    exceeds the limit. The omitted log-mass over primes p > P (all odd) is
    majorized by the sum over odd integers m > P of m^(-2) + 2 m^(-4), which
    is below 1/(2(P-1)) + (4/3)(P-1)^(-3); this is folded into the tolerance.
    """
    if prime_bound < 3:
        raise ValueError("need prime_bound >= 3")
    primes = primes_up_to(prime_bound)
    with ctx.workprec():
        pi = pi_const(ctx)
        acc = BoundedReal.exact(1)
        for p in primes:
            log_p = log_exact_int(p, ctx)
            factor = (Fraction(1, 12) * log_p).exp() * dedekind_eta_imag(
                log_p / pi, ctx
            )
            acc = acc * factor
        target = BoundedReal.exact(1) / c_constant(2, ctx).value
        diff = acc - target
        gap = abs(float(diff.value))
        tail_log = 1.0 / (2 * (prime_bound - 1)) + (4.0 / 3.0) / (
            prime_bound - 1
        ) ** 3
        tolerance = (
            float(target.abs_upper()) * math.expm1(tail_log)
            + float(diff.abs_err)
        )
    status = "within-bounds" if gap <= tolerance else "FAIL"
    return IdentityReport(
        "prime-eta-product",
        {
            "prime_bound": prime_bound,
            "primes_used": len(primes),
            "tolerance": tolerance,
        },
        float(acc.value),
        float(target.value),
        status,
        gap,
    )


def _abelian_count_sums(limit: int) -> dict:
    """Running sums of a(n) at each power-of-ten checkpoint up to limit.

    a(n) is multiplicative with a(p^e) = partition count of e; the sum runs
    over a smallest-prime-factor sieve so each n factors in O(log n).
    """
    spf = array("l", [0]) * (limit + 1)
    for i in range(2, limit + 1):
        if spf[i] == 0:
            for j in range(i, limit + 1, i):
                if spf[j] == 0:
                    spf[j] = i
    checkpoints = {}
    total = 1  # a(1) = 1
    if limit >= 1 and limit == 1:
        checkpoints[1] = 1
    next_mark = 10
    for n in range(2, limit + 1):
        m = n
        a_n = 1
        while m > 1:
            p = spf[m]
            e = 0
            while m % p == 0:
                m //= p
                e += 1
            a_n *= partition_count(e)
        total += a_n
        if n == next_mark:
            checkpoints[n] = total
            next_mark *= 10
    checkpoints[limit] = total
    return checkpoints


def abelian_average_check(N: int, ctx: PrecisionContext) -> IdentityReport:
    """Compare the mean of the abelian-group counts a(n), n <= N, with C1."""
    if N < 1:
        raise ValueError("need N >= 1")
    sums = _abelian_count_sums(N)
    mean = Fraction(sums[N], N)
    with ctx.workprec():
        target = c_constant(1, ctx).value
        diff = BoundedReal.exact(mean) - target
        gap = abs(float(diff.value))
    # second-order coefficient of the summatory function is about -14.65,
    # so a safe O(N^(-1/2)) tolerance uses 16 / sqrt(N)
    tolerance = 16.0 / math.sqrt(N)
    status = "within-bounds" if gap <= tolerance else "FAIL"
    means = {
        str(point): float(Fraction(total, point))
        for point, total in sorted(sums.items())
    }
    return IdentityReport(
        "abelian-count-average",
        {"N": N, "tolerance": tolerance, "checkpoint_means": means},
        float(mean),
        float(target.value),
        status,
        gap,
    )


def milnor_equivalence_check(
    n_grid: Optional[Sequence[int]] = None,
    ctx: Optional[PrecisionContext] = None,
) -> RatioReport:
    """Check 2 B' F(2n+1) / (B2 G(n)) -> 1 along the grid."""
    ctx = ctx or make_context(20)
    grid = tuple(n_grid or DEFAULT_MILNOR_GRID)
    family = {report.name: report for report in b_family(ctx)}
    with ctx.workprec():
        log_b2 = family["B2"].value.log()
        log_bp = family["Bprime"].value.log()
        log_2 = BoundedReal.exact(2).log()

        def gap(n: int) -> float:
            lhs = log_2 + log_bp + milnor_f_log(2 * n + 1, ctx)
            rhs = log_b2 + milnor_g_log(n, ctx)
            return abs(float((lhs - rhs).value))

        gaps, monotone, offending = _gap_pairs(grid, gap)
    return RatioReport("milnor-equivalence", gaps, monotone, offending)
