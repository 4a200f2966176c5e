"""Verification harness: every identity, antiderivative, endpoint value and
series value the closed forms rest on, checked against an independent route.

Checks come in two strengths.  *Required* checks gate ``all_passed``:
closed forms vs. the finite-difference oracle, the differential
recurrence, the di/trilogarithm identities, the first two first-integrals,
two of the three long antiderivative displays, the inner-integral
cancellation, the endpoint limits and the trigamma sums.  *Informational*
checks are report-only measurements of displays treated as hypotheses:
the third first-integral (ambiguous polylogarithm order, constant
derivative defect), the Li_2(t)^2 antiderivative, the sign variant of the
frak_I display, and the bracket constant of the fourth derivative.
Nothing is silently corrected; defects are measured and reported.

Reports are deterministic for a fixed config: sample points come from a
seeded generator and serialization uses a fixed key order.
"""

from __future__ import annotations

import json
import math
import random
from dataclasses import dataclass, field
from typing import Callable, Iterable, Mapping

from .exceptions import DomainError
from .oracle import ode_residual, order_derivative_fd
from .orderderiv import (
    first_integral,
    frak_I,
    frak_I_limit,
    inner_integral_I,
    p_deriv,
    dilog_landen,
    dilog_reflection,
    trilog_identity,
)
from .polylog import polylog, trigamma, zeta_const
from .quadrature import EndpointFlag, integrate

__all__ = [
    "CheckResult",
    "CheckReport",
    "check_closed_forms",
    "check_quadrature_recurrence",
    "check_identities",
    "check_appendix_a",
    "check_appendix_b",
    "run_suite",
]

_PI4 = math.pi**4

DEFAULT_SEED = 20140412
DEFAULT_SUM_TERMS = 10_000

_FD_GRID = (-0.5, 0.0, 0.5, 0.9, 0.99)
_ODE_GRID = (-0.5, 0.0, 0.25, 0.5, 0.9)
_CANCELLATION_GRID = (-0.9, -0.7, -0.5, -0.3, -0.1, 0.1, 0.3, 0.5, 0.7, 0.9)

_DEFAULT_TOLS: dict[str, float] = {
    "normalization": 1e-12,
    "fd_n1": 1e-7,
    "fd_n2": 1e-7,
    "fd_n3": 1e-5,
    "fd_n4": 1e-3,
    "ode_n1": 1e-6,
    "ode_n2": 1e-6,
    "ode_n3": 1e-6,
    "ode_n4": 1e-5,
    "identities": 1e-12,
    "first_integral": 1e-7,
    "antiderivative": 1e-7,
    "inner_integral_quad": 1e-8,
    "frak_quad": 1e-7,
    "frak_limits": 1e-12,
    "sum": 1e-9,
    "p4_composition": 1e-10,
}

# Convenience override groups accepted by run_suite / the CLI.
_TOL_GROUPS: dict[str, tuple[str, ...]] = {
    "fd": ("fd_n1", "fd_n2", "fd_n3", "fd_n4", "first_integral", "antiderivative"),
    "ode": ("ode_n1", "ode_n2", "ode_n3", "ode_n4"),
    "identities": ("identities",),
    "quadrature": ("inner_integral_quad", "frak_quad"),
    "sum": ("sum",),
}


@dataclass(frozen=True)
class CheckResult:
    """One verified claim: worst deviation over its sample set vs. tolerance."""

    id: str
    sample_count: int
    max_abs_dev: float
    max_rel_dev: float
    tolerance: float
    passed: bool
    note: str = ""
    required: bool = True


@dataclass(frozen=True)
class CheckReport:
    """Ordered collection of check results plus the config that produced them."""

    results: tuple[CheckResult, ...]
    all_passed: bool
    config: dict = field(default_factory=dict)

    def to_json(self) -> str:
        doc = {
            "all_passed": self.all_passed,
            "config": self.config,
            "results": [
                {
                    "id": r.id,
                    "required": r.required,
                    "passed": r.passed,
                    "sample_count": r.sample_count,
                    "max_abs_dev": r.max_abs_dev,
                    "max_rel_dev": r.max_rel_dev,
                    "tolerance": r.tolerance,
                    "note": r.note,
                }
                for r in self.results
            ],
        }
        return json.dumps(doc, indent=2)

    def to_text(self) -> str:
        lines = []
        width = max(len(r.id) for r in self.results)
        for r in self.results:
            status = "PASS" if r.passed else ("FAIL" if r.required else "info")
            lines.append(
                f"{status:<4} {r.id:<{width}}  max_abs={r.max_abs_dev:.3e}  "
                f"tol={r.tolerance:.1e}  n={r.sample_count}"
                + (f"  [{r.note}]" if r.note else "")
            )
        lines.append("all required checks passed" if self.all_passed else "REQUIRED CHECK FAILED")
        return "\n".join(lines)


def resolve_tolerances(tol_overrides: Mapping[str, float] | None) -> dict[str, float]:
    tols = dict(_DEFAULT_TOLS)
    for key, value in (tol_overrides or {}).items():
        if key in _TOL_GROUPS:
            for member in _TOL_GROUPS[key]:
                tols[member] = float(value)
        elif key in tols:
            tols[key] = float(value)
        else:
            raise DomainError(f"unknown tolerance key {key!r}")
    return tols


def _result(
    check_id: str,
    deviations: Iterable[float],
    scale: float,
    tol: float,
    default_tol: float,
    note: str = "",
    required: bool = True,
    sample_count: int | None = None,
) -> CheckResult:
    devs = list(deviations)
    max_abs = max(devs) if devs else 0.0
    max_rel = max_abs / scale if scale > 0.0 else max_abs
    passed = max_abs <= tol or max_rel <= tol
    if not passed and (max_abs <= default_tol or max_rel <= default_tol):
        extra = f"tolerance-bound: deviation within default tolerance {default_tol:g}"
        note = f"{note}; {extra}" if note else extra
    return CheckResult(
        id=check_id,
        sample_count=sample_count if sample_count is not None else len(devs),
        max_abs_dev=max_abs,
        max_rel_dev=max_rel,
        tolerance=tol,
        passed=passed,
        note=note,
        required=required,
    )


def _derivative(fn: Callable[[float], float], x: float, h_base: float = 1e-5) -> float:
    # Central difference with one Richardson level; h scaled by max(1, |x|).
    h = h_base * max(1.0, abs(x))
    d1 = (fn(x + h) - fn(x - h)) / (2.0 * h)
    d2 = (fn(x + 0.5 * h) - fn(x - 0.5 * h)) / h
    return (4.0 * d2 - d1) / 3.0


# --- closed forms vs. the nu-derivative oracle ----------------------------


def check_closed_forms(tols: Mapping[str, float] | None = None) -> list[CheckResult]:
    """Compare p_deriv against the finite-difference oracle on the fixed grid,
    and pin the normalization values at z = 1."""
    t = resolve_tolerances(tols)
    results = []

    norm_devs = [abs(p_deriv(0, 1.0) - 1.0)] + [abs(p_deriv(n, 1.0)) for n in range(1, 5)]
    results.append(
        _result(
            "closed-form-normalization",
            norm_devs,
            1.0,
            t["normalization"],
            _DEFAULT_TOLS["normalization"],
        )
    )

    for n in range(1, 5):
        key = f"fd_n{n}"
        devs = []
        scale = 0.0
        for z in _FD_GRID:
            oracle_value, _ = order_derivative_fd(n, z)
            devs.append(abs(p_deriv(n, z) - oracle_value))
            scale = max(scale, abs(oracle_value))
        results.append(
            _result(f"closed-form-fd-n{n}", devs, scale, t[key], _DEFAULT_TOLS[key])
        )

    # The pre-gathered fourth-derivative form: the same value composed
    # through the antiderivative frak_I instead of the gathered bracket.
    # Agreement here exercises the identity-gathering step end to end.
    devs = []
    for z in (-0.9, -0.5, 0.0, 0.5, 0.9):
        tt = 0.5 * (1.0 + z)
        uu = 0.5 * (1.0 - z)
        composed = _PI4 / 15.0 + 24.0 * (
            polylog(2, tt) ** 2
            + 2.0 * math.log(uu) * (polylog(3, tt) - zeta_const(3))
            + math.pi**2 / 6.0 * polylog(2, uu)
            + frak_I(tt)
        )
        devs.append(abs(composed - p_deriv(4, z)))
    results.append(
        _result(
            "p4-via-frak-I",
            devs,
            1.0,
            t["p4_composition"],
            _DEFAULT_TOLS["p4_composition"],
            note="pre-gathered composition through frak_I matches the gathered bracket",
        )
    )
    return results


def check_quadrature_recurrence(n: int, tols: Mapping[str, float] | None = None) -> CheckResult:
    """Residual of d/dz[(1-z^2) dPn/dz] + n P_{n-1} + n(n-1) P_{n-2} over the grid."""
    if not 1 <= n <= 4:
        raise DomainError(f"recurrence check supports n in 1..4, got {n!r}")
    t = resolve_tolerances(tols)
    key = f"ode_n{n}"
    # dz = 1e-3: fourth-order truncation is ~1e-12 there while the
    # roundoff floor eps/dz^2 sits near 1e-8.
    devs = [ode_residual(n, z, 1e-3) for z in _ODE_GRID]
    return _result(f"ode-recurrence-n{n}", devs, 1.0, t[key], _DEFAULT_TOLS[key])


def check_inner_integral_origin(tols: Mapping[str, float] | None = None) -> CheckResult:
    """Quadrature of [P3 + 3 P2] from 0 to z vs. I(z) - I(0)."""
    t = resolve_tolerances(tols)

    def integrand(zz: float) -> float:
        return p_deriv(3, zz) + 3.0 * p_deriv(2, zz)

    base = inner_integral_I(0.0)
    devs = []
    for z in (-0.6, -0.2, 0.4, 0.8):
        if z > 0:
            q = integrate(integrand, 0.0, z, tol=1e-11).value
        else:
            q = -integrate(integrand, z, 0.0, tol=1e-11).value
        devs.append(abs(q - (inner_integral_I(z) - base)))
    return _result(
        "inner-integral-from-origin",
        devs,
        1.0,
        t["inner_integral_quad"],
        _DEFAULT_TOLS["inner_integral_quad"],
    )


# --- section-2 polylogarithm identities ------------------------------------


def check_identities(
    tols: Mapping[str, float] | None = None, seed: int = DEFAULT_SEED
) -> list[CheckResult]:
    """Residuals of the dilog reflection, dilog Landen and trilog identities."""
    t = resolve_tolerances(tols)
    rng = random.Random(seed)
    xs = [rng.uniform(0.01, 0.99) for _ in range(100)]
    rows = (
        ("identity-dilog-reflection", dilog_reflection),
        ("identity-dilog-landen", dilog_landen),
        ("identity-trilog-landen", trilog_identity),
    )
    return [
        _result(name, [abs(fn(x)) for x in xs], 1.0, t["identities"], _DEFAULT_TOLS["identities"])
        for name, fn in rows
    ]


# --- antiderivative displays (treated as hypotheses) -----------------------


def _anti_li4_landen(t: float) -> float:
    w = t / (t - 1.0)
    return (
        -0.5 * polylog(2, w) ** 2 + t * polylog(4, w) + math.log1p(-t) * polylog(3, w)
    )


def _anti_li2_squared(t: float) -> float:
    lu = math.log1p(-t)
    lt = math.log(t)
    li2 = polylog(2, t)
    return (
        -2.0
        + 6.0 * t
        + 6.0 * (1.0 - t - math.pi**2 / 9.0) * lu
        - 2.0 * (1.0 - t - lt) * lu * lu
        - 2.0 * (t - (1.0 + t) * lu) * li2
        + t * li2 * li2
        + 4.0 * polylog(3, 1.0 - t)
    )


def _anti_log_squares(x: float) -> float:
    lx = math.log(x)
    lu = math.log1p(-x)
    w = x / (x - 1.0)
    li2x = polylog(2, x)
    li2u = polylog(2, 1.0 - x)
    li2w = polylog(2, w)
    return (
        -4.0
        + 24.0 * x
        + 12.0 * (1.0 - x) * lu
        - 2.0 * (1.0 - x) * lu * lu
        - 0.5 * lu**4
        - 12.0 * x * lx
        - 4.0 * (1.0 - 2.0 * x) * lu * lx
        - 2.0 * x * lu * lu * lx
        + 2.0 * lu**3 * lx
        + (2.0 - lu * lu) * lx * lx
        - (1.0 - x) * (2.0 - 2.0 * lu + lu * lu) * lx * lx
        + (4.0 - 4.0 * lu + 2.0 * lu * lu) * li2u
        - (4.0 - 4.0 * lx + 2.0 * lx * lx) * li2x
        - (2.0 * lu * lu - 4.0 * lu * lx + 2.0 * lx * lx) * li2w
        - 4.0 * (1.0 - lx) * polylog(3, x)
        + 4.0 * (1.0 - lu) * polylog(3, 1.0 - x)
        + 4.0 * (lx - lu) * polylog(3, w)
        + 4.0 * polylog(4, 1.0 - x)
        - 4.0 * polylog(4, x)
        - 4.0 * polylog(4, w)
    )


def check_appendix_a(
    tols: Mapping[str, float] | None = None, seed: int = DEFAULT_SEED
) -> list[CheckResult]:
    """Differentiate-and-compare checks for the first integrals and the three
    long antiderivative displays, plus the inner-integral cancellation."""
    t = resolve_tolerances(tols)
    rng = random.Random(seed)
    zs = [rng.uniform(-0.9, 0.97) for _ in range(50)]
    ts = [rng.uniform(0.05, 0.95) for _ in range(50)]
    results = []

    for eta in (1, 2):
        devs = [
            abs(_derivative(lambda zz: first_integral(eta, zz), z) - p_deriv(eta, z))
            for z in zs
        ]
        results.append(
            _result(
                f"first-integral-{eta}",
                devs,
                1.0,
                t["first_integral"],
                _DEFAULT_TOLS["first_integral"],
            )
        )

    # The eta = 3 display: try each candidate order for its ambiguous
    # polylogarithm and report the measured derivative defect (report-only).
    const_offset = 24.0 * zeta_const(3)
    for order in (1, 2, 3):
        offsets = [
            _derivative(lambda zz: first_integral(3, zz, li_order=order), z) - p_deriv(3, z)
            for z in zs
        ]
        devs = [abs(v) for v in offsets]
        spread = max(offsets) - min(offsets)
        if order == 2:
            note = (
                f"selected resolution Li_2: derivative exceeds P3 by the constant "
                f"{sum(offsets) / len(offsets):.9f} = 24*zeta(3) (spread {spread:.2e}); "
                "consistent with a sign defect on the display's 2*zeta(3) term"
            )
        else:
            note = f"order Li_{order}: z-dependent mismatch (spread {spread:.2e})"
        results.append(
            _result(
                f"first-integral-3-li{order}",
                devs,
                1.0,
                t["first_integral"],
                _DEFAULT_TOLS["first_integral"],
                note=note,
                required=False,
            )
        )

    anti_rows = (
        ("antiderivative-li4-landen", _anti_li4_landen,
         lambda x: polylog(4, x / (x - 1.0)), True),
        ("antiderivative-li2-squared", _anti_li2_squared,
         lambda x: polylog(2, x) ** 2, False),
        ("antiderivative-log-squares", _anti_log_squares,
         lambda x: (math.log(x) * math.log1p(-x)) ** 2, True),
    )
    for name, form, target, required in anti_rows:
        devs = [abs(_derivative(form, x) - target(x)) for x in ts]
        results.append(
            _result(
                name,
                devs,
                1.0,
                t["antiderivative"],
                _DEFAULT_TOLS["antiderivative"],
                required=required,
            )
        )

    def integrand(zz: float) -> float:
        return p_deriv(3, zz) + 3.0 * p_deriv(2, zz)

    devs = []
    for z in _CANCELLATION_GRID:
        q = integrate(integrand, -1.0, z, tol=1e-11, flags=EndpointFlag(lower_singular=True))
        devs.append(abs(q.value - inner_integral_I(z)))
    results.append(
        _result(
            "inner-integral-cancellation",
            devs,
            1.0,
            t["inner_integral_quad"],
            _DEFAULT_TOLS["inner_integral_quad"],
        )
    )

    a = 2.0**-20
    b = 1.0 - 2.0**-20
    q = integrate(
        lambda x: math.log(x) * polylog(2, x) / (1.0 - x),
        a,
        b,
        tol=1e-10,
        flags=EndpointFlag(lower_singular=True, upper_singular=True),
    )
    devs = [abs(q.value - (frak_I(b) - frak_I(a)))]
    results.append(
        _result("frak-I-quadrature", devs, 1.0, t["frak_quad"], _DEFAULT_TOLS["frak_quad"])
    )

    # Report-only: the antiderivative display variant whose 2 ln(t) Li_3(t)
    # term carries a plus sign is NOT an antiderivative of the integrand;
    # its derivative defect is 4 d/dt[ln(t) Li_3(t)].  Measured, not hidden.
    def variant(x: float) -> float:
        return frak_I(x) + 4.0 * math.log(x) * polylog(3, x)

    devs = [
        abs(_derivative(variant, x) - math.log(x) * polylog(2, x) / (1.0 - x))
        for x in ts
    ]
    results.append(
        _result(
            "frak-I-display-variant",
            devs,
            1.0,
            t["antiderivative"],
            _DEFAULT_TOLS["antiderivative"],
            note=(
                "the +2 ln(t) Li3(t) sign variant fails differentiate-and-compare; "
                "the implemented minus sign passes (see frak-I-quadrature) and leaves "
                "both endpoint limits unchanged"
            ),
            required=False,
        )
    )

    # Report-only: the fourth-derivative bracket without its +pi^4/36
    # constant, measured against the oracle the same way the closed form is.
    offsets = []
    for z in (-0.5, 0.3, 0.8):
        stripped = p_deriv(4, z) - 24.0 * math.pi**4 / 36.0
        oracle_value, _ = order_derivative_fd(4, z)
        offsets.append(stripped - oracle_value)
    spread = max(offsets) - min(offsets)
    results.append(
        _result(
            "p4-display-constant",
            [abs(v) for v in offsets],
            1.0,
            t["fd_n4"],
            _DEFAULT_TOLS["fd_n4"],
            note=(
                f"bracket without its pi^4/36 constant misses the oracle by "
                f"{sum(offsets) / len(offsets):.9f} = -2 pi^4/3 uniformly "
                f"(spread {spread:.2e}); the evaluated form keeps the constant"
            ),
            required=False,
        )
    )
    return results


# --- trigamma series and endpoint limits -----------------------------------


def _partial_sums(terms: int) -> tuple[float, float, float, float, float]:
    """Partial sums of psi'(k)/k^2, psi'(k+1)/k^2 and 1/k^s for s = 3,4,5."""
    main = shifted = h3 = h4 = h5 = 0.0
    for k in range(1, terms + 1):
        tk = trigamma(k)
        k2 = float(k) * float(k)
        main += tk / k2
        shifted += (tk - 1.0 / k2) / k2
        h3 += 1.0 / (k2 * k)
        h4 += 1.0 / (k2 * k2)
        h5 += 1.0 / (k2 * k2 * k)
    return main, shifted, h3, h4, h5


def _tail_correction(h3: float, h4: float, h5: float) -> float:
    # sum_{k>K} psi'(k)/k^2 with psi'(k) ~ 1/k + 1/(2k^2) + 1/(6k^3) - ...
    # expressed through zeta tails; the dropped -1/(30 k^7) layer contributes
    # less than 1/(180 K^6).
    return (
        (zeta_const(3) - h3)
        + 0.5 * (zeta_const(4) - h4)
        + (zeta_const(5) - h5) / 6.0
    )


def trigamma_sum(terms: int = DEFAULT_SUM_TERMS, accelerate: bool = True) -> float:
    """sum_{k>=1} psi'(k)/k^2, either tail-accelerated or brute-force.

    Accelerated: partial sum to ``terms`` plus the analytic tail through the
    1/(6k^5) layer of the trigamma expansion (error < 1/(180 K^6) + roundoff).

    Brute force: the doubly truncated sum
    sum_{k<=K} sum_{j<K} 1/(k^2 (k+j)^2), which converges like zeta(2)/K and
    is evaluated in O(K) as sum_{k<=K} (psi'(k) - psi'(k+K))/k^2.
    """
    if not 1 <= terms <= 10**8:
        raise DomainError(f"terms must lie in 1..1e8, got {terms!r}")
    if not accelerate:
        total = 0.0
        for k in range(1, terms + 1):
            total += (trigamma(k) - trigamma(k + terms)) / (float(k) * float(k))
        return total
    main, _, h3, h4, h5 = _partial_sums(terms)
    return main + _tail_correction(h3, h4, h5)


def trigamma_sum_target() -> float:
    """The closed-form value of the sum: 7 pi^4 / 360."""
    return 7.0 * _PI4 / 360.0


def check_appendix_b(
    terms: int = DEFAULT_SUM_TERMS, tols: Mapping[str, float] | None = None
) -> list[CheckResult]:
    """Endpoint limits of frak_I and the trigamma sums, with tail acceleration."""
    if not 10**3 <= terms <= 10**8:
        raise DomainError(f"terms must lie in 1e3..1e8, got {terms!r}")
    t = resolve_tolerances(tols)
    results = []

    lim1 = frak_I_limit(1)
    lim0 = frak_I_limit(0)
    devs = [abs(lim1 - (-11.0 * _PI4 / 360.0)), abs(lim0 - (-_PI4 / 45.0))]
    near1 = abs(frak_I(1.0 - 2.0**-20) - lim1)
    near0 = abs(frak_I(2.0**-20) - lim0)
    results.append(
        _result(
            "frak-limit-endpoints",
            devs,
            abs(lim0),
            t["frak_limits"],
            _DEFAULT_TOLS["frak_limits"],
            note=(
                f"difference lim1-lim0 = -pi^4/120; observed approach: "
                f"|frak_I(1-2^-20)-lim| = {near1:.2e}, |frak_I(2^-20)-lim| = {near0:.2e}"
            ),
        )
    )

    main, shifted, h3, h4, h5 = _partial_sums(terms)
    tail = _tail_correction(h3, h4, h5)
    accelerated = main + tail
    results.append(
        _result(
            "trigamma-sum-accelerated",
            [abs(accelerated - trigamma_sum_target())],
            trigamma_sum_target(),
            t["sum"],
            _DEFAULT_TOLS["sum"],
            sample_count=terms,
        )
    )

    # Intermediate identity: sum psi'(k+1)/k^2 = pi^4/120; its tail is the
    # main tail minus the zeta(4) remainder.
    shifted_full = shifted + tail - (zeta_const(4) - h4)
    results.append(
        _result(
            "trigamma-sum-intermediate",
            [abs(shifted_full - _PI4 / 120.0)],
            _PI4 / 120.0,
            t["sum"],
            _DEFAULT_TOLS["sum"],
            sample_count=terms,
        )
    )

    # Brute-force slow convergence, measured against its predicted gap.
    naive_terms = 1000
    naive = trigamma_sum(naive_terms, accelerate=False)
    gap = trigamma_sum_target() - naive
    _, _, h3_n, h4_n, h5_n = _partial_sums(naive_terms)
    dropped = 0.0
    for k in range(1, naive_terms + 1):
        dropped += trigamma(k + naive_terms) / (float(k) * float(k))
    predicted_gap = dropped + _tail_correction(h3_n, h4_n, h5_n)
    results.append(
        _result(
            "trigamma-sum-naive-gap",
            [abs(gap - predicted_gap)],
            abs(predicted_gap),
            t["sum"],
            _DEFAULT_TOLS["sum"],
            note=f"K={naive_terms} brute-force double sum misses by {gap:.6e} (slow 1/K convergence)",
            sample_count=naive_terms,
        )
    )
    return results


# --- the suite --------------------------------------------------------------


def run_suite(
    tol_overrides: Mapping[str, float] | None = None,
    seed: int = DEFAULT_SEED,
    terms: int = DEFAULT_SUM_TERMS,
) -> CheckReport:
    """Run every check in a fixed order and assemble the deterministic report."""
    if not 10**3 <= terms <= 10**8:
        raise DomainError(f"terms must lie in 1e3..1e8, got {terms!r}")
    tols = resolve_tolerances(tol_overrides)
    results: list[CheckResult] = []
    results.extend(check_closed_forms(tols))
    for n in range(1, 5):
        results.append(check_quadrature_recurrence(n, tols))
    results.append(check_inner_integral_origin(tols))
    results.extend(check_identities(tols, seed=seed))
    results.extend(check_appendix_a(tols, seed=seed))
    results.extend(check_appendix_b(terms, tols))
    all_passed = all(r.passed for r in results if r.required)
    config = {
        "seed": seed,
        "sum_terms": terms,
        "tolerances": {k: tols[k] for k in sorted(tols)},
    }
    return CheckReport(results=tuple(results), all_passed=all_passed, config=config)
