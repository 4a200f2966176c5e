"""Ground truth independent of every closed form in the package.

``legendre_p`` evaluates P_nu(z) from its hypergeometric series

    P_nu(z) = sum_k (-nu)_k (nu+1)_k / (k!)^2 * ((1-z)/2)^k,   P_nu(1) = 1,

and ``order_derivative_fd`` differentiates it numerically in nu at nu = 0
with symmetric stencils plus Richardson extrapolation.  ``ode_residual``
checks the defining differential relation

    d/dz[(1-z^2) dPn/dz] = -n P_{n-1} - n(n-1) P_{n-2}

for the closed forms, entirely via finite differences in z.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache

from .exceptions import ConvergenceError, DomainError
from .orderderiv import p_deriv

__all__ = ["FDScheme", "legendre_p", "order_derivative_fd", "ode_residual"]

_SERIES_CAP = 100_000
_Z_FLOOR = -0.9  # series ratio (1-z)/2 reaches 0.95 here; trust ends


@dataclass(frozen=True)
class FDScheme:
    """Symmetric finite-difference stencil in nu with Richardson levels."""

    stencil: int
    h: float
    richardson_levels: int

    def __post_init__(self) -> None:
        if self.stencil < 5 or self.stencil % 2 == 0:
            raise DomainError(f"stencil must be an odd integer >= 5, got {self.stencil}")
        if not self.h > 0.0:
            raise DomainError(f"step h must be positive, got {self.h!r}")
        if self.richardson_levels < 0:
            raise DomainError("richardson_levels must be >= 0")

    def supports(self, order: int) -> bool:
        return self.stencil >= order + 1


def default_scheme(order: int) -> FDScheme:
    # order+3 points, rounded up to the next odd count.
    points = order + 3
    if points % 2 == 0:
        points += 1
    return FDScheme(stencil=points, h=0.05, richardson_levels=2)


def legendre_p(nu: float, z: float, max_terms: int = _SERIES_CAP) -> float:
    """Legendre function of the first kind P_nu(z), |nu| <= 4, z in (-0.9, 1].

    Integer nu terminates the series exactly (Legendre polynomials); the
    finite-difference machinery only ever samples |nu| <= 1.
    """
    if not abs(nu) <= 4.0:
        raise DomainError(f"legendre_p expects |nu| <= 4, got {nu!r}")
    if not _Z_FLOOR < z <= 1.0:
        raise DomainError(f"legendre_p expects z in ({_Z_FLOOR}, 1], got {z!r}")
    x = 0.5 * (1.0 - z)
    term = 1.0
    total = 1.0
    tiny_streak = 0
    for k in range(max_terms):
        term *= (k - nu) * (k + nu + 1.0) / ((k + 1.0) * (k + 1.0)) * x
        total += term
        if abs(term) <= 1e-17 * abs(total) + 1e-300:
            tiny_streak += 1
            if tiny_streak >= 2:
                return total
        else:
            tiny_streak = 0
    raise ConvergenceError(f"hypergeometric series for P_nu did not converge in {max_terms} terms")


@lru_cache(maxsize=None)
def _central_weights(points: int, order: int) -> tuple[float, ...]:
    """Weights w_i on offsets -m..m with sum_i w_i o_i^j = delta_{j,order} * order!.

    Solved exactly over the rationals, then rounded once to double.
    """
    m = points // 2
    offsets = list(range(-m, m + 1))
    n = len(offsets)
    aug = [
        [Fraction(o) ** j for o in offsets] + [Fraction(math.factorial(order)) if j == order else Fraction(0)]
        for j in range(n)
    ]
    for col in range(n):
        pivot = next(r for r in range(col, n) if aug[r][col] != 0)
        aug[col], aug[pivot] = aug[pivot], aug[col]
        inv = Fraction(1, 1) / aug[col][col]
        aug[col] = [v * inv for v in aug[col]]
        for r in range(n):
            if r != col and aug[r][col] != 0:
                factor = aug[r][col]
                aug[r] = [rv - factor * cv for rv, cv in zip(aug[r], aug[col])]
    return tuple(float(row[n]) for row in aug)


def _leading_error_order(points: int, order: int) -> int:
    # Symmetric stencils are exact one degree beyond the moment count when
    # parity permits, so the leading truncation order is always even.
    p = points - order
    return p if p % 2 == 0 else p + 1


def order_derivative_fd(
    n: int, z: float, scheme: FDScheme | None = None
) -> tuple[float, float]:
    """n-th derivative of P_nu(z) in nu at nu = 0, with an error estimate.

    Returns ``(value, abs_error_estimate)``.  n must be 1..4.
    """
    if not 1 <= n <= 4:
        raise DomainError(f"derivative order must be 1..4, got {n!r}")
    if scheme is None:
        scheme = default_scheme(n)
    if not scheme.supports(n):
        raise DomainError(f"stencil of {scheme.stencil} points cannot form derivative {n}")

    weights = _central_weights(scheme.stencil, n)
    m = scheme.stencil // 2

    def raw(h: float) -> float:
        acc = 0.0
        for i, w in enumerate(weights):
            if w == 0.0:
                continue
            acc += w * legendre_p((i - m) * h, z)
        return acc / h**n

    levels = scheme.richardson_levels
    base = [raw(scheme.h / 2.0**l) for l in range(max(levels, 1) + 1)]
    p0 = _leading_error_order(scheme.stencil, n)
    table = list(base)
    for j in range(1, levels + 1):
        factor = 2.0 ** (p0 + 2 * (j - 1))
        for i in range(len(table) - 1, j - 1, -1):
            table[i] = (factor * table[i] - table[i - 1]) / (factor - 1.0)
    if levels == 0:
        return base[0], abs(base[0] - base[1])
    return table[-1], abs(table[-1] - table[-2]) + 1e-15 * abs(table[-1])


def ode_residual(n: int, z: float, dz: float) -> float:
    """|d/dz[(1-z^2) dPn/dz] + n P_{n-1} + n(n-1) P_{n-2}| via differences in z.

    The left side is expanded to (1-z^2) Pn'' - 2z Pn' and both derivatives
    come from fourth-order five-point stencils, which keeps the roundoff
    floor well under the dz^2 level a nested first-difference would have.
    """
    if not 1 <= n <= 4:
        raise DomainError(f"derivative order must be 1..4, got {n!r}")
    if not dz > 0.0:
        raise DomainError(f"dz must be positive, got {dz!r}")
    if not (-1.0 < z - 2.0 * dz and z + 2.0 * dz <= 1.0):
        raise DomainError(f"z +/- 2dz must stay inside (-1, 1], got z={z!r}, dz={dz!r}")

    f_m2 = p_deriv(n, z - 2.0 * dz)
    f_m1 = p_deriv(n, z - dz)
    f_0 = p_deriv(n, z)
    f_p1 = p_deriv(n, z + dz)
    f_p2 = p_deriv(n, z + 2.0 * dz)
    first = (-f_p2 + 8.0 * f_p1 - 8.0 * f_m1 + f_m2) / (12.0 * dz)
    second = (-f_p2 + 16.0 * f_p1 - 30.0 * f_0 + 16.0 * f_m1 - f_m2) / (12.0 * dz * dz)
    lhs = (1.0 - z * z) * second - 2.0 * z * first
    rhs = -n * p_deriv(n - 1, z)
    if n >= 2:
        rhs -= n * (n - 1) * p_deriv(n - 2, z)
    return abs(lhs - rhs)
