"""Sharp coefficient membership test, extremal functions, and envelopes.

The class is parametrized by a pair (alpha, eta) and an operator kernel.
A nonnegative-coefficient function belongs to it exactly when its weighted
coefficient sum stays within a fixed budget:

    sum_k sigma_k * [k(1+eta) + (1 + eta(2 alpha - 1))] * a_k  <=  2 eta (1-alpha).

``membership_margin`` returns budget minus the weighted sum, so membership
is margin >= 0 and the single-term functions saturating the budget
(``extremal_function``) sit exactly on the boundary.  Growth and
distortion envelopes on circles |z| = r follow from the k = 1 weight.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from typing import Sequence

from .errors import ClassPreconditionError, DomainError
from .gamma_kernel import WrightParams, sigma_k
from .series import MeroFunction

__all__ = [
    "ClassParams",
    "coefficient_weight",
    "coefficient_budget",
    "membership_margin",
    "coefficient_bound",
    "extremal_function",
    "envelope_amplitude",
    "growth_bounds",
    "distortion_bounds",
    "growth_hypothesis_ok",
    "distortion_hypothesis_ok",
]


@dataclass(frozen=True)
class ClassParams:
    """Class parameters: 0 < alpha < 1 and 0 < eta <= 1."""

    alpha: float
    eta: float

    def __post_init__(self):
        alpha = float(self.alpha)
        eta = float(self.eta)
        object.__setattr__(self, "alpha", alpha)
        object.__setattr__(self, "eta", eta)
        if not (math.isfinite(alpha) and 0.0 < alpha < 1.0):
            raise DomainError(f"alpha must lie in (0, 1), got {alpha!r}")
        if not (math.isfinite(eta) and 0.0 < eta <= 1.0):
            raise DomainError(f"eta must lie in (0, 1], got {eta!r}")


def order_bracket(cp: ClassParams, k: int) -> float:
    """The k-dependent factor k(1+eta) + (1 + eta(2 alpha - 1))."""
    return k * (1.0 + cp.eta) + (1.0 + cp.eta * (2.0 * cp.alpha - 1.0))


def coefficient_weight(cp: ClassParams, wp: WrightParams, k: int) -> float:
    """Weight multiplying a_k in the membership inequality; strictly positive."""
    return sigma_k(wp, k) * order_bracket(cp, k)


def coefficient_budget(cp: ClassParams) -> float:
    """Right-hand side of the membership inequality, 2 eta (1 - alpha)."""
    return 2.0 * cp.eta * (1.0 - cp.alpha)


def weighted_coefficient_sum(
    coeffs: Sequence[float], cp: ClassParams, wp: WrightParams
) -> float:
    """sum_k coefficient_weight(k) * coeffs[k-1], accumulated in ascending k."""
    total = 0.0
    for k, a in enumerate(coeffs, start=1):
        total += coefficient_weight(cp, wp, k) * a
    return total


def membership_margin(f: MeroFunction, cp: ClassParams, wp: WrightParams) -> float:
    """Budget minus weighted coefficient sum; f is a member iff margin >= 0.

    Signed coefficients are rejected: the equivalence between this test and
    the analytic definition of the class holds on the nonnegative cone only.
    """
    if not f.nonnegative:
        raise ClassPreconditionError(
            "membership test is defined for nonnegative coefficients only"
        )
    return coefficient_budget(cp) - weighted_coefficient_sum(f.coeffs, cp, wp)


def coefficient_bound(cp: ClassParams, wp: WrightParams, k: int) -> float:
    """Largest admissible single coefficient at index k (sharp)."""
    return coefficient_budget(cp) / coefficient_weight(cp, wp, k)


def extremal_function(cp: ClassParams, wp: WrightParams, k: int) -> MeroFunction:
    """1/z + coefficient_bound(k) * z^k, the boundary witness at index k."""
    return MeroFunction.single_term(k, coefficient_bound(cp, wp, k))


def envelope_amplitude(cp: ClassParams, wp: WrightParams) -> float:
    """eta (1-alpha) / (sigma_1 (1 + alpha eta)); equals coefficient_bound(1)."""
    return cp.eta * (1.0 - cp.alpha) / (sigma_k(wp, 1) * (1.0 + cp.alpha * cp.eta))


def growth_hypothesis_ok(cp: ClassParams, wp: WrightParams, k_upto: int) -> bool:
    """Whether the growth envelope's weight comparison holds on 1..k_upto.

    The envelope bounds sum a_k through the k = 1 budget, which needs the
    weight at every k on the support to stay at or above the k = 1 weight.
    Kernels with fast-decaying multipliers fail this at finite k.
    """
    w1 = coefficient_weight(cp, wp, 1)
    return all(coefficient_weight(cp, wp, k) >= w1 for k in range(2, k_upto + 1))


def distortion_hypothesis_ok(cp: ClassParams, wp: WrightParams, k_upto: int) -> bool:
    """Whether the distortion envelope's weight comparison holds on 1..k_upto.

    Bounds sum k a_k through the k = 1 budget, so weights must grow at
    least linearly in k on the support.
    """
    w1 = coefficient_weight(cp, wp, 1)
    return all(coefficient_weight(cp, wp, k) >= k * w1 for k in range(2, k_upto + 1))


def _check_radius(r: float) -> float:
    r = float(r)
    if not (math.isfinite(r) and 0.0 < r < 1.0):
        raise DomainError(f"radius must lie in (0, 1), got {r!r}")
    return r


def growth_bounds(cp: ClassParams, wp: WrightParams, r: float) -> tuple[float, float]:
    """Two-sided envelope for |f(z)| on |z| = r: (1/r - rB, 1/r + rB).

    The lower value is reported as-is; it can be negative when the
    amplitude B is large, in which case it is vacuous rather than wrong.
    """
    r = _check_radius(r)
    b = envelope_amplitude(cp, wp)
    return (1.0 / r - r * b, 1.0 / r + r * b)


def distortion_bounds(cp: ClassParams, wp: WrightParams, r: float) -> tuple[float, float]:
    """Two-sided envelope for |f'(z)| on |z| = r: (1/r^2 - B, 1/r^2 + B)."""
    r = _check_radius(r)
    b = envelope_amplitude(cp, wp)
    rr = r * r
    return (1.0 / rr - b, 1.0 / rr + b)
