"""Radii of starlikeness and convexity, with a sampling bisection oracle.

The per-k candidate radii come from solving the single-term saturated
coefficient inequality against the geometric condition on circles; the
class radius is their min over k up to a truncation (candidates above 1
are clamped first).  ``numeric_radius`` is an independent check: it
bisects on r and measures the condition directly on sampled circles.

The convexity candidate carries the factor k that the classical printed
form drops; both values are tabulated so the discrepancy stays visible,
and the bisection oracle on the k = 2 boundary witness discriminates them
(see the tests).
"""

from __future__ import annotations

import math
from dataclasses import dataclass

import numpy as np

from .errors import DegenerateInputError, DomainError
from .gamma_kernel import WrightParams, sigma_k
from .membership import ClassParams, order_bracket
from .series import MeroFunction

__all__ = [
    "StarlikeCondition",
    "ConvexCondition",
    "RadiusCandidate",
    "RadiusResult",
    "condition_modulus",
    "numeric_radius",
    "starlike_radius",
    "convex_radius",
]


def _check_order_value(order: float, name: str) -> float:
    order = float(order)
    if not (math.isfinite(order) and 0.0 <= order < 1.0):
        raise DomainError(f"{name} must lie in [0, 1), got {order!r}")
    return order


@dataclass(frozen=True)
class StarlikeCondition:
    """|z f'(z)/f(z) + 1| <= 1 - order on the circle."""

    order: float = 0.0

    def __post_init__(self):
        object.__setattr__(self, "order", _check_order_value(self.order, "starlike order"))

    @property
    def threshold(self) -> float:
        return 1.0 - self.order


@dataclass(frozen=True)
class ConvexCondition:
    """|z f''(z)/f'(z) + 2| <= 1 - order on the circle."""

    order: float = 0.0

    def __post_init__(self):
        object.__setattr__(self, "order", _check_order_value(self.order, "convex order"))

    @property
    def threshold(self) -> float:
        return 1.0 - self.order


def condition_modulus(
    f: MeroFunction, condition: StarlikeCondition | ConvexCondition, zs: np.ndarray
) -> np.ndarray:
    """The condition's left-hand modulus at an array of points.

    Both conditions are evaluated in cleared-denominator form (numerator
    and denominator multiplied by z or z^2), which removes the pole from
    the arithmetic.  A vanishing denominator (a zero of f or f') yields
    +inf: such samples count as violations.
    """
    zs = np.asarray(zs, dtype=complex)
    num = np.zeros_like(zs)
    starlike = isinstance(condition, StarlikeCondition)
    if starlike:
        den = np.ones_like(zs)
    else:
        den = np.full_like(zs, -1.0 + 0.0j)
    zp = zs.copy()
    for k, a in enumerate(f.coeffs, start=1):
        zp = zp * zs  # z^(k+1)
        if starlike:
            num += ((k + 1) * a) * zp
            den += a * zp
        else:
            num += (k * (k + 1) * a) * zp
            den += (k * a) * zp
    n = np.abs(num)
    d = np.abs(den)
    with np.errstate(divide="ignore", invalid="ignore"):
        out = np.where(d == 0.0, np.inf, n / np.where(d == 0.0, 1.0, d))
    return out


def _circle(r: float, angles: int) -> np.ndarray:
    theta = 2.0 * np.pi * np.arange(angles) / angles
    return r * np.exp(1j * theta)


def numeric_radius(
    f: MeroFunction,
    condition: StarlikeCondition | ConvexCondition,
    tol: float = 1e-6,
    angles: int = 720,
) -> float:
    """Largest sampled radius on which the condition holds, via bisection.

    At each probe radius the condition modulus is maximized over equally
    spaced angles.  Returns 1.0 when the condition survives arbitrarily
    close to the boundary, and raises DegenerateInputError when it already
    fails next to the pole.
    """
    tol = float(tol)
    if not (math.isfinite(tol) and tol > 0.0):
        raise DomainError(f"tol must be > 0, got {tol!r}")
    if int(angles) != angles or angles < 8:
        raise DomainError(f"angles must be an integer >= 8, got {angles!r}")
    angles = int(angles)
    threshold = condition.threshold

    def holds(r: float) -> bool:
        m = condition_modulus(f, condition, _circle(r, angles))
        return float(np.max(m)) <= threshold

    lo = min(tol, 1e-6)
    if not holds(lo):
        raise DegenerateInputError(
            f"condition already fails at r = {lo:.3g}; no radius to bracket"
        )
    hi = 1.0 - 1e-9
    if holds(hi):
        return 1.0
    while hi - lo > tol:
        mid = 0.5 * (lo + hi)
        if holds(mid):
            lo = mid
        else:
            hi = mid
    return lo


@dataclass(frozen=True)
class RadiusCandidate:
    """Per-k candidate radius (clamped at 1) with its unclamped value.

    ``without_k_factor`` is populated for the convexity table only: it is
    the value the k-less printed form would give, kept for comparison.
    """

    k: int
    candidate: float
    raw: float
    without_k_factor: float | None = None


@dataclass(frozen=True)
class RadiusResult:
    """min-over-k radius with the table that produced it."""

    condition: str
    order: float
    radius: float
    attained_k: int
    k_max: int
    per_k: tuple[RadiusCandidate, ...]
    tail_trend: str  # trend of the last <= 5 raw candidates

    def csv_rows(self) -> list[tuple]:
        return [(self.condition, c.k, c.candidate) for c in self.per_k]


def _tail_trend(raw_values: list[float]) -> str:
    tail = raw_values[-5:]
    if len(tail) < 2:
        return "flat"
    if all(tail[i + 1] < tail[i] for i in range(len(tail) - 1)):
        return "decreasing"
    if all(tail[i + 1] > tail[i] for i in range(len(tail) - 1)):
        return "increasing"
    return "mixed"


def _check_k_max(k_max: int) -> int:
    if int(k_max) != k_max or k_max < 1:
        raise DomainError(f"k_max must be an integer >= 1, got {k_max!r}")
    return int(k_max)


def starlike_radius(
    cp: ClassParams, wp: WrightParams, delta: float, k_max: int
) -> RadiusResult:
    """Radius of starlikeness of the given order for the whole class.

    Per-k candidate:
    { sigma_k * bracket(k) * (1-delta) / (2 eta (k+2-delta)(1-alpha)) }^(1/(k+1)).
    """
    delta = _check_order_value(delta, "delta")
    k_max = _check_k_max(k_max)
    entries = []
    raws = []
    for k in range(1, k_max + 1):
        body = (
            sigma_k(wp, k)
            * order_bracket(cp, k)
            * (1.0 - delta)
            / (2.0 * cp.eta * (k + 2.0 - delta) * (1.0 - cp.alpha))
        )
        raw = body ** (1.0 / (k + 1.0))
        raws.append(raw)
        entries.append(RadiusCandidate(k, min(raw, 1.0), raw))
    radius = min(e.candidate for e in entries)
    attained = next(e.k for e in entries if e.candidate == radius)
    return RadiusResult(
        "starlike", delta, radius, attained, k_max, tuple(entries), _tail_trend(raws)
    )


def convex_radius(
    cp: ClassParams, wp: WrightParams, kappa: float, k_max: int
) -> RadiusResult:
    """Radius of convexity of the given order for the whole class.

    Per-k candidate:
    { sigma_k * bracket(k) * (1-kappa) / (2 eta k (k+2-kappa)(1-alpha)) }^(1/(k+1)).
    The factor k in the denominator comes from differentiating the series
    (the tail of z f'' + 2 f' carries k(k+1) a_k, not (k+1) a_k); the
    k-less variant is tabulated alongside for comparison.
    """
    kappa = _check_order_value(kappa, "kappa")
    k_max = _check_k_max(k_max)
    entries = []
    raws = []
    for k in range(1, k_max + 1):
        core = (
            sigma_k(wp, k)
            * order_bracket(cp, k)
            * (1.0 - kappa)
            / (2.0 * cp.eta * (k + 2.0 - kappa) * (1.0 - cp.alpha))
        )
        raw = (core / k) ** (1.0 / (k + 1.0))
        legacy = core ** (1.0 / (k + 1.0))
        raws.append(raw)
        entries.append(RadiusCandidate(k, min(raw, 1.0), raw, legacy))
    radius = min(e.candidate for e in entries)
    attained = next(e.k for e in entries if e.candidate == radius)
    return RadiusResult(
        "convex", kappa, radius, attained, k_max, tuple(entries), _tail_trend(raws)
    )
