"""Sampling verification of the analytic class condition and the theorems.

Everything here discretizes the punctured disk: concentric circles of
equally spaced angles, plus an optional ramp of points marching toward 1
along the positive real axis (where the membership ratio of a
nonnegative-coefficient function attains its supremum).  Checks never
throw on singular samples; a vanishing denominator becomes a +inf
observation, which simply fails the comparison, so sweeps always complete
and the resulting report is total.

The membership ratio of f under the kernel transform F is the modulus of

    (z F'(z)/F(z) + 1) / (z F'(z)/F(z) + (2 alpha - 1))

evaluated in cleared-denominator form.  A nonnegative-coefficient f keeps
this ratio below eta on the whole disk exactly when its coefficient margin
is nonnegative, with the boundary functions approaching eta as z -> 1
along the real axis; that equivalence is what the membership check
samples.
"""

from __future__ import annotations

import math
from dataclasses import dataclass, field

import numpy as np

from .errors import DomainError
from .gamma_kernel import WrightParams
from .membership import ClassParams, distortion_bounds, growth_bounds
from .radii import ConvexCondition, StarlikeCondition, condition_modulus
from .series import MeroFunction, operator_coefficients

__all__ = [
    "SamplingPlan",
    "WorstSample",
    "VerificationReport",
    "condition_ratio",
    "verify_membership_analytic",
    "verify_growth",
    "verify_distortion",
    "verify_radius",
]

RAMP_RADII = (0.99, 0.999, 0.9999)


@dataclass(frozen=True)
class SamplingPlan:
    """Circle radii, angle count, and the real-axis boundary ramp."""

    radii: tuple[float, ...] = (0.5, 0.9, 0.99, 0.999)
    angles: int = 720
    include_real_axis_ramp: bool = True

    def __post_init__(self):
        radii = tuple(float(r) for r in self.radii)
        object.__setattr__(self, "radii", radii)
        for r in radii:
            if not (math.isfinite(r) and 0.0 < r < 1.0):
                raise DomainError(f"plan radii must lie in (0, 1), got {r!r}")
        if int(self.angles) != self.angles or self.angles < 8:
            raise DomainError(f"plan needs an integer angle count >= 8, got {self.angles!r}")
        object.__setattr__(self, "angles", int(self.angles))

    def sample_points(self) -> np.ndarray:
        """All samples: circles in radius order, then the ramp points.

        The flat ordering (radius index, then angle index, then ramp) is
        the tie-break order for worst-sample reporting.
        """
        theta = 2.0 * np.pi * np.arange(self.angles) / self.angles
        ring = np.exp(1j * theta)
        parts = [r * ring for r in self.radii]
        if self.include_real_axis_ramp:
            parts.append(np.array([complex(r) for r in RAMP_RADII]))
        return np.concatenate(parts)

    def to_dict(self) -> dict:
        return {
            "radii": list(self.radii),
            "angles": self.angles,
            "include_real_axis_ramp": self.include_real_axis_ramp,
            "ramp_radii": list(RAMP_RADII) if self.include_real_axis_ramp else [],
        }


@dataclass(frozen=True)
class WorstSample:
    z: complex
    observed: float
    bound: float

    def to_dict(self) -> dict:
        finite = math.isfinite(self.observed)
        return {
            "z": [self.z.real, self.z.imag],
            "observed": self.observed if finite else None,
            "singular": not finite,
            "bound": self.bound,
        }


@dataclass(frozen=True)
class VerificationReport:
    """Machine-checkable outcome of one sampled check."""

    check_name: str
    passed: bool
    margin: float
    worst: WorstSample | None
    plan: SamplingPlan
    params: dict = field(default_factory=dict)

    def to_dict(self) -> dict:
        return {
            "check_name": self.check_name,
            "pass": self.passed,
            "margin": self.margin if math.isfinite(self.margin) else None,
            "worst_sample": self.worst.to_dict() if self.worst else None,
            "plan": self.plan.to_dict(),
            "params": self.params,
        }


def _echo(f: MeroFunction, cp: ClassParams, wp: WrightParams) -> dict:
    return {
        "alpha": cp.alpha,
        "eta": cp.eta,
        "wright_upper": [list(p) for p in wp.upper],
        "wright_lower": [list(p) for p in wp.lower],
        "coeffs": list(f.coeffs),
    }


def _ratio_terms(f: MeroFunction, cp: ClassParams, wp: WrightParams):
    # Transform coefficients once; the ratio needs sigma_k * a_k only.
    return operator_coefficients(wp, f.coeffs)


def _ratio_array(
    f: MeroFunction, cp: ClassParams, wp: WrightParams, zs: np.ndarray
) -> np.ndarray:
    """Membership ratio at an array of points (cleared-denominator form).

    Numerator and denominator are multiplied through by z, turning them
    into power series in z^(k+1) with the constant 2(alpha - 1) in the
    denominator; the modulus is unchanged and the pole disappears.
    """
    zs = np.asarray(zs, dtype=complex)
    coeffs = _ratio_terms(f, cp, wp)
    num = np.zeros_like(zs)
    den = np.full_like(zs, 2.0 * cp.alpha - 2.0)
    zp = zs.copy()
    for k, c in enumerate(coeffs, start=1):
        zp = zp * zs  # z^(k+1)
        num += ((k + 1) * c) * zp
        den += ((k + 2.0 * cp.alpha - 1.0) * c) * zp
    n = np.abs(num)
    d = np.abs(den)
    with np.errstate(divide="ignore", invalid="ignore"):
        return np.where(d == 0.0, np.inf, n / np.where(d == 0.0, 1.0, d))


def condition_ratio(
    f: MeroFunction, cp: ClassParams, wp: WrightParams, z: complex
) -> float:
    """Membership ratio at a single point of the punctured disk.

    Returns +inf at a singular sample (zero denominator) instead of
    raising, so sweeps stay total.
    """
    z = complex(z)
    if z == 0 or abs(z) >= 1.0:
        raise DomainError(f"sample must satisfy 0 < |z| < 1, got {z!r}")
    return float(_ratio_array(f, cp, wp, np.array([z]))[0])


def _worst(zs: np.ndarray, values: np.ndarray, bound: float, largest: bool) -> WorstSample:
    # argmax/argmin take the first extremum, which by construction order is
    # the (radius, angle) lexicographic tie-break.
    idx = int(np.argmax(values) if largest else np.argmin(values))
    return WorstSample(complex(zs[idx]), float(values[idx]), bound)


def verify_membership_analytic(
    f: MeroFunction, cp: ClassParams, wp: WrightParams, plan: SamplingPlan
) -> VerificationReport:
    """Pass iff the membership ratio stays strictly below eta on all samples."""
    zs = plan.sample_points()
    ratios = _ratio_array(f, cp, wp, zs)
    worst = _worst(zs, ratios, cp.eta, largest=True)
    margin = cp.eta - worst.observed
    return VerificationReport(
        "membership_analytic",
        bool(worst.observed < cp.eta),
        margin,
        worst,
        plan,
        _echo(f, cp, wp),
    )


def _eval_abs(f: MeroFunction, zs: np.ndarray, derivative: bool) -> np.ndarray:
    zs = np.asarray(zs, dtype=complex)
    if derivative:
        total = -1.0 / (zs * zs)
        zp = np.ones_like(zs)
        for k, a in enumerate(f.coeffs, start=1):
            total = total + (k * a) * zp
            zp = zp * zs
    else:
        total = 1.0 / zs
        zp = np.ones_like(zs)
        for a in f.coeffs:
            zp = zp * zs
            total = total + a * zp
    return np.abs(total)


def _verify_envelope(
    f: MeroFunction,
    cp: ClassParams,
    wp: WrightParams,
    plan: SamplingPlan,
    derivative: bool,
    slack: float,
) -> VerificationReport:
    zs = plan.sample_points()
    rs = np.abs(zs)
    values = _eval_abs(f, zs, derivative)
    bounds_fn = distortion_bounds if derivative else growth_bounds
    lower = np.empty_like(rs)
    upper = np.empty_like(rs)
    for i, r in enumerate(rs):
        lo, hi = bounds_fn(cp, wp, float(r))
        lower[i] = max(lo, 0.0)  # a negative lower envelope is vacuous
        upper[i] = hi
    margins = np.minimum(upper + slack - values, values - lower + slack)
    idx = int(np.argmin(margins))
    margin = float(margins[idx])
    upper_side = (upper[idx] + slack - values[idx]) <= (values[idx] - lower[idx] + slack)
    worst = WorstSample(
        complex(zs[idx]), float(values[idx]), float(upper[idx] if upper_side else lower[idx])
    )
    name = "distortion_envelope" if derivative else "growth_envelope"
    return VerificationReport(name, bool(margin >= 0.0), margin, worst, plan, _echo(f, cp, wp))


def verify_growth(
    f: MeroFunction,
    cp: ClassParams,
    wp: WrightParams,
    plan: SamplingPlan,
    slack: float = 1e-12,
) -> VerificationReport:
    """Pass iff |f| stays inside the growth envelope (with slack) on all samples."""
    return _verify_envelope(f, cp, wp, plan, derivative=False, slack=slack)


def verify_distortion(
    f: MeroFunction,
    cp: ClassParams,
    wp: WrightParams,
    plan: SamplingPlan,
    slack: float = 1e-12,
) -> VerificationReport:
    """Pass iff |f'| stays inside the distortion envelope (with slack) on all samples."""
    return _verify_envelope(f, cp, wp, plan, derivative=True, slack=slack)


def verify_radius(
    f: MeroFunction,
    condition: StarlikeCondition | ConvexCondition,
    claimed_radius: float,
    plan: SamplingPlan,
) -> VerificationReport:
    """Check the geometric condition on circles at 0.5x and 0.99x the claim."""
    claimed = float(claimed_radius)
    if not (math.isfinite(claimed) and 0.0 < claimed <= 1.0):
        raise DomainError(f"claimed radius must lie in (0, 1], got {claimed_radius!r}")
    theta = 2.0 * np.pi * np.arange(plan.angles) / plan.angles
    ring = np.exp(1j * theta)
    zs = np.concatenate([min(s * claimed, 1.0 - 1e-12) * ring for s in (0.5, 0.99)])
    values = condition_modulus(f, condition, zs)
    worst = _worst(zs, values, condition.threshold, largest=True)
    margin = condition.threshold - worst.observed
    kind = "starlike" if isinstance(condition, StarlikeCondition) else "convex"
    params = {
        "condition": kind,
        "order": condition.order,
        "claimed_radius": claimed,
        "coeffs": list(f.coeffs),
    }
    return VerificationReport(
        f"{kind}_radius",
        bool(worst.observed <= condition.threshold),
        margin,
        worst,
        plan,
        params,
    )
