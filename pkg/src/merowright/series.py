"""Truncated meromorphic series with principal part 1/z.

A function is stored as its tail coefficients (a_1, ..., a_K); the 1/z
term is implicit and always present.  All sums are finite and evaluated
in ascending order of k, which keeps results deterministic and makes the
conjugation symmetry of real-coefficient series exact.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from typing import Sequence

from .errors import ClassPreconditionError, DomainError, PoleError
from .gamma_kernel import WrightParams, sigma_k

__all__ = [
    "MeroFunction",
    "BoundedMultiplier",
    "evaluate",
    "evaluate_d1",
    "evaluate_d2",
    "hadamard",
    "apply_operator",
]


@dataclass(frozen=True)
class MeroFunction:
    """Coefficients a_1..a_K of f(z) = 1/z + sum a_k z^k (K = 0 is 1/z)."""

    coeffs: tuple[float, ...] = ()

    def __post_init__(self):
        coeffs = tuple(float(c) for c in self.coeffs)
        for c in coeffs:
            if not math.isfinite(c):
                raise DomainError(f"coefficients must be finite, got {c!r}")
        object.__setattr__(self, "coeffs", coeffs)

    @classmethod
    def principal_part(cls) -> "MeroFunction":
        return cls(())

    @classmethod
    def single_term(cls, k: int, value: float) -> "MeroFunction":
        """1/z + value * z^k."""
        if int(k) != k or k < 1:
            raise DomainError(f"term index must be an integer >= 1, got {k!r}")
        return cls((0.0,) * (int(k) - 1) + (float(value),))

    @property
    def nonnegative(self) -> bool:
        """Whether every tail coefficient is >= 0."""
        return all(c >= 0.0 for c in self.coeffs)

    def require_nonnegative(self) -> None:
        if not self.nonnegative:
            raise ClassPreconditionError(
                "operation requires nonnegative tail coefficients"
            )


@dataclass(frozen=True)
class BoundedMultiplier:
    """Coefficients b_1..b_K with |b_k| <= 1, used as a termwise multiplier."""

    coeffs: tuple[float, ...] = ()

    def __post_init__(self):
        coeffs = tuple(float(c) for c in self.coeffs)
        for c in coeffs:
            if not math.isfinite(c) or abs(c) > 1.0:
                raise DomainError(f"multiplier coefficients need |b| <= 1, got {c!r}")
        object.__setattr__(self, "coeffs", coeffs)


def _check_point(z: complex) -> complex:
    z = complex(z)
    if z == 0:
        raise PoleError("z = 0 is the pole of the series")
    if abs(z) >= 1.0:
        raise DomainError(f"points must lie in the punctured unit disk, got |z| = {abs(z):.6g}")
    return z


def evaluate(f: MeroFunction, z: complex) -> complex:
    """f(z) = 1/z + sum a_k z^k on 0 < |z| < 1."""
    z = _check_point(z)
    total = 1.0 / z
    zp = complex(1.0)
    for a in f.coeffs:
        zp *= z
        total += a * zp
    return total


def evaluate_d1(f: MeroFunction, z: complex) -> complex:
    """f'(z) = -1/z^2 + sum k a_k z^(k-1)."""
    z = _check_point(z)
    total = -1.0 / (z * z)
    zp = complex(1.0)
    for k, a in enumerate(f.coeffs, start=1):
        total += (k * a) * zp
        zp *= z
    return total


def evaluate_d2(f: MeroFunction, z: complex) -> complex:
    """f''(z) = 2/z^3 + sum k(k-1) a_k z^(k-2)."""
    z = _check_point(z)
    total = 2.0 / (z * z * z)
    zp = complex(1.0)
    for k, a in enumerate(f.coeffs[1:], start=2):
        total += (k * (k - 1) * a) * zp
        zp *= z
    return total


def hadamard(f: MeroFunction, g: MeroFunction) -> MeroFunction:
    """Termwise coefficient product; principal parts combine back to 1/z."""
    n = min(len(f.coeffs), len(g.coeffs))
    return MeroFunction(tuple(a * b for a, b in zip(f.coeffs[:n], g.coeffs[:n])))


def apply_operator(params: WrightParams, f: MeroFunction) -> MeroFunction:
    """Rescale coefficient k by the operator multiplier sigma_k."""
    return MeroFunction(
        tuple(sigma_k(params, k) * a for k, a in enumerate(f.coeffs, start=1))
    )


def operator_coefficients(params: WrightParams, coeffs: Sequence[float]) -> tuple[float, ...]:
    """sigma_k * a_k for a raw coefficient sequence (no sign restriction)."""
    return tuple(sigma_k(params, k) * a for k, a in enumerate(coeffs, start=1))
