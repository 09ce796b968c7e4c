"""Closure of the class under termwise products and quadratic means.

Convolving two members (termwise coefficient product) or forming the
quadratic-mean combination lands in a class of a different order.  The
per-k boundary order is the unique order at which the pair of single-k
boundary witnesses sits exactly on the new class boundary; the tables
below report it for every k together with the sign of its denominator,
since kernels with fast-decaying multipliers push the denominator negative
at finite k and no uniform order exists there.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

from .errors import DomainError, NotAMemberError
from .gamma_kernel import WrightParams, sigma_k
from .membership import (
    ClassParams,
    coefficient_budget,
    membership_margin,
    order_bracket,
    weighted_coefficient_sum,
)
from .series import BoundedMultiplier, MeroFunction

__all__ = [
    "OrderEntry",
    "ClosureOrder",
    "convolution_order",
    "quadratic_combination",
    "quadratic_mean_order",
    "bounded_multiplier_convolve",
]


@dataclass(frozen=True)
class OrderEntry:
    """Boundary order candidate at a single k."""

    k: int
    value: float
    denominator: float
    denominator_positive: bool
    in_range: bool  # 0 < value <= 1, so the value is a usable class order


@dataclass(frozen=True)
class ClosureOrder:
    """Per-k boundary orders and, when defined, their aggregate.

    The aggregate is the max over k <= k_max and is only defined when every
    per-k denominator is strictly positive; otherwise ``aggregate`` is None
    and ``first_invalid_k`` points at the earliest failure.
    """

    kind: str
    per_k: tuple[OrderEntry, ...]
    aggregate: float | None
    first_invalid_k: int | None
    k_max: int

    @property
    def defined(self) -> bool:
        return self.aggregate is not None

    @property
    def aggregate_in_range(self) -> bool:
        return self.aggregate is not None and 0.0 < self.aggregate <= 1.0


def _check_k_max(k_max: int) -> int:
    if int(k_max) != k_max or k_max < 1:
        raise DomainError(f"k_max must be an integer >= 1, got {k_max!r}")
    return int(k_max)


def _order_table(
    cp: ClassParams, wp: WrightParams, k_max: int, kind: str, scale: float
) -> ClosureOrder:
    # Per-k order: scale*eta^2*(1-alpha)*(k+1) / (sigma_k*bracket^2 -
    # scale*eta^2*(1-alpha)*(k+2alpha-1)); scale is 2 for convolution and 4
    # for the quadratic mean.
    k_max = _check_k_max(k_max)
    base = scale * cp.eta * cp.eta * (1.0 - cp.alpha)
    entries = []
    first_invalid = None
    for k in range(1, k_max + 1):
        bracket = order_bracket(cp, k)
        den = sigma_k(wp, k) * bracket * bracket - base * (k + 2.0 * cp.alpha - 1.0)
        value = math.inf if den == 0.0 else base * (k + 1.0) / den
        positive = den > 0.0
        entries.append(
            OrderEntry(k, value, den, positive, positive and 0.0 < value <= 1.0)
        )
        if not positive and first_invalid is None:
            first_invalid = k
    aggregate = None
    if first_invalid is None:
        aggregate = max(e.value for e in entries)
    return ClosureOrder(kind, tuple(entries), aggregate, first_invalid, k_max)


def convolution_order(cp: ClassParams, wp: WrightParams, k_max: int) -> ClosureOrder:
    """Orders guaranteed for termwise products of two members."""
    return _order_table(cp, wp, k_max, "convolution", 2.0)


def quadratic_mean_order(cp: ClassParams, wp: WrightParams, k_max: int) -> ClosureOrder:
    """Orders guaranteed for the quadratic-mean combination of two members."""
    return _order_table(cp, wp, k_max, "quadratic_mean", 4.0)


def boundary_pair_margin(
    cp: ClassParams, wp: WrightParams, k: int, kind: str
) -> float:
    """Margin of the single-k witness pair at the per-k boundary order.

    For ``convolution`` the witness is the termwise square of the k-th
    boundary function; for ``quadratic_mean`` it is twice its square.  The
    margin is evaluated by raw arithmetic at the per-k order (which may
    leave (0, 1] for fast-decaying kernels) and is zero in exact algebra,
    making this the defining identity of the order formulas.
    """
    if kind == "convolution":
        scale = 2.0
    elif kind == "quadratic_mean":
        scale = 4.0
    else:
        raise DomainError(f"unknown order kind {kind!r}")
    sig = sigma_k(wp, k)
    bracket = order_bracket(cp, k)
    base = scale * cp.eta * cp.eta * (1.0 - cp.alpha)
    den = sig * bracket * bracket - base * (k + 2.0 * cp.alpha - 1.0)
    if den == 0.0:
        raise DomainError(f"boundary order undefined at k={k} (zero denominator)")
    order = base * (k + 1.0) / den
    a = coefficient_budget(cp) / (sig * bracket)
    coeff = a * a if kind == "convolution" else 2.0 * (a * a)
    bracket_at_order = k * (1.0 + order) + (1.0 + order * (2.0 * cp.alpha - 1.0))
    return 2.0 * order * (1.0 - cp.alpha) - sig * bracket_at_order * coeff


def quadratic_combination(f1: MeroFunction, f2: MeroFunction) -> MeroFunction:
    """Coefficientwise a_{k,1}^2 + a_{k,2}^2; requires nonnegative inputs."""
    f1.require_nonnegative()
    f2.require_nonnegative()
    n = max(len(f1.coeffs), len(f2.coeffs))
    a = f1.coeffs + (0.0,) * (n - len(f1.coeffs))
    b = f2.coeffs + (0.0,) * (n - len(f2.coeffs))
    return MeroFunction(tuple(x * x + y * y for x, y in zip(a, b)))


def bounded_multiplier_convolve(
    f: MeroFunction, g: BoundedMultiplier, cp: ClassParams, wp: WrightParams
) -> tuple[MeroFunction, float]:
    """Termwise product of a member with a bounded multiplier.

    Returns the (possibly signed) product function together with its
    membership margin computed on absolute coefficients.  Since every
    |a_k b_k| <= a_k and the weights are positive, the returned margin
    never falls below the margin of f itself.
    """
    margin_f = membership_margin(f, cp, wp)
    if margin_f < 0.0:
        raise NotAMemberError(
            f"multiplier convolution requires a member, margin = {margin_f:.6g}"
        )
    n = min(len(f.coeffs), len(g.coeffs))
    product = MeroFunction(
        tuple(a * b for a, b in zip(f.coeffs[:n], g.coeffs[:n]))
    )
    abs_coeffs = tuple(abs(c) for c in product.coeffs)
    margin = coefficient_budget(cp) - weighted_coefficient_sum(abs_coeffs, cp, wp)
    return product, margin
