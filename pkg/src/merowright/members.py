"""Deterministic random draws of class members for verification bundles."""

from __future__ import annotations

import numpy as np

from .gamma_kernel import WrightParams
from .membership import ClassParams, coefficient_budget, weighted_coefficient_sum
from .series import MeroFunction

__all__ = ["random_member"]

# Keeps rescaled draws strictly inside the budget despite rounding.
_SAFETY = 1.0 - 1e-12


def random_member(
    cp: ClassParams,
    wp: WrightParams,
    rng: np.random.Generator,
    max_terms: int = 8,
    fill: float | None = None,
) -> MeroFunction:
    """Nonnegative coefficient draw rescaled to a nonnegative margin.

    ``fill`` is the fraction of the coefficient budget consumed (drawn
    uniformly from [0.2, 1.0] when not given); fill = 1.0 places the draw
    on the boundary up to the rounding guard.
    """
    n = int(rng.integers(1, max_terms + 1))
    raw = rng.uniform(0.0, 1.0, n)
    if not raw.any():
        raw[0] = 1.0
    if fill is None:
        fill = float(rng.uniform(0.2, 1.0))
    total = weighted_coefficient_sum(tuple(raw), cp, wp)
    scale = fill * _SAFETY * coefficient_budget(cp) / total
    return MeroFunction(tuple(float(c * scale) for c in raw))
