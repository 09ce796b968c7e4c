"""Shared draw helpers for randomized checks (all seeded by the caller)."""

from __future__ import annotations

import numpy as np

from merowright import (
    ClassParams,
    WrightParams,
    distortion_hypothesis_ok,
    growth_hypothesis_ok,
)


def rand_class_params(rng: np.random.Generator) -> ClassParams:
    return ClassParams(float(rng.uniform(0.05, 0.95)), float(rng.uniform(0.1, 1.0)))


def rand_unit_kernel(rng: np.random.Generator, max_len: int = 3) -> WrightParams:
    """Random unit-weight kernel honouring the convergence condition."""
    p = int(rng.integers(1, max_len + 1))
    ell = int(rng.integers(1, p + 2))  # ell <= p + 1
    upper = [float(rng.uniform(0.5, 6.0)) for _ in range(ell)]
    lower = [float(rng.uniform(0.5, 6.0)) for _ in range(p)]
    return WrightParams.hypergeometric(upper, lower)


def rand_balanced_kernel(rng: np.random.Generator, max_len: int = 3) -> WrightParams:
    """Unit-weight kernel with ell in {p, p+1}.

    A surplus of lower entries drives the multiplier below the double
    range near k ~ 100 (a GammaOverflowError by contract); balanced draws
    keep deep-k comparisons representable.
    """
    p = int(rng.integers(1, max_len + 1))
    ell = p + int(rng.integers(0, 2))
    upper = [float(rng.uniform(0.5, 6.0)) for _ in range(ell)]
    lower = [float(rng.uniform(0.5, 6.0)) for _ in range(p)]
    return WrightParams.hypergeometric(upper, lower)


def rand_matched_kernel(rng: np.random.Generator) -> WrightParams:
    """Kernel whose upper and lower lists coincide (multiplier 1/(k+1)!)."""
    n = int(rng.integers(1, 4))
    vals = [float(rng.uniform(0.5, 6.0)) for _ in range(n)]
    return WrightParams.hypergeometric(vals, vals)


def envelope_safe_setup(
    rng: np.random.Generator, k_upto: int, max_tries: int = 200
) -> tuple[ClassParams, WrightParams]:
    """Class/kernel pair whose weights satisfy both envelope hypotheses.

    Draws from the sigma-increasing family (one more upper than lower
    entry) and keeps only pairs where the weight comparisons backing the
    growth and distortion envelopes verify numerically on 1..k_upto.
    """
    for _ in range(max_tries):
        cp = rand_class_params(rng)
        a = float(rng.uniform(2.5, 5.0))
        b = float(rng.uniform(1.0, 3.0))
        c = float(rng.uniform(0.8, 2.5))
        wp = WrightParams.hypergeometric([a, b], [c])
        if growth_hypothesis_ok(cp, wp, k_upto) and distortion_hypothesis_ok(
            cp, wp, k_upto
        ):
            return cp, wp
    raise AssertionError("no envelope-safe parameter set found; widen the family")
