"""Closure orders: arithmetic oracles, boundary-pair identities, monotone margins."""

import math
from fractions import Fraction

import numpy as np
import pytest

from merowright import (
    BoundedMultiplier,
    ClassParams,
    ClassPreconditionError,
    DomainError,
    MeroFunction,
    NotAMemberError,
    WrightParams,
    bounded_multiplier_convolve,
    boundary_pair_margin,
    coefficient_budget,
    convolution_order,
    extremal_function,
    hadamard,
    membership_margin,
    quadratic_combination,
    quadratic_mean_order,
    random_member,
)
from conftest import rand_class_params, rand_unit_kernel

UNIT = WrightParams.hypergeometric([1.0], [1.0])
K51 = WrightParams.hypergeometric([5.0], [1.0])
CP = ClassParams(0.5, 1.0)


def order_exact(sigma: Fraction, k: int, scale: int) -> Fraction:
    """Exact per-k order for alpha=1/2, eta=1 (bracket 2k+1, base scale/2)."""
    base = Fraction(scale, 2)
    den = sigma * (2 * k + 1) ** 2 - base * k
    return base * (k + 1) / den


class TestConvolutionOrder:
    def test_reference_kernel_k1(self):
        got = convolution_order(CP, K51, 3)
        expect = order_exact(Fraction(15, 2), 1, 2)  # sigma_1 = 7.5
        assert expect == Fraction(2, Fraction(133, 2))
        assert got.per_k[0].value == pytest.approx(float(expect), rel=1e-12)
        assert got.per_k[0].value == pytest.approx(0.030075, abs=5e-7)

    def test_unit_kernel_k1(self):
        got = convolution_order(CP, UNIT, 2)
        assert got.per_k[0].value == pytest.approx(4.0 / 7.0, rel=1e-12)
        assert got.defined  # denominators still positive through k = 2

    def test_unit_kernel_aggregate_undefined(self):
        got = convolution_order(CP, UNIT, 64)
        assert got.aggregate is None
        assert not got.defined
        assert got.first_invalid_k == 3
        assert not got.per_k[2].denominator_positive

    def test_k_max_domain(self):
        with pytest.raises(DomainError):
            convolution_order(CP, UNIT, 0)


class TestQuadraticMeanOrder:
    def test_reference_kernel_k1(self):
        got = quadratic_mean_order(CP, K51, 3)
        expect = order_exact(Fraction(15, 2), 1, 4)
        assert expect == Fraction(4, Fraction(131, 2))
        assert got.per_k[0].value == pytest.approx(float(expect), rel=1e-12)
        assert got.per_k[0].value == pytest.approx(0.061069, abs=5e-7)

    def test_unit_kernel_out_of_range(self):
        got = quadratic_mean_order(CP, UNIT, 1)
        assert got.per_k[0].value == pytest.approx(1.6, rel=1e-12)
        assert got.per_k[0].denominator_positive
        assert not got.per_k[0].in_range
        assert got.aggregate == pytest.approx(1.6, rel=1e-12)
        assert not got.aggregate_in_range


class TestBoundaryPairs:
    @pytest.mark.parametrize("kind", ["convolution", "quadratic_mean"])
    def test_identity_all_k(self, kind):
        for k in range(1, 11):
            assert abs(boundary_pair_margin(CP, K51, k, kind)) <= 1e-10

    def test_cross_check_through_class_route(self):
        # where the per-k order is a usable class order, membership_margin
        # of the witness pair at that order must vanish as well
        table = convolution_order(CP, K51, 5)
        for entry in table.per_k:
            if not entry.in_range:
                continue
            f = extremal_function(CP, K51, entry.k)
            product = hadamard(f, f)
            target = ClassParams(CP.alpha, entry.value)
            assert abs(membership_margin(product, target, K51)) <= 1e-10

    def test_quadratic_cross_check(self):
        table = quadratic_mean_order(CP, K51, 5)
        for entry in table.per_k:
            if not entry.in_range:
                continue
            f = extremal_function(CP, K51, entry.k)
            combo = quadratic_combination(f, f)
            target = ClassParams(CP.alpha, entry.value)
            assert abs(membership_margin(combo, target, K51)) <= 1e-10

    def test_random_parameters(self):
        rng = np.random.default_rng(17)
        for _ in range(40):
            cp = rand_class_params(rng)
            wp = rand_unit_kernel(rng)
            k = int(rng.integers(1, 12))
            for kind in ("convolution", "quadratic_mean"):
                assert abs(boundary_pair_margin(cp, wp, k, kind)) <= 1e-10


class TestRandomPairValidation:
    def test_convolution_members_stay_members(self):
        rng = np.random.default_rng(19)
        table = convolution_order(CP, K51, 5)
        assert table.defined and table.aggregate_in_range
        target = ClassParams(CP.alpha, table.aggregate)
        for _ in range(100):
            f = random_member(CP, K51, rng, max_terms=5)
            g = random_member(CP, K51, rng, max_terms=5)
            margin = membership_margin(hadamard(f, g), target, K51)
            assert margin >= -1e-10

    def test_quadratic_members_stay_members(self):
        rng = np.random.default_rng(29)
        table = quadratic_mean_order(CP, K51, 5)
        assert table.defined and table.aggregate_in_range
        target = ClassParams(CP.alpha, table.aggregate)
        for _ in range(100):
            f = random_member(CP, K51, rng, max_terms=5)
            g = random_member(CP, K51, rng, max_terms=5)
            margin = membership_margin(quadratic_combination(f, g), target, K51)
            assert margin >= -1e-10


class TestQuadraticCombination:
    def test_principal_parts(self):
        got = quadratic_combination(MeroFunction.principal_part(), MeroFunction.principal_part())
        assert got.coeffs == ()

    def test_squares_add(self):
        got = quadratic_combination(MeroFunction((3.0,)), MeroFunction((4.0,)))
        assert got.coeffs == (25.0,)

    def test_elementwise(self):
        got = quadratic_combination(MeroFunction((1.0, 2.0)), MeroFunction((0.0, 1.0)))
        assert got.coeffs == (1.0, 5.0)

    def test_rejects_signed(self):
        with pytest.raises(ClassPreconditionError):
            quadratic_combination(MeroFunction((-1.0,)), MeroFunction((1.0,)))


class TestBoundedMultiplier:
    def test_identity_multiplier(self):
        f = extremal_function(CP, UNIT, 1)
        g = BoundedMultiplier((1.0,))
        product, margin = bounded_multiplier_convolve(f, g, CP, UNIT)
        assert product.coeffs == f.coeffs
        assert margin == membership_margin(f, CP, UNIT)

    def test_annihilating_multiplier(self):
        f = extremal_function(CP, UNIT, 1)
        g = BoundedMultiplier((0.0,))
        product, margin = bounded_multiplier_convolve(f, g, CP, UNIT)
        assert product.coeffs == (0.0,)
        assert margin == pytest.approx(coefficient_budget(CP), abs=1e-15)

    def test_half_multiplier(self):
        f = MeroFunction((2.0 / 3.0,))
        g = BoundedMultiplier((0.5,))
        _, margin = bounded_multiplier_convolve(f, g, CP, UNIT)
        assert margin == pytest.approx(0.5, abs=1e-14)

    def test_rejects_nonmember(self):
        f = MeroFunction((1.0,))  # margin -0.5
        with pytest.raises(NotAMemberError):
            bounded_multiplier_convolve(f, BoundedMultiplier((1.0,)), CP, UNIT)

    def test_margin_monotone_exact(self):
        rng = np.random.default_rng(37)
        for _ in range(200):
            cp = rand_class_params(rng)
            wp = rand_unit_kernel(rng)
            f = random_member(cp, wp, rng, max_terms=8)
            n = int(rng.integers(0, len(f.coeffs) + 1))
            g = BoundedMultiplier(tuple(rng.uniform(-1.0, 1.0, n)))
            _, margin = bounded_multiplier_convolve(f, g, cp, wp)
            assert margin >= membership_margin(f, cp, wp)

    def test_nonnegative_multiplier_case(self):
        # restriction to 0 <= b_k <= 1 is the same monotone-margin statement
        rng = np.random.default_rng(41)
        for _ in range(100):
            cp = rand_class_params(rng)
            wp = rand_unit_kernel(rng)
            f = random_member(cp, wp, rng, max_terms=6)
            g = BoundedMultiplier(tuple(rng.uniform(0.0, 1.0, len(f.coeffs))))
            product, margin = bounded_multiplier_convolve(f, g, cp, wp)
            assert product.nonnegative
            assert margin >= membership_margin(f, cp, wp)
