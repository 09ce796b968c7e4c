"""Series arithmetic against direct complex-arithmetic and difference oracles."""

import math

import numpy as np
import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from merowright import (
    BoundedMultiplier,
    DomainError,
    MeroFunction,
    PoleError,
    WrightParams,
    apply_operator,
    evaluate,
    evaluate_d1,
    evaluate_d2,
    hadamard,
    sigma_k,
)

UNIT = WrightParams.hypergeometric([1.0], [1.0])

GRID = [
    r * complex(math.cos(t), math.sin(t))
    for r in (0.2, 0.5, 0.8)
    for t in (0.0, 0.7, 2.1, 3.9, 5.5)
]

finite_coeffs = st.lists(
    st.floats(min_value=-10, max_value=10, allow_nan=False), min_size=0, max_size=8
)


def central_diff(fn, z, h=1e-6):
    return (fn(z + h) - fn(z - h)) / (2.0 * h)


class TestEvaluate:
    def test_principal_part(self):
        assert evaluate(MeroFunction.principal_part(), 0.5) == pytest.approx(2.0)

    def test_linear_term(self):
        assert evaluate(MeroFunction((1.0,)), 0.5) == pytest.approx(2.5)

    def test_complex_point_oracle(self):
        z = 0.1 + 0.2j
        f = MeroFunction((0.0, 3.0))
        expected = 1.0 / z + 3.0 * z * z
        got = evaluate(f, z)
        assert got == pytest.approx(expected, rel=1e-15)
        assert got.real == pytest.approx(1.91, rel=1e-12)

    def test_pole_and_domain(self):
        f = MeroFunction((1.0,))
        with pytest.raises(PoleError):
            evaluate(f, 0.0)
        with pytest.raises(DomainError):
            evaluate(f, 1.0)
        with pytest.raises(DomainError):
            evaluate(f, 0.8 + 0.8j)

    @given(finite_coeffs)
    @settings(max_examples=100, deadline=None)
    def test_conjugation_symmetry(self, coeffs):
        f = MeroFunction(tuple(coeffs))
        z = 0.3 + 0.45j
        assert evaluate(f, z.conjugate()) == evaluate(f, z).conjugate()


class TestDerivatives:
    def test_d1_principal(self):
        assert evaluate_d1(MeroFunction.principal_part(), 0.5) == pytest.approx(-4.0)

    def test_d1_linear(self):
        f = MeroFunction((1.0,))
        for z in (0.5, 0.3 + 0.1j):
            assert evaluate_d1(f, z) == pytest.approx(-1.0 / (z * z) + 1.0, rel=1e-14)

    def test_d1_cubic(self):
        f = MeroFunction((0.0, 0.0, 2.0))
        assert evaluate_d1(f, 0.5) == pytest.approx(-4.0 + 6.0 * 0.25, rel=1e-14)

    def test_d2_examples(self):
        assert evaluate_d2(MeroFunction.principal_part(), 0.5) == pytest.approx(16.0)
        f = MeroFunction((1.0,))
        z = 0.4 + 0.2j
        assert evaluate_d2(f, z) == pytest.approx(2.0 / z**3, rel=1e-14)
        assert evaluate_d2(MeroFunction((0.0, 1.0)), 0.5) == pytest.approx(18.0)

    def test_d1_matches_central_differences(self):
        rng = np.random.default_rng(5)
        f = MeroFunction(tuple(rng.uniform(-2, 2, 6)))
        for z in GRID:
            fd = central_diff(lambda w: evaluate(f, w), z)
            assert abs(evaluate_d1(f, z) - fd) <= 1e-5

    def test_d2_matches_central_differences_of_d1(self):
        rng = np.random.default_rng(6)
        f = MeroFunction(tuple(rng.uniform(-2, 2, 6)))
        for z in GRID:
            fd = central_diff(lambda w: evaluate_d1(f, w), z)
            assert abs(evaluate_d2(f, z) - fd) <= 1e-4 * max(1.0, abs(evaluate_d2(f, z)))


class TestHadamard:
    def test_annihilator(self):
        f = MeroFunction((1.0, 2.0, 3.0))
        assert hadamard(f, MeroFunction.principal_part()).coeffs == ()

    def test_single_overlap(self):
        f = MeroFunction((0.0, 2.0))
        g = MeroFunction((0.0, 3.0))
        assert hadamard(f, g).coeffs == (0.0, 6.0)

    def test_elementwise(self):
        f = MeroFunction((1.0, 2.0))
        g = MeroFunction((4.0, 5.0))
        assert hadamard(f, g).coeffs == (4.0, 10.0)

    @given(finite_coeffs, finite_coeffs)
    @settings(max_examples=150, deadline=None)
    def test_commutative_exact(self, a, b):
        f, g = MeroFunction(tuple(a)), MeroFunction(tuple(b))
        assert hadamard(f, g).coeffs == hadamard(g, f).coeffs

    @given(
        st.lists(st.integers(min_value=-9, max_value=9), max_size=6),
        st.lists(st.integers(min_value=-9, max_value=9), max_size=6),
        st.lists(st.integers(min_value=-9, max_value=9), max_size=6),
    )
    @settings(max_examples=150, deadline=None)
    def test_associative_exact_on_integers(self, a, b, c):
        f = MeroFunction(tuple(float(x) for x in a))
        g = MeroFunction(tuple(float(x) for x in b))
        h = MeroFunction(tuple(float(x) for x in c))
        assert hadamard(hadamard(f, g), h).coeffs == hadamard(f, hadamard(g, h)).coeffs

    @given(finite_coeffs, finite_coeffs, finite_coeffs)
    @settings(max_examples=100, deadline=None)
    def test_associative_to_rounding(self, a, b, c):
        f, g, h = (MeroFunction(tuple(x)) for x in (a, b, c))
        left = hadamard(hadamard(f, g), h).coeffs
        right = hadamard(f, hadamard(g, h)).coeffs
        assert len(left) == len(right)
        for x, y in zip(left, right):
            assert math.isclose(x, y, rel_tol=1e-15, abs_tol=1e-300)


class TestOperator:
    def test_scales_by_multiplier(self):
        f = MeroFunction((1.0,))
        assert apply_operator(UNIT, f).coeffs == (sigma_k(UNIT, 1) * 1.0,)
        assert apply_operator(UNIT, f).coeffs[0] == pytest.approx(0.5, rel=1e-13)

    def test_principal_part_fixed(self):
        assert apply_operator(UNIT, MeroFunction.principal_part()).coeffs == ()

    def test_shifted_kernel(self):
        k21 = WrightParams.hypergeometric([2.0], [1.0])
        f = MeroFunction((2.0,))
        assert apply_operator(k21, f).coeffs[0] == pytest.approx(3.0, rel=1e-13)

    def test_commutes_with_hadamard(self):
        rng = np.random.default_rng(9)
        wp = WrightParams.hypergeometric([2.5], [1.5])
        for _ in range(25):
            f = MeroFunction(tuple(rng.uniform(-3, 3, 5)))
            g = MeroFunction(tuple(rng.uniform(-3, 3, 5)))
            left = apply_operator(wp, hadamard(f, g)).coeffs
            right = hadamard(apply_operator(wp, f), g).coeffs
            for x, y in zip(left, right):
                assert math.isclose(x, y, rel_tol=5e-16, abs_tol=1e-300)


class TestTypes:
    def test_rejects_nonfinite(self):
        with pytest.raises(DomainError):
            MeroFunction((math.inf,))
        with pytest.raises(DomainError):
            MeroFunction((math.nan,))

    def test_nonnegative_flag(self):
        assert MeroFunction((0.0, 1.0)).nonnegative
        assert not MeroFunction((0.0, -1e-300)).nonnegative

    def test_single_term(self):
        f = MeroFunction.single_term(3, 2.5)
        assert f.coeffs == (0.0, 0.0, 2.5)

    def test_bounded_multiplier_validation(self):
        BoundedMultiplier((1.0, -1.0, 0.0))
        with pytest.raises(DomainError):
            BoundedMultiplier((1.0000001,))
        with pytest.raises(DomainError):
            BoundedMultiplier((math.nan,))
