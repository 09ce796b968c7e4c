"""Meromorphic function classes under a Wright-type convolution operator.

Core objects: the operator kernel (``WrightParams`` / ``sigma_k``),
truncated meromorphic series (``MeroFunction``), the sharp coefficient
membership test and its envelopes, closure orders under termwise products,
radii of starlikeness/convexity, and sampling verifiers that certify each
result numerically.
"""

from .closure import (
    ClosureOrder,
    OrderEntry,
    bounded_multiplier_convolve,
    boundary_pair_margin,
    convolution_order,
    quadratic_combination,
    quadratic_mean_order,
)
from .errors import (
    ClassPreconditionError,
    DegenerateInputError,
    DomainError,
    GammaOverflowError,
    NotAMemberError,
    PoleError,
    UnsupportedParametersError,
)
from .gamma_kernel import (
    WrightParams,
    WrightSeriesValue,
    log_gamma,
    log_omega,
    log_sigma_k,
    omega,
    sigma_k,
    sigma_k_pochhammer,
    wright_psi,
)
from .members import random_member
from .membership import (
    ClassParams,
    coefficient_bound,
    coefficient_budget,
    coefficient_weight,
    distortion_bounds,
    distortion_hypothesis_ok,
    envelope_amplitude,
    extremal_function,
    growth_bounds,
    growth_hypothesis_ok,
    membership_margin,
)
from .radii import (
    ConvexCondition,
    RadiusCandidate,
    RadiusResult,
    StarlikeCondition,
    condition_modulus,
    convex_radius,
    numeric_radius,
    starlike_radius,
)
from .series import (
    BoundedMultiplier,
    MeroFunction,
    apply_operator,
    evaluate,
    evaluate_d1,
    evaluate_d2,
    hadamard,
)
from .verifier import (
    SamplingPlan,
    VerificationReport,
    WorstSample,
    condition_ratio,
    verify_distortion,
    verify_growth,
    verify_membership_analytic,
    verify_radius,
)

__version__ = "0.1.0"
