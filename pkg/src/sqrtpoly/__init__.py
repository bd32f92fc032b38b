"""Polynomials computing square roots (and t-th roots) modulo a prime."""

from .constructions import (
    RootTask,
    construct_3mod4,
    construct_5mod8,
    construct_tth_special,
    crt_combine,
    tonelli_branch,
    verify_root_poly,
)
from .errors import (
    DuplicateNode,
    HypothesisViolated,
    InvalidOrder,
    ModulusMismatch,
    NonResidue,
    NotPrime,
    ParseError,
    PreconditionError,
    SearchSpaceTooLarge,
    SqrtPolyError,
    TheoremViolation,
    WrongResidueClass,
)
from .field import (
    FieldContext,
    FieldElement,
    find_generator,
    get_field,
    legendre,
    sqrt_mod,
    sqrt_of_minus_one,
)
from .poly import NEG_INF, DensePoly, delta_alpha, gcd, interpolate, parse_coeffs, radical
from .search import (
    SearchReport,
    SignVector,
    equidist_stats,
    interpolant,
    interpolant_degree,
    kernel_sign_search,
    leading_coefficient,
    min_degree_exhaustive,
    min_degree_robust,
)
from .zero_run import (
    RationalSeries,
    ZeroRunReport,
    abc_check,
    binomial_series,
    check_power_run,
    exp_series,
    two_value_classify,
    zero_runs,
)

__version__ = "0.1.0"

__all__ = [
    "abc_check",
    "binomial_series",
    "check_power_run",
    "construct_3mod4",
    "construct_5mod8",
    "construct_tth_special",
    "crt_combine",
    "delta_alpha",
    "DensePoly",
    "DuplicateNode",
    "equidist_stats",
    "exp_series",
    "FieldContext",
    "FieldElement",
    "find_generator",
    "gcd",
    "get_field",
    "HypothesisViolated",
    "interpolant",
    "interpolant_degree",
    "interpolate",
    "InvalidOrder",
    "kernel_sign_search",
    "leading_coefficient",
    "legendre",
    "min_degree_exhaustive",
    "min_degree_robust",
    "ModulusMismatch",
    "NEG_INF",
    "NonResidue",
    "NotPrime",
    "parse_coeffs",
    "ParseError",
    "PreconditionError",
    "radical",
    "RationalSeries",
    "RootTask",
    "SearchReport",
    "SearchSpaceTooLarge",
    "SignVector",
    "sqrt_mod",
    "sqrt_of_minus_one",
    "SqrtPolyError",
    "TheoremViolation",
    "tonelli_branch",
    "two_value_classify",
    "verify_root_poly",
    "WrongResidueClass",
    "zero_runs",
    "ZeroRunReport",
]
