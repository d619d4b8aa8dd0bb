"""Exact and floating-point calculus for the forward difference quotient.

The package carries everything on exact sparse polynomials in x and the
step parameter l over the rationals, so the product expansions, binomial
inversion and generating-function identities it implements can all be
checked as literal polynomial equalities.  A numpy-backed harness replays
the same formulas on transcendental functions in double precision and
measures rounding and cancellation.
"""

from .bipoly import (
    LAM,
    ONE,
    X,
    ZERO,
    BiPoly,
    NotDivisibleError,
    binom,
    const,
    monomial,
)
from .leibniz import (
    InvalidOrderError,
    LambdaContaminatedError,
    LeibnizExpansion,
    LeibnizTerm,
    apply_expansion,
    classical_limit_check,
    leibniz_terms,
    product_rule,
    render_expansion,
    render_term,
)
from .multifactor import (
    InternalDivisibilityError,
    OrderMismatchError,
    TruncatedSeries,
    check_multiplicativity,
    egf_check,
    egf_pair,
    forward_binomial,
    inverse_binomial,
    multi_delta,
    translate_pow_expanded,
)
from .numeric import (
    GridSpec,
    NumericFn,
    SingularityInWindowError,
    VerificationReport,
    ZeroLambdaError,
    cos_fn,
    delta_num,
    delta_num_pow,
    exp_fn,
    poly_fn,
    shifted_reciprocal,
    sin_fn,
    verify_multi_factor,
    verify_two_factor,
)
from .operators import delta, delta_pow, translate, translate_pow
from .parsing import ParseError, parse_poly
from .sampling import random_bipoly, random_rational

__version__ = "0.1.0"

__all__ = [
    "BiPoly",
    "GridSpec",
    "InternalDivisibilityError",
    "InvalidOrderError",
    "LAM",
    "LambdaContaminatedError",
    "LeibnizExpansion",
    "LeibnizTerm",
    "NotDivisibleError",
    "NumericFn",
    "ONE",
    "OrderMismatchError",
    "ParseError",
    "SingularityInWindowError",
    "TruncatedSeries",
    "VerificationReport",
    "X",
    "ZERO",
    "ZeroLambdaError",
    "apply_expansion",
    "binom",
    "check_multiplicativity",
    "classical_limit_check",
    "const",
    "cos_fn",
    "delta",
    "delta_num",
    "delta_num_pow",
    "delta_pow",
    "egf_check",
    "egf_pair",
    "exp_fn",
    "forward_binomial",
    "inverse_binomial",
    "leibniz_terms",
    "monomial",
    "multi_delta",
    "parse_poly",
    "poly_fn",
    "product_rule",
    "random_bipoly",
    "random_rational",
    "render_expansion",
    "render_term",
    "shifted_reciprocal",
    "sin_fn",
    "translate",
    "translate_pow",
    "translate_pow_expanded",
    "verify_multi_factor",
    "verify_two_factor",
]
