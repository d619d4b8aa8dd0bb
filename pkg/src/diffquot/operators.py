"""The difference-quotient operator and the translation operator on BiPoly.

``delta`` maps p(x) to (p(x+l) - p(x)) / l, the forward difference quotient
with step l; the division is exact because shifting never introduces l-free
differences.  ``translate`` is the operator I + l*delta.  Acting on
polynomials it coincides with the substitution x -> x + l; that is a tested
property of the package, not the definition used here.
"""

from __future__ import annotations

from .bipoly import LAM, BiPoly


def _check_order(r: int) -> None:
    if not isinstance(r, int) or r < 0:
        raise ValueError("operator order must be a nonnegative integer")


def delta(p: BiPoly) -> BiPoly:
    """Forward difference quotient (p(x+l) - p(x)) / l, exactly."""
    return (p.shift_x() - p).divide_by_lambda()


def delta_pow(p: BiPoly, r: int) -> BiPoly:
    """r-fold application of delta; r = 0 is the identity."""
    _check_order(r)
    for _ in range(r):
        p = delta(p)
    return p


def translate(p: BiPoly) -> BiPoly:
    """The operator I + l*delta; advances the argument by one step."""
    return p + LAM * delta(p)


def translate_pow(p: BiPoly, k: int) -> BiPoly:
    """k-fold application of translate; advances the argument by k steps."""
    _check_order(k)
    for _ in range(k):
        p = translate(p)
    return p
