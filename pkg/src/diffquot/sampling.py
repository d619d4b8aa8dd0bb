"""Seeded random polynomials for reproducible verification campaigns.

Coefficients are rationals a/b with |a| <= 20 and 1 <= b <= 10; degrees
default to at most 5 in x and 2 in l.  All draws go through an explicit
``random.Random`` instance so identical seeds give identical campaigns.
"""

from __future__ import annotations

import random
from fractions import Fraction

from .bipoly import BiPoly


def random_rational(
    rng: random.Random, max_num: int = 20, max_den: int = 10
) -> Fraction:
    return Fraction(rng.randint(-max_num, max_num), rng.randint(1, max_den))


def random_bipoly(
    rng: random.Random,
    max_deg_x: int = 5,
    max_deg_lam: int = 2,
    max_terms: int = 6,
    lambda_free: bool = False,
) -> BiPoly:
    """Random sparse polynomial; like terms merge, so it may have fewer
    than max_terms terms (or be zero)."""
    terms: dict[tuple[int, int], Fraction] = {}
    jmax = 0 if lambda_free else max_deg_lam
    for _ in range(rng.randint(1, max_terms)):
        key = (rng.randint(0, max_deg_x), rng.randint(0, jmax))
        terms[key] = terms.get(key, Fraction(0)) + random_rational(rng)
    return BiPoly(terms)
