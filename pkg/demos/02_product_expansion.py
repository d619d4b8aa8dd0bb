#!/usr/bin/env python3
"""The closed-form expansion of delta^r applied to a product of two factors.

A single application of the operator to f*g splits into three summands;
iterating and collecting yields, for every order r, a sum of
(r+1)(r+2)/2 terms with binomial-product coefficients and explicit powers
of the step l.  This script prints the term tables and confirms the
expansion against brute-force iteration.
"""

import random
from fractions import Fraction

from diffquot import (
    LAM,
    X,
    BiPoly,
    apply_expansion,
    classical_limit_check,
    delta,
    delta_pow,
    leibniz_terms,
    product_rule,
    render_expansion,
)

# One application: the product rule with its extra l-weighted cross term.
f, g = X**2, X**3
print("product_rule(x^2, x^3) =", product_rule(f, g))
print("delta(x^5)             =", delta(f * g))
print()

# The full term table for r = 2 and r = 3.
for r in (2, 3):
    e = leibniz_terms(r)
    print(f"order {r} expansion ({len(e)} terms):")
    print(render_expansion(e))
    print()

# Every term's coefficient is a product of two binomials; the l-free slice
# carries the plain binomial coefficients of the derivative product rule.
e = leibniz_terms(4)
classical = [t for t in e.terms if t.lambda_exp == 0]
print("l-free slice of order 4:", [(t.order_f, t.order_g, t.coeff) for t in classical])
print()

# Applying the expansion to concrete polynomials reproduces brute force.
rng = random.Random(0)
f = BiPoly({(3, 0): Fraction(2, 3), (1, 1): -1, (0, 0): 5})
g = BiPoly({(2, 0): 1, (0, 1): Fraction(7, 2)})
for r in (1, 2, 3, 4):
    closed = apply_expansion(leibniz_terms(r), f, g)
    brute = delta_pow(f * g, r)
    print(f"r={r}: closed form == iterated operator? {closed == brute}")
print()

# With l -> 0 the whole table collapses to the classical derivative rule.
print("classical limit, r=3, f=x^2, g=x^3:", classical_limit_check(X**2, X**3, 3))
