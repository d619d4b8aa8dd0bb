#!/usr/bin/env python3
"""Binomial inversion and the e^t identity between the two sequences.

For a product F of factors, the sequences a_r = l^r * delta^r(F) and
b_r = T^r(F) are binomial transforms of each other:

    a_r = sum_k C(r,k) (-1)^(r-k) b_k        b_r = sum_k C(r,k) a_k

Packaged as exponential generating functions A(t) = sum a_r t^r/r! and
Abar(t) = sum b_r t^r/r!, the pair of relations is the single statement
Abar(t) = e^t A(t).
"""

import math

from diffquot import (
    LAM,
    ONE,
    X,
    BiPoly,
    delta_pow,
    egf_check,
    egf_pair,
    forward_binomial,
    inverse_binomial,
    translate_pow,
)

fs = [X, X**2 - ONE]
product = math.prod(fs, start=ONE)

# The two transform directions, for a few orders.
for r in (0, 1, 2, 3):
    fwd = forward_binomial(fs, r)
    inv = inverse_binomial(fs, r)
    print(f"r={r}:")
    print("  alternating T-sum      =", fwd)
    print("  l^r * delta^r(F)       =", LAM**r * delta_pow(product, r))
    print("  plain delta-sum        =", inv)
    print("  T^r(F)                 =", translate_pow(product, r))
print()

# Round trip: feed one transform's outputs through the other.
r = 4
acc = BiPoly()
for k in range(r + 1):
    acc = acc + math.comb(r, k) * forward_binomial(fs, k)
print("inverse of forward == T^4(F):", acc == translate_pow(product, 4))
print()

# The EGF statement of the same fact, at truncation order 8.
a, abar = egf_pair(fs, order=8)
print("coefficient of t^3/3! in A:   ", a.coeffs[3])
print("coefficient of t^3/3! in Abar:", abar.coeffs[3])
print("Abar == e^t * A up to order 8:", egf_check(a, abar))
