#!/usr/bin/env python3
"""Any number of factors: multiplicativity and the alternating expansion.

The translation operator T = I + l*delta is multiplicative on products,
which turns delta^r of an n-fold product into an alternating sum of
products of translated factors, divided by l^r.  The division is exact:
the library performs it term by term and would raise if a stray l-free
term ever appeared.
"""

import math

from diffquot import (
    LAM,
    ONE,
    X,
    check_multiplicativity,
    const,
    delta,
    delta_pow,
    multi_delta,
    translate_pow,
    translate_pow_expanded,
)

# T^r distributes over products of any length.
factors = [X, X**2 - ONE, X + const(3)]
for r in (1, 2, 3):
    print(f"T^{r} multiplicative over 3 factors:", check_multiplicativity(factors, r))
print()

# T^k of a single factor, expanded into difference quotients.
p = X**3
for k in (0, 1, 2, 3):
    print(f"T^{k}(x^3) =", translate_pow_expanded(p, k))
    assert translate_pow_expanded(p, k) == translate_pow(p, k)
print()

# The three-factor expansion at order 1, written out by hand:
f1, f2, f3 = X, X**2, X + ONE
bracket = (
    (f1 + LAM * delta(f1)) * (f2 + LAM * delta(f2)) * (f3 + LAM * delta(f3))
    - f1 * f2 * f3
)
by_hand = bracket.divide_by_lambda()
print("order-1 bracket, divided by l:", by_hand)
print("multi_delta(..., 1):          ", multi_delta([f1, f2, f3], 1))
print("iterated operator:            ", delta_pow(f1 * f2 * f3, 1))
print()

# Higher orders and more factors still collapse to the brute-force answer.
for n in (2, 3, 4):
    fs = factors[:n] if n <= 3 else factors + [X**2]
    product = math.prod(fs, start=ONE)
    for r in (1, 2, 3):
        assert multi_delta(fs, r) == delta_pow(product, r)
print("multi_delta == delta_pow for n in 2..4, r in 1..3: all exact")
