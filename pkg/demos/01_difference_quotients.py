#!/usr/bin/env python3
"""A walk through the exact difference-quotient operator.

The whole library works on polynomials in x and a formal step l with
rational coefficients.  Keeping the step symbolic means the operator
identity checks below are literal polynomial equalities, and the limit
l -> 0 is just "drop the l terms".
"""

from diffquot import LAM, X, const, delta, delta_pow, translate, translate_pow

# The difference quotient maps p(x) to (p(x+l) - p(x)) / l, exactly.
print("delta(x)    =", delta(X))
print("delta(x^2)  =", delta(X**2))
print("delta(x^3)  =", delta(X**3))
print("delta(7)    =", delta(const(7)))
print()

# Iterating drives the x-degree down one step at a time.
p = X**4 - 3 * X
for r in range(5):
    print(f"delta^{r}(x^4 - 3x) =", delta_pow(p, r))
print()

# As the step vanishes, the r-th quotient becomes the r-th derivative.
print("delta^2(x^4 - 3x) at l=0:", delta_pow(p, 2).at_lambda_zero())
print("second derivative:       ", p.deriv_x(2))
print()

# The translation operator I + l*delta advances the argument by one step:
# applying it k times is the substitution x -> x + k*l.
q = X**2
print("translate(x^2)        =", translate(q))
print("translate^3(x^2)      =", translate_pow(q, 3))
print("substitute x -> x+3l: =", q.shift_x().shift_x().shift_x())
print()

# Exact evaluation doubles as a sanity check at a concrete point.
d = delta(X**3)
x0, l0 = 2, 1
lhs = ((x0 + l0) ** 3 - x0**3) // l0
print(f"delta(x^3) at x={x0}, l={l0}:", d.evaluate(x0, l0), "expected:", lhs)
