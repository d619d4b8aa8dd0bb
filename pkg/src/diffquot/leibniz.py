"""Two-factor product expansion for powers of the difference quotient.

The single-application product rule is

    delta(f*g) = l*(delta f)*(delta g) + (delta f)*g + f*(delta g)

and iterating it gives a closed form for delta^r(f*g): a sum over index
pairs 0 <= k <= l <= r of

    l^(r-l) * C(r,l) * C(l,k) * (delta^(r-k) f) * (delta^(k+r-l) g).

``leibniz_terms`` enumerates that sum symbolically, ``apply_expansion``
evaluates it on concrete polynomials, and ``classical_limit_check``
confirms that the l -> 0 slice is the textbook derivative product rule.
"""

from __future__ import annotations

from dataclasses import dataclass

from .bipoly import LAM, ZERO, BiPoly, binom
from .operators import delta, delta_pow


class InvalidOrderError(ValueError):
    """Raised when an expansion is requested for order r < 1."""


class LambdaContaminatedError(ValueError):
    """Raised when a classical-limit check receives an l-dependent input."""


@dataclass(frozen=True)
class LeibnizTerm:
    """One summand of the closed-form expansion of order r.

    The indices determine each other: ``lambda_exp = r - l``,
    ``order_f = r - k`` and ``order_g = k + r - l``, so a term is already
    identified by (order_f, order_g) and no like-term merging is needed.
    """

    l: int
    k: int
    coeff: int
    lambda_exp: int
    order_f: int
    order_g: int


@dataclass(frozen=True)
class LeibnizExpansion:
    """All terms of the order-r expansion, in canonical order."""

    r: int
    terms: tuple[LeibnizTerm, ...]

    def __len__(self) -> int:
        return len(self.terms)


def product_rule(f: BiPoly, g: BiPoly) -> BiPoly:
    """Single product rule: l*(df)*(dg) + (df)*g + f*(dg) = delta(f*g)."""
    df, dg = delta(f), delta(g)
    return LAM * df * dg + df * g + f * dg


def leibniz_terms(r: int) -> LeibnizExpansion:
    """Enumerate the closed-form expansion of delta^r on a two-factor product.

    Terms are sorted by (order_f descending, order_g descending); the term
    count is (r+1)(r+2)/2.
    """
    if not isinstance(r, int) or r < 1:
        raise InvalidOrderError("expansion order must be a positive integer r")
    terms = []
    for l in range(r + 1):
        c_r_l = binom(r, l)
        for k in range(l + 1):
            terms.append(
                LeibnizTerm(
                    l=l,
                    k=k,
                    coeff=c_r_l * binom(l, k),
                    lambda_exp=r - l,
                    order_f=r - k,
                    order_g=k + r - l,
                )
            )
    terms.sort(key=lambda t: (-t.order_f, -t.order_g))
    return LeibnizExpansion(r=r, terms=tuple(terms))


def apply_expansion(e: LeibnizExpansion, f: BiPoly, g: BiPoly) -> BiPoly:
    """Evaluate the expansion on concrete f and g.

    Returns sum of coeff * l^lambda_exp * delta^order_f(f) * delta^order_g(g)
    over all terms; equals delta_pow(f*g, e.r) exactly.
    """
    df = _delta_chain(f, e.r)
    dg = _delta_chain(g, e.r)
    total = ZERO
    for t in e.terms:
        total = total + t.coeff * LAM**t.lambda_exp * df[t.order_f] * dg[t.order_g]
    return total


def classical_limit_check(f: BiPoly, g: BiPoly, r: int) -> bool:
    """Check the l -> 0 slice of the order-r expansion on l-free inputs.

    True iff setting l = 0 in apply_expansion equals
    sum_k C(r,k) f^(r-k) g^(k), the classical derivative product rule.
    """
    if f.deg_lam > 0 or g.deg_lam > 0:
        raise LambdaContaminatedError(
            "classical limit is only meaningful for l-free inputs"
        )
    lhs = apply_expansion(leibniz_terms(r), f, g).at_lambda_zero()
    rhs = ZERO
    for k in range(r + 1):
        rhs = rhs + binom(r, k) * f.deriv_x(r - k) * g.deriv_x(k)
    return lhs == rhs


def render_expansion(e: LeibnizExpansion) -> str:
    """Canonical text form, one term per line: "c * l^e * D^a[f] * D^b[g]"."""
    return "\n".join(render_term(t) for t in e.terms)


def render_term(t: LeibnizTerm) -> str:
    parts: list[str] = []
    if t.coeff != 1:
        parts.append(str(t.coeff))
    if t.lambda_exp == 1:
        parts.append("l")
    elif t.lambda_exp > 1:
        parts.append(f"l^{t.lambda_exp}")
    parts.append(_op_str(t.order_f, "f"))
    parts.append(_op_str(t.order_g, "g"))
    return " * ".join(parts)


def _op_str(order: int, name: str) -> str:
    if order == 0:
        return name
    if order == 1:
        return f"D[{name}]"
    return f"D^{order}[{name}]"


def _delta_chain(p: BiPoly, r: int) -> list[BiPoly]:
    chain = [p]
    for _ in range(r):
        chain.append(delta(chain[-1]))
    return chain
