"""Exact sparse polynomials in x and the step parameter l over the rationals.

A polynomial is stored as a mapping from exponent pairs (deg_x, deg_l) to
Fraction coefficients:

    3*x^2*l + 1/2*l^2 - x   ->   {(2, 1): 3, (0, 2): 1/2, (1, 0): -1}

Zero coefficients are never stored, so two polynomials are equal iff their
term dicts are equal.  The step parameter l is kept formal: specialising
l -> 0 is a term filter, and dividing an exact multiple of l by l is exact
exponent surgery, never a numeric limit.  All coefficients are
arbitrary-precision rationals (``fractions.Fraction``), so every identity in
this package can be checked as exact equality.

BiPoly values are immutable; all operations return new values and are safe
to use concurrently.
"""

from __future__ import annotations

import functools
import math
from fractions import Fraction
from types import MappingProxyType
from typing import Mapping

Key = tuple[int, int]  # (deg_x, deg_l)

Scalar = int | Fraction


class NotDivisibleError(ValueError):
    """Raised when dividing by l a polynomial with an l-free term."""


def binom(n: int, k: int) -> int:
    """Binomial coefficient C(n, k) as an exact integer; 0 when k > n."""
    if n < 0 or k < 0:
        raise ValueError("binom expects nonnegative arguments")
    return math.comb(n, k)


@functools.lru_cache(maxsize=None)
def _binom_row(n: int) -> tuple[int, ...]:
    # Row n of Pascal's triangle, cached for the shift expansion.
    return tuple(math.comb(n, m) for m in range(n + 1))


class BiPoly:
    """Sparse exact polynomial in x and l with Fraction coefficients."""

    __slots__ = ("_terms",)

    def __init__(self, terms: Mapping[Key, Scalar] | None = None):
        clean: dict[Key, Fraction] = {}
        for (i, j), c in (terms or {}).items():
            if i < 0 or j < 0:
                raise ValueError(f"negative exponent in term {(i, j)}")
            c = Fraction(c)
            if c:
                clean[(i, j)] = c
        self._terms = clean

    @property
    def terms(self) -> Mapping[Key, Fraction]:
        """Read-only view of the term dict."""
        return MappingProxyType(self._terms)

    @property
    def deg_x(self) -> int:
        """Largest x-exponent, or -1 for the zero polynomial."""
        return max((i for i, _ in self._terms), default=-1)

    @property
    def deg_lam(self) -> int:
        """Largest l-exponent, or -1 for the zero polynomial."""
        return max((j for _, j in self._terms), default=-1)

    def __bool__(self) -> bool:
        return bool(self._terms)

    def __eq__(self, other: object) -> bool:
        if isinstance(other, BiPoly):
            return self._terms == other._terms
        return NotImplemented

    def __neg__(self) -> BiPoly:
        return BiPoly({k: -c for k, c in self._terms.items()})

    def __add__(self, other: BiPoly) -> BiPoly:
        if not isinstance(other, BiPoly):
            return NotImplemented
        out = dict(self._terms)
        for k, c in other._terms.items():
            out[k] = out.get(k, Fraction(0)) + c
        return BiPoly(out)

    def __sub__(self, other: BiPoly) -> BiPoly:
        if not isinstance(other, BiPoly):
            return NotImplemented
        out = dict(self._terms)
        for k, c in other._terms.items():
            out[k] = out.get(k, Fraction(0)) - c
        return BiPoly(out)

    def __mul__(self, other: BiPoly | Scalar) -> BiPoly:
        if isinstance(other, BiPoly):
            out: dict[Key, Fraction] = {}
            for (i1, j1), c1 in self._terms.items():
                for (i2, j2), c2 in other._terms.items():
                    k = (i1 + i2, j1 + j2)
                    out[k] = out.get(k, Fraction(0)) + c1 * c2
            return BiPoly(out)
        if isinstance(other, (int, Fraction)):
            return BiPoly({k: c * other for k, c in self._terms.items()})
        return NotImplemented

    __rmul__ = __mul__

    def __pow__(self, n: int) -> BiPoly:
        if not isinstance(n, int) or n < 0:
            raise ValueError("exponent must be a nonnegative integer")
        out = ONE
        for _ in range(n):
            out = out * self
        return out

    def shift_x(self) -> BiPoly:
        """Substitute x -> x + l, expanded exactly.

        Each monomial c*x^i*l^j becomes sum_m C(i,m) c x^m l^(j+i-m), so the
        result minus the original is always an exact multiple of l.
        """
        out: dict[Key, Fraction] = {}
        for (i, j), c in self._terms.items():
            row = _binom_row(i)
            for m in range(i + 1):
                k = (m, j + i - m)
                out[k] = out.get(k, Fraction(0)) + c * row[m]
        return BiPoly(out)

    def divide_by_lambda(self) -> BiPoly:
        """Exact division by l; every term must carry a factor of l."""
        out: dict[Key, Fraction] = {}
        for (i, j), c in self._terms.items():
            if j == 0:
                raise NotDivisibleError(
                    f"term {c}*x^{i} has no factor of l; polynomial is not "
                    "divisible by l"
                )
            out[(i, j - 1)] = c
        return BiPoly(out)

    def at_lambda_zero(self) -> BiPoly:
        """Specialise l -> 0 by dropping every term of positive l-degree."""
        return BiPoly({(i, 0): c for (i, j), c in self._terms.items() if j == 0})

    def deriv_x(self, r: int = 1) -> BiPoly:
        """Exact r-th partial derivative with respect to x."""
        if r < 0:
            raise ValueError("derivative order must be nonnegative")
        out: dict[Key, Fraction] = {}
        for (i, j), c in self._terms.items():
            if i >= r:
                out[(i - r, j)] = c * math.perm(i, r)
        return BiPoly(out)

    def evaluate(self, x0: Scalar, lam0: Scalar) -> Fraction:
        """Exact value at a rational point (x0, lam0)."""
        x0, lam0 = Fraction(x0), Fraction(lam0)
        total = Fraction(0)
        for (i, j), c in self._terms.items():
            total += c * x0**i * lam0**j
        return total

    def evaluate_float(self, x0: float, lam0: float) -> float:
        """Double-precision value at (x0, lam0)."""
        total = 0.0
        for (i, j), c in self._terms.items():
            total += float(c) * x0**i * lam0**j
        return total

    def __str__(self) -> str:
        if not self._terms:
            return "0"
        parts: list[str] = []
        for key in sorted(self._terms, key=lambda e: (-e[0], -e[1])):
            c = self._terms[key]
            body = _term_body(key, abs(c))
            if not parts:
                parts.append(body if c > 0 else f"-{body}")
            else:
                parts.append(f"+ {body}" if c > 0 else f"- {body}")
        return " ".join(parts)

    def __repr__(self) -> str:
        return f"BiPoly('{self}')"


def _term_body(key: Key, mag: Fraction) -> str:
    i, j = key
    mono = "*".join(p for p in (_pow_str("x", i), _pow_str("l", j)) if p)
    if not mono:
        return str(mag)
    if mag == 1:
        return mono
    return f"{mag}*{mono}"


def _pow_str(var: str, e: int) -> str:
    if e == 0:
        return ""
    if e == 1:
        return var
    return f"{var}^{e}"


def monomial(deg_x: int, deg_lam: int, coeff: Scalar = 1) -> BiPoly:
    """The single-term polynomial coeff * x^deg_x * l^deg_lam."""
    return BiPoly({(deg_x, deg_lam): Fraction(coeff)})


def const(c: Scalar) -> BiPoly:
    """The constant polynomial c."""
    return BiPoly({(0, 0): Fraction(c)})


ZERO = BiPoly()
ONE = const(1)
X = monomial(1, 0)
LAM = monomial(0, 1)
