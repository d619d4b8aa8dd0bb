"""Product expansions for any number of factors, and the identities they obey.

Because ``translate`` is multiplicative on products, the r-th difference
quotient of f_1*...*f_n has the alternating closed form

    delta^r(f_1...f_n) = l^(-r) * sum_k C(r,k) (-1)^(r-k) prod_i T^k(f_i)

where T^k(f_i) is expanded binomially as sum_j C(k,j) l^j delta^j(f_i).
The alternating sum is divisible by l^r; ``multi_delta`` performs that
division exactly and treats any failure as an internal bug.

``forward_binomial`` / ``inverse_binomial`` are the two directions of the
binomial inversion between the sequences l^r*delta^r(F) and T^r(F), and
``egf_pair`` / ``egf_check`` restate that inversion as multiplication of
exponential generating functions by e^t.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from typing import Sequence

from .bipoly import LAM, ONE, ZERO, BiPoly, NotDivisibleError, binom
from .operators import delta_pow, translate_pow


class InternalDivisibilityError(RuntimeError):
    """The alternating sum was not divisible by l^r; an implementation bug."""


class OrderMismatchError(ValueError):
    """Raised when comparing truncated series of different orders."""


@dataclass(frozen=True)
class TruncatedSeries:
    """Truncation of an exponential generating function.

    ``coeffs[r]`` is the coefficient of t^r/r!, so multiplying the series by
    e^t acts on coefficients as the plain binomial transform.
    """

    order: int
    coeffs: tuple[BiPoly, ...]

    def __post_init__(self) -> None:
        if self.order < 0:
            raise ValueError("truncation order must be nonnegative")
        if len(self.coeffs) != self.order + 1:
            raise ValueError(
                f"series of order {self.order} needs {self.order + 1} "
                f"coefficients, got {len(self.coeffs)}"
            )


def _product(factors: Sequence[BiPoly]) -> BiPoly:
    if not factors:
        raise ValueError("factor list must be nonempty")
    return math.prod(factors, start=ONE)


def check_multiplicativity(factors: Sequence[BiPoly], r: int) -> bool:
    """True iff T^r(prod f_i) equals prod T^r(f_i), exactly."""
    lhs = translate_pow(_product(factors), r)
    rhs = _product([translate_pow(f, r) for f in factors])
    return lhs == rhs


def translate_pow_expanded(f: BiPoly, k: int) -> BiPoly:
    """T^k(f) via the binomial expansion sum_j C(k,j) l^j delta^j(f).

    Must agree with the iterated ``translate_pow``; the agreement is a
    tested property.
    """
    if k < 0:
        raise ValueError("operator order must be nonnegative")
    total = ZERO
    dj = f
    for j in range(k + 1):
        total = total + binom(k, j) * LAM**j * dj
        if j < k:
            dj = delta_pow(dj, 1)
    return total


def multi_delta(factors: Sequence[BiPoly], r: int) -> BiPoly:
    """delta^r of a product via the alternating translate expansion.

    Computes sum_k C(r,k) (-1)^(r-k) prod_i T^k(f_i) with each T^k taken
    from ``translate_pow_expanded``, then divides by l exactly r times.
    Equals delta_pow of the product; requires r >= 1.
    """
    if not factors:
        raise ValueError("factor list must be nonempty")
    if r < 1:
        raise ValueError("multi_delta requires a positive order r")
    # Difference-quotient chains per factor, reused across all k.
    chains = [_delta_chain(f, r) for f in factors]
    acc = ZERO
    sign = (-1) ** r
    for k in range(r + 1):
        prod = ONE
        for chain in chains:
            expanded = ZERO
            for j in range(k + 1):
                expanded = expanded + binom(k, j) * LAM**j * chain[j]
            prod = prod * expanded
        acc = acc + sign * binom(r, k) * prod
        sign = -sign
    out = acc
    for _ in range(r):
        try:
            out = out.divide_by_lambda()
        except NotDivisibleError as exc:
            raise InternalDivisibilityError(
                f"alternating sum for r={r} not divisible by l^{r}: {exc}"
            ) from exc
    return out


def forward_binomial(factors: Sequence[BiPoly], r: int) -> BiPoly:
    """Alternating sum sum_k C(r,k) (-1)^(r-k) T^k(F) for F = prod f_i.

    Equals l^r * delta^r(F): the forward direction of the inversion pair.
    """
    if r < 0:
        raise ValueError("operator order must be nonnegative")
    big_f = _product(factors)
    acc = ZERO
    sign = (-1) ** r
    for k in range(r + 1):
        acc = acc + sign * binom(r, k) * translate_pow(big_f, k)
        sign = -sign
    return acc


def inverse_binomial(factors: Sequence[BiPoly], r: int) -> BiPoly:
    """Plain sum sum_k C(r,k) l^k delta^k(F) for F = prod f_i.

    Equals T^r(F): the inverse direction of the inversion pair.
    """
    if r < 0:
        raise ValueError("operator order must be nonnegative")
    big_f = _product(factors)
    acc = ZERO
    chain = _delta_chain(big_f, r)
    for k in range(r + 1):
        acc = acc + binom(r, k) * LAM**k * chain[k]
    return acc


def egf_pair(
    factors: Sequence[BiPoly], order: int = 8
) -> tuple[TruncatedSeries, TruncatedSeries]:
    """EGF truncations of the two sequences attached to F = prod f_i.

    The first series carries l^r * delta^r(F), the second T^r(F), both for
    r = 0..order.  The second is e^t times the first; see ``egf_check``.
    """
    big_f = _product(factors)
    diff_side = []
    shift_side = []
    dr, tr = big_f, big_f
    for r in range(order + 1):
        diff_side.append(LAM**r * dr)
        shift_side.append(tr)
        if r < order:
            dr = delta_pow(dr, 1)
            tr = translate_pow(tr, 1)
    return (
        TruncatedSeries(order, tuple(diff_side)),
        TruncatedSeries(order, tuple(shift_side)),
    )


def egf_check(a: TruncatedSeries, abar: TruncatedSeries) -> bool:
    """True iff abar = e^t * a, coefficient by coefficient.

    For EGFs, multiplication by e^t is the binomial transform:
    abar.coeffs[r] must equal sum_k C(r,k) a.coeffs[k], exactly.
    """
    if a.order != abar.order:
        raise OrderMismatchError(
            f"series orders differ: {a.order} vs {abar.order}"
        )
    for r in range(a.order + 1):
        expected = ZERO
        for k in range(r + 1):
            expected = expected + binom(r, k) * a.coeffs[k]
        if abar.coeffs[r] != expected:
            return False
    return True


def _delta_chain(p: BiPoly, r: int) -> list[BiPoly]:
    chain = [p]
    for _ in range(r):
        chain.append(delta_pow(chain[-1], 1))
    return chain
