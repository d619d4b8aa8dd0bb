"""Floating-point backend: difference quotients of real functions on grids.

The exact BiPoly pipeline proves the product expansions as polynomial
identities; this module applies the same formulas to transcendental
functions in double precision and reports how close the two sides of each
identity land.  Since the identities are exact in real arithmetic, all
observed error is rounding, and the interesting diagnostic is the
cancellation ratio: the alternating multifactor sum shreds significant
digits as the step shrinks, and the ratio quantifies that.

The function catalog is closed (exp, sin, cos, polynomials, shifted
reciprocals) so reports are reproducible; arbitrary functions belong to the
exact backend.
"""

from __future__ import annotations

import json
from dataclasses import dataclass
from typing import Callable, Sequence

import numpy as np

from .bipoly import binom
from .leibniz import leibniz_terms

_REL_FLOOR = 1e-300  # denominator guard for relative error and cancellation


class ZeroLambdaError(ValueError):
    """Raised when a difference quotient is requested with step 0."""


class SingularityInWindowError(ValueError):
    """Raised when a grid's sampling stencil reaches a function's pole."""


@dataclass(frozen=True)
class NumericFn:
    """A catalog function: a vectorized evaluator plus its pole, if any."""

    name: str
    call: Callable[[np.ndarray], np.ndarray]
    pole: float | None = None

    def __call__(self, x):
        return self.call(x)

    @classmethod
    def parse(cls, text: str) -> "NumericFn":
        """Build a catalog function from its name.

        Accepted forms: ``exp``, ``sin``, ``cos``, ``poly:c0,c1,...`` and
        ``recip:a`` (the shifted reciprocal 1/(x+a)).
        """
        if text == "exp":
            return exp_fn()
        if text == "sin":
            return sin_fn()
        if text == "cos":
            return cos_fn()
        if text.startswith("poly:"):
            try:
                coeffs = [float(c) for c in text[5:].split(",")]
            except ValueError:
                raise ValueError(f"bad polynomial coefficients in {text!r}")
            return poly_fn(*coeffs)
        if text.startswith("recip:"):
            try:
                a = float(text[6:])
            except ValueError:
                raise ValueError(f"bad shift in {text!r}")
            return shifted_reciprocal(a)
        raise ValueError(
            f"unknown function {text!r}; expected exp, sin, cos, "
            "poly:c0,c1,... or recip:a"
        )


def exp_fn() -> NumericFn:
    return NumericFn("exp", np.exp)


def sin_fn() -> NumericFn:
    return NumericFn("sin", np.sin)


def cos_fn() -> NumericFn:
    return NumericFn("cos", np.cos)


def poly_fn(*coeffs: float) -> NumericFn:
    """Polynomial c0 + c1*x + ... + cd*x^d, evaluated by Horner's scheme."""
    cs = tuple(float(c) for c in coeffs) or (0.0,)

    def call(x):
        x = np.asarray(x, dtype=float)
        acc = np.zeros_like(x)
        for c in reversed(cs):
            acc = acc * x + c
        return acc

    name = "poly:" + ",".join(_fmt_num(c) for c in cs)
    return NumericFn(name, call)


def shifted_reciprocal(a: float) -> NumericFn:
    """1 / (x + a); undefined at x = -a."""
    a = float(a)

    def call(x):
        return 1.0 / (np.asarray(x, dtype=float) + a)

    return NumericFn(f"recip:{_fmt_num(a)}", call, pole=-a)


def _fmt_num(c: float) -> str:
    return str(int(c)) if c == int(c) else repr(c)


@dataclass(frozen=True)
class GridSpec:
    """Uniform sampling window: count nodes from x_start with given spacing."""

    x_start: float
    step: float
    count: int
    lam: float

    def __post_init__(self) -> None:
        if self.step <= 0:
            raise ValueError("grid step must be positive")
        if self.count < 1:
            raise ValueError("grid must contain at least one node")
        if self.lam == 0:
            raise ZeroLambdaError("step parameter lambda must be nonzero")

    def nodes(self) -> np.ndarray:
        return self.x_start + self.step * np.arange(self.count)


@dataclass(frozen=True)
class VerificationReport:
    """Grid-wide error and cancellation summary for one identity check."""

    max_abs_err: float
    max_rel_err: float
    cancellation_ratio: float
    trials: int
    passed: bool

    def to_json(self) -> str:
        """Single-line JSON with keys max_abs_err, max_rel_err,
        cancellation_ratio, trials, pass."""
        return json.dumps(
            {
                "max_abs_err": self.max_abs_err,
                "max_rel_err": self.max_rel_err,
                "cancellation_ratio": self.cancellation_ratio,
                "trials": self.trials,
                "pass": self.passed,
            }
        )


def delta_num(f: NumericFn, lam: float) -> NumericFn:
    """Numeric difference quotient x -> (f(x+lam) - f(x)) / lam."""
    if lam == 0:
        raise ZeroLambdaError("step parameter lambda must be nonzero")
    inner = f.call

    def call(x):
        return (inner(x + lam) - inner(x)) / lam

    return NumericFn(f"dq({f.name})", call, pole=f.pole)


def delta_num_pow(f: NumericFn, lam: float, r: int) -> NumericFn:
    """r-fold numeric difference quotient, by iterated definition."""
    if r < 0:
        raise ValueError("operator order must be nonnegative")
    for _ in range(r):
        f = delta_num(f, lam)
    return f


def _product_fn(fs: Sequence[NumericFn]) -> NumericFn:
    calls = [f.call for f in fs]

    def call(x):
        acc = np.ones_like(np.asarray(x, dtype=float))
        for c in calls:
            acc = acc * c(x)
        return acc

    return NumericFn("*".join(f.name for f in fs), call)


def _guard_singularities(fs: Sequence[NumericFn], r: int, grid: GridSpec) -> None:
    # Stencil points reach r steps of lam past the nodes; on top of that we
    # demand clearance of 10*|lam|*r around any pole and 2*(r+1)*|lam| beyond
    # the last node.
    lo = grid.x_start
    hi = grid.x_start + grid.step * (grid.count - 1)
    if grid.lam > 0:
        hi += r * grid.lam
    else:
        lo += r * grid.lam
    margin = max(10.0 * abs(grid.lam) * max(r, 1), 2.0 * (r + 1) * abs(grid.lam))
    for f in fs:
        if f.pole is not None and lo - margin <= f.pole <= hi + margin:
            raise SingularityInWindowError(
                f"{f.name} has a pole at {f.pole}, inside the sampling window "
                f"[{lo - margin}, {hi + margin}]"
            )


def _summarize(
    lhs: np.ndarray,
    rhs: np.ndarray,
    term_abs_sum: np.ndarray,
    result: np.ndarray,
    count: int,
    tol: float,
) -> VerificationReport:
    # In hopeless regimes (tiny lam, alternating sums fully cancelled) the
    # ratios legitimately overflow; report inf rather than warn.
    with np.errstate(over="ignore", divide="ignore"):
        abs_err = np.abs(rhs - lhs)
        rel_err = abs_err / np.maximum(np.abs(lhs), _REL_FLOOR)
        ratio = term_abs_sum / np.maximum(np.abs(result), _REL_FLOOR)
    max_rel = float(np.max(rel_err))
    return VerificationReport(
        max_abs_err=float(np.max(abs_err)),
        max_rel_err=max_rel,
        cancellation_ratio=float(np.max(ratio)),
        trials=count,
        passed=max_rel <= tol,
    )


def verify_two_factor(
    f: NumericFn, g: NumericFn, r: int, grid: GridSpec, tol: float
) -> VerificationReport:
    """Compare delta^r(f*g) by iterated definition against the closed form.

    The closed form is the two-factor expansion evaluated term by term at
    every node; the cancellation ratio is taken over those summands.
    """
    if r < 1:
        raise ValueError("verification requires a positive order r")
    if tol <= 0:
        raise ValueError("tolerance must be positive")
    _guard_singularities([f, g], r, grid)
    lam = grid.lam
    xs = grid.nodes()

    lhs = delta_num_pow(_product_fn([f, g]), lam, r)(xs)

    dfs = [f(xs)]
    dgs = [g(xs)]
    fk, gk = f, g
    for _ in range(r):
        fk = delta_num(fk, lam)
        gk = delta_num(gk, lam)
        dfs.append(fk(xs))
        dgs.append(gk(xs))

    rhs = np.zeros_like(xs)
    abs_sum = np.zeros_like(xs)
    for t in leibniz_terms(r).terms:
        term = t.coeff * lam**t.lambda_exp * dfs[t.order_f] * dgs[t.order_g]
        rhs = rhs + term
        abs_sum = abs_sum + np.abs(term)
    return _summarize(lhs, rhs, abs_sum, rhs, grid.count, tol)


def verify_multi_factor(
    fs: Sequence[NumericFn], r: int, grid: GridSpec, tol: float
) -> VerificationReport:
    """Compare delta^r(prod f_i) against the alternating translate sum.

    The right side evaluates sum_k C(r,k) (-1)^(r-k) prod_i T^k(f_i), with
    each T^k(f_i) expanded as sum_j C(k,j) lam^j delta^j(f_i), then divides
    by lam^r.  The cancellation ratio is taken over the alternating k-sum
    before that division; its growth as lam shrinks is the point.
    """
    if not fs:
        raise ValueError("factor list must be nonempty")
    if r < 1:
        raise ValueError("verification requires a positive order r")
    if tol <= 0:
        raise ValueError("tolerance must be positive")
    _guard_singularities(fs, r, grid)
    lam = grid.lam
    xs = grid.nodes()

    lhs = delta_num_pow(_product_fn(fs), lam, r)(xs)

    # delta^j(f_i) sampled once per factor, reused across all k.
    chains = []
    for f in fs:
        vals = [f(xs)]
        fj = f
        for _ in range(r):
            fj = delta_num(fj, lam)
            vals.append(fj(xs))
        chains.append(vals)

    alt_sum = np.zeros_like(xs)
    abs_sum = np.zeros_like(xs)
    sign = (-1) ** r
    for k in range(r + 1):
        prod = np.ones_like(xs)
        for vals in chains:
            tk = np.zeros_like(xs)
            for j in range(k + 1):
                tk = tk + binom(k, j) * lam**j * vals[j]
            prod = prod * tk
        term = sign * binom(r, k) * prod
        alt_sum = alt_sum + term
        abs_sum = abs_sum + np.abs(term)
        sign = -sign

    rhs = alt_sum / lam**r
    return _summarize(lhs, rhs, abs_sum, alt_sum, grid.count, tol)
