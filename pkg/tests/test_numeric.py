"""Floating-point harness: error bounds, cancellation, exact-backend ties."""

import json
import math

import numpy as np
import pytest

from diffquot import (
    BiPoly,
    GridSpec,
    NumericFn,
    SingularityInWindowError,
    ZeroLambdaError,
    binom,
    delta_num,
    delta_num_pow,
    delta_pow,
    exp_fn,
    leibniz_terms,
    poly_fn,
    shifted_reciprocal,
    sin_fn,
    cos_fn,
    verify_multi_factor,
    verify_two_factor,
)

GRID = GridSpec(x_start=0.0, step=2.0 / 63, count=64, lam=0.1)


class TestDeltaNum:
    def test_identity_slope(self):
        d = delta_num(poly_fn(0, 1), 0.1)
        for x in (-1.3, 0.0, 0.7, 2.5):
            assert d(x) == pytest.approx(1.0, rel=1e-12)

    def test_exponential_closed_form(self):
        # (e^lam - 1)/lam at lam = 0.1, computed independently via expm1.
        d = delta_num(exp_fn(), 0.1)
        assert d(0.0) == pytest.approx(math.expm1(0.1) / 0.1, rel=1e-13)
        assert abs(d(0.0) - 1.0517091808) < 1e-9

    def test_poly_matches_exact_backend(self):
        # Same cubic through the float path and the exact path.
        p = BiPoly({(3, 0): 2, (1, 0): -1, (0, 0): 3})
        fn = poly_fn(3, -1, 0, 2)
        d = delta_num(fn, 0.5)
        exact = delta_pow(p, 1)
        x = 1.0 / 3.0
        assert d(x) == pytest.approx(exact.evaluate_float(x, 0.5), rel=1e-12)

    def test_zero_lambda_rejected(self):
        with pytest.raises(ZeroLambdaError):
            delta_num(exp_fn(), 0.0)

    def test_vectorized(self):
        d = delta_num(sin_fn(), 0.1)
        xs = np.array([0.0, 0.5, 1.0])
        out = d(xs)
        assert out.shape == (3,)

    def test_iterated_negative_order_rejected(self):
        with pytest.raises(ValueError):
            delta_num_pow(exp_fn(), 0.1, -1)


class TestCatalog:
    def test_parse_names(self):
        assert NumericFn.parse("exp").name == "exp"
        assert NumericFn.parse("sin").name == "sin"
        assert NumericFn.parse("cos").name == "cos"
        p = NumericFn.parse("poly:1,0,2")
        assert p(2.0) == pytest.approx(9.0)
        r = NumericFn.parse("recip:1.5")
        assert r(0.5) == pytest.approx(0.5)
        assert r.pole == -1.5

    def test_parse_rejects_unknown(self):
        with pytest.raises(ValueError):
            NumericFn.parse("tan")
        with pytest.raises(ValueError):
            NumericFn.parse("poly:a,b")

    def test_grid_validation(self):
        with pytest.raises(ValueError):
            GridSpec(0.0, -0.1, 4, 0.1)
        with pytest.raises(ValueError):
            GridSpec(0.0, 0.1, 0, 0.1)
        with pytest.raises(ZeroLambdaError):
            GridSpec(0.0, 0.1, 4, 0.0)

    def test_grid_nodes(self):
        g = GridSpec(1.0, 0.5, 3, 0.1)
        assert np.allclose(g.nodes(), [1.0, 1.5, 2.0])


class TestVerifyTwoFactor:
    def test_constants_are_exact(self):
        rep = verify_two_factor(poly_fn(1), poly_fn(1), 2, GRID, 1e-9)
        assert rep.max_abs_err == 0.0
        assert rep.passed

    def test_exp_sin_order_three(self):
        rep = verify_two_factor(exp_fn(), sin_fn(), 3, GRID, 1e-9)
        assert rep.passed
        assert rep.trials == 64
        assert rep.cancellation_ratio >= 1.0

    def test_rounding_error_grows_as_lambda_shrinks(self):
        small = GridSpec(0.0, 2.0 / 63, 64, 1e-6)
        rep_small = verify_two_factor(exp_fn(), sin_fn(), 3, small, 1e-9)
        rep_big = verify_two_factor(exp_fn(), sin_fn(), 3, GRID, 1e-9)
        assert rep_small.max_rel_err > rep_big.max_rel_err

    def test_cancellation_grows_at_order_four(self):
        # At r = 4 the result has a near-root inside the window, and the
        # tiny step parks it next to a node; the ratio jumps by orders of
        # magnitude relative to lam = 0.1.
        small = GridSpec(0.0, 2.0 / 63, 64, 1e-6)
        rep_small = verify_two_factor(exp_fn(), sin_fn(), 4, small, 1e-9)
        rep_big = verify_two_factor(exp_fn(), sin_fn(), 4, GRID, 1e-9)
        assert rep_small.cancellation_ratio > rep_big.cancellation_ratio

    def test_order_zero_rejected(self):
        with pytest.raises(ValueError):
            verify_two_factor(exp_fn(), sin_fn(), 0, GRID, 1e-9)

    def test_bad_tolerance_rejected(self):
        with pytest.raises(ValueError):
            verify_two_factor(exp_fn(), sin_fn(), 1, GRID, 0.0)

    def test_report_json_shape(self):
        rep = verify_two_factor(exp_fn(), sin_fn(), 2, GRID, 1e-9)
        payload = json.loads(rep.to_json())
        assert set(payload) == {
            "max_abs_err",
            "max_rel_err",
            "cancellation_ratio",
            "trials",
            "pass",
        }
        assert payload["pass"] is True
        assert payload["trials"] == 64


class TestVerifyMultiFactor:
    def test_constants_are_exact(self):
        rep = verify_multi_factor([poly_fn(1)] * 3, 2, GRID, 1e-9)
        assert rep.max_abs_err == 0.0

    def test_exp_sin_cos_order_two(self):
        rep = verify_multi_factor([exp_fn(), sin_fn(), cos_fn()], 2, GRID, 1e-9)
        assert rep.passed

    def test_cancellation_explodes_as_lambda_shrinks(self):
        small = GridSpec(0.0, 2.0 / 63, 64, 1e-6)
        for r in (1, 4):
            rep_small = verify_multi_factor([exp_fn(), sin_fn()], r, small, 1e-9)
            rep_big = verify_multi_factor([exp_fn(), sin_fn()], r, GRID, 1e-9)
            assert rep_small.cancellation_ratio > rep_big.cancellation_ratio

    def test_alternating_sum_cancels_more_than_positive_sum(self):
        # Same two factors: the alternating multifactor sum loses more
        # digits than the positive-coefficient two-factor expansion.
        for r in (1, 2, 3, 4):
            two = verify_two_factor(exp_fn(), sin_fn(), r, GRID, 1e-9)
            multi = verify_multi_factor([exp_fn(), sin_fn()], r, GRID, 1e-9)
            assert multi.cancellation_ratio >= two.cancellation_ratio

    def test_agrees_with_two_factor_closed_form(self):
        # Evaluate both closed forms directly on the same nodes; they are
        # the same identity written two ways, so they must agree closely.
        f, g = poly_fn(0, 1), exp_fn()
        r, lam = 2, GRID.lam
        xs = GRID.nodes()
        dfs, dgs = [f(xs)], [g(xs)]
        fk, gk = f, g
        for _ in range(r):
            fk, gk = delta_num(fk, lam), delta_num(gk, lam)
            dfs.append(fk(xs))
            dgs.append(gk(xs))
        rhs_two = np.zeros_like(xs)
        for t in leibniz_terms(r).terms:
            rhs_two += t.coeff * lam**t.lambda_exp * dfs[t.order_f] * dgs[t.order_g]
        alt = np.zeros_like(xs)
        sign = (-1) ** r
        for k in range(r + 1):
            prod = np.ones_like(xs)
            for vals in (dfs, dgs):
                tk = np.zeros_like(xs)
                for j in range(k + 1):
                    tk += binom(k, j) * lam**j * vals[j]
                prod = prod * tk
            alt += sign * binom(r, k) * prod
            sign = -sign
        rhs_multi = alt / lam**r
        scale = np.maximum(np.abs(rhs_two), 1e-300)
        assert float(np.max(np.abs(rhs_multi - rhs_two) / scale)) <= 1e-12

    def test_empty_factor_list_rejected(self):
        with pytest.raises(ValueError):
            verify_multi_factor([], 2, GRID, 1e-9)


class TestSingularities:
    def test_pole_in_window_rejected(self):
        bad = GridSpec(0.5, 0.1, 10, 0.1)
        with pytest.raises(SingularityInWindowError):
            verify_two_factor(shifted_reciprocal(-1.0), sin_fn(), 2, bad, 1e-9)

    def test_distant_pole_accepted(self):
        rep = verify_two_factor(shifted_reciprocal(10.0), sin_fn(), 2, GRID, 1e-9)
        assert rep.passed

    def test_exact_backend_agreement_on_polys(self):
        # Catalog polynomial through r numeric quotients vs the exact
        # pipeline evaluated in floats.
        p = BiPoly({(4, 0): 1, (2, 0): -3, (0, 0): 2})
        fn = poly_fn(2, 0, -3, 0, 1)
        lam = 0.5
        for r in (1, 2, 3):
            exact = delta_pow(p, r)
            dq = delta_num_pow(fn, lam, r)
            for x in (0.0, 0.25, 1.0, 2.25):
                want = exact.evaluate_float(x, lam)
                got = float(dq(x))
                assert got == pytest.approx(want, rel=1e-12, abs=1e-12)
