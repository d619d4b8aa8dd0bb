"""Exact polynomial layer: pinned examples plus algebraic laws."""

import random
from fractions import Fraction

import pytest
from hypothesis import given
from hypothesis import strategies as st

from diffquot import LAM, ONE, X, ZERO, BiPoly, NotDivisibleError, binom, const, monomial

from _oracles import conv_mul, eval_naive, pascal_binom
from _strategies import bipolys, rationals


class TestBinom:
    def test_direct_values(self):
        assert binom(5, 2) == 10
        assert binom(7, 0) == 1

    def test_large_value_against_pascal(self):
        # Pascal-triangle brute force gives 155117520 for C(30, 15).
        assert pascal_binom(30, 15) == 155117520
        assert binom(30, 15) == 155117520

    def test_matches_pascal_triangle(self):
        for n in range(0, 26):
            for k in range(0, n + 3):
                assert binom(n, k) == pascal_binom(n, k)

    def test_k_beyond_n_is_zero(self):
        assert binom(3, 5) == 0

    def test_negative_arguments_rejected(self):
        with pytest.raises(ValueError):
            binom(-1, 0)
        with pytest.raises(ValueError):
            binom(4, -2)


class TestArithmetic:
    def test_additive_inverse_is_empty(self):
        assert (X + (-X)) == ZERO
        assert not (X - X).terms

    def test_conjugate_product(self):
        assert (X + LAM) * (X - LAM) == X**2 - LAM**2

    def test_mul_against_convolution_oracle(self):
        rng = random.Random(12)
        for _ in range(25):
            a = _random_poly(rng, max_deg=5)
            b = _random_poly(rng, max_deg=5)
            assert a * b == conv_mul(a, b)

    def test_scalar_multiplication(self):
        assert Fraction(3, 2) * X == BiPoly({(1, 0): Fraction(3, 2)})
        assert 2 * (X + LAM) == BiPoly({(1, 0): 2, (0, 1): 2})
        assert 0 * X == ZERO

    @given(a=bipolys(), b=bipolys(), c=bipolys())
    def test_ring_axioms(self, a, b, c):
        assert a + b == b + a
        assert (a + b) + c == a + (b + c)
        assert a * b == b * a
        assert (a * b) * c == a * (b * c)
        assert a * (b + c) == a * b + a * c

    @given(a=bipolys())
    def test_identities(self, a):
        assert a + ZERO == a
        assert a * ONE == a
        assert a - a == ZERO

    def test_pow_rejects_negative(self):
        with pytest.raises(ValueError):
            X**-1

    def test_negative_exponent_keys_rejected(self):
        with pytest.raises(ValueError):
            BiPoly({(-1, 0): 1})


class TestShiftX:
    def test_square(self):
        assert (X**2).shift_x() == X**2 + 2 * X * LAM + LAM**2

    def test_constant_fixed(self):
        assert const(7).shift_x() == const(7)

    def test_cube_at_random_points(self):
        # Both sides evaluated at 20 random rational points.
        p = X**3
        q = p.shift_x()
        rng = random.Random(3)
        for _ in range(20):
            x0 = Fraction(rng.randint(-9, 9), rng.randint(1, 7))
            l0 = Fraction(rng.randint(-9, 9), rng.randint(1, 7))
            assert eval_naive(q, x0, l0) == eval_naive(p, x0 + l0, l0)
        assert q == X**3 + 3 * LAM * X**2 + 3 * LAM**2 * X + LAM**3

    @given(p=bipolys())
    def test_difference_is_multiple_of_l(self, p):
        diff = p.shift_x() - p
        assert all(j >= 1 for (_, j) in diff.terms)

    @given(p=bipolys(), x0=rationals(max_num=8, max_den=5), l0=rationals(max_num=8, max_den=5))
    def test_eval_compatibility(self, p, x0, l0):
        assert p.shift_x().evaluate(x0, l0) == p.evaluate(x0 + l0, l0)

    @given(p=bipolys())
    def test_lambda_zero_slice_unchanged(self, p):
        assert p.shift_x().at_lambda_zero() == p.at_lambda_zero()


class TestDivideByLambda:
    def test_plain_division(self):
        p = 2 * LAM * X + LAM**2
        assert p.divide_by_lambda() == 2 * X + LAM

    def test_zero(self):
        assert ZERO.divide_by_lambda() == ZERO

    def test_l_free_term_rejected(self):
        with pytest.raises(NotDivisibleError):
            (X + LAM).divide_by_lambda()


class TestEvaluate:
    def test_point_value(self):
        p = 2 * X + LAM
        assert p.evaluate(3, Fraction(1, 2)) == Fraction(13, 2)

    def test_origin_gives_constant_term(self):
        p = BiPoly({(2, 1): 4, (0, 0): Fraction(5, 3), (1, 0): -2})
        assert p.evaluate(0, 0) == Fraction(5, 3)

    def test_against_naive_oracle(self):
        rng = random.Random(77)
        p = _random_poly(rng, max_deg=4)
        for _ in range(10):
            x0 = Fraction(rng.randint(-10, 10), rng.randint(1, 6))
            l0 = Fraction(rng.randint(-10, 10), rng.randint(1, 6))
            assert p.evaluate(x0, l0) == eval_naive(p, x0, l0)

    def test_float_evaluation(self):
        p = 2 * X + LAM
        assert p.evaluate_float(3.0, 0.5) == pytest.approx(6.5)


class TestLambdaZeroAndDerivative:
    def test_lambda_zero_examples(self):
        assert (2 * X + LAM).at_lambda_zero() == 2 * X
        assert (LAM**2).at_lambda_zero() == ZERO

    def test_lambda_zero_matches_second_derivative(self):
        # 6x + 6l collapses to 6x, the second derivative of x^3.
        assert (6 * X + 6 * LAM).at_lambda_zero() == (X**3).deriv_x(2)

    def test_derivative_examples(self):
        assert (X**3).deriv_x() == 3 * X**2
        assert (X**3).deriv_x(4) == ZERO
        assert (X**2 * LAM + X).deriv_x() == 2 * X * LAM + ONE

    @given(p=bipolys(), r=st.integers(0, 12))
    def test_derivative_beyond_degree_is_zero(self, p, r):
        if r > p.deg_x:
            assert p.deriv_x(r) == ZERO

    def test_negative_order_rejected(self):
        with pytest.raises(ValueError):
            X.deriv_x(-1)


class TestRendering:
    def test_canonical_order_and_coefficients(self):
        p = BiPoly({(2, 1): 3, (0, 2): Fraction(1, 2), (1, 0): -1})
        assert str(p) == "3*x^2*l - x + 1/2*l^2"

    def test_zero(self):
        assert str(ZERO) == "0"

    def test_unit_coefficients_suppressed(self):
        assert str(X**3) == "x^3"
        assert str(-X) == "-x"
        assert str(X * LAM) == "x*l"

    def test_constants(self):
        assert str(const(Fraction(-5, 3))) == "-5/3"
        assert str(ONE) == "1"

    def test_degrees(self):
        p = BiPoly({(2, 1): 3, (0, 2): 1})
        assert p.deg_x == 2
        assert p.deg_lam == 2
        assert ZERO.deg_x == -1
        assert ZERO.deg_lam == -1


def _random_poly(rng: random.Random, max_deg: int = 5) -> BiPoly:
    terms = {}
    for _ in range(rng.randint(1, 6)):
        key = (rng.randint(0, max_deg), rng.randint(0, 2))
        terms[key] = terms.get(key, Fraction(0)) + Fraction(
            rng.randint(-20, 20), rng.randint(1, 10)
        )
    return BiPoly(terms)
