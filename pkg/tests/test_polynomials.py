"""Exact integer polynomial arithmetic."""

import random

import pytest

from forestposets import BivariatePolynomial, UnivariatePolynomial


def bi(coeffs):
    return BivariatePolynomial(coeffs)


def reference_partial_x(coeffs):
    # independent power-rule derivative on raw coefficient maps
    return {(i - 1, j): c * i for (i, j), c in coeffs.items() if i > 0 and c * i != 0}


def reference_partial_y(coeffs):
    return {(i, j - 1): c * j for (i, j), c in coeffs.items() if j > 0 and c * j != 0}


def random_poly(rng):
    return bi({(rng.randrange(4), rng.randrange(4)): rng.randrange(-9, 10)
               for _ in range(rng.randrange(1, 7))})


class TestBivariate:
    def test_dx_of_x_times_one(self):
        one = BivariatePolynomial.constant(1)
        assert one.shift(1, 0).partial_x() == one

    def test_dx_example_by_hand(self):
        # x*(1 - x + x*y) = x - x^2 + x^2*y, so d/dx gives 1 - 2x + 2xy
        p = bi({(0, 0): 1, (1, 0): -1, (1, 1): 1})
        expected = bi({(0, 0): 1, (1, 0): -2, (1, 1): 2})
        assert p.shift(1, 0).partial_x() == expected

    def test_partials_match_power_rule(self):
        rng = random.Random(20240817)
        for _ in range(50):
            p = random_poly(rng)
            assert p.partial_x().coeffs == reference_partial_x(p.coeffs)
            assert p.partial_y().coeffs == reference_partial_y(p.coeffs)

    def test_eval_example(self):
        p = bi({(1, 1): 1, (1, 0): -1, (0, 0): 1})  # xy - x + 1
        assert p.eval(1, 1) == 1
        assert p.eval(2, 3) == 5

    def test_ring_ops_agree_with_eval(self):
        rng = random.Random(99)
        for _ in range(40):
            p, q = random_poly(rng), random_poly(rng)
            x, y = rng.randrange(-3, 4), rng.randrange(-3, 4)
            assert (p + q).eval(x, y) == p.eval(x, y) + q.eval(x, y)
            assert (p * q).eval(x, y) == p.eval(x, y) * q.eval(x, y)
            assert (p - q).eval(x, y) == p.eval(x, y) - q.eval(x, y)

    def test_int_coercion(self):
        p = bi({(1, 0): 1})
        assert p + 1 == bi({(1, 0): 1, (0, 0): 1})
        assert 2 * p == bi({(1, 0): 2})
        assert 1 - p == bi({(0, 0): 1, (1, 0): -1})

    def test_no_zero_coefficients_stored(self):
        p = bi({(1, 1): 2, (0, 0): 5})
        q = bi({(1, 1): -2, (0, 0): 1})
        assert (p + q).coeffs == {(0, 0): 6}
        assert not (p - p)

    def test_substitute_y(self):
        p = bi({(2, 2): 1, (2, 1): -3, (2, 0): 2, (1, 1): 3, (1, 0): -3, (0, 0): 1})
        assert p.substitute_y(1) == UnivariatePolynomial.constant(1)
        assert p.substitute_y(0) == UnivariatePolynomial({2: 2, 1: -3, 0: 1})

    def test_serialization_order(self):
        p = bi({(2, 0): 3, (0, 1): -1, (1, 1): 4})
        assert p.to_triples() == [(0, 1, -1), (1, 1, 4), (2, 0, 3)]

    def test_str_rendering(self):
        p = bi({(2, 2): 1, (2, 1): -3, (2, 0): 2, (1, 1): 3, (1, 0): -3, (0, 0): 1})
        assert str(p) == "x^2*y^2 - 3*x^2*y + 2*x^2 + 3*x*y - 3*x + 1"
        assert str(bi({})) == "0"
        assert str(bi({(0, 0): -4})) == "-4"


class TestUnivariate:
    def test_from_roots(self):
        p = UnivariatePolynomial.from_roots([1, 2])
        assert p == UnivariatePolynomial({2: 1, 1: -3, 0: 2})
        assert p.eval(1) == 0 and p.eval(2) == 0 and p.eval(0) == 2

    def test_monic_and_degree(self):
        p = UnivariatePolynomial.from_roots([1, 1, 4])
        assert p.degree == 3 and p.is_monic()
        assert UnivariatePolynomial.from_roots([]).degree == 0

    def test_arithmetic(self):
        p = UnivariatePolynomial({1: 1, 0: -1})
        q = UnivariatePolynomial({1: 1, 0: -2})
        assert p * q == UnivariatePolynomial({2: 1, 1: -3, 0: 2})
        assert p + q == UnivariatePolynomial({1: 2, 0: -3})
        assert p - p == UnivariatePolynomial({})

    def test_serialization(self):
        p = UnivariatePolynomial({2: 1, 0: 2})
        assert p.to_pairs() == [(0, 2), (2, 1)]

    def test_str_uses_variable(self):
        assert str(UnivariatePolynomial({2: 1, 1: -3, 0: 2})) == "y^2 - 3*y + 2"
        assert str(UnivariatePolynomial({2: 1, 1: 3, 0: 1}, var="x")) == "x^2 + 3*x + 1"

    def test_int_comparison(self):
        assert UnivariatePolynomial.constant(1) == 1
        assert UnivariatePolynomial({1: 1}) != 1
