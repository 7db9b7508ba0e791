"""Test cases related to polynomials over Z/m."""
# pylint: disable=wrong-import-order
import random

import pytest
from supercount import polynomial
from supercount.polynomial import SubproductTree


def _random_poly(rng: random.Random, length: int, modulus: int) -> polynomial.Poly:
    return polynomial.normalize([rng.randrange(modulus) for _ in range(length)], modulus)


@pytest.mark.parametrize("length", [3, 30, 200])
def test_kronecker_product_matches_schoolbook(length):
    """Assert that the packed product agrees with the schoolbook product."""
    rng = random.Random(length)
    modulus = 1009 ** 3
    a = _random_poly(rng, length, modulus)
    b = _random_poly(rng, length + 7, modulus)
    expected = [0] * (len(a) + len(b) - 1)
    for i, a_i in enumerate(a):
        for j, b_j in enumerate(b):
            expected[i + j] += a_i * b_j
    assert polynomial.mul(a, b, modulus) == polynomial.normalize(expected, modulus)


def test_power_and_truncated_power():
    """Assert that (1 + x)^n has binomial coefficients and truncation drops high terms."""
    full = polynomial.power([1, 1], 10, 10 ** 9)
    assert full == [1, 10, 45, 120, 210, 252, 210, 120, 45, 10, 1]
    assert polynomial.power([1, 1], 10, 10 ** 9, max_degree=3) == [1, 10, 45, 120]
    assert polynomial.power([5, 3], 0, 7) == [1]


def test_power_mod_p_is_frobenius():
    """Assert that (1 + x)^p = 1 + x^p over F_p."""
    assert polynomial.power([1, 1], 13, 13) == [1] + [0] * 12 + [1]


def test_evaluate_and_coefficient():
    """Assert Horner evaluation and coefficient lookup outside the stored range."""
    poly = [1, 2, 3]
    assert polynomial.evaluate(poly, 2, 100) == 17
    assert polynomial.coefficient(poly, 5) == 0
    assert polynomial.coefficient(poly, -1) == 0
    assert polynomial.degree([]) == -1


def test_division_with_remainder():
    """Assert that a = q b + r with deg r < deg b over F_p."""
    rng = random.Random(11)
    p = 101
    for _ in range(20):
        a = _random_poly(rng, 12, p)
        b = _random_poly(rng, 4, p) or [1]
        quotient, remainder = polynomial.divmod_field(a, b, p)
        assert len(remainder) < len(b)
        rebuilt = polynomial.add(polynomial.mul(quotient, b, p), remainder, p)
        assert rebuilt == a
    with pytest.raises(ZeroDivisionError):
        polynomial.divmod_field([1, 1], [], p)


def test_gcd_is_monic():
    """Assert that the gcd of (x - 1)(x - 2) and (x - 1)(x - 3) is x - 1."""
    p = 13
    a = polynomial.mul([p - 1, 1], [p - 2, 1], p)
    b = polynomial.scale(polynomial.mul([p - 1, 1], [p - 3, 1], p), 5, p)
    assert polynomial.gcd(a, b, p) == [p - 1, 1]


def test_square_free_factorization():
    """Assert that Yun's algorithm recovers (x + 1)(x + 2)^2(x + 3)^3."""
    p = 101
    factors = [[1, 1], [2, 1], [2, 1], [3, 1], [3, 1], [3, 1]]
    poly = [7]
    for factor in factors:
        poly = polynomial.mul(poly, factor, p)
    assert polynomial.square_free_factorization(poly, p) == [
        ([1, 1], 1),
        ([2, 1], 2),
        ([3, 1], 3),
    ]
    assert not polynomial.is_square_free(poly, p)
    assert polynomial.is_square_free([1, 0, 0, 1], p)


def test_inverse_series():
    """Assert that a series times its inverse is 1 modulo x^n."""
    modulus = 7 ** 4
    poly = [3, 5, 0, 11, 2]
    inverse = polynomial.inverse_series(poly, 17, modulus)
    inverse = polynomial.normalize(inverse, modulus)
    product = polynomial.truncate(polynomial.mul(poly, inverse, modulus), 17)
    assert product == [1]


@pytest.mark.parametrize("count", [1, 2, 5, 16, 33])
def test_subproduct_tree_matches_horner(count):
    """Assert that multipoint evaluation agrees with Horner at every point."""
    rng = random.Random(count)
    modulus = 10007 ** 2
    points = [rng.randrange(modulus) for _ in range(count)]
    poly = _random_poly(rng, 3 * count + 5, modulus)
    tree = SubproductTree(points, modulus)
    assert tree.points == points
    assert tree.evaluate(poly) == [
        polynomial.evaluate(poly, x, modulus) for x in points
    ]


def test_subproduct_tree_of_nothing():
    """Assert that an empty tree evaluates to an empty list."""
    assert SubproductTree([], 13).evaluate([1, 2, 3]) == []
