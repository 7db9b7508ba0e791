"""Test cases related to the brute-force oracles."""
# pylint: disable=wrong-import-order
import math
import random

import pytest
from supercount import polynomial
from supercount.bigmod import primes_between
from supercount.curve import CurveSpec, parse_curve
from supercount.exceptions import CapExceeded, PreconditionFailed, Unsupported
from supercount.hasse_witt import (
    char_poly_mod_p,
    hw_entry_direct,
    hw_matrix_direct,
    jacobian_mod_p,
)
from supercount.lift import jacobian_candidates_g2, jacobian_candidates_g3, weil_interval
from supercount.oracle import (
    Fp2Field,
    Fp3Field,
    affine_count,
    affine_count_fp2,
    affine_count_fp3,
    affine_count_naive,
    binomial_direct,
    diophantine_count,
    hw_entry_multinomial,
    jacobian_order_g2,
    jacobian_order_g3,
    multinomial_direct,
    power_coefficient_direct,
    smooth_count,
)

from .utils.generation import create_random_curve, create_valid_curves

ELLIPTIC = "a=2 m=[1,1,0,1] p=13"


def test_elliptic_curve_counts():
    """Assert that y^2 = x^3 + x + 1 has 17 affine points over F_13 and 18 in all."""
    spec = parse_curve(ELLIPTIC)
    assert affine_count(spec) == 17
    assert affine_count_naive(spec) == 17
    assert diophantine_count(spec) == 17
    assert smooth_count(spec) == 18


def test_affine_counts_agree():
    """Assert that the three affine counts agree on random curves, singular or not."""
    rng = random.Random(3)
    for p in primes_between(3, 60):
        spec = create_random_curve(rng, p, a_range=(2, 7), c_range=(1, 5))
        assert affine_count(spec) == affine_count_naive(spec) == diophantine_count(spec)


def test_counts_are_capped():
    """Assert that the oracles refuse primes above their cap."""
    spec = parse_curve(ELLIPTIC)
    with pytest.raises(CapExceeded):
        affine_count(spec, cap=11)
    with pytest.raises(CapExceeded):
        affine_count_naive(spec, cap=11)
    with pytest.raises(CapExceeded):
        diophantine_count(spec, cap=11)
    with pytest.raises(CapExceeded):
        affine_count_fp2(spec, cap=11)


@pytest.mark.parametrize(
    "spec",
    [
        CurveSpec(13, 2, 1, [1, 0, 1]),
        CurveSpec(17, 2, 0, [1, 0, 0, 0, 1]),
        CurveSpec(13, 2, 0, [0, 1, 0, 1]),
        CurveSpec(13, 3, 0, [1, 2, 1]),
    ],
)
def test_smooth_count_unsupported(spec):
    """Assert that smooth counts need b = 0, gcd(a, c) = 1 and a square-free f."""
    with pytest.raises(Unsupported):
        smooth_count(spec)


def test_binomials():
    """Assert Lucas' theorem against exact binomials and the bracket convention."""
    for p in (2, 3, 7):
        for n in range(60):
            for k in range(n + 1):
                assert binomial_direct(n, k, p).value == math.comb(n, k) % p
    assert binomial_direct(5, 7, 13).value == 0
    assert binomial_direct(-1, 0, 13).value == 0
    assert binomial_direct(5, -2, 13).value == 0


def test_multinomials():
    """Assert multinomial coefficients and their zero cases."""
    assert multinomial_direct(4, [1, 1, 2], 13).value == 12
    assert multinomial_direct(6, [2, 2, 2], 7).value == 90 % 7
    assert multinomial_direct(4, [5, -1], 13).value == 0
    assert multinomial_direct(4, [1, 1], 13).value == 0


def test_power_coefficients():
    """Assert single coefficients of f^v and the degree cap."""
    assert power_coefficient_direct([1, 0, 1], 2, 2, 13).value == 2
    assert power_coefficient_direct([1, 0, 1], 2, 5, 13).value == 0
    assert power_coefficient_direct([1, 1], 12, 6, 13).value == math.comb(12, 6) % 13
    with pytest.raises(CapExceeded):
        power_coefficient_direct([1, 1], 50, 3, 101, cap=10)


def test_multinomial_entries_match_direct():
    """Assert that the multinomial sum gives every direct Hasse-Witt entry."""
    rng = random.Random(12)
    for spec in create_valid_curves(rng, primes_between(10, 40), 6, c_range=(2, 4)):
        for row in spec.basis:
            for column in spec.basis:
                assert hw_entry_multinomial(spec, row, column) == hw_entry_direct(
                    spec, row, column
                )
    with pytest.raises(CapExceeded):
        hw_entry_multinomial(parse_curve(ELLIPTIC), (1, 1), (1, 1), cap=11)


def test_quadratic_extension_arithmetic():
    """Assert the field laws of F_13(theta) with theta^2 = 2."""
    field = Fp2Field(13)
    assert field.nonresidue == 2
    assert field.order == 169
    theta = field.element(0, 1)
    assert theta * theta == 2
    assert (field.element(3, 5) ** 13) == field.element(3, -5)
    assert field.element(1, 1) ** 168 == field.one
    assert field.element(4, 7) - field.element(4, 7) == field.zero
    assert -field.element(1, 2) + 1 == field.element(0, -2)
    assert len(set(field.elements())) == 169
    with pytest.raises(PreconditionFailed):
        field.one + Fp2Field(17).one
    with pytest.raises(PreconditionFailed):
        theta ** -1


def test_elliptic_curve_over_extension():
    """Assert #E(F_169) = p^2 + 1 - (t^2 - 2p) for the trace t = -4."""
    assert affine_count_fp2(parse_curve(ELLIPTIC)) + 1 == 169 + 1 - (16 - 26)


def test_genus_2_jacobian_among_candidates():
    """Assert that the oracle Jacobian order is one of the candidates from the matrix."""
    rng = random.Random(21)
    curves = [
        spec
        for spec in create_valid_curves(
            rng, primes_between(66, 110), 8, a_range=(2, 2), b_range=(0, 0), c_range=(5, 5)
        )
        if polynomial.is_square_free(spec.f, spec.p)
    ]
    assert curves
    for spec in curves[:4]:
        order = jacobian_order_g2(spec)
        lo, hi = weil_interval(spec.p, 2)
        assert lo <= order <= hi
        candidates = jacobian_candidates_g2(char_poly_mod_p(hw_matrix_direct(spec)))
        assert order in candidates.materialized, spec


@pytest.mark.slow
def test_genus_2_jacobian_among_candidates_up_to_300():
    """Assert candidate inclusion for one genus 2 curve at every prime 64 < p <= 300."""
    rng = random.Random(22)
    primes = primes_between(64, 300)
    for p in primes:
        (spec,) = create_valid_curves(
            rng, [p], 1, a_range=(2, 2), b_range=(0, 0), c_range=(5, 5)
        )
        order = jacobian_order_g2(spec)
        candidates = jacobian_candidates_g2(char_poly_mod_p(hw_matrix_direct(spec)))
        assert order in candidates.materialized, spec
    assert len(primes) > 40


def test_cubic_extension_arithmetic():
    """Assert the field laws of F_p^3 for a prime of each class mod 3."""
    for p in (7, 11):
        field = Fp3Field(p)
        s, r = field.modulus
        assert r != 0 and all((x ** 3 + s * x + r) % p for x in range(p))
        t_cubed = field.mul(field.mul((0, 1, 0), (0, 1, 0)), (0, 1, 0))
        assert t_cubed == (-r % p, -s % p, 0)
        element = (3, 5, 1)
        assert field.power(element, field.order - 1) == (1, 0, 0)
        frobenius = field.power(element, p)
        assert frobenius != element
        assert field.power(frobenius, p * p) == element
        assert sum(1 for _ in field.elements()) == field.order
    with pytest.raises(PreconditionFailed):
        Fp3Field(7).power((1, 0, 0), -1)


def test_elliptic_curve_over_cubic_extension():
    """Assert #E(F_2197) = p^3 + 1 - (t^3 - 3pt) for the trace t = -4."""
    assert affine_count_fp3(parse_curve(ELLIPTIC)) + 1 == 13 ** 3 + 1 - (-64 + 156)
    with pytest.raises(CapExceeded):
        affine_count_fp3(parse_curve(ELLIPTIC), cap=11)


@pytest.mark.parametrize("shape", ["a=2 c=7", "a=3 c=4", "a=4 c=3"])
def test_genus_3_jacobian_among_candidates(shape):
    """Assert that the genus 3 oracle order lies in the interval and matches mod p."""
    a, c = (int(field.split("=")[1]) for field in shape.split())
    rng = random.Random(a * 10 + c)
    curves = create_valid_curves(
        rng, primes_between(10, 24), 3, a_range=(a, a), b_range=(0, 0), c_range=(c, c)
    )
    for spec in curves:
        assert spec.genus == 3
        order = jacobian_order_g3(spec)
        lo, hi = weil_interval(spec.p, 3)
        assert lo <= order <= hi
        residue = jacobian_mod_p(hw_matrix_direct(spec))
        assert order % spec.p == residue.value, spec
        candidates = jacobian_candidates_g3(residue, spec.p, limit=10 ** 5)
        assert order in candidates.materialized


def test_jacobian_oracles_need_their_genus():
    """Assert that each Jacobian oracle refuses other genera."""
    with pytest.raises(Unsupported):
        jacobian_order_g2(parse_curve(ELLIPTIC))
    with pytest.raises(Unsupported):
        jacobian_order_g3(parse_curve(ELLIPTIC))
    with pytest.raises(Unsupported):
        jacobian_order_g3(parse_curve("a=2 m=[1,0,0,0,0,1] p=13"))
