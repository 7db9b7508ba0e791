"""Test cases related to the direct Hasse-Witt matrix and its linear algebra."""
# pylint: disable=wrong-import-order
import math
import random

import pytest
from supercount.bigmod import Residue, primes_between
from supercount.curve import parse_curve
from supercount.exceptions import CapExceeded, CurveValidationError
from supercount.hasse_witt import (
    CharPolyModP,
    char_poly_mod_p,
    characteristic_polynomial,
    count_points_mod_p,
    determinant,
    frobenius_coefficients_mod_p,
    hw_entry_direct,
    hw_matrix_direct,
    jacobian_mod_p,
    matrix_targets,
)
from supercount.oracle import smooth_count

from .utils.generation import create_valid_curves

ELLIPTIC = "a=2 m=[1,1,0,1] p=13"


def test_elliptic_curve_matrix():
    """Assert that y^2 = x^3 + x + 1 over F_13 has Hasse invariant 9."""
    matrix = hw_matrix_direct(parse_curve(ELLIPTIC))
    assert matrix.entries == [[9]]
    assert matrix.genus == 1
    assert matrix.trace() == Residue(9, 13)
    assert matrix.entry((1, 1), (1, 1)).value == 9
    assert matrix.is_diagonal()
    assert matrix.to_json() == {
        "schema": "1",
        "basis": [[1, 1]],
        "entries": [["9"]],
        "p": "13",
    }


def test_elliptic_curve_derived_values():
    """Assert the count, characteristic polynomial and Jacobian order mod p."""
    spec = parse_curve(ELLIPTIC)
    matrix = hw_matrix_direct(spec)
    # 18 points: 17 affine and one at infinity
    assert count_points_mod_p(spec).value == 18 % 13
    charpoly = char_poly_mod_p(matrix)
    assert charpoly.coefficients == [0, 4, 1]
    assert charpoly.genus == 1
    assert [value.value for value in frobenius_coefficients_mod_p(charpoly)] == [9]
    assert jacobian_mod_p(matrix).value == 18 % 13
    assert charpoly(1).value == 18 % 13


def test_entry_matches_matrix():
    """Assert that single entries agree with the full matrix, zeros included."""
    rng = random.Random(8)
    for spec in create_valid_curves(rng, primes_between(10, 60), 6, c_range=(3, 6)):
        matrix = hw_matrix_direct(spec)
        for row in spec.basis:
            for column in spec.basis:
                assert hw_entry_direct(spec, row, column) == matrix.entry(row, column)
        nonzero_slots = {(target.row, target.column) for target in matrix_targets(spec)}
        for r, row in enumerate(matrix.entries):
            for k, value in enumerate(row):
                if (r, k) not in nonzero_slots:
                    assert value == 0


def test_direct_path_caps_and_validates():
    """Assert that the direct path refuses large primes and invalid curves."""
    with pytest.raises(CapExceeded):
        hw_matrix_direct(parse_curve(ELLIPTIC), cap=11)
    with pytest.raises(CapExceeded):
        hw_entry_direct(parse_curve(ELLIPTIC), (1, 1), (1, 1), cap=11)
    with pytest.raises(CurveValidationError):
        hw_matrix_direct(parse_curve("a=2 m=[0,1,0,1] p=13"))


def test_trace_matches_smooth_count():
    """Assert that #C(F_p) = 1 - trace mod p on random smooth curves."""
    rng = random.Random(5)
    primes = primes_between(10, 90)
    checked = 0
    for spec in create_valid_curves(rng, primes, 60, b_range=(0, 0), c_range=(3, 7)):
        if math.gcd(spec.a, spec.c) != 1:
            continue
        matrix = hw_matrix_direct(spec)
        assert (smooth_count(spec) - 1 + matrix.trace().value) % spec.p == 0
        checked += 1
    assert checked > 10


def test_characteristic_polynomial_matches_determinant():
    """Assert that det(tI - M) evaluated at t equals the determinant at t."""
    rng = random.Random(23)
    p = 101
    for size in (1, 2, 3, 5):
        matrix = [[rng.randrange(p) for _ in range(size)] for _ in range(size)]
        charpoly = characteristic_polynomial(matrix, p)
        assert len(charpoly) == size + 1 and charpoly[-1] == 1
        for point in (0, 1, 7, 50):
            shifted = [
                [(point if r == k else 0) - value for k, value in enumerate(row)]
                for r, row in enumerate(matrix)
            ]
            value = sum(c * point ** power for power, c in enumerate(charpoly)) % p
            assert value == determinant(shifted, p)


def test_characteristic_polynomial_with_zero_subdiagonal():
    """Assert that a matrix needing no Hessenberg pivot still works."""
    matrix = [[2, 0, 0], [0, 3, 0], [0, 0, 5]]
    assert characteristic_polynomial(matrix, 7) == [(-30) % 7, 31 % 7, (-10) % 7, 1]


def test_determinant_with_row_swap():
    """Assert determinants that need pivoting and singular matrices."""
    assert determinant([[0, 1], [1, 0]], 13) == 12
    assert determinant([[1, 2], [2, 4]], 13) == 0
    assert determinant([[2, 1, 0], [0, 3, 1], [1, 0, 4]], 13) == (24 + 1) % 13


def test_char_poly_evaluation_and_coefficients():
    """Assert coefficient lookup and evaluation of a characteristic polynomial."""
    charpoly = CharPolyModP([0, 0, 0, 0, 1], 1009)
    assert charpoly.degree == 4
    assert charpoly.genus == 2
    assert charpoly.coefficient(4).value == 1
    assert charpoly.coefficient(9).value == 0
    assert charpoly(2).value == 16
    assert charpoly.to_json()["coefficients"] == ["0", "0", "0", "0", "1"]
