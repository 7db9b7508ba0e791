"""Test cases related to curve parsing, validation and the lattice basis."""
# pylint: disable=wrong-import-order
import functools
import random

import pytest
from supercount.bigmod import primes_between
from supercount.curve import (
    CurveFamily,
    CurveSpec,
    ValidatedCurve,
    exponent_pair,
    genus_formula,
    is_reducible,
    lattice_points,
    parse_curve,
    parse_family,
    s_index,
    side_polynomials,
    validate,
    validation_issues,
)
from supercount.exceptions import (
    CurveSyntaxError,
    CurveValidationError,
    NotDivisible,
    PreconditionFailed,
)
from .utils.generation import create_random_curve

GENUS_3_SHAPE = "a=4 b=8 c=3 m=[1,0,0,1]"


def test_parse_curve_text():
    """Assert that curve text parses into the curve it describes."""
    spec = parse_curve("a=2 m=[1,1,0,1] p=13")
    assert (spec.p, spec.a, spec.b, spec.c) == (13, 2, 0, 3)
    assert spec.coefficients == (1, 1, 0, 1)
    assert spec.f == [1, 1, 0, 1]
    assert parse_curve(GENUS_3_SHAPE, 1009) == CurveSpec(1009, 4, 8, [1, 0, 0, 1])


def test_coefficients_are_reduced():
    """Assert that negative and large coefficients are reduced mod p."""
    spec = parse_curve("a=3 b=1 m=[-1, 27, 14] p=13")
    assert spec.coefficients == (12, 1, 1)


def test_curve_text_round_trips():
    """Assert that to_text output parses back to the same curve."""
    spec = CurveSpec(10007, 5, 3, [2, 0, 7, 1])
    assert parse_curve(spec.to_text()) == spec
    family, p = parse_family(spec.family().to_text())
    assert p is None
    assert family.at(10007) == spec


@pytest.mark.parametrize(
    "text",
    [
        "",
        "a=2",
        "m=[1,0,1]",
        "a=2 m=[1,0,1] x=3",
        "a=2 a=3 m=[1,0,1]",
        "a=2 m=[1,x,1]",
        "a=2 m=[]",
        "a=2 c=3 m=[1,0,1]",
        "a=0 m=[1,0,1]",
        "a=2 b=-1 m=[1,0,1]",
        "hello a=2 m=[1,0,1]",
        "a=2 m=[1,0,1] trailing",
    ],
)
def test_malformed_text_raises(text):
    """Assert that malformed curve text raises CurveSyntaxError."""
    with pytest.raises(CurveSyntaxError):
        parse_curve(text, 13)


def test_prime_conflicts_raise():
    """Assert that a missing prime or two different primes raise CurveSyntaxError."""
    with pytest.raises(CurveSyntaxError):
        parse_curve("a=2 m=[1,0,1]")
    with pytest.raises(CurveSyntaxError):
        parse_curve("a=2 m=[1,0,1] p=13", 17)
    assert parse_curve("a=2 m=[1,0,1] p=13", 13).p == 13


def test_malformed_spec_raises():
    """Assert that CurveSpec refuses shapes no curve text can describe."""
    with pytest.raises(PreconditionFailed):
        CurveSpec(13, 0, 0, [1, 1])
    with pytest.raises(PreconditionFailed):
        CurveSpec(13, 2, 0, [])


@pytest.mark.parametrize(
    "spec,codes",
    [
        (CurveSpec(15, 2, 0, [1, 0, 1]), ["NotPrime"]),
        (CurveSpec(5, 2, 3, [1, 1, 1]), ["PrimeTooSmall"]),
        (CurveSpec(13, 2, 0, [1, 1]), ["DegreeTooSmall"]),
        (CurveSpec(13, 2, 0, [13, 0, 1]), ["CoefficientZero"]),
        (CurveSpec(13, 2, 0, [1, 0, 0]), ["CoefficientZero"]),
        (
            CurveSpec(9, 1, 0, [0, 1]),
            ["NotPrime", "DegreeTooSmall", "CoefficientZero"],
        ),
        (CurveSpec(13, 2, 2, [1, 2, 1]), ["NotSquareFree", "Reducible"]),
    ],
)
def test_validation_issues(spec, codes):
    """Assert that every violated hypothesis is reported, in order."""
    assert [issue.code for issue in validation_issues(spec)] == codes
    with pytest.raises(CurveValidationError) as error:
        validate(spec)
    assert error.value.codes == codes
    assert [issue["code"] for issue in error.value.to_json()["issues"]] == codes


def test_valid_curves_pass():
    """Assert that the curves used throughout validate and validation is idempotent."""
    for text in (
        "a=2 m=[1,1,0,1] p=13",
        "a=2 m=[1,0,0,0,1] p=17",
        GENUS_3_SHAPE + " p=1009",
    ):
        validated = validate(parse_curve(text))
        assert isinstance(validated, ValidatedCurve)
        assert validate(validated) is validated


def test_side_polynomials():
    """Assert the side polynomials of the Newton polygon of y^4 = x^8 (x^3 + 1)."""
    spec = parse_curve(GENUS_3_SHAPE, 13)
    assert side_polynomials(spec) == {"hypotenuse": [12, 1], "left": [12, 0, 0, 0, 1]}


def test_capelli_reducibility():
    """Assert that y^2 = x^2 (x + 1)^2 is reducible and y^2 = x^3 + x + 1 is not."""
    assert is_reducible(CurveSpec(13, 2, 2, [1, 2, 1]))
    assert not is_reducible(CurveSpec(13, 2, 0, [1, 1, 0, 1]))
    # y^4 + 4 x^4 factors as (y^2 + 2xy + 2x^2)(y^2 - 2xy + 2x^2)
    assert is_reducible(CurveSpec(7, 4, 4, [3]))


def test_lattice_basis_of_known_curves():
    """Assert the interior lattice points of the curves used throughout."""
    assert lattice_points(2, 0, 3).points == ((1, 1),)
    assert lattice_points(2, 0, 4).points == ((1, 1),)
    basis = parse_curve(GENUS_3_SHAPE, 1009).basis
    assert basis.points == ((5, 2), (7, 1), (8, 1))
    assert basis.index((7, 1)) == 1
    assert (8, 1) in basis and (1, 1) not in basis
    assert basis.to_json() == [[5, 2], [7, 1], [8, 1]]
    assert parse_curve(GENUS_3_SHAPE, 1009).genus == 3


def test_genus_matches_pick():
    """Assert that enumerating N agrees with Pick's theorem for many shapes."""
    for a in range(2, 9):
        for b in range(0, 7):
            for c in range(2, 8):
                assert len(lattice_points(a, b, c)) == genus_formula(a, b, c)


def test_genus_of_random_curves():
    """Assert that a curve's genus is |N| for random curves."""
    rng = random.Random(17)
    for _ in range(30):
        spec = create_random_curve(rng, 10007)
        assert spec.genus == genus_formula(spec.a, spec.b, spec.c)


def test_exponent_pairs_solve_their_identity():
    """Assert that j - 1 + (a - 1)(p - 1) = p(u - 1) + a v with u and v in range."""
    for p in primes_between(7, 200):
        for a in range(2, 7):
            for j in range(1, a + 1):
                pair = exponent_pair(j, a, p)
                assert j - 1 + (a - 1) * (p - 1) == p * (pair.u - 1) + a * pair.v
                assert 1 <= pair.u <= a
                assert 0 <= pair.v <= p - 1


def test_exponent_pair_of_hyperelliptic_curve():
    """Assert that for a = 2 the first pair is u = 1, v = (p - 1) / 2."""
    pair = exponent_pair(1, 2, 13)
    assert (pair.u, pair.v) == (1, 6)
    with pytest.raises(PreconditionFailed):
        exponent_pair(3, 2, 13)
    with pytest.raises(PreconditionFailed):
        exponent_pair(1, 13, 13)


def test_s_index():
    """Assert the row index of a Cartier term and its divisibility check."""
    spec = parse_curve("a=2 m=[1,1,0,1] p=13")
    assert s_index(1, 1, (2, 0, 0, 4), spec) == 1
    with pytest.raises(NotDivisible):
        s_index(1, 1, (6, 0, 0, 0), spec)
    with pytest.raises(PreconditionFailed):
        s_index(1, 1, (5, 0, 0, 0), spec)


@pytest.mark.parametrize("cls", [CurveFamily, CurveSpec])
def test_properties_are_documented(cls):
    """Assert that every public property of the curve types has a docstring."""
    for name, member in vars(cls).items():
        documented = (property, functools.cached_property)
        if isinstance(member, documented) and not name.startswith("_"):
            assert member.__doc__, name
