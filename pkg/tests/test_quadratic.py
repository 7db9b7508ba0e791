"""Test cases related to square roots and prime decompositions."""
# pylint: disable=wrong-import-order
import pytest
from supercount.bigmod import Residue, primes_between
from supercount.exceptions import NonResidue, NoSolution, PreconditionFailed
from supercount.quadratic import (
    DECOMPOSITION_D,
    External,
    PrimeDecomposition,
    Probabilistic,
    SequentialSearch,
    cornacchia,
    decompose_prime,
    find_nonresidue,
    legendre,
    sqrt_mod,
    strategy_from_name,
)


@pytest.mark.parametrize("p", [13, 17, 41, 97, 257, 65537, 998244353, 2 ** 127 - 1])
def test_sqrt_of_squares(p):
    """Assert that sqrt_mod returns the smaller root of every square it is given."""
    for x in (1, 2, 3, 12345, p - 5):
        square = Residue(x * x, p)
        root = sqrt_mod(square)
        assert (root * root) == square
        assert root.value <= p - root.value


@pytest.mark.parametrize(
    "strategy", [SequentialSearch(), Probabilistic(11)], ids=["sequential", "probabilistic"]
)
def test_sqrt_of_every_square_below_1000(strategy):
    """Assert the smaller root of every square mod every odd prime below 1000."""
    for p in primes_between(2, 1000):
        for square in {x * x % p for x in range(p)}:
            root = sqrt_mod(Residue(square, p), strategy)
            assert root.value * root.value % p == square, (p, square)
            assert root.value <= p - root.value


def test_sqrt_with_probabilistic_strategy():
    """Assert that a seeded strategy gives the same root as the sequential search."""
    p = 998244353
    square = Residue(987654321 ** 2, p)
    assert sqrt_mod(square, Probabilistic(5)) == sqrt_mod(square, SequentialSearch())


def test_sqrt_of_nonresidue_raises():
    """Assert that a nonsquare has no root."""
    with pytest.raises(NonResidue):
        sqrt_mod(Residue(2, 13))
    assert sqrt_mod(Residue(0, 13)).value == 0


def test_external_root_is_verified():
    """Assert that a caller-supplied root is accepted only when it squares correctly."""
    assert sqrt_mod(Residue(10, 13), External(7)).value == 6
    with pytest.raises(PreconditionFailed):
        sqrt_mod(Residue(10, 13), External(5))


def test_nonresidue_strategies():
    """Assert that every strategy yields a quadratic nonresidue."""
    assert find_nonresidue(17).value == 3
    assert legendre(find_nonresidue(65537, Probabilistic(1))) == -1
    assert find_nonresidue(13, External(2)).value == 2
    with pytest.raises(PreconditionFailed):
        find_nonresidue(13, External(3))


def test_strategy_from_name():
    """Assert that config names map to strategies and unknown names are rejected."""
    assert isinstance(strategy_from_name("sequential"), SequentialSearch)
    probabilistic = strategy_from_name("probabilistic", 9)
    assert isinstance(probabilistic, Probabilistic) and probabilistic.seed == 9
    with pytest.raises(ValueError):
        strategy_from_name("magic")


def test_legendre_symbol():
    """Assert the three values of the Legendre symbol."""
    assert legendre(Residue(4, 13)) == 1
    assert legendre(Residue(2, 13)) == -1
    assert legendre(Residue(26, 13)) == 0


def test_cornacchia():
    """Assert that Cornacchia's descent solves x^2 + d y^2 = m."""
    assert cornacchia(1, 13, Residue(5, 13)) == (3, 2)
    x, y = cornacchia(2, 41, sqrt_mod(Residue(-2, 41)))
    assert x * x + 2 * y * y == 41
    with pytest.raises(PreconditionFailed):
        cornacchia(1, 13, Residue(4, 13))
    with pytest.raises(PreconditionFailed):
        cornacchia(13, 13, Residue(0, 13))


def test_cornacchia_without_primitive_solution():
    """Assert that a prime outside the principal form has no solution."""
    assert cornacchia(3, 67, Residue(8, 67)) == (8, 1)
    # 7 is represented by 2x^2 + 2xy + 3y^2, not by x^2 + 5y^2
    with pytest.raises(NoSolution):
        cornacchia(5, 7, Residue(3, 7))


@pytest.mark.parametrize(
    "p,e,expected",
    [
        (13, 4, PrimeDecomposition(13, 1, -3, 2)),
        (13, 3, PrimeDecomposition(13, 3, 1, 2)),
        (7, 3, PrimeDecomposition(7, 3, -2, 1)),
        (7, 6, PrimeDecomposition(7, 3, -2, 1)),
        (17, 8, PrimeDecomposition(17, 2, -3, 2)),
        (41, 8, PrimeDecomposition(41, 2, -3, 4)),
    ],
)
def test_decompose_small_primes(p, e, expected):
    """Assert the normalized decompositions of small primes."""
    assert decompose_prime(p, e) == expected


@pytest.mark.parametrize("e", sorted(DECOMPOSITION_D))
def test_decompositions_are_normalized(e):
    """Assert that every decomposition solves p = a^2 + d b^2 with the sign convention."""
    for p in primes_between(3, 10 ** 4):
        if p % e != 1:
            continue
        decomposition = decompose_prime(p, e)
        d = decomposition.d
        assert d == DECOMPOSITION_D[e]
        assert decomposition.a ** 2 + d * decomposition.b ** 2 == p
        assert decomposition.b > 0
        if d == 3:
            assert decomposition.a % 3 == 1
        else:
            assert decomposition.a % 4 == 1
        assert decomposition.b_choices == (decomposition.b, -decomposition.b)


def test_decompose_rejects_wrong_residue_class():
    """Assert that p must be 1 mod e and e must be supported."""
    with pytest.raises(PreconditionFailed):
        decompose_prime(11, 4)
    with pytest.raises(PreconditionFailed):
        decompose_prime(11, 5)


def test_decomposition_properties_are_documented():
    """Assert that every public property of a decomposition has a docstring."""
    for name, member in vars(PrimeDecomposition).items():
        if isinstance(member, property) and not name.startswith("_"):
            assert member.__doc__, name
    decomposition = decompose_prime(13, 4)
    assert (decomposition.x, decomposition.y) == (decomposition.a, decomposition.b)
