"""
Square roots modulo p, nonresidue search, Cornacchia's algorithm and the
normalized decompositions p = x^2 + d y^2 the trinomial path is built on.
"""
import logging
import random
import typing as t

import gmpy2

from .bigmod import Residue, isqrt
from .exceptions import NonResidue, NoSolution, PreconditionFailed

logger = logging.getLogger(__name__)


class SqrtStrategy:
    """How Tonelli-Shanks obtains its quadratic nonresidue."""

    name = "abstract"

    def nonresidue(self, p: int) -> int:
        """Returns a quadratic nonresidue modulo the odd prime ``p``."""
        raise NotImplementedError


class SequentialSearch(SqrtStrategy):
    """Tries 2, 3, 4, ... in order and returns the least nonresidue."""

    name = "sequential"

    def nonresidue(self, p: int) -> int:
        candidate = 2
        while gmpy2.legendre(candidate, p) != -1:
            candidate += 1
        return candidate

    def __repr__(self) -> str:
        return "SequentialSearch()"


class Probabilistic(SqrtStrategy):
    """Samples candidates uniformly from [2, p - 1] with a seeded generator.

    Args:
        seed (:obj:`int`): Seed of the generator; every call starts afresh from it.
    """

    name = "probabilistic"

    def __init__(self, seed: int = 0) -> None:
        self.seed = seed

    def nonresidue(self, p: int) -> int:
        generator = random.Random(self.seed)
        while True:
            candidate = generator.randint(2, p - 1)
            if gmpy2.legendre(candidate, p) == -1:
                return candidate

    def __repr__(self) -> str:
        return f"Probabilistic(seed={self.seed})"


class External(SqrtStrategy):
    """A caller-supplied value, verified before use.

    For :obj:`sqrt_mod` the value is a claimed square root; for
    :obj:`find_nonresidue` it is a claimed nonresidue.

    Args:
        value (:obj:`int`): The claimed value.
    """

    name = "external"

    def __init__(self, value: int) -> None:
        self.value = value

    def nonresidue(self, p: int) -> int:
        if gmpy2.legendre(self.value % p, p) != -1:
            raise PreconditionFailed(f"{self.value} is not a nonresidue mod {p}")
        return self.value % p

    def __repr__(self) -> str:
        return f"External({self.value})"


def strategy_from_name(name: str, seed: int = 0) -> SqrtStrategy:
    """Builds the strategy a config value names.

    Args:
        name (:obj:`str`): ``"sequential"`` or ``"probabilistic"``.
        seed (:obj:`int`, optional): Seed for the probabilistic strategy.

    Raises:
        :obj:`ValueError`: If the name is unknown.

    Returns:
        :obj:`SqrtStrategy`: The strategy.
    """
    if name == "sequential":
        return SequentialSearch()
    if name == "probabilistic":
        return Probabilistic(seed)
    raise ValueError(f"unknown square root strategy {name!r}")


def legendre(a: Residue) -> int:
    """Legendre symbol of ``a`` modulo its odd prime modulus, by Euler's criterion.

    Returns:
        :obj:`int`: 1 for a nonzero square, -1 for a nonsquare, 0 when p | a.
    """
    p = a.modulus
    if a.value == 0:
        return 0
    return 1 if gmpy2.powmod(a.value, (p - 1) // 2, p) == 1 else -1


def find_nonresidue(p: int, strategy: t.Optional[SqrtStrategy] = None) -> Residue:
    """Finds a quadratic nonresidue modulo ``p``.

    Args:
        p (:obj:`int`): An odd prime.
        strategy (:obj:`SqrtStrategy`, optional): Defaults to
            :obj:`SequentialSearch`.

    Returns:
        :obj:`~supercount.bigmod.Residue`: n with legendre(n) = -1.
    """
    strategy = strategy or SequentialSearch()
    return Residue(strategy.nonresidue(p), p)


def sqrt_mod(a: Residue, strategy: t.Optional[SqrtStrategy] = None) -> Residue:
    """Square root modulo an odd prime by Tonelli-Shanks.

    Args:
        a (:obj:`~supercount.bigmod.Residue`): The radicand.
        strategy (:obj:`SqrtStrategy`, optional): Source of the nonresidue.
            Defaults to :obj:`SequentialSearch`.

    Raises:
        :obj:`~supercount.exceptions.NonResidue`: If ``a`` is not a square.
        :obj:`~supercount.exceptions.PreconditionFailed`: If an :obj:`External`
            root does not square to ``a``.

    Returns:
        :obj:`~supercount.bigmod.Residue`: The root r with r <= p - r.
    """
    p = a.modulus
    n = a.value
    if isinstance(strategy, External):
        if (strategy.value * strategy.value - n) % p:
            raise PreconditionFailed(f"{strategy.value}^2 is not {n} mod {p}")
        return _canonical_root(strategy.value % p, p)
    if n == 0:
        return Residue(0, p)
    if legendre(a) != 1:
        raise NonResidue(f"{n} is not a square mod {p}")
    if p % 4 == 3:
        return _canonical_root(int(gmpy2.powmod(n, (p + 1) // 4, p)), p)

    # p - 1 = q * 2^s with q odd
    q, s = p - 1, 0
    while q % 2 == 0:
        q, s = q // 2, s + 1
    z = find_nonresidue(p, strategy).value
    m = s
    c = int(gmpy2.powmod(z, q, p))
    u = int(gmpy2.powmod(n, q, p))
    r = int(gmpy2.powmod(n, (q + 1) // 2, p))
    while u != 1:
        i, u_squared = 0, u
        while u_squared != 1:
            u_squared = u_squared * u_squared % p
            i += 1
        b = int(gmpy2.powmod(c, 1 << (m - i - 1), p))
        m = i
        c = b * b % p
        u = u * c % p
        r = r * b % p
    return _canonical_root(r, p)


def _canonical_root(root: int, p: int) -> Residue:
    return Residue(min(root, p - root) if root else 0, p)


def cornacchia(d: int, m: int, root: Residue) -> t.Tuple[int, int]:
    """Solves x^2 + d y^2 = m by Cornacchia's Euclidean descent.

    Args:
        d (:obj:`int`): Small positive coefficient, 0 < d < m.
        m (:obj:`int`): The number to represent, coprime to d.
        root (:obj:`~supercount.bigmod.Residue`): A square root of -d modulo m.

    Raises:
        :obj:`~supercount.exceptions.PreconditionFailed`: If the arguments are out
            of range or ``root`` does not square to -d.
        :obj:`~supercount.exceptions.NoSolution`: If the descent finds no
            primitive solution.

    Returns:
        tuple(int, int): Positive x and y with x^2 + d y^2 = m.
    """
    if not 0 < d < m or gmpy2.gcd(d, m) != 1:
        raise PreconditionFailed(f"cornacchia needs 0 < d < m coprime, got d={d} m={m}")
    r = root.value % m
    if (r * r + d) % m:
        raise PreconditionFailed(f"{r}^2 is not -{d} mod {m}")
    a, b = m, min(r, m - r)
    while b * b >= m:
        a, b = b, a % b
    remainder = m - b * b
    if remainder % d:
        raise NoSolution(f"no primitive solution of x^2 + {d}y^2 = {m}")
    y, exact = isqrt(remainder // d)
    if not exact or y == 0 or b == 0:
        raise NoSolution(f"no primitive solution of x^2 + {d}y^2 = {m}")
    return b, y


#: e -> d such that p = x^2 + d y^2 is the decomposition used for e
DECOMPOSITION_D = {3: 3, 4: 1, 6: 3, 8: 2}


class PrimeDecomposition:
    """A normalized solution of p = a^2 + d b^2.

    ``a`` carries the sign fixed by the congruence convention (a = 1 mod 4 for
    d = 1 and d = 2, a = 1 mod 3 for d = 3); ``b`` is stored positive and both of
    its signs are equally valid.

    Args:
        p (:obj:`int`): The prime.
        d (:obj:`int`): 1, 2 or 3.
        a (:obj:`int`): Normalized a.
        b (:obj:`int`): Positive b.
    """

    def __init__(self, p: int, d: int, a: int, b: int) -> None:
        self._p = p
        self._d = d
        self._a = a
        self._b = abs(b)

    @property
    def p(self) -> int:
        """The decomposed prime."""
        return self._p

    @property
    def d(self) -> int:
        """1, 2 or 3, the discriminant that belongs to e."""
        return self._d

    @property
    def a(self) -> int:
        """a with its normalized sign."""
        return self._a

    @property
    def b(self) -> int:
        """b, always positive."""
        return self._b

    @property
    def x(self) -> int:
        """Alias of :obj:`a`."""
        return self._a

    @property
    def y(self) -> int:
        """Alias of :obj:`b`."""
        return self._b

    @property
    def b_choices(self) -> t.Tuple[int, int]:
        """Both signs of b, positive first."""
        return self._b, -self._b

    def __repr__(self) -> str:
        return f"PrimeDecomposition(p={self._p}, d={self._d}, a={self._a}, b={self._b})"

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, PrimeDecomposition):
            return NotImplemented
        return (self._p, self._d, self._a, self._b) == (
            other.p,
            other.d,
            other.a,
            other.b,
        )

    def __hash__(self) -> int:
        return hash((self._p, self._d, self._a, self._b))


def decompose_prime(
    p: int, e: int, strategy: t.Optional[SqrtStrategy] = None
) -> PrimeDecomposition:
    """Writes p as a^2 + d b^2 for the d that belongs to e, normalized.

    Args:
        p (:obj:`int`): A prime with p = 1 mod e.
        e (:obj:`int`): One of 3, 4, 6, 8.
        strategy (:obj:`SqrtStrategy`, optional): Square root strategy for the
            root of -d.

    Raises:
        :obj:`~supercount.exceptions.PreconditionFailed`: If e is unsupported or
            p is not 1 mod e.

    Returns:
        :obj:`PrimeDecomposition`: The normalized decomposition.
    """
    if e not in DECOMPOSITION_D:
        raise PreconditionFailed(f"no decomposition is used for e = {e}")
    if p % e != 1:
        raise PreconditionFailed(f"{p} is not 1 mod {e}")
    d = DECOMPOSITION_D[e]
    root = sqrt_mod(Residue(-d, p), strategy)
    x, y = cornacchia(d, p, root)
    if d == 1 and x % 2 == 0:
        x, y = y, x
    if d == 3:
        a = x if x % 3 == 1 else -x
    else:
        a = x if x % 4 == 1 else -x
    logger.debug("decomposed %d = %d^2 + %d*%d^2", p, a, d, y)
    return PrimeDecomposition(p, d, a, y)
