"""
Exact integer and modular arithmetic shared by every other module.

Natural and Integer values are plain Python :obj:`int` at the API boundary; the
heavy lifting (powers, inverses, square roots, primality) is delegated to gmpy2.
:obj:`Residue` is the value type for elements of Z/m, including prime powers p^m.
"""
import typing as t

import gmpy2

from .exceptions import ModulusMismatch, NotInvertible, PreconditionFailed


def parse_natural(text: str) -> int:
    """Parses a decimal string into a nonnegative integer.

    Args:
        text (:obj:`str`): Decimal digits, surrounding whitespace allowed.

    Raises:
        :obj:`~supercount.exceptions.PreconditionFailed`: If the text is not a
            nonnegative decimal integer.

    Returns:
        :obj:`int`: The parsed value.
    """
    value = parse_integer(text)
    if value < 0:
        raise PreconditionFailed(f"{text!r} is negative")
    return value


def parse_integer(text: str) -> int:
    """Parses a signed decimal string into an integer.

    Args:
        text (:obj:`str`): Optional sign followed by decimal digits.

    Raises:
        :obj:`~supercount.exceptions.PreconditionFailed`: If the text is not a
            decimal integer.

    Returns:
        :obj:`int`: The parsed value.
    """
    stripped = text.strip()
    digits = stripped[1:] if stripped[:1] in ("+", "-") else stripped
    if not digits or not digits.isdigit() or not digits.isascii():
        raise PreconditionFailed(f"{text!r} is not a decimal integer")
    return int(stripped)


class Residue:
    """An element of Z/m stored canonically in [0, m).

    Args:
        value (:obj:`int`): Any integer; it is reduced modulo ``modulus``.
        modulus (:obj:`int`): The modulus, at least 2.

    Raises:
        :obj:`~supercount.exceptions.PreconditionFailed`: If the modulus is below 2.
    """

    __slots__ = ("_value", "_modulus")

    def __init__(self, value: int, modulus: int) -> None:
        if modulus < 2:
            raise PreconditionFailed(f"modulus {modulus} must be at least 2")
        self._modulus = int(modulus)
        self._value = int(value) % self._modulus

    @property
    def value(self) -> int:
        """The canonical representative in [0, m).

        Returns:
            :obj:`int`: The residue value.
        """
        return self._value

    @property
    def modulus(self) -> int:
        """The modulus m.

        Returns:
            :obj:`int`: The modulus.
        """
        return self._modulus

    def balanced(self) -> int:
        """The representative of least absolute value, in (-m/2, m/2].

        Returns:
            :obj:`int`: The balanced representative.
        """
        return balanced(self._value, self._modulus)

    def _coerce(self, other: t.Union["Residue", int]) -> "Residue":
        if isinstance(other, Residue):
            if other.modulus != self._modulus:
                raise ModulusMismatch(
                    f"cannot combine residues mod {self._modulus} and mod {other.modulus}"
                )
            return other
        return Residue(other, self._modulus)

    def __add__(self, other: t.Union["Residue", int]) -> "Residue":
        return addm(self, self._coerce(other))

    __radd__ = __add__

    def __sub__(self, other: t.Union["Residue", int]) -> "Residue":
        return subm(self, self._coerce(other))

    def __rsub__(self, other: int) -> "Residue":
        return subm(self._coerce(other), self)

    def __mul__(self, other: t.Union["Residue", int]) -> "Residue":
        return mulm(self, self._coerce(other))

    __rmul__ = __mul__

    def __neg__(self) -> "Residue":
        return Residue(-self._value, self._modulus)

    def __pow__(self, exponent: int) -> "Residue":
        if exponent < 0:
            return powm(invm(self), -exponent)
        return powm(self, exponent)

    def __eq__(self, other: object) -> bool:
        if isinstance(other, Residue):
            return self._modulus == other.modulus and self._value == other.value
        return NotImplemented

    def __hash__(self) -> int:
        return hash((self._value, self._modulus))

    def __int__(self) -> int:
        return self._value

    def __index__(self) -> int:
        return self._value

    def __repr__(self) -> str:
        return f"Residue({self._value}, {self._modulus})"

    def __str__(self) -> str:
        return str(self._value)


def _check_moduli(x: Residue, y: Residue) -> int:
    if x.modulus != y.modulus:
        raise ModulusMismatch(
            f"cannot combine residues mod {x.modulus} and mod {y.modulus}"
        )
    return x.modulus


def addm(x: Residue, y: Residue) -> Residue:
    """Adds two residues with the same modulus.

    Raises:
        :obj:`~supercount.exceptions.ModulusMismatch`: If the moduli differ.
    """
    modulus = _check_moduli(x, y)
    return Residue(x.value + y.value, modulus)


def subm(x: Residue, y: Residue) -> Residue:
    """Subtracts two residues with the same modulus.

    Raises:
        :obj:`~supercount.exceptions.ModulusMismatch`: If the moduli differ.
    """
    modulus = _check_moduli(x, y)
    return Residue(x.value - y.value, modulus)


def mulm(x: Residue, y: Residue) -> Residue:
    """Multiplies two residues with the same modulus.

    Raises:
        :obj:`~supercount.exceptions.ModulusMismatch`: If the moduli differ.
    """
    modulus = _check_moduli(x, y)
    return Residue(int(gmpy2.mpz(x.value) * y.value % modulus), modulus)


def powm(base: Residue, exponent: int) -> Residue:
    """Raises a residue to a nonnegative power.

    Args:
        base (:obj:`Residue`): The base.
        exponent (:obj:`int`): The exponent, at least 0. Zero yields 1.

    Raises:
        :obj:`~supercount.exceptions.PreconditionFailed`: If the exponent is negative.

    Returns:
        :obj:`Residue`: ``base ** exponent`` modulo the base's modulus.
    """
    if exponent < 0:
        raise PreconditionFailed(f"exponent {exponent} is negative")
    return Residue(int(gmpy2.powmod(base.value, exponent, base.modulus)), base.modulus)


def invm(x: Residue) -> Residue:
    """Inverts a unit of Z/m, for prime and prime-power moduli alike.

    Args:
        x (:obj:`Residue`): The residue to invert.

    Raises:
        :obj:`~supercount.exceptions.NotInvertible`: If gcd(x, m) > 1.

    Returns:
        :obj:`Residue`: The inverse of ``x``.
    """
    return Residue(inverse(x.value, x.modulus), x.modulus)


def inverse(value: int, modulus: int) -> int:
    """Integer form of :obj:`invm`, used by the arithmetic kernels.

    Raises:
        :obj:`~supercount.exceptions.NotInvertible`: If gcd(value, modulus) > 1.
    """
    try:
        return int(gmpy2.invert(value, modulus))
    except ZeroDivisionError as error:
        raise NotInvertible(f"{value % modulus} is not invertible mod {modulus}") from error


def isqrt(n: int) -> t.Tuple[int, bool]:
    """Integer square root.

    Args:
        n (:obj:`int`): A nonnegative integer.

    Raises:
        :obj:`~supercount.exceptions.PreconditionFailed`: If ``n`` is negative.

    Returns:
        tuple(:obj:`int`, :obj:`bool`): ``floor(sqrt(n))`` and whether ``n`` is a
            perfect square.
    """
    if n < 0:
        raise PreconditionFailed(f"isqrt of negative {n}")
    root, remainder = gmpy2.isqrt_rem(n)
    return int(root), remainder == 0


def ceil_sqrt(n: int) -> int:
    """Smallest integer r with r * r >= n."""
    if n <= 0:
        return 0
    root, exact = isqrt(n)
    return root if exact else root + 1


def balanced(value: int, modulus: int) -> int:
    """Representative of ``value`` modulo ``modulus`` in (-modulus/2, modulus/2]."""
    reduced = value % modulus
    return reduced - modulus if 2 * reduced > modulus else reduced


def is_prime(n: int) -> bool:
    """Whether ``n`` is prime (gmpy2's Miller-Rabin, exact for n < 2**64)."""
    return n >= 2 and bool(gmpy2.is_prime(n, 40))


def primes_between(lo: int, hi: int) -> t.List[int]:
    """All primes p with lo < p <= hi, by a sieve of Eratosthenes.

    Args:
        lo (:obj:`int`): Exclusive lower bound.
        hi (:obj:`int`): Inclusive upper bound.

    Returns:
        list(int): The primes in ascending order.
    """
    if hi < 2 or hi <= lo:
        return []
    sieve = bytearray([1]) * (hi + 1)
    sieve[0] = sieve[1] = 0
    for n in range(2, isqrt(hi)[0] + 1):
        if sieve[n]:
            sieve[n * n :: n] = bytearray(len(range(n * n, hi + 1, n)))
    start = max(lo + 1, 2)
    return [n for n in range(start, hi + 1) if sieve[n]]
