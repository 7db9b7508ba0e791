"""
Brute-force ground truth for small primes.

Nothing in here is clever. Every function refuses work beyond its cap instead of
running for hours, and the test-suite checks the fast paths against these.
"""
import logging
import math
import typing as t

import gmpy2

from . import polynomial
from .bigmod import Residue
from .config import DEFAULT_CAPS
from .curve import CurveSpec
from .exceptions import CapExceeded, ConsistencyError, PreconditionFailed, Unsupported
from .hasse_witt import entry_target
from .quadratic import SqrtStrategy, find_nonresidue

logger = logging.getLogger(__name__)


def _check_cap(value: int, cap: int, what: str) -> None:
    if value > cap:
        raise CapExceeded(f"{what} is capped at {cap}, got {value}")


def _root_count(value: int, a: int, p: int) -> int:
    """Number of y in F_p with y^a = value."""
    if value == 0:
        return 1
    order = math.gcd(a, p - 1)
    return order if gmpy2.powmod(value, (p - 1) // order, p) == 1 else 0


def _right_hand_side(spec: CurveSpec, x: int) -> int:
    return pow(x, spec.b, spec.p) * polynomial.evaluate(spec.f, x, spec.p) % spec.p


def affine_count(spec: CurveSpec, cap: int = DEFAULT_CAPS["oracle"]) -> int:
    """Affine solutions of y^a = x^b f(x) over F_p, counting a-th roots per x.

    Args:
        spec (:obj:`~supercount.curve.CurveSpec`): The curve.
        cap (:obj:`int`, optional): Largest p accepted.

    Raises:
        :obj:`~supercount.exceptions.CapExceeded`: If p exceeds the cap.

    Returns:
        :obj:`int`: #{(x, y) in F_p^2 : y^a = x^b f(x)}.
    """
    _check_cap(spec.p, cap, "affine count prime")
    return sum(_root_count(_right_hand_side(spec, x), spec.a, spec.p) for x in range(spec.p))


def affine_count_naive(spec: CurveSpec, cap: int = DEFAULT_CAPS["oracle"]) -> int:
    """Same count by trying every pair (x, y)."""
    _check_cap(spec.p, cap, "affine count prime")
    p = spec.p
    powers = [pow(y, spec.a, p) for y in range(p)]
    total = 0
    for x in range(p):
        rhs = _right_hand_side(spec, x)
        total += sum(1 for y_power in powers if y_power == rhs)
    return total


def diophantine_count(spec: CurveSpec, cap: int = DEFAULT_CAPS["oracle"]) -> int:
    """Affine solutions via the value distribution of y -> y^a.

    Tallies how often each residue is an a-th power and looks every right-hand
    side up in the tally.
    """
    _check_cap(spec.p, cap, "affine count prime")
    p = spec.p
    tally: t.Dict[int, int] = {}
    for y in range(p):
        power = pow(y, spec.a, p)
        tally[power] = tally.get(power, 0) + 1
    return sum(tally.get(_right_hand_side(spec, x), 0) for x in range(p))


def _check_smooth(spec: CurveSpec) -> None:
    if spec.b != 0:
        raise Unsupported("smooth counts need b = 0")
    if math.gcd(spec.a, spec.c) != 1:
        raise Unsupported(f"smooth counts need gcd(a, c) = 1, got {math.gcd(spec.a, spec.c)}")
    if spec.m0 == 0 or spec.mc == 0:
        raise Unsupported("smooth counts need m_0 and m_c nonzero")
    if not polynomial.is_square_free(spec.f, spec.p):
        raise Unsupported("smooth counts need a square-free f")


def smooth_count(spec: CurveSpec, cap: int = DEFAULT_CAPS["oracle"]) -> int:
    """#C(F_p) on the smooth projective model of y^a = f(x).

    With gcd(a, c) = 1 there is exactly one place at infinity, and with f
    square-free the affine model is smooth.

    Args:
        spec (:obj:`~supercount.curve.CurveSpec`): The curve.
        cap (:obj:`int`, optional): Largest p accepted.

    Raises:
        :obj:`~supercount.exceptions.Unsupported`: If b != 0, gcd(a, c) != 1 or f
            has a repeated factor.
        :obj:`~supercount.exceptions.CapExceeded`: If p exceeds the cap.

    Returns:
        :obj:`int`: The point count.
    """
    _check_smooth(spec)
    return affine_count(spec, cap) + 1


def binomial_direct(n: int, k: int, p: int) -> Residue:
    """C(n, k) mod p with the bracket convention, by Lucas' theorem.

    Out-of-range arguments give 0. Each base-p digit binomial is a product of at
    most p - 1 factors over a factorial inverse.
    """
    if n < 0 or k < 0 or k > n:
        return Residue(0, p)
    value = 1
    while n or k:
        n_digit, k_digit = n % p, k % p
        if k_digit > n_digit:
            return Residue(0, p)
        numerator, denominator = 1, 1
        for offset in range(k_digit):
            numerator = numerator * (n_digit - offset) % p
            denominator = denominator * (offset + 1) % p
        value = value * numerator * int(gmpy2.invert(denominator, p)) % p
        n, k = n // p, k // p
    return Residue(value, p)


def multinomial_direct(n: int, parts: t.Sequence[int], p: int) -> Residue:
    """n! / (k_0! ... k_c!) mod p, or 0 when the parts are negative or miss n."""
    if any(part < 0 for part in parts) or sum(parts) != n:
        return Residue(0, p)
    value = Residue(1, p)
    remaining = n
    for part in parts:
        value = value * binomial_direct(remaining, part, p)
        remaining -= part
    return value


def power_coefficient_direct(
    f: t.Sequence[int], v: int, target: int, p: int, cap: int = DEFAULT_CAPS["power"]
) -> Residue:
    """Coefficient of x^target in f^v mod p by dense binary exponentiation.

    Args:
        f (list of int): Ascending coefficients.
        v (:obj:`int`): The power.
        target (:obj:`int`): The exponent whose coefficient is wanted.
        p (:obj:`int`): The prime.
        cap (:obj:`int`, optional): Largest c v accepted.

    Raises:
        :obj:`~supercount.exceptions.CapExceeded`: If deg(f) v exceeds the cap.

    Returns:
        :obj:`~supercount.bigmod.Residue`: The coefficient.
    """
    base = polynomial.normalize(f, p)
    top = polynomial.degree(base) * v
    _check_cap(top, cap, "power degree")
    if target < 0 or target > top:
        return Residue(0, p)
    power = polynomial.power(base, v, p, max_degree=target)
    return Residue(polynomial.coefficient(power, target), p)


def _compositions(
    total: int, weights: t.Sequence[int], weighted: int
) -> t.Iterator[t.Tuple[int, ...]]:
    # (k_0, ..., k_c) with sum k_l = total and sum l k_l = weighted
    if len(weights) == 1:
        if weights[0] * total == weighted:
            yield (total,)
        return
    top = weights[-1]
    for count in range(total + 1):
        if top * count > weighted:
            break
        for rest in _compositions(total - count, weights[:-1], weighted - top * count):
            yield rest + (count,)


def hw_entry_multinomial(
    spec: CurveSpec,
    row: t.Tuple[int, int],
    column: t.Tuple[int, int],
    cap: int = 200,
) -> Residue:
    """A Hasse-Witt entry as an explicit sum of multinomial terms.

    Sums multinomial(v; k_0..k_c) m_0^k_0 ... m_c^k_c over every composition
    whose weighted degree hits the entry's target exponent.

    Raises:
        :obj:`~supercount.exceptions.CapExceeded`: If p exceeds the cap.
    """
    _check_cap(spec.p, cap, "multinomial entry prime")
    p = spec.p
    found = entry_target(spec, row, column)
    if found is None:
        return Residue(0, p)
    pair, target = found
    total = Residue(0, p)
    for parts in _compositions(pair.v, range(spec.c + 1), target):
        term = multinomial_direct(pair.v, parts, p)
        for coefficient, count in zip(spec.coefficients, parts):
            term = term * pow(coefficient, count, p)
        total = total + term
    return total


class Fp2Element:
    """x_0 + x_1 theta in F_p(theta) with theta^2 = n.

    Args:
        x0 (:obj:`int`): Rational part.
        x1 (:obj:`int`): Coefficient of theta.
        field (:obj:`Fp2Field`): The field.
    """

    __slots__ = ("_x0", "_x1", "_field")

    def __init__(self, x0: int, x1: int, field: "Fp2Field") -> None:
        self._field = field
        self._x0 = x0 % field.p
        self._x1 = x1 % field.p

    @property
    def x0(self) -> int:
        return self._x0

    @property
    def x1(self) -> int:
        return self._x1

    @property
    def field(self) -> "Fp2Field":
        return self._field

    def is_zero(self) -> bool:
        return self._x0 == 0 and self._x1 == 0

    def _coerce(self, other: t.Union["Fp2Element", int]) -> "Fp2Element":
        if isinstance(other, int):
            return Fp2Element(other, 0, self._field)
        if other.field != self._field:
            raise PreconditionFailed("elements belong to different fields")
        return other

    def __add__(self, other: t.Union["Fp2Element", int]) -> "Fp2Element":
        other = self._coerce(other)
        return Fp2Element(self._x0 + other.x0, self._x1 + other.x1, self._field)

    __radd__ = __add__

    def __sub__(self, other: t.Union["Fp2Element", int]) -> "Fp2Element":
        other = self._coerce(other)
        return Fp2Element(self._x0 - other.x0, self._x1 - other.x1, self._field)

    def __neg__(self) -> "Fp2Element":
        return Fp2Element(-self._x0, -self._x1, self._field)

    def __mul__(self, other: t.Union["Fp2Element", int]) -> "Fp2Element":
        other = self._coerce(other)
        n = self._field.nonresidue
        return Fp2Element(
            self._x0 * other.x0 + n * self._x1 * other.x1,
            self._x0 * other.x1 + self._x1 * other.x0,
            self._field,
        )

    __rmul__ = __mul__

    def __pow__(self, exponent: int) -> "Fp2Element":
        if exponent < 0:
            raise PreconditionFailed("negative powers are not supported in F_p^2")
        result = self._field.one
        base = self
        while exponent:
            if exponent & 1:
                result = result * base
            base = base * base
            exponent >>= 1
        return result

    def __eq__(self, other: object) -> bool:
        if isinstance(other, int):
            return self._x1 == 0 and self._x0 == other % self._field.p
        if not isinstance(other, Fp2Element):
            return NotImplemented
        return (self._x0, self._x1, self._field) == (other.x0, other.x1, other.field)

    def __hash__(self) -> int:
        return hash((self._x0, self._x1, self._field.p))

    def __repr__(self) -> str:
        return f"Fp2Element({self._x0}, {self._x1}, p={self._field.p})"


class Fp2Field:
    """The quadratic extension F_p[theta]/(theta^2 - n) for a fixed nonresidue n.

    Args:
        p (:obj:`int`): An odd prime.
        strategy (:obj:`~supercount.quadratic.SqrtStrategy`, optional): Picks n.
    """

    def __init__(self, p: int, strategy: t.Optional[SqrtStrategy] = None) -> None:
        self._p = p
        self._nonresidue = find_nonresidue(p, strategy).value

    @property
    def p(self) -> int:
        return self._p

    @property
    def nonresidue(self) -> int:
        return self._nonresidue

    @property
    def order(self) -> int:
        return self._p * self._p

    @property
    def zero(self) -> Fp2Element:
        return Fp2Element(0, 0, self)

    @property
    def one(self) -> Fp2Element:
        return Fp2Element(1, 0, self)

    def element(self, x0: int, x1: int = 0) -> Fp2Element:
        return Fp2Element(x0, x1, self)

    def elements(self) -> t.Iterator[Fp2Element]:
        for x0 in range(self._p):
            for x1 in range(self._p):
                yield Fp2Element(x0, x1, self)

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, Fp2Field):
            return NotImplemented
        return (self._p, self._nonresidue) == (other.p, other.nonresidue)

    def __hash__(self) -> int:
        return hash((self._p, self._nonresidue))

    def __repr__(self) -> str:
        return f"Fp2Field(p={self._p}, nonresidue={self._nonresidue})"


def affine_count_fp2(
    spec: CurveSpec,
    cap: int = DEFAULT_CAPS["jacobian"],
    strategy: t.Optional[SqrtStrategy] = None,
) -> int:
    """Affine solutions of y^a = x^b f(x) over F_p^2.

    A nonzero value is an a-th power exactly when its (p^2 - 1)/gcd(a, p^2 - 1)
    power is 1, and then it has gcd(a, p^2 - 1) roots.

    Raises:
        :obj:`~supercount.exceptions.CapExceeded`: If p exceeds the cap.
    """
    _check_cap(spec.p, cap, "extension count prime")
    field = Fp2Field(spec.p, strategy)
    group = field.order - 1
    roots = math.gcd(spec.a, group)
    exponent = group // roots
    total = 0
    for x in field.elements():
        value = field.zero
        for coefficient in reversed(spec.f):
            value = value * x + coefficient
        value = value * x ** spec.b
        if value.is_zero():
            total += 1
        elif value ** exponent == 1:
            total += roots
    return total


def jacobian_order_g2(
    spec: CurveSpec,
    cap: int = DEFAULT_CAPS["jacobian"],
    strategy: t.Optional[SqrtStrategy] = None,
) -> int:
    """#J(F_p) of a smooth genus 2 curve from its counts over F_p and F_p^2.

    Args:
        spec (:obj:`~supercount.curve.CurveSpec`): A genus 2 curve meeting the
            :obj:`smooth_count` conditions.
        cap (:obj:`int`, optional): Largest p accepted.
        strategy (:obj:`~supercount.quadratic.SqrtStrategy`, optional): Picks the
            nonresidue defining F_p^2.

    Raises:
        :obj:`~supercount.exceptions.Unsupported`: If the curve is not a smooth
            genus 2 curve of the supported shape.
        :obj:`~supercount.exceptions.CapExceeded`: If p exceeds the cap.
        :obj:`~supercount.exceptions.ConsistencyError`: If the second L-polynomial
            coefficient comes out fractional.

    Returns:
        :obj:`int`: L(1) = 1 + c_1 + c_2 + p c_1 + p^2.
    """
    if spec.genus != 2:
        raise Unsupported(f"Jacobian oracle needs genus 2, got {spec.genus}")
    _check_cap(spec.p, cap, "Jacobian oracle prime")
    p = spec.p
    n1 = smooth_count(spec, cap)
    n2 = affine_count_fp2(spec, cap, strategy) + 1
    c1 = n1 - p - 1
    doubled = n2 - p * p - 1 + c1 * c1
    if doubled % 2:
        raise ConsistencyError(f"N_1 = {n1}, N_2 = {n2} give a fractional c_2")
    c2 = doubled // 2
    logger.debug("genus 2 oracle at p=%d: N1=%d N2=%d c1=%d c2=%d", p, n1, n2, c1, c2)
    return 1 + c1 + c2 + p * c1 + p * p


class Fp3Field:
    """The cubic extension F_p[t]/(t^3 + s t + r).

    (s, r) is the first pair in lexicographic order with r != 0 for which the
    cubic has no root in F_p, so it is irreducible. Elements are coefficient
    triples (x_0, x_1, x_2) of 1, t and t^2.

    Args:
        p (:obj:`int`): An odd prime.
    """

    def __init__(self, p: int) -> None:
        self._p = p
        self._modulus = next(
            (s, r)
            for s in range(p)
            for r in range(1, p)
            if all((x * x * x + s * x + r) % p for x in range(p))
        )

    @property
    def p(self) -> int:
        """The prime p."""
        return self._p

    @property
    def modulus(self) -> t.Tuple[int, int]:
        """(s, r) with t^3 = -s t - r."""
        return self._modulus

    @property
    def order(self) -> int:
        """p^3."""
        return self._p ** 3

    def elements(self) -> t.Iterator[t.Tuple[int, int, int]]:
        for x0 in range(self._p):
            for x1 in range(self._p):
                for x2 in range(self._p):
                    yield x0, x1, x2

    def mul(
        self, x: t.Tuple[int, int, int], y: t.Tuple[int, int, int]
    ) -> t.Tuple[int, int, int]:
        """Product of two triples, reduced by t^4 = -s t^2 - r t and t^3 = -s t - r."""
        p = self._p
        s, r = self._modulus
        x0, x1, x2 = x
        y0, y1, y2 = y
        c3 = x1 * y2 + x2 * y1
        c4 = x2 * y2
        c0 = x0 * y0 - r * c3
        c1 = x0 * y1 + x1 * y0 - r * c4 - s * c3
        c2 = x0 * y2 + x1 * y1 + x2 * y0 - s * c4
        return c0 % p, c1 % p, c2 % p

    def power(self, x: t.Tuple[int, int, int], exponent: int) -> t.Tuple[int, int, int]:
        if exponent < 0:
            raise PreconditionFailed("negative powers are not supported in F_p^3")
        result = (1, 0, 0)
        while exponent:
            if exponent & 1:
                result = self.mul(result, x)
            x = self.mul(x, x)
            exponent >>= 1
        return result

    def __repr__(self) -> str:
        return f"Fp3Field(p={self._p}, modulus={self._modulus})"


def affine_count_fp3(spec: CurveSpec, cap: int = DEFAULT_CAPS["cubic"]) -> int:
    """Affine solutions of y^a = x^b f(x) over F_p^3.

    Tallies y^a over the whole field once, then looks up x^b f(x) for every x.

    Raises:
        :obj:`~supercount.exceptions.CapExceeded`: If p exceeds the cap.
    """
    _check_cap(spec.p, cap, "cubic extension prime")
    field = Fp3Field(spec.p)
    p = spec.p
    powers: t.Dict[t.Tuple[int, int, int], int] = {}
    for y in field.elements():
        value = field.power(y, spec.a)
        powers[value] = powers.get(value, 0) + 1
    total = 0
    for x in field.elements():
        value = (0, 0, 0)
        for coefficient in reversed(spec.f):
            v0, v1, v2 = field.mul(value, x)
            value = ((v0 + coefficient) % p, v1, v2)
        value = field.mul(value, field.power(x, spec.b))
        total += powers.get(value, 0)
    return total


def jacobian_order_g3(
    spec: CurveSpec,
    cap: int = DEFAULT_CAPS["cubic"],
    strategy: t.Optional[SqrtStrategy] = None,
) -> int:
    """#J(F_p) of a smooth genus 3 curve from its counts over F_p, F_p^2 and F_p^3.

    The power sums s_k = p^k + 1 - N_k give the elementary symmetric functions of
    the Frobenius roots by Newton's identities, and L(1) follows from them.

    Args:
        spec (:obj:`~supercount.curve.CurveSpec`): A genus 3 curve meeting the
            :obj:`smooth_count` conditions.
        cap (:obj:`int`, optional): Largest p accepted.
        strategy (:obj:`~supercount.quadratic.SqrtStrategy`, optional): Picks the
            nonresidue defining F_p^2.

    Raises:
        :obj:`~supercount.exceptions.Unsupported`: If the curve is not a smooth
            genus 3 curve of the supported shape.
        :obj:`~supercount.exceptions.CapExceeded`: If p exceeds the cap.
        :obj:`~supercount.exceptions.ConsistencyError`: If an L-polynomial
            coefficient comes out fractional.

    Returns:
        :obj:`int`: L(1) = 1 + c_1 + c_2 + c_3 + p c_2 + p^2 c_1 + p^3.
    """
    if spec.genus != 3:
        raise Unsupported(f"genus 3 Jacobian oracle needs genus 3, got {spec.genus}")
    _check_cap(spec.p, cap, "Jacobian oracle prime")
    p = spec.p
    n1 = smooth_count(spec, cap)
    n2 = affine_count_fp2(spec, cap, strategy) + 1
    n3 = affine_count_fp3(spec, cap) + 1
    s1, s2, s3 = p + 1 - n1, p * p + 1 - n2, p ** 3 + 1 - n3
    e1 = s1
    e2, rest2 = divmod(e1 * s1 - s2, 2)
    e3, rest3 = divmod(e2 * s1 - e1 * s2 + s3, 3)
    if rest2 or rest3:
        raise ConsistencyError(
            f"N_1 = {n1}, N_2 = {n2}, N_3 = {n3} give fractional L-polynomial coefficients"
        )
    c1, c2, c3 = -e1, e2, -e3
    logger.debug(
        "genus 3 oracle at p=%d: N1=%d N2=%d N3=%d c=(%d, %d, %d)", p, n1, n2, n3, c1, c2, c3
    )
    return 1 + c1 + c2 + c3 + p * c2 + p * p * c1 + p ** 3
