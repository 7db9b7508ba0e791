"""
Dense univariate polynomials over Z/m.

A polynomial is a list of canonical coefficients in ascending order (constant term
first) with no trailing zeros; the zero polynomial is ``[]``. Multiplication packs
coefficients into one big integer (Kronecker substitution) and lets gmpy2 do the
product, which keeps the giant polynomials of the direct Hasse-Witt path and the
baby-step products of the matrix factorial fast without a dedicated FFT.
"""
import typing as t

import gmpy2

from .bigmod import inverse

Poly = t.List[int]

# Below this many coefficients in the shorter factor schoolbook wins.
_SCHOOLBOOK_CUTOFF = 24


def normalize(poly: t.Sequence[int], modulus: int) -> Poly:
    """Reduces coefficients and strips trailing zeros."""
    result = [c % modulus for c in poly]
    while result and not result[-1]:
        result.pop()
    return result


def degree(poly: Poly) -> int:
    """Degree of ``poly``; the zero polynomial has degree -1."""
    return len(poly) - 1


def add(a: Poly, b: Poly, modulus: int) -> Poly:
    if len(a) < len(b):
        a, b = b, a
    result = list(a)
    for i, coefficient in enumerate(b):
        result[i] = (result[i] + coefficient) % modulus
    return normalize(result, modulus)


def sub(a: Poly, b: Poly, modulus: int) -> Poly:
    result = list(a) + [0] * max(0, len(b) - len(a))
    for i, coefficient in enumerate(b):
        result[i] = (result[i] - coefficient) % modulus
    return normalize(result, modulus)


def scale(a: Poly, factor: int, modulus: int) -> Poly:
    return normalize([c * factor for c in a], modulus)


def mul(a: Poly, b: Poly, modulus: int) -> Poly:
    """Product of two polynomials with canonical coefficients.

    Args:
        a (list of int): First factor.
        b (list of int): Second factor.
        modulus (:obj:`int`): Coefficient modulus.

    Returns:
        list of int: The normalized product.
    """
    if not a or not b:
        return []
    if min(len(a), len(b)) <= _SCHOOLBOOK_CUTOFF:
        return _mul_schoolbook(a, b, modulus)
    return _mul_kronecker(a, b, modulus)


def _mul_schoolbook(a: Poly, b: Poly, modulus: int) -> Poly:
    if len(a) > len(b):
        a, b = b, a
    product = [0] * (len(a) + len(b) - 1)
    for i, a_i in enumerate(a):
        if a_i:
            for j, b_j in enumerate(b):
                product[i + j] += a_i * b_j
    return normalize(product, modulus)


def _mul_kronecker(a: Poly, b: Poly, modulus: int) -> Poly:
    # every product coefficient is below min(len) * (m - 1)^2, so slots never carry
    bound = min(len(a), len(b)) * (modulus - 1) ** 2
    width = (bound.bit_length() + 8) // 8
    packed_a = gmpy2.mpz(int.from_bytes(_pack(a, width), "little"))
    packed_b = gmpy2.mpz(int.from_bytes(_pack(b, width), "little"))
    length = len(a) + len(b) - 1
    raw = int(packed_a * packed_b).to_bytes(width * length, "little")
    return normalize(
        [
            int.from_bytes(raw[i * width : (i + 1) * width], "little")
            for i in range(length)
        ],
        modulus,
    )


def _pack(poly: Poly, width: int) -> bytes:
    return b"".join(c.to_bytes(width, "little") for c in poly)


def truncate(poly: Poly, length: int) -> Poly:
    """``poly`` modulo x^length."""
    result = poly[:length]
    while result and not result[-1]:
        result.pop()
    return result


def power(
    base: Poly, exponent: int, modulus: int, max_degree: t.Optional[int] = None
) -> Poly:
    """``base ** exponent`` by binary exponentiation, optionally modulo x^(max_degree+1).

    Args:
        base (list of int): The polynomial to raise.
        exponent (:obj:`int`): Nonnegative exponent.
        modulus (:obj:`int`): Coefficient modulus.
        max_degree (:obj:`int`, optional): Drop every term above this degree.

    Returns:
        list of int: The (truncated) power.
    """
    length = None if max_degree is None else max_degree + 1
    result: Poly = normalize([1], modulus)
    square = normalize(base, modulus)
    while exponent:
        if exponent & 1:
            result = mul(result, square, modulus)
            if length is not None:
                result = truncate(result, length)
        exponent >>= 1
        if exponent:
            square = mul(square, square, modulus)
            if length is not None:
                square = truncate(square, length)
    return result


def coefficient(poly: Poly, index: int) -> int:
    """Coefficient of x^index, zero outside the stored range."""
    if 0 <= index < len(poly):
        return poly[index]
    return 0


def evaluate(poly: Poly, point: int, modulus: int) -> int:
    """Horner evaluation of ``poly`` at ``point``."""
    value = 0
    for c in reversed(poly):
        value = (value * point + c) % modulus
    return value


def derivative(poly: Poly, modulus: int) -> Poly:
    return normalize([i * c for i, c in enumerate(poly)][1:], modulus)


def monic(poly: Poly, prime: int) -> Poly:
    """Scales a nonzero polynomial over F_p to leading coefficient 1."""
    if not poly:
        return []
    return scale(poly, inverse(poly[-1], prime), prime)


def divmod_field(a: Poly, b: Poly, prime: int) -> t.Tuple[Poly, Poly]:
    """Schoolbook division with remainder over F_p.

    Raises:
        :obj:`ZeroDivisionError`: If ``b`` is the zero polynomial.
    """
    if not b:
        raise ZeroDivisionError("division by zero polynomial")
    if len(a) < len(b):
        return [], list(a)
    lead_inverse = inverse(b[-1], prime)
    quotient = [0] * (len(a) - len(b) + 1)
    remainder = list(a)
    for i in range(len(a) - len(b), -1, -1):
        q_i = remainder[i + len(b) - 1] * lead_inverse % prime
        quotient[i] = q_i
        if q_i:
            for j, b_j in enumerate(b):
                remainder[i + j] = (remainder[i + j] - q_i * b_j) % prime
    return normalize(quotient, prime), normalize(remainder[: len(b) - 1], prime)


def gcd(a: Poly, b: Poly, prime: int) -> Poly:
    """Monic greatest common divisor over F_p."""
    while b:
        a, b = b, divmod_field(a, b, prime)[1]
    return monic(a, prime)


def exact_divide(a: Poly, b: Poly, prime: int) -> Poly:
    quotient, remainder = divmod_field(a, b, prime)
    if remainder:
        raise ArithmeticError("polynomial division is not exact")
    return quotient


def square_free_factorization(poly: Poly, prime: int) -> t.List[t.Tuple[Poly, int]]:
    """Yun's square-free factorization over F_p.

    Valid when deg(poly) < p, which holds for every f handled here (p > b + c).
    The constant factor is dropped.

    Args:
        poly (list of int): A nonzero polynomial over F_p.
        prime (:obj:`int`): The field characteristic.

    Returns:
        list of tuple(list of int, int): Monic pairwise coprime square-free factors
            of positive degree with their multiplicities.
    """
    factors: t.List[t.Tuple[Poly, int]] = []
    poly = monic(poly, prime)
    if len(poly) <= 1:
        return factors
    slope = derivative(poly, prime)
    common = gcd(poly, slope, prime)
    rest = exact_divide(poly, common, prime)
    deflated = exact_divide(slope, common, prime)
    multiplicity = 1
    while len(rest) > 1:
        remainder = sub(deflated, derivative(rest, prime), prime)
        factor = gcd(rest, remainder, prime)
        if len(factor) > 1:
            factors.append((factor, multiplicity))
        rest = exact_divide(rest, factor, prime)
        deflated = exact_divide(remainder, factor, prime)
        multiplicity += 1
    return factors


def is_square_free(poly: Poly, prime: int) -> bool:
    """Whether a polynomial of degree below p has no repeated factor over F_p."""
    return len(gcd(poly, derivative(poly, prime), prime)) <= 1


def inverse_series(poly: Poly, length: int, modulus: int) -> Poly:
    """Power series inverse of ``poly`` modulo x^length by Newton iteration.

    The constant term must be a unit modulo ``modulus``.
    """
    result = [inverse(poly[0], modulus)]
    precision = 1
    while precision < length:
        precision = min(2 * precision, length)
        error = mul(truncate(poly, precision), result, modulus)[:precision]
        correction = [(-c) % modulus for c in error] + [0] * (precision - len(error))
        correction[0] = (correction[0] + 2) % modulus
        result = mul(result, normalize(correction, modulus), modulus)[:precision]
    return result + [0] * (length - len(result))


def reverse(poly: Poly, length: int) -> Poly:
    padded = poly + [0] * (length - len(poly))
    return padded[:length][::-1]


class SubproductTree:
    """Subproduct tree over a list of points, for fast multipoint evaluation.

    Level 0 holds the linear factors x - x_i; every higher level holds products of
    adjacent pairs, so every node is monic and division by a node needs no
    coefficient inverse, only the series inverse of its reversal (cached per node).

    Args:
        points (list of int): Evaluation points.
        modulus (:obj:`int`): Coefficient modulus, any m >= 2.
    """

    def __init__(self, points: t.Sequence[int], modulus: int) -> None:
        self._modulus = modulus
        self._points = [x % modulus for x in points]
        level = [[(-x) % modulus, 1] for x in self._points]
        self._levels: t.List[t.List[Poly]] = [level]
        while len(level) > 1:
            paired = [
                mul(level[i], level[i + 1], modulus)
                for i in range(0, len(level) - 1, 2)
            ]
            if len(level) % 2:
                paired.append(level[-1])
            level = paired
            self._levels.append(level)
        self._inverses: t.Dict[t.Tuple[int, int], Poly] = {}

    @property
    def points(self) -> t.List[int]:
        return list(self._points)

    def _reduce(self, poly: Poly, height: int, index: int) -> Poly:
        node = self._levels[height][index]
        node_degree = len(node) - 1
        if len(poly) <= node_degree:
            return poly
        key = (height, index)
        if key not in self._inverses:
            self._inverses[key] = inverse_series(
                node[::-1], node_degree, self._modulus
            )
        quotient_length = len(poly) - node_degree
        reversed_inverse = self._inverses[key]
        if quotient_length > len(reversed_inverse):
            reversed_inverse = inverse_series(
                node[::-1], quotient_length, self._modulus
            )
        quotient_reversed = mul(
            reverse(poly, len(poly))[:quotient_length],
            reversed_inverse[:quotient_length],
            self._modulus,
        )[:quotient_length]
        quotient = reverse(quotient_reversed, quotient_length)
        product = mul(quotient, node, self._modulus)
        return sub(poly[:node_degree], product[:node_degree], self._modulus)

    def evaluate(self, poly: Poly) -> t.List[int]:
        """Values of ``poly`` at every point, in point order."""
        if not self._points:
            return []
        values: t.List[int] = []
        top = len(self._levels) - 1
        self._descend(normalize(poly, self._modulus), top, 0, values)
        return values

    def _descend(self, poly: Poly, height: int, index: int, values: t.List[int]) -> None:
        poly = self._reduce(poly, height, index)
        if height == 0:
            values.append(poly[0] if poly else 0)
            return
        left = 2 * index
        if len(poly) <= 8:
            for leaf in self._leaf_range(height, index):
                values.append(evaluate(poly, self._points[leaf], self._modulus))
            return
        self._descend(poly, height - 1, left, values)
        if left + 1 < len(self._levels[height - 1]):
            self._descend(poly, height - 1, left + 1, values)

    def _leaf_range(self, height: int, index: int) -> range:
        lo, hi = index, index + 1
        for _ in range(height):
            lo, hi = 2 * lo, 2 * hi
        return range(lo, min(hi, len(self._points)))
