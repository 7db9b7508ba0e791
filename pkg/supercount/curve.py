"""
Superelliptic curves y^a = x^b f(x) over F_p: the text format, the standing
hypotheses, the interior lattice points of the Newton polygon (a basis of regular
differentials, hence the genus) and the exponent pairs (u_j, v_j).

Curve text is a whitespace separated list of ``key=value`` fields::

    a=4 b=8 c=3 m=[1,0,0,1] p=564819669946735512444543556507

``m`` lists the coefficients of f in ascending order, m_0 first. ``b`` defaults to
0, ``c`` is optional and must equal ``len(m) - 1`` when given, and ``p`` may be
left out and supplied separately (the command line takes it from ``--p``).
"""
import functools
import logging
import re
import typing as t

import gmpy2

from . import polynomial
from .bigmod import inverse, is_prime, parse_integer
from .exceptions import (
    CurveIssue,
    CurveSyntaxError,
    CurveValidationError,
    NotDivisible,
    PreconditionFailed,
)

logger = logging.getLogger(__name__)

_FIELD = re.compile(r"([A-Za-z_]\w*)\s*=\s*(\[[^\]]*\]|[^\s\[\]]+)")
_KEYS = ("a", "b", "c", "m", "p")


class CurveFamily:
    """A superelliptic curve shape with integer coefficients, not yet reduced mod p.

    Args:
        a (:obj:`int`): Exponent of y.
        b (:obj:`int`): Exponent of the x^b factor.
        coefficients (sequence of int): m_0, ..., m_c.
    """

    def __init__(self, a: int, b: int, coefficients: t.Sequence[int]) -> None:
        self._a = a
        self._b = b
        self._coefficients = tuple(coefficients)

    @property
    def a(self) -> int:
        """Exponent of y."""
        return self._a

    @property
    def b(self) -> int:
        """Exponent of the x^b factor."""
        return self._b

    @property
    def c(self) -> int:
        """Degree of f."""
        return len(self._coefficients) - 1

    @property
    def coefficients(self) -> t.Tuple[int, ...]:
        """m_0, ..., m_c as given."""
        return self._coefficients

    def at(self, p: int) -> "CurveSpec":
        """The curve over F_p."""
        return CurveSpec(p, self._a, self._b, self._coefficients)

    def to_text(self) -> str:
        """Curve text without a prime, readable by :obj:`parse_family`."""
        coefficients = ",".join(str(m) for m in self._coefficients)
        return f"a={self._a} b={self._b} c={self.c} m=[{coefficients}]"


class CurveSpec:
    """The curve y^a = x^b (m_0 + m_1 x + ... + m_c x^c) over F_p.

    Construction reduces the coefficients modulo p but checks nothing else; use
    :obj:`validate` for the standing hypotheses.

    Args:
        p (:obj:`int`): The prime.
        a (:obj:`int`): Exponent of y.
        b (:obj:`int`): Exponent of the x^b factor.
        coefficients (sequence of int): m_0, ..., m_c.

    Raises:
        :obj:`~supercount.exceptions.PreconditionFailed`: If p < 2, a < 1, b < 0
            or no coefficient is given.
    """

    def __init__(self, p: int, a: int, b: int, coefficients: t.Sequence[int]) -> None:
        if p < 2 or a < 1 or b < 0 or not coefficients:
            raise PreconditionFailed(
                f"malformed curve p={p} a={a} b={b} with {len(coefficients)} coefficients"
            )
        self._p = p
        self._a = a
        self._b = b
        self._coefficients = tuple(m % p for m in coefficients)

    @property
    def p(self) -> int:
        """The prime p."""
        return self._p

    @property
    def a(self) -> int:
        """Exponent of y."""
        return self._a

    @property
    def b(self) -> int:
        """Exponent of the x^b factor."""
        return self._b

    @property
    def c(self) -> int:
        """Degree of f."""
        return len(self._coefficients) - 1

    @property
    def coefficients(self) -> t.Tuple[int, ...]:
        """m_0, ..., m_c as canonical residues mod p."""
        return self._coefficients

    @property
    def m0(self) -> int:
        """Constant coefficient of f."""
        return self._coefficients[0]

    @property
    def mc(self) -> int:
        """Leading coefficient of f."""
        return self._coefficients[-1]

    @property
    def f(self) -> polynomial.Poly:
        """f as a normalized dense polynomial over F_p."""
        return polynomial.normalize(list(self._coefficients), self._p)

    @property
    def is_trinomial(self) -> bool:
        """Whether f = m_c x^c + m_0 with both coefficients nonzero."""
        return (
            self.c >= 1
            and self.m0 != 0
            and self.mc != 0
            and not any(self._coefficients[1:-1])
        )

    @functools.cached_property
    def basis(self) -> "LatticeBasis":
        """Interior lattice points of the Newton polygon, indexing the Hasse-Witt matrix."""
        return interior_lattice_points(self)

    @property
    def genus(self) -> int:
        """Number of interior lattice points."""
        return len(self.basis)

    def family(self) -> CurveFamily:
        """The same curve with the prime dropped."""
        return CurveFamily(self._a, self._b, self._coefficients)

    def to_text(self) -> str:
        """Curve text including the prime, readable by :obj:`parse_curve`."""
        return f"{self.family().to_text()} p={self._p}"

    def __repr__(self) -> str:
        return f"CurveSpec({self.to_text()!r})"

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, CurveSpec):
            return NotImplemented
        return (self._p, self._a, self._b, self._coefficients) == (
            other.p,
            other.a,
            other.b,
            other.coefficients,
        )

    def __hash__(self) -> int:
        return hash((self._p, self._a, self._b, self._coefficients))


class ValidatedCurve(CurveSpec):
    """A :obj:`CurveSpec` that passed :obj:`validate`."""


def parse_family(text: str) -> t.Tuple[CurveFamily, t.Optional[int]]:
    """Parses curve text.

    Args:
        text (:obj:`str`): Curve text, see the module docstring.

    Raises:
        :obj:`~supercount.exceptions.CurveSyntaxError`: If the text is malformed.

    Returns:
        tuple(:obj:`CurveFamily`, int or None): The curve shape and the prime, if
            the text carries one.
    """
    fields: t.Dict[str, str] = {}
    position = 0
    for match in _FIELD.finditer(text):
        if text[position : match.start()].strip():
            raise CurveSyntaxError(f"unexpected text {text[position:match.start()]!r}")
        key = match.group(1).lower()
        if key not in _KEYS:
            raise CurveSyntaxError(f"unknown curve field {key!r}")
        if key in fields:
            raise CurveSyntaxError(f"curve field {key!r} given twice")
        fields[key] = match.group(2)
        position = match.end()
    if text[position:].strip():
        raise CurveSyntaxError(f"unexpected text {text[position:]!r}")
    if "a" not in fields or "m" not in fields:
        raise CurveSyntaxError("curve text needs at least a= and m=[...]")
    try:
        a = parse_integer(fields["a"])
        b = parse_integer(fields.get("b", "0"))
        body = fields["m"].strip()
        if not (body.startswith("[") and body.endswith("]")):
            raise CurveSyntaxError("m must be a bracketed list like m=[1,0,1]")
        coefficients = [parse_integer(m) for m in body[1:-1].split(",") if m.strip()]
        p = parse_integer(fields["p"]) if "p" in fields else None
        c = parse_integer(fields["c"]) if "c" in fields else None
    except PreconditionFailed as error:
        raise CurveSyntaxError(str(error)) from error
    if not coefficients:
        raise CurveSyntaxError("m must list at least one coefficient")
    if c is not None and c != len(coefficients) - 1:
        raise CurveSyntaxError(f"c={c} but m lists {len(coefficients)} coefficients")
    if a < 1 or b < 0:
        raise CurveSyntaxError(f"need a >= 1 and b >= 0, got a={a} b={b}")
    return CurveFamily(a, b, coefficients), p


def parse_curve(text: str, p: t.Optional[int] = None) -> CurveSpec:
    """Parses curve text into a curve over F_p.

    Args:
        text (:obj:`str`): Curve text, see the module docstring.
        p (:obj:`int`, optional): The prime, when the text does not carry one.

    Raises:
        :obj:`~supercount.exceptions.CurveSyntaxError`: If the text is malformed,
            carries no prime and none is given, or carries a different prime.

    Returns:
        :obj:`CurveSpec`: The parsed curve.
    """
    family, text_p = parse_family(text)
    if text_p is not None and p is not None and text_p != p:
        raise CurveSyntaxError(f"curve text says p={text_p} but p={p} was requested")
    prime = p if p is not None else text_p
    if prime is None:
        raise CurveSyntaxError("no prime given")
    if prime < 2:
        raise CurveSyntaxError(f"p={prime} is not a prime")
    return family.at(prime)


def validation_issues(spec: CurveSpec) -> t.List[CurveIssue]:
    """Every standing hypothesis the curve violates, in a fixed order.

    Polynomial conditions are only examined once p is a usable prime and both end
    coefficients are nonzero.

    Args:
        spec (:obj:`CurveSpec`): The curve.

    Returns:
        list of :obj:`~supercount.exceptions.CurveIssue`: Empty for a valid curve.
    """
    issues: t.List[CurveIssue] = []
    p, a, b, c = spec.p, spec.a, spec.b, spec.c
    prime = is_prime(p)
    if not prime:
        issues.append(CurveIssue("NotPrime", f"p = {p} is not prime"))
    if p <= 3 or p <= a or p <= b + c:
        issues.append(
            CurveIssue(
                "PrimeTooSmall",
                f"p = {p} must exceed 3, a = {a} and b + c = {b + c}",
            )
        )
    if a < 2 or c < 2:
        issues.append(
            CurveIssue("DegreeTooSmall", f"need a >= 2 and c >= 2, got a = {a}, c = {c}")
        )
    if spec.m0 == 0:
        issues.append(CurveIssue("CoefficientZero", "m_0 is zero mod p"))
    if spec.mc == 0:
        issues.append(CurveIssue("CoefficientZero", "m_c is zero mod p"))
    if issues:
        return issues

    f = spec.f
    if not polynomial.is_square_free(f, p):
        issues.append(CurveIssue("NotSquareFree", "f has a repeated factor over F_p"))
    for name, side in side_polynomials(spec).items():
        if not polynomial.is_square_free(side, p):
            issues.append(
                CurveIssue(
                    "SidePolynomialNotSquareFree",
                    f"{name} side polynomial has a repeated factor over F_p",
                )
            )
    if is_reducible(spec):
        issues.append(CurveIssue("Reducible", "y^a - x^b f(x) factors over F_p"))
    return issues


def validate(spec: CurveSpec) -> ValidatedCurve:
    """Checks the standing hypotheses on a curve.

    Args:
        spec (:obj:`CurveSpec`): The curve.

    Raises:
        :obj:`~supercount.exceptions.CurveValidationError`: Listing every violated
            condition.

    Returns:
        :obj:`ValidatedCurve`: The same curve, marked valid.
    """
    if isinstance(spec, ValidatedCurve):
        return spec
    issues = validation_issues(spec)
    if issues:
        raise CurveValidationError(issues)
    return ValidatedCurve(spec.p, spec.a, spec.b, spec.coefficients)


def side_polynomials(spec: CurveSpec) -> t.Dict[str, polynomial.Poly]:
    """Side polynomials of the two slanted sides of the Newton polygon.

    The lattice points on a side are labelled 0, 1, ..., s from one end and the
    coefficient of y^a - x^b f(x) at point k becomes the coefficient of t^k. The
    bottom side is f itself and is checked separately.

    Returns:
        :obj:`dict`: ``"hypotenuse"`` and ``"left"`` side polynomials.
    """
    p = spec.p
    hypotenuse_points = int(gmpy2.gcd(spec.a, spec.b + spec.c))
    left_points = int(gmpy2.gcd(spec.a, spec.b))
    # hypotenuse runs from (b + c, 0) with coefficient -m_c up to (0, a)
    hypotenuse = [(-spec.mc) % p] + [0] * (hypotenuse_points - 1) + [1]
    # left side runs from (b, 0) with coefficient -m_0 up to (0, a)
    left = [(-spec.m0) % p] + [0] * (left_points - 1) + [1]
    return {"hypotenuse": hypotenuse, "left": left}


def is_reducible(spec: CurveSpec) -> bool:
    """Capelli's criterion for y^a - h(x) with h = x^b f(x) over F_p.

    The polynomial factors iff h is an l-th power for some prime l dividing a, or
    4 divides a and h lies in -4 F_p[x]^4. Both tests read off the multiplicities of
    the square-free factorization of f, the exponent b, and the leading coefficient.
    """
    p, a = spec.p, spec.a
    multiplicities = [
        multiplicity for _, multiplicity in polynomial.square_free_factorization(spec.f, p)
    ]

    def is_power(exponent: int, leading: int) -> bool:
        if spec.b % exponent or any(m % exponent for m in multiplicities):
            return False
        return _is_power_residue(leading, exponent, p)

    for ell in _prime_factors(a):
        if is_power(ell, spec.mc):
            return True
    if a % 4 == 0 and is_power(4, (-spec.mc * inverse(4, p)) % p):
        return True
    return False


def _is_power_residue(value: int, exponent: int, p: int) -> bool:
    if value % p == 0:
        return False
    order = int(gmpy2.gcd(exponent, p - 1))
    return gmpy2.powmod(value, (p - 1) // order, p) == 1


def _prime_factors(n: int) -> t.List[int]:
    factors = []
    candidate = 2
    while candidate * candidate <= n:
        if n % candidate == 0:
            factors.append(candidate)
            while n % candidate == 0:
                n //= candidate
        candidate += 1
    if n > 1:
        factors.append(n)
    return factors


class LatticeBasis:
    """Interior lattice points N of the Newton polygon, in lexicographic order.

    Args:
        points (iterable of tuple(int, int)): The points (i, j).
    """

    def __init__(self, points: t.Iterable[t.Tuple[int, int]]) -> None:
        self._points = tuple(sorted(set(points)))
        self._index = {point: k for k, point in enumerate(self._points)}

    @property
    def points(self) -> t.Tuple[t.Tuple[int, int], ...]:
        return self._points

    @property
    def genus(self) -> int:
        return len(self._points)

    def index(self, point: t.Tuple[int, int]) -> int:
        """Row/column position of ``point``."""
        return self._index[point]

    def __contains__(self, point: object) -> bool:
        return point in self._index

    def __iter__(self) -> t.Iterator[t.Tuple[int, int]]:
        return iter(self._points)

    def __len__(self) -> int:
        return len(self._points)

    def __eq__(self, other: object) -> bool:
        if isinstance(other, LatticeBasis):
            return self._points == other.points
        return NotImplemented

    def __hash__(self) -> int:
        return hash(self._points)

    def __repr__(self) -> str:
        return f"LatticeBasis({list(self._points)})"

    def to_json(self) -> t.List[t.List[int]]:
        return [[i, j] for i, j in self._points]


def lattice_points(a: int, b: int, c: int) -> LatticeBasis:
    """Interior lattice points of the triangle (0, a), (b, 0), (b + c, 0)."""
    points = []
    for i in range(1, b + 1):
        lo = a * (b - i) // b + 1
        hi = _ceil_div(a * (b + c - i), b + c) - 1
        points.extend((i, j) for j in range(lo, hi + 1))
    for i in range(b + 1, b + c):
        hi = _ceil_div(a * (b + c - i), b + c) - 1
        points.extend((i, j) for j in range(1, hi + 1))
    return LatticeBasis(points)


def _ceil_div(numerator: int, denominator: int) -> int:
    return -((-numerator) // denominator)


def interior_lattice_points(spec: CurveSpec) -> LatticeBasis:
    """The basis N of regular differentials of the curve."""
    return lattice_points(spec.a, spec.b, spec.c)


def genus(spec: CurveSpec) -> int:
    """|N|, the genus of the curve."""
    return len(interior_lattice_points(spec))


def genus_formula(a: int, b: int, c: int) -> int:
    """Genus from Pick's theorem on the Newton polygon, without enumerating N.

    Twice the area is a c; the boundary carries c + gcd(a, b + c) + gcd(a, b)
    lattice points.
    """
    boundary = c + int(gmpy2.gcd(a, b + c)) + int(gmpy2.gcd(a, b))
    return (a * c - boundary) // 2 + 1


class ExponentPair:
    """The unique (u, v) with j - 1 + (a - 1)(p - 1) = p (u - 1) + a v.

    Args:
        j (:obj:`int`): Row index, 1 <= j <= a.
        u (:obj:`int`): Column index, 1 <= u <= a.
        v (:obj:`int`): Power of f, 0 <= v <= p - 1.
    """

    __slots__ = ("j", "u", "v")

    def __init__(self, j: int, u: int, v: int) -> None:
        self.j = j
        self.u = u
        self.v = v

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, ExponentPair):
            return NotImplemented
        return (self.j, self.u, self.v) == (other.j, other.u, other.v)

    def __hash__(self) -> int:
        return hash((self.j, self.u, self.v))

    def __repr__(self) -> str:
        return f"ExponentPair(j={self.j}, u={self.u}, v={self.v})"


@functools.lru_cache(maxsize=1024)
def exponent_pair(j: int, a: int, p: int) -> ExponentPair:
    """Computes (u_j, v_j).

    Args:
        j (:obj:`int`): 1 <= j <= a.
        a (:obj:`int`): Exponent of y, coprime to p.
        p (:obj:`int`): The prime.

    Raises:
        :obj:`~supercount.exceptions.PreconditionFailed`: If j is out of range or
            a is not invertible mod p.

    Returns:
        :obj:`ExponentPair`: The pair for j.
    """
    if not 1 <= j <= a or a % p == 0:
        raise PreconditionFailed(
            f"exponent pair needs 1 <= j <= a and p not dividing a, got j={j}"
        )
    total = j - 1 + (a - 1) * (p - 1)
    v = inverse(a, p) * total % p
    u = (total - a * v) // p + 1
    return ExponentPair(j, u, v)


def s_index(i: int, j: int, ks: t.Sequence[int], spec: CurveSpec) -> int:
    """Row index s of the Cartier image of the term indexed by (k_0, ..., k_c).

    Args:
        i (:obj:`int`): x-index of the basis element.
        j (:obj:`int`): y-index of the basis element.
        ks (sequence of int): k_0, ..., k_c summing to v_j.
        spec (:obj:`CurveSpec`): The curve.

    Raises:
        :obj:`~supercount.exceptions.PreconditionFailed`: If the k_l do not sum to
            v_j or the wrong number is given.
        :obj:`~supercount.exceptions.NotDivisible`: If p does not divide
            b v_j + sum(l k_l) + i.

    Returns:
        :obj:`int`: (b v_j + sum(l k_l) + i) / p.
    """
    pair = exponent_pair(j, spec.a, spec.p)
    if len(ks) != spec.c + 1 or sum(ks) != pair.v:
        raise PreconditionFailed(
            f"need c + 1 = {spec.c + 1} exponents summing to v_j = {pair.v}"
        )
    numerator = spec.b * pair.v + sum(l * k for l, k in enumerate(ks)) + i
    if numerator % spec.p:
        raise NotDivisible(f"{spec.p} does not divide {numerator}")
    return numerator // spec.p
