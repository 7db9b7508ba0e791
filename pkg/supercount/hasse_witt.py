"""
Reference computation of the Hasse-Witt matrix from coefficients of powers of f,
together with the linear algebra built on it: characteristic polynomial of
Frobenius modulo p, point count modulo p and Jacobian order modulo p.
"""
import logging
import typing as t

from . import polynomial
from .bigmod import Residue, inverse
from .config import DEFAULT_CAPS
from .curve import CurveSpec, ExponentPair, LatticeBasis, exponent_pair, validate
from .exceptions import CapExceeded, ConsistencyError

logger = logging.getLogger(__name__)

Matrix = t.List[t.List[int]]


class HasseWittMatrix:
    """The Hasse-Witt matrix of a curve, rows and columns in basis order.

    Args:
        basis (:obj:`~supercount.curve.LatticeBasis`): The basis N.
        entries (list of list of int): g x g entries, canonical residues mod p.
        p (:obj:`int`): The prime.
    """

    def __init__(self, basis: LatticeBasis, entries: Matrix, p: int) -> None:
        self._basis = basis
        self._entries = [[value % p for value in row] for row in entries]
        self._p = p

    @property
    def basis(self) -> LatticeBasis:
        return self._basis

    @property
    def entries(self) -> Matrix:
        return [list(row) for row in self._entries]

    @property
    def p(self) -> int:
        return self._p

    @property
    def genus(self) -> int:
        return len(self._basis)

    def entry(self, row: t.Tuple[int, int], column: t.Tuple[int, int]) -> Residue:
        """Entry at basis points ``row`` and ``column``."""
        return Residue(
            self._entries[self._basis.index(row)][self._basis.index(column)], self._p
        )

    def trace(self) -> Residue:
        return Residue(sum(self._entries[k][k] for k in range(self.genus)), self._p)

    def is_diagonal(self) -> bool:
        return all(
            value == 0
            for r, row in enumerate(self._entries)
            for k, value in enumerate(row)
            if r != k
        )

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, HasseWittMatrix):
            return NotImplemented
        return (self._basis, self._entries, self._p) == (
            other.basis,
            other.entries,
            other.p,
        )

    def __repr__(self) -> str:
        return f"HasseWittMatrix(p={self._p}, entries={self._entries})"

    def to_json(self) -> dict:
        """The json representation of a Hasse-Witt matrix.

        Returns:
            :obj:`dict`: Matrix represented in JSON format, entries as decimal
                strings.
        """
        return {
            "schema": "1",
            "basis": self._basis.to_json(),
            "entries": [[str(value) for value in row] for row in self._entries],
            "p": str(self._p),
        }


class CharPolyModP:
    """Characteristic polynomial of Frobenius reduced mod p.

    Args:
        coefficients (list of int): Ascending coefficients of the degree 2g monic
            polynomial, canonical residues mod p.
        p (:obj:`int`): The prime.
    """

    def __init__(self, coefficients: t.Sequence[int], p: int) -> None:
        self._coefficients = [value % p for value in coefficients]
        self._p = p

    @property
    def coefficients(self) -> t.List[int]:
        return list(self._coefficients)

    @property
    def p(self) -> int:
        return self._p

    @property
    def degree(self) -> int:
        return len(self._coefficients) - 1

    @property
    def genus(self) -> int:
        return self.degree // 2

    def coefficient(self, power: int) -> Residue:
        """Coefficient of t^power."""
        return Residue(polynomial.coefficient(self._coefficients, power), self._p)

    def __call__(self, point: int) -> Residue:
        return Residue(polynomial.evaluate(self._coefficients, point, self._p), self._p)

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, CharPolyModP):
            return NotImplemented
        return (self._coefficients, self._p) == (other.coefficients, other.p)

    def __repr__(self) -> str:
        return f"CharPolyModP(p={self._p}, coefficients={self._coefficients})"

    def to_json(self) -> dict:
        """The json representation of a characteristic polynomial.

        Returns:
            :obj:`dict`: Ascending coefficients as decimal strings.
        """
        return {
            "schema": "1",
            "p": str(self._p),
            "coefficients": [str(value) for value in self._coefficients],
        }


class MatrixTarget:
    """One entry of the Hasse-Witt matrix that may be nonzero.

    The entry is the coefficient of x^target in f^v.
    """

    __slots__ = ("row", "column", "pair", "target")

    def __init__(self, row: int, column: int, pair: ExponentPair, target: int) -> None:
        self.row = row
        self.column = column
        self.pair = pair
        self.target = target


def entry_target(
    spec: CurveSpec, row: t.Tuple[int, int], column: t.Tuple[int, int]
) -> t.Optional[t.Tuple[ExponentPair, int]]:
    """The exponent pair and coefficient index behind one entry.

    Returns:
        tuple or None: ``(pair, p i' - i - b v_j)`` when j' = u_j and the index lies
            in [0, c v_j]; None for a structural zero.
    """
    i, j = row
    i_prime, j_prime = column
    pair = exponent_pair(j, spec.a, spec.p)
    if j_prime != pair.u:
        return None
    target = spec.p * i_prime - i - spec.b * pair.v
    if target < 0 or target > spec.c * pair.v:
        return None
    return pair, target


def matrix_targets(spec: CurveSpec) -> t.List[MatrixTarget]:
    """Every entry of the matrix that is not a structural zero."""
    basis = spec.basis
    targets = []
    for row, row_point in enumerate(basis):
        for column, column_point in enumerate(basis):
            found = entry_target(spec, row_point, column_point)
            if found is not None:
                targets.append(MatrixTarget(row, column, found[0], found[1]))
    return targets


def _check_direct_cap(spec: CurveSpec, cap: int) -> None:
    if spec.p > cap:
        raise CapExceeded(f"direct path is capped at p <= {cap}, got p = {spec.p}")


def hw_entry_direct(
    spec: CurveSpec,
    row: t.Tuple[int, int],
    column: t.Tuple[int, int],
    cap: int = DEFAULT_CAPS["direct"],
) -> Residue:
    """One Hasse-Witt entry as a coefficient of f^{v_j}.

    Args:
        spec (:obj:`~supercount.curve.CurveSpec`): The curve.
        row (tuple(int, int)): Row basis point (i, j).
        column (tuple(int, int)): Column basis point (i', j').
        cap (:obj:`int`, optional): Largest p accepted.

    Raises:
        :obj:`~supercount.exceptions.CapExceeded`: If p exceeds the cap.

    Returns:
        :obj:`~supercount.bigmod.Residue`: The entry mod p.
    """
    _check_direct_cap(spec, cap)
    found = entry_target(spec, row, column)
    if found is None:
        return Residue(0, spec.p)
    pair, target = found
    power = polynomial.power(spec.f, pair.v, spec.p, max_degree=target)
    return Residue(polynomial.coefficient(power, target), spec.p)


def hw_matrix_direct(spec: CurveSpec, cap: int = DEFAULT_CAPS["direct"]) -> HasseWittMatrix:
    """The full Hasse-Witt matrix, one dense power of f per distinct v_j.

    Every nonzero term of every power is checked to land on a basis point.

    Args:
        spec (:obj:`~supercount.curve.CurveSpec`): A valid curve.
        cap (:obj:`int`, optional): Largest p accepted.

    Raises:
        :obj:`~supercount.exceptions.CurveValidationError`: If the curve is invalid.
        :obj:`~supercount.exceptions.CapExceeded`: If p exceeds the cap.

    Returns:
        :obj:`HasseWittMatrix`: The matrix.
    """
    _check_direct_cap(spec, cap)
    spec = validate(spec)
    p, basis = spec.p, spec.basis
    powers: t.Dict[int, polynomial.Poly] = {}
    entries = [[0] * len(basis) for _ in basis]
    for row, (i, j) in enumerate(basis):
        pair = exponent_pair(j, spec.a, p)
        if pair.v not in powers:
            powers[pair.v] = polynomial.power(spec.f, pair.v, p)
        power = powers[pair.v]
        _check_landing(spec, i, pair, power)
        for column, (i_prime, j_prime) in enumerate(basis):
            found = entry_target(spec, (i, j), (i_prime, j_prime))
            if found is not None:
                entries[row][column] = polynomial.coefficient(power, found[1])
    logger.debug("direct Hasse-Witt matrix for %r: %s", spec, entries)
    return HasseWittMatrix(basis, entries, p)


def _check_landing(spec: CurveSpec, i: int, pair: ExponentPair, power: polynomial.Poly) -> None:
    offset = spec.b * pair.v + i
    first = (-offset) % spec.p
    for exponent in range(first, len(power), spec.p):
        if power[exponent] and (
            (exponent + offset) // spec.p,
            pair.u,
        ) not in spec.basis:
            raise ConsistencyError(
                f"Cartier image of x^{exponent} for row ({i}, {pair.j}) leaves the basis"
            )


def char_poly_mod_p(matrix: HasseWittMatrix) -> CharPolyModP:
    """(-1)^g t^g det(M - tI), which equals t^g det(tI - M), over F_p.

    Args:
        matrix (:obj:`HasseWittMatrix`): The Hasse-Witt matrix.

    Returns:
        :obj:`CharPolyModP`: Degree 2g, monic.
    """
    characteristic = characteristic_polynomial(matrix.entries, matrix.p)
    return CharPolyModP([0] * matrix.genus + characteristic, matrix.p)


def characteristic_polynomial(matrix: Matrix, p: int) -> polynomial.Poly:
    """det(tI - M) over F_p via reduction to Hessenberg form.

    Returns:
        list of int: Ascending coefficients, monic of degree n.
    """
    n = len(matrix)
    h = [[value % p for value in row] for row in matrix]
    for m in range(1, n - 1):
        pivot = next((r for r in range(m, n) if h[r][m - 1]), None)
        if pivot is None:
            continue
        if pivot != m:
            h[pivot], h[m] = h[m], h[pivot]
            for row in h:
                row[pivot], row[m] = row[m], row[pivot]
        pivot_inverse = inverse(h[m][m - 1], p)
        for r in range(m + 1, n):
            factor = h[r][m - 1] * pivot_inverse % p
            if not factor:
                continue
            for k in range(n):
                h[r][k] = (h[r][k] - factor * h[m][k]) % p
            for k in range(n):
                h[k][m] = (h[k][m] + factor * h[k][r]) % p

    polys: t.List[polynomial.Poly] = [[1]]
    for m in range(1, n + 1):
        current = polynomial.mul([(-h[m - 1][m - 1]) % p, 1], polys[m - 1], p)
        product = 1
        for i in range(m - 1, 0, -1):
            product = product * h[i][i - 1] % p
            weight = h[i - 1][m - 1] * product % p
            if weight:
                current = polynomial.sub(
                    current, polynomial.scale(polys[i - 1], weight, p), p
                )
        polys.append(current)
    result = polys[n]
    return result + [0] * (n + 1 - len(result))


def determinant(matrix: Matrix, p: int) -> int:
    """Determinant over F_p by Gaussian elimination with row pivoting."""
    n = len(matrix)
    rows = [[value % p for value in row] for row in matrix]
    result = 1
    for k in range(n):
        pivot = next((r for r in range(k, n) if rows[r][k]), None)
        if pivot is None:
            return 0
        if pivot != k:
            rows[pivot], rows[k] = rows[k], rows[pivot]
            result = -result
        result = result * rows[k][k] % p
        pivot_inverse = inverse(rows[k][k], p)
        for r in range(k + 1, n):
            factor = rows[r][k] * pivot_inverse % p
            if factor:
                for column in range(k, n):
                    rows[r][column] = (rows[r][column] - factor * rows[k][column]) % p
    return result % p


def count_points_mod_p(spec: CurveSpec, cap: int = DEFAULT_CAPS["direct"]) -> Residue:
    """#C(F_p) mod p as 1 - trace of the Hasse-Witt matrix."""
    return 1 - hw_matrix_direct(spec, cap).trace()


def jacobian_mod_p(matrix: HasseWittMatrix) -> Residue:
    """#J(F_p) mod p as (-1)^g det(M - I)."""
    g = matrix.genus
    shifted = [
        [value - (1 if r == k else 0) for k, value in enumerate(row)]
        for r, row in enumerate(matrix.entries)
    ]
    return Residue((-1) ** g * determinant(shifted, matrix.p), matrix.p)


def frobenius_coefficients_mod_p(charpoly: CharPolyModP) -> t.List[Residue]:
    """a_1, ..., a_g mod p where chi(t) = t^2g - a_1 t^(2g-1) + a_2 t^(2g-2) - ..."""
    degree = charpoly.degree
    return [
        charpoly.coefficient(degree - k) * (-1) ** k
        for k in range(1, charpoly.genus + 1)
    ]
