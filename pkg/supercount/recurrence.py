"""
Hasse-Witt matrices in O~(sqrt p) time.

The coefficients f_k of f^v satisfy the linear recurrence

    K m_0 f_K = sum_{l=1..c} m_l (l v - (K - l)) f_{K-l},

so the window U_K = [f_{K-c+1}, ..., f_K] obeys m_0 K U_K = B(K) U_{K-1} for a c x c
matrix B(K) whose entries are linear in K. Scaling by V_K = m_0^K K! U_K removes the
division and turns a run of steps into a matrix factorial B(K_hi)...B(K_lo), which
baby-step giant-step evaluates with O~(sqrt L) ring operations.

Steps at multiples of p are singular mod p. They are taken one at a time over
Z/p^m with m = 1 + floor(k_max / p), which is enough precision to divide the
p^floor(k/p) in k! back out at each checkpoint.
"""
import logging
import typing as t

from . import polynomial
from .bigmod import inverse, isqrt
from .curve import CurveSpec, validate
from .exceptions import (
    PreconditionFailed,
    RecoveryError,
    SegmentTooLong,
    TargetOutOfSupport,
)
from .hasse_witt import HasseWittMatrix, matrix_targets

logger = logging.getLogger(__name__)

Matrix = t.List[t.List[int]]
PolyMatrix = t.List[t.List[polynomial.Poly]]


class RecurrenceMatrix:
    """A square matrix B(k) = constant + k * slope over Z/N.

    Args:
        constant (list of list of int): Constant parts of the entries.
        slope (list of list of int): Coefficients of k.
        modulus (:obj:`int`): N.
    """

    def __init__(self, constant: Matrix, slope: Matrix, modulus: int) -> None:
        self._modulus = modulus
        self._constant = [[value % modulus for value in row] for row in constant]
        self._slope = [[value % modulus for value in row] for row in slope]

    @property
    def size(self) -> int:
        return len(self._constant)

    @property
    def modulus(self) -> int:
        return self._modulus

    def at(self, k: int) -> Matrix:
        """B(k) with entries reduced mod N."""
        modulus = self._modulus
        return [
            [(const + k * slope) % modulus for const, slope in zip(c_row, s_row)]
            for c_row, s_row in zip(self._constant, self._slope)
        ]

    def shifted(self, shift: int) -> PolyMatrix:
        """B(x + shift) as a matrix of polynomials in x."""
        modulus = self._modulus
        return [
            [
                polynomial.normalize([const + shift * slope, slope], modulus)
                for const, slope in zip(c_row, s_row)
            ]
            for c_row, s_row in zip(self._constant, self._slope)
        ]

    def with_modulus(self, modulus: int) -> "RecurrenceMatrix":
        return RecurrenceMatrix(self._constant, self._slope, modulus)


def factorial_matrix(modulus: int) -> RecurrenceMatrix:
    """The 1 x 1 matrix B(k) = k, whose matrix factorial is a plain factorial."""
    return RecurrenceMatrix([[0]], [[1]], modulus)


def build_recurrence(
    spec: CurveSpec, v: int, modulus: t.Optional[int] = None
) -> RecurrenceMatrix:
    """B(k) for the coefficients of f^v.

    The first c - 1 rows shift the window and carry m_0 k on the superdiagonal;
    position q of the last row holds m_{c-q} ((c - q) v - (k - (c - q))).

    Args:
        spec (:obj:`~supercount.curve.CurveSpec`): The curve.
        v (:obj:`int`): The power of f.
        modulus (:obj:`int`, optional): N; defaults to p.

    Raises:
        :obj:`~supercount.exceptions.PreconditionFailed`: If m_0 = 0 mod p.

    Returns:
        :obj:`RecurrenceMatrix`: B.
    """
    if spec.m0 == 0:
        raise PreconditionFailed("m_0 must be invertible mod p")
    modulus = spec.p if modulus is None else modulus
    c = spec.c
    m = spec.coefficients
    constant = [[0] * c for _ in range(c)]
    slope = [[0] * c for _ in range(c)]
    for q in range(c - 1):
        slope[q][q + 1] = m[0]
    for q in range(c):
        l = c - q
        constant[c - 1][q] = m[l] * (l * v + l)
        slope[c - 1][q] = -m[l]
    return RecurrenceMatrix(constant, slope, modulus)


def identity(size: int) -> Matrix:
    return [[1 if r == k else 0 for k in range(size)] for r in range(size)]


def matmul(a: Matrix, b: Matrix, modulus: int) -> Matrix:
    columns = list(zip(*b))
    return [
        [sum(x * y for x, y in zip(row, column)) % modulus for column in columns]
        for row in a
    ]


def matvec(a: Matrix, vector: t.Sequence[int], modulus: int) -> t.List[int]:
    return [sum(x * y for x, y in zip(row, vector)) % modulus for row in a]


def _polymatmul(a: PolyMatrix, b: PolyMatrix, modulus: int) -> PolyMatrix:
    size = len(a)
    product: PolyMatrix = []
    for r in range(size):
        row = []
        for k in range(size):
            entry: polynomial.Poly = []
            for inner in range(size):
                if a[r][inner] and b[inner][k]:
                    entry = polynomial.add(
                        entry, polynomial.mul(a[r][inner], b[inner][k], modulus), modulus
                    )
            row.append(entry)
        product.append(row)
    return product


def matrix_factorial_naive(
    matrix: RecurrenceMatrix, k_lo: int, k_hi: int, modulus: t.Optional[int] = None
) -> Matrix:
    """B(k_hi) B(k_hi - 1) ... B(k_lo) by sequential multiplication.

    An empty range (k_lo > k_hi) gives the identity.
    """
    modulus = matrix.modulus if modulus is None else modulus
    product = identity(matrix.size)
    for k in range(k_lo, k_hi + 1):
        product = matmul(matrix.at(k), product, modulus)
    return product


def _baby_steps(matrix: RecurrenceMatrix, lo: int, hi: int, modulus: int) -> PolyMatrix:
    # B(x + hi) ... B(x + lo)
    if lo == hi:
        return matrix.shifted(lo)
    mid = (lo + hi) // 2
    return _polymatmul(
        _baby_steps(matrix, mid + 1, hi, modulus),
        _baby_steps(matrix, lo, mid, modulus),
        modulus,
    )


def matrix_factorial_bsgs(
    matrix: RecurrenceMatrix,
    k_lo: int,
    k_hi: int,
    modulus: t.Optional[int] = None,
    prime: t.Optional[int] = None,
) -> Matrix:
    """B(k_hi) ... B(k_lo) by baby steps and giant steps.

    With s = floor(sqrt L) for a run of L steps, M(x) = B(x + s) ... B(x + 1) is
    built once as a polynomial matrix by a product tree, evaluated at
    x = k_lo - 1 + i s for i < L // s with one subproduct tree shared by all
    entries, and the leftover steps are multiplied on naively. Every tree node is
    monic, so no inverse mod N is ever needed.

    Args:
        matrix (:obj:`RecurrenceMatrix`): B.
        k_lo (:obj:`int`): First factor index.
        k_hi (:obj:`int`): Last factor index.
        modulus (:obj:`int`, optional): N; defaults to the matrix's.
        prime (:obj:`int`, optional): When given, the run must be shorter than
            ``prime`` and avoid its multiples.

    Raises:
        :obj:`~supercount.exceptions.SegmentTooLong`: If the run breaks the
            ``prime`` restriction.

    Returns:
        list of list of int: The product mod N.
    """
    modulus = matrix.modulus if modulus is None else modulus
    length = k_hi - k_lo + 1
    if length <= 0:
        return identity(matrix.size)
    if prime is not None:
        if length >= prime:
            raise SegmentTooLong(f"segment of length {length} is not shorter than {prime}")
        if k_hi // prime != (k_lo - 1) // prime:
            raise SegmentTooLong(f"segment [{k_lo}, {k_hi}] contains a multiple of {prime}")
    if length <= 2:
        return matrix_factorial_naive(matrix, k_lo, k_hi, modulus)

    step = isqrt(length)[0]
    giant = length // step
    baby = _baby_steps(matrix.with_modulus(modulus), 1, step, modulus)
    tree = polynomial.SubproductTree(
        [k_lo - 1 + i * step for i in range(giant)], modulus
    )
    values = [[tree.evaluate(entry) for entry in row] for row in baby]
    size = matrix.size
    product = identity(size)
    for i in range(giant):
        block = [[values[r][k][i] for k in range(size)] for r in range(size)]
        product = matmul(block, product, modulus)
    for k in range(k_lo + giant * step, k_hi + 1):
        product = matmul(matrix.at(k), product, modulus)
    return product


class PlanStep:
    """One step of a :obj:`SegmentPlan`.

    ``kind`` is ``"range"`` for a run lo..hi free of multiples of p, ``"multiple"``
    for the single singular step k = lo = hi, and ``"checkpoint"`` for recovering
    the window at k = lo = hi.
    """

    __slots__ = ("kind", "lo", "hi")

    def __init__(self, kind: str, lo: int, hi: int) -> None:
        self.kind = kind
        self.lo = lo
        self.hi = hi

    def __repr__(self) -> str:
        return f"PlanStep({self.kind!r}, {self.lo}, {self.hi})"

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, PlanStep):
            return NotImplemented
        return (self.kind, self.lo, self.hi) == (other.kind, other.lo, other.hi)


class SegmentPlan:
    """Steps that walk k from 0 through every checkpoint.

    Args:
        p (:obj:`int`): The prime.
        checkpoints (iterable of int): Window positions to recover.

    Raises:
        :obj:`~supercount.exceptions.RecoveryError`: If a checkpoint reaches p^2,
            where floor(k/p) no longer counts the p in k!.
    """

    def __init__(self, p: int, checkpoints: t.Iterable[int]) -> None:
        self._p = p
        self._checkpoints = tuple(sorted(set(checkpoints)))
        k_max = self._checkpoints[-1] if self._checkpoints else 0
        if k_max >= p * p:
            raise RecoveryError(f"checkpoint {k_max} is not below p^2 = {p * p}")
        self._exponent = 1 + k_max // p
        self._steps: t.List[PlanStep] = []
        k = 0
        for checkpoint in self._checkpoints:
            while k < checkpoint:
                next_multiple = (k // p + 1) * p
                end = min(checkpoint, next_multiple - 1)
                if end > k:
                    self._steps.append(PlanStep("range", k + 1, end))
                    k = end
                if k < checkpoint:
                    self._steps.append(PlanStep("multiple", next_multiple, next_multiple))
                    k = next_multiple
            self._steps.append(PlanStep("checkpoint", checkpoint, checkpoint))

    @property
    def p(self) -> int:
        return self._p

    @property
    def checkpoints(self) -> t.Tuple[int, ...]:
        return self._checkpoints

    @property
    def exponent(self) -> int:
        """m in the working modulus p^m."""
        return self._exponent

    @property
    def modulus(self) -> int:
        return self._p ** self._exponent

    @property
    def steps(self) -> t.List[PlanStep]:
        return list(self._steps)


def coefficients_at(
    spec: CurveSpec, v: int, targets: t.Iterable[int]
) -> t.Dict[int, int]:
    """Coefficients of x^t in f^v mod p for every requested t.

    Args:
        spec (:obj:`~supercount.curve.CurveSpec`): The curve; m_0 must be nonzero.
        v (:obj:`int`): The power, 0 <= v <= p - 1.
        targets (iterable of int): Indices in [0, c v].

    Raises:
        :obj:`~supercount.exceptions.TargetOutOfSupport`: If a target lies outside
            [0, c v].
        :obj:`~supercount.exceptions.RecoveryError`: If a window is not divisible by
            the power of p in k!, which means the plan is wrong.

    Returns:
        :obj:`dict`: Target mapped to its coefficient, a canonical residue mod p.
    """
    p, c = spec.p, spec.c
    if not 0 <= v <= p - 1:
        raise PreconditionFailed(f"v = {v} must lie in [0, p - 1]")
    wanted = sorted(set(targets))
    for target in wanted:
        if not 0 <= target <= c * v:
            raise TargetOutOfSupport(f"target {target} lies outside [0, {c * v}]")
    if not wanted:
        return {}
    plan = SegmentPlan(p, wanted)
    modulus = plan.modulus
    recurrence = build_recurrence(spec, v, modulus)
    factorial = factorial_matrix(modulus)
    window = [0] * (c - 1) + [pow(spec.m0, v, modulus)]
    unit = 1
    results: t.Dict[int, int] = {}
    logger.debug("coefficients of f^%d at %s mod %d^%d", v, wanted, p, plan.exponent)
    for step in plan.steps:
        if step.kind == "range":
            block = matrix_factorial_bsgs(recurrence, step.lo, step.hi, modulus, prime=p)
            window = matvec(block, window, modulus)
            unit = unit * matrix_factorial_bsgs(
                factorial, step.lo, step.hi, modulus, prime=p
            )[0][0] % modulus
        elif step.kind == "multiple":
            window = matvec(recurrence.at(step.lo), window, modulus)
            unit = unit * (step.lo // p) % modulus
        else:
            results[step.lo] = _recover(window, step.lo, unit, spec.m0, p)
    return results


def _recover(window: t.List[int], k: int, unit: int, m0: int, p: int) -> int:
    p_power = p ** (k // p)
    if any(value % p_power for value in window):
        raise RecoveryError(f"window at k = {k} is not divisible by {p_power}")
    scaled = window[-1] // p_power % p
    denominator = unit * pow(m0, k, p) % p
    return scaled * inverse(denominator, p) % p


def hw_matrix_bgs(spec: CurveSpec) -> HasseWittMatrix:
    """The Hasse-Witt matrix from windows of f^{v_j} reached by matrix factorials.

    Args:
        spec (:obj:`~supercount.curve.CurveSpec`): A valid curve.

    Raises:
        :obj:`~supercount.exceptions.CurveValidationError`: If the curve is invalid.

    Returns:
        :obj:`~supercount.hasse_witt.HasseWittMatrix`: Same as the direct path.
    """
    spec = validate(spec)
    basis = spec.basis
    by_power: t.Dict[int, t.List[t.Any]] = {}
    for target in matrix_targets(spec):
        by_power.setdefault(target.pair.v, []).append(target)
    entries = [[0] * len(basis) for _ in basis]
    for v, targets in by_power.items():
        coefficients = coefficients_at(spec, v, {target.target for target in targets})
        for target in targets:
            entries[target.row][target.column] = coefficients[target.target]
    return HasseWittMatrix(basis, entries, spec.p)
