"""
Polylog-time point counting for y^a = m_c x^(b+c) + m_0 x^b.

With e = gcd(ac, p - 1) in {3, 4, 6, 8} and p - 1 = e f, every diagonal Hasse-Witt
entry is a binomial coefficient C(rf, sf) times powers of m_0 and m_c, and each
such binomial is congruent modulo p to a short expression in the coefficients of
p = a^2 + d b^2. Everything else is either a structural zero or follows from the
three reductions below.

Representative values C(tf, f) mod p, with a_3 = 1 mod 3, a_4 = 1 mod 4 and
a_8 = 1 mod 4, b_3 taken mod 3 in {0, 1, 2}:

====  ======================  =================================================
e     t                       C(tf, f)
====  ======================  =================================================
3     2                       2a_3, -a_3 - 3b_3, -a_3 + 3b_3 for b_3 = 0, 1, 2
4     2                       2a_4
6     2                       (-1)^f (2a_3, -a_3 + 3b_3, -a_3 - 3b_3) likewise
6     3                       2a_3
8     2                       (-1)^(b_4/4) 2a_8
8     3                       (-1)^(f + b_4/4) 2a_4
8     4                       (-1)^f 2a_8
====  ======================  =================================================

and for e = 8 also C(5f, 2f) = (-1)^(f + b_4/4) 2a_8, used as a cross-check.
"""
import logging
import typing as t

import gmpy2

from .bigmod import Residue, inverse
from .curve import CurveSpec, exponent_pair
from .exceptions import (
    BadGcd,
    ConsistencyError,
    NotDiagonal,
    NotTrinomial,
    OutOfRange,
    PreconditionFailed,
    PrimeTooSmall,
    Undefined,
)
from .lift import lift_count
from .quadratic import PrimeDecomposition, SqrtStrategy, decompose_prime
from .representations import CountResult

logger = logging.getLogger(__name__)

SUPPORTED_E = (3, 4, 6, 8)

#: (e, t) pairs with a listed representative value of C(tf, f)
REPRESENTATIVES = {3: (2,), 4: (2,), 6: (2, 3), 8: (2, 3, 4)}


class TrinomialContext:
    """Everything the fast path needs about a trinomial curve at a prime.

    Args:
        spec (:obj:`~supercount.curve.CurveSpec`): The curve.
        e (:obj:`int`): gcd(ac, p - 1).
        decompositions (dict): d -> :obj:`~supercount.quadratic.PrimeDecomposition`.
    """

    def __init__(
        self,
        spec: CurveSpec,
        e: int,
        decompositions: t.Dict[int, PrimeDecomposition],
    ) -> None:
        self._spec = spec
        self._e = e
        self._d = spec.a * spec.c // e
        self._f = (spec.p - 1) // e
        self._decompositions = dict(decompositions)

    @property
    def spec(self) -> CurveSpec:
        return self._spec

    @property
    def p(self) -> int:
        return self._spec.p

    @property
    def e(self) -> int:
        return self._e

    @property
    def d(self) -> int:
        """ac / e."""
        return self._d

    @property
    def f(self) -> int:
        """(p - 1) / e."""
        return self._f

    @property
    def decompositions(self) -> t.Dict[int, PrimeDecomposition]:
        return dict(self._decompositions)

    def decomposition(self, d: int) -> PrimeDecomposition:
        return self._decompositions[d]

    def __repr__(self) -> str:
        return f"TrinomialContext(p={self.p}, e={self._e}, d={self._d}, f={self._f})"


def gcd_e(spec: CurveSpec) -> int:
    """gcd(ac, p - 1)."""
    return int(gmpy2.gcd(spec.a * spec.c, spec.p - 1))


def applicable(
    spec: CurveSpec,
    strategy: t.Optional[SqrtStrategy] = None,
    require_unique_lift: bool = True,
) -> TrinomialContext:
    """Checks whether the fast path applies and prepares its context.

    Args:
        spec (:obj:`~supercount.curve.CurveSpec`): The curve.
        strategy (:obj:`~supercount.quadratic.SqrtStrategy`, optional): Square root
            strategy for the decompositions.
        require_unique_lift (:obj:`bool`, optional): Also demand p > 16 g^2, so the
            count mod p determines the count. Defaults to True.

    Raises:
        :obj:`~supercount.exceptions.NotTrinomial`: If f has a middle term or a zero
            end coefficient.
        :obj:`~supercount.exceptions.BadGcd`: If gcd(ac, p - 1) is not 3, 4, 6 or 8.
        :obj:`~supercount.exceptions.PrimeTooSmall`: If p <= 16 g^2 and a unique
            lift is required.

    Returns:
        :obj:`TrinomialContext`: The context.
    """
    if not spec.is_trinomial:
        raise NotTrinomial(f"{spec.to_text()} is not a trinomial curve")
    e = gcd_e(spec)
    if e not in SUPPORTED_E:
        raise BadGcd(e)
    g = spec.genus
    if require_unique_lift and spec.p <= 16 * g * g:
        raise PrimeTooSmall(f"p = {spec.p} must exceed 16 g^2 = {16 * g * g}")
    decompositions = {}
    # e = 8 needs p = a_4^2 + b_4^2 as well as p = a_8^2 + 2 b_8^2
    for use in (e, 4) if e == 8 else (e,):
        decomposition = decompose_prime(spec.p, use, strategy)
        decompositions[decomposition.d] = decomposition
    context = TrinomialContext(spec, e, decompositions)
    logger.debug("trinomial context %r for %r", context, spec)
    return context


def _sign(exponent: int) -> int:
    return -1 if exponent % 2 else 1


def _cubic_column(decomposition: PrimeDecomposition, e: int, f: int) -> int:
    """C(2f, f) for e = 3 and e = 6, selected by b_3 mod 3."""
    a3, b3 = decomposition.a, decomposition.b
    if e == 3:
        values = (2 * a3, -a3 - 3 * b3, -a3 + 3 * b3)
        return values[b3 % 3]
    values = (2 * a3, -a3 + 3 * b3, -a3 - 3 * b3)
    return _sign(f) * values[b3 % 3]


def rep_value(t_index: int, ctx: TrinomialContext, s_index: int = 1) -> Residue:
    """Listed value of C(t f, s f) mod p.

    Args:
        t_index (:obj:`int`): t.
        ctx (:obj:`TrinomialContext`): The context.
        s_index (:obj:`int`, optional): s; 1 except for the e = 8 pair (5, 2).

    Raises:
        :obj:`~supercount.exceptions.Undefined`: If no value is listed for (t, s, e).

    Returns:
        :obj:`~supercount.bigmod.Residue`: The value.
    """
    e, f, p = ctx.e, ctx.f, ctx.p
    if e in (3, 6) and s_index == 1 and t_index == 2:
        return Residue(_cubic_column(ctx.decomposition(3), e, f), p)
    if e == 4 and s_index == 1 and t_index == 2:
        return Residue(2 * ctx.decomposition(1).a, p)
    if e == 6 and s_index == 1 and t_index == 3:
        return Residue(2 * ctx.decomposition(3).a, p)
    if e == 8:
        a8 = ctx.decomposition(2).a
        a4 = ctx.decomposition(1).a
        quarter = _sign(abs(ctx.decomposition(1).b) // 4)
        if s_index == 1 and t_index == 2:
            return Residue(quarter * 2 * a8, p)
        if s_index == 1 and t_index == 3:
            return Residue(_sign(f) * quarter * 2 * a4, p)
        if s_index == 1 and t_index == 4:
            return Residue(_sign(f) * 2 * a8, p)
        if s_index == 2 and t_index == 5:
            return Residue(_sign(f) * quarter * 2 * a8, p)
    raise Undefined(f"no listed value for C({t_index}f, {s_index}f) with e = {e}")


def reflect(r: int, s: int, e: int, f: int) -> t.Tuple[int, int, int]:
    """C(rf, sf) = sign * C(r'f, s'f) mod p = ef + 1.

    Returns:
        tuple(int, int, int): ``(sign, e + s - r, s)``.
    """
    return _sign(s * f), e + s - r, s


def _column_value(t_index: int, ctx: TrinomialContext) -> int:
    """C(t f, f) mod p for 1 <= t <= e - 1."""
    if t_index == 1:
        return 1
    if t_index in REPRESENTATIVES[ctx.e]:
        return rep_value(t_index, ctx).value
    sign, reflected, _ = reflect(t_index, 1, ctx.e, ctx.f)
    return sign * rep_value(reflected, ctx).value % ctx.p


def binom_rf_sf(r: int, s: int, ctx: TrinomialContext) -> Residue:
    """C(rf, sf) mod p for 1 <= s < r <= e - 1.

    The complement C(rf, sf) = C(rf, (r - s)f) shortens the product, which then
    telescopes as the product over t = 1..s of C((r - s + t)f, f) / C(tf, f).
    Columns C(tf, f) outside the listed values are reflected onto listed ones.

    Raises:
        :obj:`~supercount.exceptions.OutOfRange`: Unless 1 <= s < r <= e - 1.
        :obj:`~supercount.exceptions.ConsistencyError`: If the e = 8 cross-check on
            C(5f, 2f) fails.

    Returns:
        :obj:`~supercount.bigmod.Residue`: The binomial mod p.
    """
    e, p = ctx.e, ctx.p
    if not 1 <= s < r <= e - 1:
        raise OutOfRange(f"need 1 <= s < r <= e - 1 = {e - 1}, got r={r} s={s}")
    short = min(s, r - s)
    numerator, denominator = 1, 1
    for t_index in range(1, short + 1):
        numerator = numerator * _column_value(r - short + t_index, ctx) % p
        denominator = denominator * _column_value(t_index, ctx) % p
    value = Residue(numerator * inverse(denominator, p), p)
    if e == 8 and r == 5 and short == 2:
        listed = rep_value(5, ctx, 2)
        if listed != value:
            raise ConsistencyError(
                f"C(5f, 2f) is {value} by reduction but {listed} by the listed value"
            )
    return value


def diagonal_entry(point: t.Tuple[int, int], ctx: TrinomialContext) -> Residue:
    """Diagonal Hasse-Witt entry at basis point (i, j), zero when it vanishes."""
    spec = ctx.spec
    p, a, b, c = spec.p, spec.a, spec.b, spec.c
    i, j = point
    d, f = ctx.d, ctx.f
    if (j * c) % d or (a * i + b * j - a * b) % d:
        return Residue(0, p)
    r = (ctx.e * d - j * c) // d
    s = (a * i + b * j - a * b) // d
    if s < 0 or s > r:
        return Residue(0, p)
    k_c = s * f
    k_0 = (r - s) * f
    value = Residue(1, p) if s in (0, r) else binom_rf_sf(r, s, ctx)
    return (
        value
        * Residue(int(gmpy2.powmod(spec.m0, k_0, p)), p)
        * Residue(int(gmpy2.powmod(spec.mc, k_c, p)), p)
    )


def trace_fast(spec: CurveSpec, ctx: TrinomialContext) -> Residue:
    """Trace of the Hasse-Witt matrix mod p as a sum of diagonal binomial terms.

    Args:
        spec (:obj:`~supercount.curve.CurveSpec`): The curve.
        ctx (:obj:`TrinomialContext`): Its context, from :obj:`applicable`.

    Returns:
        :obj:`~supercount.bigmod.Residue`: The trace.
    """
    total = Residue(0, spec.p)
    for point in spec.basis:
        total = total + diagonal_entry(point, ctx)
    return total


def count_points_fast(
    spec: CurveSpec, strategy: t.Optional[SqrtStrategy] = None
) -> CountResult:
    """Exact #C(F_p) from the fast trace.

    Args:
        spec (:obj:`~supercount.curve.CurveSpec`): A trinomial curve.
        strategy (:obj:`~supercount.quadratic.SqrtStrategy`, optional): Square root
            strategy.

    Raises:
        :obj:`~supercount.exceptions.NotApplicable`: If the fast path does not apply.
        :obj:`~supercount.exceptions.AmbiguousLift`: If p is too small for the count
            mod p to single out the count.

    Returns:
        :obj:`~supercount.representations.CountResult`: The count.
    """
    ctx = applicable(spec, strategy, require_unique_lift=False)
    trace = trace_fast(spec, ctx)
    return lift_count(trace, spec.p, spec.genus, "trinomial")


def off_diagonal_support(spec: CurveSpec) -> t.List[t.Tuple[t.Tuple[int, int], t.Tuple[int, int]]]:
    """Off-diagonal entries that are not structural zeros.

    For a trinomial, f^v has a nonzero coefficient exactly at multiples of c up to
    c v (v < p keeps every binomial C(v, k) a unit), so this is exact.
    """
    support = []
    p, b, c = spec.p, spec.b, spec.c
    for row in spec.basis:
        pair = exponent_pair(row[1], spec.a, p)
        for column in spec.basis:
            if column == row or column[1] != pair.u:
                continue
            target = p * column[0] - row[0] - b * pair.v
            if 0 <= target <= c * pair.v and target % c == 0:
                support.append((row, column))
    return support


def diagonal_jacobian(entries: t.Sequence[Residue]) -> Residue:
    """(-1)^g times the product of (entry - 1) over the diagonal."""
    if not entries:
        raise ValueError("no diagonal entries")
    product = Residue(1, entries[0].modulus)
    for entry in entries:
        product = product * (entry - 1)
    return product * (-1) ** len(entries)


def jacobian_mod_p_diagonal(
    spec: CurveSpec, strategy: t.Optional[SqrtStrategy] = None
) -> Residue:
    """#J(F_p) mod p when the Hasse-Witt matrix is diagonal.

    Raises:
        :obj:`~supercount.exceptions.NotDiagonal`: If a does not divide p - 1, or an
            off-diagonal entry can be nonzero.
        :obj:`~supercount.exceptions.PreconditionFailed`: If the genus is not 2 or 3.
        :obj:`~supercount.exceptions.NotApplicable`: If the fast path does not apply.

    Returns:
        :obj:`~supercount.bigmod.Residue`: The Jacobian order mod p.
    """
    if (spec.p - 1) % spec.a:
        raise NotDiagonal(f"a = {spec.a} does not divide p - 1 = {spec.p - 1}")
    if spec.genus not in (2, 3):
        raise PreconditionFailed(f"diagonal Jacobian needs genus 2 or 3, not {spec.genus}")
    ctx = applicable(spec, strategy, require_unique_lift=False)
    if off_diagonal_support(spec):
        raise NotDiagonal(f"the Hasse-Witt matrix of {spec.to_text()} is not diagonal")
    return diagonal_jacobian([diagonal_entry(point, ctx) for point in spec.basis])
