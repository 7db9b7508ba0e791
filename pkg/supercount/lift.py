"""
Lifting data known modulo p to integers with the Hasse-Weil bounds.

All comparisons against irrational bounds are done on squares of integers, so
nothing here touches floating point.
"""
import logging
import math
import typing as t

from .bigmod import Residue, ceil_sqrt, isqrt
from .config import DEFAULT_MATERIALIZE_LIMIT
from .exceptions import AmbiguousLift, NoCandidate, PreconditionFailed
from .hasse_witt import CharPolyModP, frobenius_coefficients_mod_p
from .representations import CountResult, JacobianCandidates

logger = logging.getLogger(__name__)


def _residue_value(value: t.Union[Residue, int], p: int) -> int:
    if isinstance(value, Residue):
        if value.modulus != p:
            raise PreconditionFailed(f"expected a residue mod {p}, got mod {value.modulus}")
        return value.value
    return value % p


def representatives(residue: int, p: int, lo: int, hi: int) -> range:
    """Integers congruent to ``residue`` mod p in [lo, hi]."""
    first = lo + (residue - lo) % p
    return range(first, hi + 1, p)


def lift_trace(trace_mod_p: t.Union[Residue, int], p: int, g: int) -> int:
    """The integer t = trace_mod_p (mod p) with |t| <= 2g sqrt(p).

    Args:
        trace_mod_p (:obj:`~supercount.bigmod.Residue` | :obj:`int`): Trace mod p.
        p (:obj:`int`): The prime.
        g (:obj:`int`): The genus.

    Raises:
        :obj:`~supercount.exceptions.AmbiguousLift`: If several integers qualify,
            which can only happen for p <= 16 g^2.
        :obj:`~supercount.exceptions.NoCandidate`: If none does.

    Returns:
        :obj:`int`: The lifted trace.
    """
    residue = _residue_value(trace_mod_p, p)
    bound = isqrt(4 * g * g * p)[0]
    candidates = representatives(residue, p, -bound, bound)
    if len(candidates) > 1:
        raise AmbiguousLift(
            f"{len(candidates)} integers = {residue} mod {p} satisfy |t| <= 2*{g}*sqrt(p): "
            f"{list(candidates)}"
        )
    if not candidates:
        raise NoCandidate(f"no integer = {residue} mod {p} satisfies |t| <= 2*{g}*sqrt(p)")
    return candidates[0]


def count_from_trace(trace: int, p: int) -> int:
    """#C(F_p) = p + 1 - t."""
    return p + 1 - trace


def lift_count(
    trace_mod_p: t.Union[Residue, int], p: int, g: int, method: str
) -> CountResult:
    """Lifts a trace mod p and wraps the exact count.

    Raises:
        :obj:`~supercount.exceptions.AmbiguousLift`: See :obj:`lift_trace`.
        :obj:`~supercount.exceptions.NoCandidate`: See :obj:`lift_trace`.
    """
    trace = lift_trace(trace_mod_p, p, g)
    logger.debug("lifted trace %s mod %d to %d", trace_mod_p, p, trace)
    return CountResult(count_from_trace(trace, p), trace, method, p, g)


def weil_interval(p: int, g: int) -> t.Tuple[int, int]:
    """[ceil((sqrt p - 1)^2g), floor((sqrt p + 1)^2g)] exactly.

    Writing (sqrt p + 1)^2g = A + B sqrt p, the bounds are A -/+ floor(sqrt(B^2 p)).
    """
    rational, irrational = 0, 0
    for k in range(2 * g + 1):
        if k % 2:
            irrational += math.comb(2 * g, k) * p ** (k // 2)
        else:
            rational += math.comb(2 * g, k) * p ** (k // 2)
    spread = isqrt(irrational * irrational * p)[0]
    return rational - spread, rational + spread


def jacobian_candidates_g2(
    charpoly: CharPolyModP, p: t.Optional[int] = None
) -> JacobianCandidates:
    """Possible #J(F_p) for a genus 2 curve from its characteristic polynomial mod p.

    a_1 is lifted uniquely; a_2 ranges over its residue class inside
    2|a_1| sqrt p - 2p <= a_2 <= a_1^2/4 + 2p, which holds at most five values.

    Args:
        charpoly (:obj:`~supercount.hasse_witt.CharPolyModP`): Degree 4.
        p (:obj:`int`, optional): The prime; defaults to the polynomial's.

    Raises:
        :obj:`~supercount.exceptions.PreconditionFailed`: If the polynomial does not
            have degree 4.
        :obj:`~supercount.exceptions.AmbiguousLift`: If p is too small to lift a_1.

    Returns:
        :obj:`~supercount.representations.JacobianCandidates`: The candidates.
    """
    p = charpoly.p if p is None else p
    if charpoly.genus != 2:
        raise PreconditionFailed(f"genus 2 candidates need degree 4, got {charpoly.degree}")
    a1_mod, a2_mod = frobenius_coefficients_mod_p(charpoly)
    a1 = lift_trace(a1_mod, p, 2)
    lo = ceil_sqrt(4 * a1 * a1 * p) - 2 * p
    hi = (a1 * a1 + 8 * p) // 4
    interval = weil_interval(p, 2)
    a2_candidates = []
    orders = []
    for a2 in representatives(a2_mod.value, p, lo, hi):
        order = 1 - a1 * (1 + p) + a2 + p * p
        if interval[0] <= order <= interval[1]:
            a2_candidates.append(a2)
            orders.append(order)
    return JacobianCandidates(
        p,
        2,
        charpoly(1).value,
        interval,
        len(orders),
        materialized=orders,
        a1=a1,
        a2_candidates=a2_candidates,
    )


def jacobian_candidates_g3(
    jmod: t.Union[Residue, int], p: int, limit: int = DEFAULT_MATERIALIZE_LIMIT
) -> JacobianCandidates:
    """Possible #J(F_p) for a genus 3 curve from #J(F_p) mod p.

    Args:
        jmod (:obj:`~supercount.bigmod.Residue` | :obj:`int`): #J(F_p) mod p.
        p (:obj:`int`): The prime.
        limit (:obj:`int`, optional): Materialize the list only up to this many.

    Returns:
        :obj:`~supercount.representations.JacobianCandidates`: Residue and interval,
            with the explicit list when it is short enough.
    """
    residue = _residue_value(jmod, p)
    interval = weil_interval(p, 3)
    first = interval[0] + (residue - interval[0]) % p
    cardinality = 0 if first > interval[1] else (interval[1] - first) // p + 1
    materialized = None
    if cardinality <= limit:
        materialized = list(representatives(residue, p, *interval))
    return JacobianCandidates(
        p,
        3,
        residue,
        interval,
        cardinality,
        materialized=materialized,
        refined_bound=ceil_sqrt(1600 * p),
    )
