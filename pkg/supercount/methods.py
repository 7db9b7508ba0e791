"""Choosing and running a point counting path."""
import logging
import time
import typing as t

from . import trinomial
from .config import DEFAULT_CAPS
from .curve import CurveSpec, validate
from .exceptions import CurveValidationError, NotApplicable, PreconditionFailed, SuperCountError
from .hasse_witt import HasseWittMatrix, hw_matrix_direct
from .lift import lift_count
from .quadratic import SqrtStrategy
from .recurrence import hw_matrix_bgs
from .representations import CountResult

logger = logging.getLogger(__name__)

COUNT_METHODS = ("auto", "trinomial", "bgs", "direct")
MATRIX_METHODS = ("auto", "bgs", "direct")

#: Below this prime, ``auto`` prefers the dense direct path over baby-step giant-step.
AUTO_DIRECT_LIMIT = 1000


def resolve_method(
    spec: CurveSpec, method: str = "auto", strategy: t.Optional[SqrtStrategy] = None
) -> str:
    """The concrete path for a requested method.

    ``auto`` picks the trinomial path when it applies, the direct path for
    p <= :obj:`AUTO_DIRECT_LIMIT` and baby-step giant-step otherwise.

    Raises:
        :obj:`~supercount.exceptions.PreconditionFailed`: If ``method`` is unknown.
    """
    if method not in COUNT_METHODS:
        raise PreconditionFailed(f"unknown method {method!r}")
    if method != "auto":
        return method
    try:
        trinomial.applicable(spec, strategy, require_unique_lift=False)
        return "trinomial"
    except NotApplicable as error:
        logger.debug("trinomial path does not apply: %s", error)
    return "direct" if spec.p <= AUTO_DIRECT_LIMIT else "bgs"


def hasse_witt_matrix(
    spec: CurveSpec, method: str = "auto", direct_cap: int = DEFAULT_CAPS["direct"]
) -> HasseWittMatrix:
    """The Hasse-Witt matrix by the direct or the baby-step giant-step path.

    Raises:
        :obj:`~supercount.exceptions.PreconditionFailed`: If ``method`` is unknown.
    """
    if method not in MATRIX_METHODS:
        raise PreconditionFailed(f"unknown matrix method {method!r}")
    if method == "auto":
        method = "direct" if spec.p <= AUTO_DIRECT_LIMIT else "bgs"
    if method == "direct":
        return hw_matrix_direct(spec, direct_cap)
    return hw_matrix_bgs(spec)


def count_points(
    spec: CurveSpec,
    method: str = "auto",
    strategy: t.Optional[SqrtStrategy] = None,
    direct_cap: int = DEFAULT_CAPS["direct"],
) -> CountResult:
    """Exact #C(F_p) of a valid curve.

    Args:
        spec (:obj:`~supercount.curve.CurveSpec`): The curve.
        method (:obj:`str`, optional): One of :obj:`COUNT_METHODS`.
        strategy (:obj:`~supercount.quadratic.SqrtStrategy`, optional): Square root
            strategy of the trinomial path.
        direct_cap (:obj:`int`, optional): Largest p for the direct path.

    Raises:
        :obj:`~supercount.exceptions.CurveValidationError`: If the curve is invalid.
        :obj:`~supercount.exceptions.NotApplicable`: If the trinomial path was
            requested and does not apply.
        :obj:`~supercount.exceptions.AmbiguousLift`: If p is too small to lift.

    Returns:
        :obj:`~supercount.representations.CountResult`: The count, timed.
    """
    started = time.perf_counter()
    spec = validate(spec)
    chosen = resolve_method(spec, method, strategy)
    logger.debug("counting %r with %s", spec, chosen)
    if chosen == "trinomial":
        result = trinomial.count_points_fast(spec, strategy)
    else:
        matrix = hasse_witt_matrix(spec, chosen, direct_cap)
        result = lift_count(matrix.trace(), spec.p, spec.genus, chosen)
    result.elapsed_ms = (time.perf_counter() - started) * 1000
    return result


def skipped_reason(error: SuperCountError) -> str:
    """The code a batch row records for a failure; curve issues report the first."""
    if isinstance(error, CurveValidationError) and error.issues:
        return error.issues[0].code
    return error.code
