"""Jobs that are ran by the RQ Worker nodes."""
import hashlib
import logging

from .config import DEFAULT_CAPS
from .curve import parse_family
from .exceptions import SuperCountError
from .methods import count_points, skipped_reason
from .quadratic import strategy_from_name
from .representations import BatchRow
from .trinomial import gcd_e

logger = logging.getLogger(__name__)


def row_seed(seed: int, p: int) -> int:
    """Per-prime seed, so a sweep does not depend on which worker ran which row."""
    digest = hashlib.sha256(f"{seed}:{p}".encode("utf-8")).hexdigest()
    return int(digest[:16], 16)


def count_row(
    family_text: str,
    p: int,
    method: str = "auto",
    seed: int = 0,
    sqrt_strategy: str = "sequential",
    direct_cap: int = DEFAULT_CAPS["direct"],
) -> dict:
    """Counts points of one member of a curve family for a batch sweep.

    Args:
        family_text (:obj:`str`): The family, e.g. ``"a=2 b=0 m=[1,0,0,0,1]"``.
        p (:obj:`int`): The prime.
        method (:obj:`str`, optional): Counting method. Defaults to "auto".
        seed (:obj:`int`, optional): Sweep seed.
        sqrt_strategy (:obj:`str`, optional): Square root strategy name.
        direct_cap (:obj:`int`, optional): Largest p for the direct path.

    Returns:
        :obj:`dict`: The :obj:`~supercount.representations.BatchRow` as JSON; a
            prime the method cannot handle is recorded as skipped.
    """
    family, _ = parse_family(family_text)
    spec = family.at(p)
    e = gcd_e(spec)
    strategy = strategy_from_name(sqrt_strategy, row_seed(seed, p))
    try:
        result = count_points(spec, method, strategy, direct_cap)
    except SuperCountError as error:
        logger.info("skipping p=%d: %s", p, error)
        return BatchRow(p, e, skipped_reason=skipped_reason(error)).to_json()
    return BatchRow(p, e, result).to_json()
