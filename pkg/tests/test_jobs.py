"""Test cases related to batch jobs ran by RQ workers."""
# pylint: disable=wrong-import-order
import inspect

from supercount.config import DEFAULT_CAPS
from supercount.jobs import count_row, row_seed
from supercount.representations import BatchRow

QUARTIC = "a=2 m=[1,0,0,0,1]"


def test_row_seed():
    """Assert that row seeds depend on the sweep seed and the prime only."""
    assert row_seed(7, 17) == row_seed(7, 17)
    assert row_seed(7, 17) != row_seed(7, 19)
    assert row_seed(7, 17) != row_seed(8, 17)
    assert 0 <= row_seed(0, 2) < 2 ** 64


def test_count_row():
    """Assert the row of y^2 = x^4 + 1 at p = 17."""
    row = count_row(QUARTIC, 17, "trinomial", seed=3, sqrt_strategy="probabilistic")
    assert row == {
        "p": 17,
        "e": 8,
        "trace": 2,
        "count": 16,
        "method": "trinomial",
        "genus": 1,
        "skipped_reason": None,
    }
    assert BatchRow.from_json(row).to_csv_row() == ["17", "8", "2", "16", "trinomial", ""]


def test_count_row_skips():
    """Assert that primes the method cannot handle are recorded as skipped."""
    row = count_row(QUARTIC, 19, "trinomial")
    assert (row["e"], row["count"], row["skipped_reason"]) == (2, None, "BadGcd")
    assert count_row(QUARTIC, 13)["skipped_reason"] == "AmbiguousLift"
    assert count_row(QUARTIC, 3)["skipped_reason"] == "PrimeTooSmall"


def test_count_row_default_cap():
    """Assert that rows use the configured direct cap unless told otherwise."""
    default = inspect.signature(count_row).parameters["direct_cap"].default
    assert default == DEFAULT_CAPS["direct"]
