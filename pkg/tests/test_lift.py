"""Test cases related to lifting traces and Jacobian orders to integers."""
# pylint: disable=wrong-import-order
import pytest
from supercount.bigmod import Residue
from supercount.exceptions import AmbiguousLift, NoCandidate, PreconditionFailed
from supercount.hasse_witt import CharPolyModP
from supercount.lift import (
    count_from_trace,
    jacobian_candidates_g2,
    jacobian_candidates_g3,
    lift_count,
    lift_trace,
    representatives,
    weil_interval,
)


def test_representatives():
    """Assert the integers of a residue class inside a closed interval."""
    assert list(representatives(3, 5, -10, 10)) == [-7, -2, 3, 8]
    assert list(representatives(0, 5, -10, 10)) == [-10, -5, 0, 5, 10]
    assert not representatives(50, 101, -20, 20)


def test_lift_trace_of_elliptic_curve():
    """Assert that trace 9 mod 13 in genus 1 lifts to -4."""
    assert lift_trace(9, 13, 1) == -4
    assert lift_trace(Residue(9, 13), 13, 1) == -4
    assert count_from_trace(-4, 13) == 18
    result = lift_count(Residue(9, 13), 13, 1, "direct")
    assert (result.count, result.trace, result.method, result.genus) == (18, -4, "direct", 1)


def test_lift_trace_ambiguity():
    """Assert that two candidates in |t| <= 2 sqrt(13) make the lift ambiguous."""
    with pytest.raises(AmbiguousLift) as error:
        lift_trace(7, 13, 1)
    assert "[-6, 7]" in str(error.value)


def test_lift_trace_without_candidate():
    """Assert that a residue far from zero has no lift at a large prime."""
    with pytest.raises(NoCandidate):
        lift_trace(50, 101, 1)
    with pytest.raises(PreconditionFailed):
        lift_trace(Residue(3, 17), 13, 1)


def test_weil_interval():
    """Assert the exact Hasse-Weil bounds on #J(F_p)."""
    assert weil_interval(13, 1) == (7, 21)
    lo, hi = weil_interval(1009, 2)
    assert lo + hi == 2 * 1024136
    assert (hi - lo) // 2 == 128329


def test_genus_2_candidates():
    """Assert the five genus 2 candidates left by a zero Hasse-Witt matrix at 1009."""
    candidates = jacobian_candidates_g2(CharPolyModP([0, 0, 0, 0, 1], 1009))
    assert candidates.a1 == 0
    assert candidates.a2_candidates == [-2018, -1009, 0, 1009, 2018]
    assert candidates.materialized == [1016064, 1017073, 1018082, 1019091, 1020100]
    assert candidates.cardinality == 5
    assert candidates.residue == 1
    assert not candidates.resolved
    json_dict = candidates.to_json()
    assert json_dict["a1"] == 0
    assert json_dict["candidates"][2] == 1018082
    assert "refined_bound" not in json_dict


def test_genus_2_candidates_need_degree_4():
    """Assert that a genus 1 polynomial is refused."""
    with pytest.raises(PreconditionFailed):
        jacobian_candidates_g2(CharPolyModP([0, 4, 1], 13))


def test_genus_3_candidates():
    """Assert that the genus 3 candidates are the residue class inside the interval."""
    candidates = jacobian_candidates_g3(Residue(5, 101), 101, limit=10 ** 5)
    lo, hi = candidates.interval
    assert (lo, hi) == weil_interval(101, 3)
    values = candidates.materialized
    assert len(values) == candidates.cardinality > 1
    assert all(value % 101 == 5 and lo <= value <= hi for value in values)
    assert values[0] - 101 < lo and values[-1] + 101 > hi
    assert candidates.refined_bound == 402


def test_genus_3_candidates_above_limit():
    """Assert that a long candidate list is summarized, not materialized."""
    candidates = jacobian_candidates_g3(5, 101, limit=10)
    assert candidates.materialized is None
    assert candidates.cardinality > 10
    assert candidates.to_json()["candidates"] is None
