"""Representations of supercount results for JSON and CSV output."""
import typing as t

#: Integers beyond this magnitude are emitted as decimal strings.
JSON_SAFE_LIMIT = 2 ** 53


def json_number(value: int) -> t.Union[int, str]:
    """An integer as a JSON number, or as a decimal string when it exceeds 2^53.

    Args:
        value (:obj:`int`): The integer.

    Returns:
        :obj:`int` | :obj:`str`: The JSON-safe form.
    """
    value = int(value)
    if abs(value) > JSON_SAFE_LIMIT:
        return str(value)
    return value


class CountResult:
    """Representation of an exact point count.

    Args:
        count (:obj:`int`): #C(F_p).
        trace (:obj:`int`): Exact trace of Frobenius, p + 1 - count.
        method (:obj:`str`): ``"trinomial"``, ``"bgs"`` or ``"direct"``.
        p (:obj:`int`): The prime.
        genus (:obj:`int`): Genus of the curve.
    """

    def __init__(self, count: int, trace: int, method: str, p: int, genus: int) -> None:
        self._count = count
        self._trace = trace
        self._method = method
        self._p = p
        self._genus = genus
        self.elapsed_ms: t.Optional[float] = None

    @property
    def count(self) -> int:
        """The number of points on the smooth projective model.

        Returns:
            :obj:`int`: #C(F_p).
        """
        return self._count

    @property
    def trace(self) -> int:
        """The exact trace of Frobenius.

        Returns:
            :obj:`int`: p + 1 - #C(F_p).
        """
        return self._trace

    @property
    def method(self) -> str:
        """The path that produced the count.

        Returns:
            :obj:`str`: Method tag.
        """
        return self._method

    @property
    def p(self) -> int:
        return self._p

    @property
    def genus(self) -> int:
        return self._genus

    def __repr__(self) -> str:
        return (
            f"CountResult(count={self._count}, trace={self._trace}, "
            f"method={self._method!r}, p={self._p}, genus={self._genus})"
        )

    def to_json(self) -> dict:
        """The json representation of a count.

        Returns:
            :obj:`dict`: Count represented in JSON format.
        """
        return {
            "schema": "1",
            "p": json_number(self._p),
            "count": json_number(self._count),
            "trace": json_number(self._trace),
            "method": self._method,
            "genus": self._genus,
            "ms": None if self.elapsed_ms is None else round(self.elapsed_ms, 3),
        }


class JacobianCandidates:
    """Representation of the possible Jacobian orders of a curve.

    Candidates are the integers congruent to ``residue`` mod p inside ``interval``;
    the list is materialized only when short enough.

    Args:
        p (:obj:`int`): The prime.
        genus (:obj:`int`): Genus of the curve.
        residue (:obj:`int`): #J(F_p) mod p.
        interval (tuple(int, int)): Inclusive Hasse-Weil bounds on #J(F_p).
        cardinality (:obj:`int`): Number of candidates.
        materialized (list of int, optional): The candidates, ascending.
        a1 (:obj:`int`, optional): Lifted a_1, genus 2 only.
        a2_candidates (list of int, optional): Possible a_2, genus 2 only.
        refined_bound (:obj:`int`, optional): The ceil(40 sqrt p) bound on genus 3
            candidates once a_1 and a_2 are known.
    """

    def __init__(
        self,
        p: int,
        genus: int,
        residue: int,
        interval: t.Tuple[int, int],
        cardinality: int,
        materialized: t.Optional[t.List[int]] = None,
        a1: t.Optional[int] = None,
        a2_candidates: t.Optional[t.List[int]] = None,
        refined_bound: t.Optional[int] = None,
    ) -> None:
        self._p = p
        self._genus = genus
        self._residue = residue % p
        self._interval = interval
        self._cardinality = cardinality
        self._materialized = materialized
        self._a1 = a1
        self._a2_candidates = a2_candidates
        self._refined_bound = refined_bound

    @property
    def p(self) -> int:
        return self._p

    @property
    def genus(self) -> int:
        return self._genus

    @property
    def residue(self) -> int:
        """#J(F_p) mod p.

        Returns:
            :obj:`int`: Canonical residue.
        """
        return self._residue

    @property
    def interval(self) -> t.Tuple[int, int]:
        """Inclusive bounds ceil((sqrt p - 1)^2g) and floor((sqrt p + 1)^2g).

        Returns:
            tuple(int, int): Lower and upper bound.
        """
        return self._interval

    @property
    def cardinality(self) -> int:
        return self._cardinality

    @property
    def materialized(self) -> t.Optional[t.List[int]]:
        """The explicit candidates, or None when there are too many.

        Returns:
            list(int) | ``None``: Candidates in ascending order.
        """
        return None if self._materialized is None else list(self._materialized)

    @property
    def a1(self) -> t.Optional[int]:
        return self._a1

    @property
    def a2_candidates(self) -> t.Optional[t.List[int]]:
        return None if self._a2_candidates is None else list(self._a2_candidates)

    @property
    def refined_bound(self) -> t.Optional[int]:
        return self._refined_bound

    @property
    def resolved(self) -> bool:
        """Whether a single order remains; picking among several needs group arithmetic.

        Returns:
            :obj:`bool`: True iff exactly one candidate is left.
        """
        return self._cardinality == 1

    def to_json(self) -> dict:
        """The json representation of Jacobian candidates.

        Returns:
            :obj:`dict`: Candidates represented in JSON format.
        """
        json_dict: t.Dict[str, t.Any] = {
            "schema": "1",
            "p": json_number(self._p),
            "genus": self._genus,
            "residue": json_number(self._residue),
            "interval": [json_number(bound) for bound in self._interval],
            "cardinality": json_number(self._cardinality),
            "candidates": None
            if self._materialized is None
            else [json_number(value) for value in self._materialized],
            "resolved": self.resolved,
        }
        if self._a1 is not None:
            json_dict["a1"] = json_number(self._a1)
        if self._a2_candidates is not None:
            json_dict["a2_candidates"] = [json_number(a2) for a2 in self._a2_candidates]
        if self._refined_bound is not None:
            json_dict["refined_bound"] = json_number(self._refined_bound)
        return json_dict


class BatchRow:
    """Representation of one prime of a batch sweep.

    Args:
        p (:obj:`int`): The prime.
        e (:obj:`int`): gcd(ac, p - 1).
        result (:obj:`CountResult`, optional): The count, when one was computed.
        skipped_reason (:obj:`str`, optional): Error code when the prime was skipped.
    """

    HEADER = ("p", "e", "trace", "count", "method", "skipped_reason")

    def __init__(
        self,
        p: int,
        e: int,
        result: t.Optional[CountResult] = None,
        skipped_reason: t.Optional[str] = None,
    ) -> None:
        self._p = p
        self._e = e
        self._result = result
        self._skipped_reason = skipped_reason

    @property
    def p(self) -> int:
        return self._p

    @property
    def skipped(self) -> bool:
        return self._result is None

    @property
    def skipped_reason(self) -> t.Optional[str]:
        return self._skipped_reason

    @property
    def result(self) -> t.Optional[CountResult]:
        return self._result

    def to_csv_row(self) -> t.List[str]:
        """The CSV fields of the row, in :obj:`HEADER` order.

        Returns:
            list(str): Field values, empty for what a skipped row lacks.
        """
        if self._result is None:
            return [str(self._p), str(self._e), "", "", "", self._skipped_reason or ""]
        return [
            str(self._p),
            str(self._e),
            str(self._result.trace),
            str(self._result.count),
            self._result.method,
            "",
        ]

    def to_json(self) -> dict:
        """The json representation of a batch row, as stored in RQ job results.

        Returns:
            :obj:`dict`: Row represented in JSON format.
        """
        return {
            "p": self._p,
            "e": self._e,
            "trace": None if self._result is None else self._result.trace,
            "count": None if self._result is None else self._result.count,
            "method": None if self._result is None else self._result.method,
            "genus": None if self._result is None else self._result.genus,
            "skipped_reason": self._skipped_reason,
        }

    @classmethod
    def from_json(cls, row: dict) -> "BatchRow":
        """Rebuilds a row from :obj:`to_json` output."""
        result = None
        if row["count"] is not None:
            result = CountResult(
                row["count"], row["trace"], row["method"], row["p"], row["genus"]
            )
        return cls(row["p"], row["e"], result, row["skipped_reason"])
