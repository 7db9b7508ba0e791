"""Exceptions raised by supercount.

Every failure a caller can act on derives from :obj:`SuperCountError` and carries a
``code`` which is what the command line reports on stderr and what batch sweeps write
into the ``skipped_reason`` column.
"""
import typing as t


class SuperCountError(Exception):
    """Base class for every domain error raised by supercount."""

    code = "SuperCountError"

    def to_json(self) -> dict:
        """The json representation of the error.

        Returns:
            :obj:`dict`: Error represented in JSON format.
        """
        return {"error": self.code, "message": str(self)}


class PreconditionFailed(SuperCountError):
    """An operation was called with arguments outside its stated domain."""

    code = "PreconditionFailed"


class ConsistencyError(SuperCountError):
    """Two independent computations disagreed; this always signals a bug."""

    code = "ConsistencyError"


# bigmod
class ModulusMismatch(SuperCountError):
    """Residues with different moduli were combined."""

    code = "ModulusMismatch"


class NotInvertible(SuperCountError):
    """A residue sharing a factor with its modulus was inverted."""

    code = "NotInvertible"


# quadratic
class NonResidue(SuperCountError):
    """A square root of a quadratic nonresidue was requested."""

    code = "NonResidue"


class NoSolution(SuperCountError):
    """Cornacchia's descent found no primitive solution."""

    code = "NoSolution"


# curve
class CurveIssue:
    """One violated curve condition.

    Args:
        code (:obj:`str`): Machine-readable name of the condition, e.g.
            ``"CoefficientZero"``.
        message (:obj:`str`): Human-readable description.
    """

    def __init__(self, code: str, message: str) -> None:
        self._code = code
        self._message = message

    @property
    def code(self) -> str:
        """Machine-readable name of the violated condition.

        Returns:
            :obj:`str`: The issue code.
        """
        return self._code

    @property
    def message(self) -> str:
        """Human-readable description of the violated condition.

        Returns:
            :obj:`str`: The issue message.
        """
        return self._message

    def __repr__(self) -> str:
        return f"CurveIssue({self._code!r}, {self._message!r})"

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, CurveIssue):
            return NotImplemented
        return self._code == other._code and self._message == other._message

    def __hash__(self) -> int:
        return hash((self._code, self._message))

    def to_json(self) -> dict:
        """The json representation of a curve issue.

        Returns:
            :obj:`dict`: Issue represented in JSON format.
        """
        return {"code": self._code, "message": self._message}


class CurveValidationError(SuperCountError):
    """A curve violates one or more standing hypotheses.

    Args:
        issues (list of :obj:`CurveIssue`): Every violated condition.
    """

    code = "CurveValidationError"

    def __init__(self, issues: t.Sequence[CurveIssue]) -> None:
        super().__init__("; ".join(issue.message for issue in issues))
        self.issues: t.List[CurveIssue] = list(issues)

    @property
    def codes(self) -> t.List[str]:
        """Codes of the violated conditions, in detection order.

        Returns:
            list of :obj:`str`: The issue codes.
        """
        return [issue.code for issue in self.issues]

    def to_json(self) -> dict:
        error_json = super().to_json()
        error_json["issues"] = [issue.to_json() for issue in self.issues]
        return error_json


class CurveSyntaxError(SuperCountError):
    """A curve string could not be parsed."""

    code = "CurveSyntaxError"


class NotDivisible(SuperCountError):
    """An exponent sum is not divisible by p, so the Cartier image term vanishes."""

    code = "NotDivisible"


# trinomial
class NotApplicable(SuperCountError):
    """The trinomial fast path does not apply to a curve and prime."""

    code = "NotApplicable"


class NotTrinomial(NotApplicable):
    """f has nonzero coefficients other than m_0 and m_c."""

    code = "NotTrinomial"


class BadGcd(NotApplicable):
    """gcd(ac, p - 1) is not one of 3, 4, 6, 8.

    Args:
        gcd (:obj:`int`): The offending gcd.
    """

    code = "BadGcd"

    def __init__(self, gcd: int) -> None:
        super().__init__(f"gcd(ac, p - 1) = {gcd} is not one of 3, 4, 6, 8")
        self.gcd = gcd


class PrimeTooSmall(NotApplicable):
    """p <= 16 g^2, so a count modulo p does not pin down the exact count."""

    code = "PrimeTooSmall"


class NotDiagonal(NotApplicable):
    """The Hasse-Witt matrix is not diagonal, so the product formula does not apply."""

    code = "NotDiagonal"


class Undefined(SuperCountError):
    """A representative binomial coefficient is not listed for this e."""

    code = "Undefined"


class OutOfRange(SuperCountError):
    """Binomial arguments outside 1 <= s < r <= e - 1."""

    code = "OutOfRange"


# recurrence
class SegmentTooLong(SuperCountError):
    """A factorial segment is at least p long or crosses a multiple of p."""

    code = "SegmentTooLong"


class TargetOutOfSupport(SuperCountError):
    """A requested coefficient index lies outside [0, c v]."""

    code = "TargetOutOfSupport"


class RecoveryError(SuperCountError):
    """p-adic recovery of a coefficient window failed."""

    code = "RecoveryError"


# lift
class AmbiguousLift(SuperCountError):
    """More than one integer satisfies the congruence inside the Hasse-Weil interval."""

    code = "AmbiguousLift"


class NoCandidate(SuperCountError):
    """No integer satisfies the congruence inside the Hasse-Weil interval."""

    code = "NoCandidate"


# oracle
class CapExceeded(SuperCountError):
    """A brute-force computation was asked for more work than its cap allows."""

    code = "CapExceeded"


class Unsupported(SuperCountError):
    """A brute-force oracle does not cover this curve."""

    code = "Unsupported"
