"""Error hierarchy shared by every module.

Each error carries a machine-readable ``code`` and the process exit status the
command line maps it to.
"""

from typing import Any, Dict, Iterable, Optional


class BBPError(Exception):
    """Base class for all engine errors."""

    code = "error"
    exit_code = 1
    details: Optional[Dict[str, Any]] = None

    def to_dict(self) -> dict:
        payload = {"code": self.code, "message": str(self), "exit_code": self.exit_code}
        if self.details is not None:
            payload["details"] = self.details
        return payload


class ParseError(BBPError, ValueError):
    """Command parameters could not be parsed into exact values."""

    code = "parse_error"
    exit_code = 2


class UsageError(ParseError):
    """The command line itself was malformed: missing flags, bad choices."""

    code = "usage_error"


class DomainError(BBPError, ValueError):
    """An operation was called outside its mathematical domain."""

    code = "domain_error"
    exit_code = 3


class RegroupError(DomainError):
    """No grouping period makes (1 - s)^m the reciprocal of an integer."""

    code = "regroup_impossible"

    def __init__(self, message: str, suggested_period: Optional[int] = None):
        if suggested_period is not None:
            message = f"{message}; smallest admissible period is m = {suggested_period}"
        super().__init__(message)
        self.suggested_period = suggested_period


class CombineError(DomainError):
    """Operands have no common base power."""

    code = "combine_impossible"


class UnsupportedPointError(DomainError):
    """A complex point whose real and imaginary parts cannot be tagged."""

    code = "unsupported_point"


class UnsupportedTagError(DomainError):
    """A constant tag outside the kinds an operation understands."""

    code = "unsupported_tag"


class NeedsRegroupingError(DomainError):
    """The formula is only conditionally convergent in its current base."""

    code = "needs_regrouping"


class UnknownFormulaError(DomainError, KeyError):
    """A catalog lookup for an unregistered name."""

    code = "unknown_formula"

    def __init__(self, name: str, available: Iterable[str]):
        self.name = name
        self.available = sorted(available)
        super().__init__(
            f"unknown formula '{name}'; available: {', '.join(self.available)}"
        )

    def __str__(self) -> str:
        return self.args[0]


class VerificationFailedError(BBPError):
    """A formula interval does not overlap its reference interval."""

    code = "verification_failed"
    exit_code = 4

    def __init__(self, message: str, details: Optional[Dict[str, Any]] = None):
        super().__init__(message)
        self.details = details


class ConsistencyError(BBPError):
    """Two computations that must agree exactly did not."""

    code = "internal_consistency"
    exit_code = 5


class DerivationError(ConsistencyError):
    """A derivation pipeline produced an unexpected formula."""

    code = "derivation_failed"


class IndeterminateDigitError(BBPError):
    """Carry ambiguity persisted past the guard retry limit."""

    code = "indeterminate_digit"
    exit_code = 6


class InconclusiveRootError(BBPError):
    """Root certification failed at the highest allowed precision."""

    code = "inconclusive_roots"
    exit_code = 7


class TheoremViolationError(BBPError):
    """A certified root disk crosses the boundary it must not cross."""

    code = "theorem_violation"
    exit_code = 8
