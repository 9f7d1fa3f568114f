"""Exception types shared across the library."""

from __future__ import annotations


class SutraTraceError(Exception):
    """Base class for all library errors."""


class ParseError(SutraTraceError):
    """Operand text is not a plain decimal digit string."""

    def __init__(self, position: int, reason: str) -> None:
        super().__init__(f"invalid operand at position {position}: {reason}")
        self.position = position
        self.reason = reason


class LengthError(SutraTraceError):
    """A requested width is too small for the digits it must hold."""


class ArityError(SutraTraceError):
    """Wrong number of operands for an operation."""


class NegativeResultError(SutraTraceError):
    """Subtraction would produce a negative value (a < b)."""

    code = "NEGATIVE_RESULT"

    def __init__(self, minuend: int, subtrahend: int) -> None:
        super().__init__(
            f"cannot subtract: {subtrahend} is larger than {minuend}"
        )
        self.minuend = minuend
        self.subtrahend = subtrahend
        self.suggestion = "swap the operands to subtract the smaller from the larger"


class UnknownMethodError(SutraTraceError):
    """Method id is not present in the registry."""

    def __init__(self, method_id: str) -> None:
        super().__init__(f"unknown method: {method_id!r}")
        self.method_id = method_id


class ApplicabilityError(SutraTraceError):
    """A method was invoked on operands its validation rejects."""

    def __init__(self, report, family: str | None = None) -> None:
        blocking = [w for w in report.warnings if w.blocking]
        detail = "; ".join(w.message for w in blocking) or "method not applicable"
        prefix = f"[{family}] " if family else ""
        super().__init__(prefix + detail)
        self.report = report
        self.family = family


class ReplayError(SutraTraceError):
    """A trace failed structural validation during replay."""

    def __init__(self, step_index: int, reason: str) -> None:
        super().__init__(f"replay failed at step {step_index}: {reason}")
        self.step_index = step_index
        self.reason = reason


class MetricsMismatchError(SutraTraceError):
    """A method implementation reported metrics that disagree with its steps."""


class ComparisonMismatchError(SutraTraceError):
    """The two families produced different result values for one input."""
