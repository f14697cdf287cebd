"""Exception types raised by the solver.

Every exception carries a short machine-readable ``code`` (for example
``"NON_LAMINAR_PAIR"``) next to the human-readable message, so the CLI and
callers can branch on the failure kind without parsing text.
"""

from __future__ import annotations


class BLMError(Exception):
    """Base class for all errors raised by :mod:`laminar_blm`."""

    code = "ERROR"

    def __init__(self, message: str, code: str | None = None, **details):
        super().__init__(message)
        if code is not None:
            self.code = code
        self.details = details

    def __str__(self) -> str:
        return f"{self.code}: {super().__str__()}"


class InstanceError(BLMError, ValueError):
    """Malformed instance, or an operation's precondition does not hold."""

    code = "INVALID_INSTANCE"


class ValidationError(InstanceError):
    """An instance failed laminarity validation; ``report`` lists every issue."""

    code = "VALIDATION"

    def __init__(self, report):
        lines = "; ".join(str(issue) for issue in report.issues)
        super().__init__(f"instance failed validation: {lines}")
        self.report = report


class ParseError(InstanceError):
    """Instance text could not be parsed (``SYNTAX``) or breaks the schema (``SCHEMA``)."""

    code = "SCHEMA"


class UnreachableCellError(BLMError, LookupError):
    code = "UNREACHABLE_CELL"


class OracleLimitError(BLMError):
    code = "TOO_LARGE"
