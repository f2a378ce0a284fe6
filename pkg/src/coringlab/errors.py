"""Exception types shared across the package."""


class CoringLabError(Exception):
    """Base class for all coringlab errors."""


class DimensionMismatch(CoringLabError):
    """Operands disagree on a dimension or on the base algebra."""


class ValidationError(CoringLabError):
    """A structure failed its construction axioms.

    Carries the itemized failure report in ``self.report``.
    """

    def __init__(self, message: str, report=None):
        super().__init__(message)
        self.report = list(report) if report else []


class PreconditionError(CoringLabError):
    """An operation's stated precondition does not hold (e.g. a
    projectivity hypothesis, or a non simple-artinian base ring)."""


class IndeterminateError(CoringLabError):
    """A bounded search ran out of budget; the answer is not known.

    Never silently coerced to False."""


class TheoremViolation(CoringLabError):
    """Two computations the theory forces to agree came out different.

    This always indicates an implementation bug, never bad input."""
