"""Exception types shared across the package."""


class DomainError(ValueError):
    """An argument lies outside the mathematical domain of an operation."""


class PoleError(DomainError):
    """Evaluation was requested exactly at the pole z = 0."""


class GammaOverflowError(OverflowError):
    """A log-space magnitude left the representable double range.

    ``log_value`` keeps the offending natural-log magnitude so callers can
    continue in log space.
    """

    def __init__(self, message: str, log_value: float):
        super().__init__(message)
        self.log_value = log_value


class UnsupportedParametersError(ValueError):
    """Parameters are valid in general but not for the requested code path."""


class ClassPreconditionError(ValueError):
    """Input is structurally outside the nonnegative-coefficient class."""


class NotAMemberError(ClassPreconditionError):
    """A membership hypothesis failed (negative coefficient margin)."""


class DegenerateInputError(ValueError):
    """Input too degenerate for the requested numeric procedure."""
