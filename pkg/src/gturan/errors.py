"""Exception types shared across the package."""


class CapacityError(ValueError):
    """A graph would exceed the 64-vertex capacity."""


class DomainError(ValueError):
    """Parameters fall outside the domain of a formula or construction."""


class BudgetError(ValueError):
    """A brute-force routine was asked to work beyond its size budget."""


class PreconditionError(ValueError):
    """An operation's precondition does not hold.

    ``violations`` lists every failed clause, not just the first one.
    """

    def __init__(self, message, violations=()):
        super().__init__(message)
        self.violations = list(violations)


class Graph6Error(ValueError):
    """Malformed graph6 text. ``line`` is 1-based when known."""

    def __init__(self, message, line=None):
        if line is not None:
            message = f"line {line}: {message}"
        super().__init__(message)
        self.line = line


class CertificateError(ValueError):
    """A Tutte-Berge certificate is structurally malformed."""
