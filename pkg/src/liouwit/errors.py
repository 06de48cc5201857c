"""Exception types shared across the package.

Each maps to a CLI exit code: invalid input (2), verification failure (3),
resource exhaustion (4), internal invariant violation (5).
"""


class LiouwitError(Exception):
    """Base class for package errors."""


class InvalidInputError(LiouwitError, ValueError):
    """A precondition on user-supplied input was violated."""


class ConstraintInfeasibleError(InvalidInputError):
    """A residue-class constraint admits no solution."""


class SearchExhaustedError(LiouwitError):
    """A bounded deterministic search ran out before finding its target."""


class FactorBudgetExceededError(LiouwitError):
    """Factorization gave up after the configured number of iterations."""


class VerificationError(LiouwitError):
    """A certificate failed independent re-verification."""

    def __init__(self, message: str, report=None):
        super().__init__(message)
        self.report = report


class InternalInvariantError(LiouwitError):
    """A structural guarantee failed at runtime; indicates a bug."""
