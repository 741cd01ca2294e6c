"""Exception hierarchy shared by every module.

Two broad families matter to callers: input problems (bad labels, malformed
files, mismatched actor sets) and computational limits (closure explosion,
fixpoints that refuse to settle). The CLI maps them to exit codes 2 and 3.
"""


class RelalgError(Exception):
    """Base class for every error raised by this package."""


class ValidationError(RelalgError):
    """Malformed input: bad JSON, unknown labels, duplicate names."""


class DimensionError(ValidationError):
    """Two operands do not share the same actor set."""


class ComputationError(RelalgError):
    """A well-formed computation hit a configured or structural limit."""


class ClosureTooLargeError(ComputationError):
    """Semigroup closure exceeded the element cap."""

    def __init__(self, count, cap):
        self.count = count
        self.cap = cap
        super().__init__(
            f"closure exceeded {cap} elements (at {count} and growing); "
            "raise the cap via max_elements or RELALG_MAX_CLOSURE"
        )


class UndefinedStatisticError(ComputationError):
    """A statistic's formula divides by a zero count."""

    def __init__(self, term):
        self.term = term
        super().__init__(f"statistic undefined: {term} count is zero")


class NonConvergenceError(ComputationError):
    """An iterative closure failed to reach a fixpoint within its bound."""
