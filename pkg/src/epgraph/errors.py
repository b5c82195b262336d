"""Exception types shared across the package."""


class EpgraphError(Exception):
    """Base class for all package-specific errors."""


class InvalidParameterError(EpgraphError, ValueError):
    """A parameter violates an operation's precondition."""


class SizeLimitError(EpgraphError, ValueError):
    """A construction would exceed the configured group-order cap."""


class BudgetExceededError(EpgraphError, RuntimeError):
    """An exact search ran out of its node budget before finishing.

    Distinct from a negative search result: the caller must not treat
    this as "not found".
    """


class UnsupportedDiameterError(EpgraphError, ValueError):
    """The quotient-clique method only covers graphs of diameter at most 2."""


class UnsupportedFamilyError(EpgraphError, ValueError):
    """No closed-form invariants are available for the requested family."""


class FormulaInternalError(EpgraphError, RuntimeError):
    """Exact rational arithmetic did not combine to an integer.

    Raised instead of rounding; signals a transcription bug in a formula.
    """


class SpecParseError(EpgraphError, ValueError):
    """A group-spec string failed to parse; carries the offending position."""

    def __init__(self, message: str, position: int = 0):
        super().__init__(f"{message} (at position {position})")
        self.position = position
