"""Exception types shared across the package."""


class BalnetError(Exception):
    """Base class for all balnet errors."""


class ArchitectureError(BalnetError, ValueError):
    """Network layer sizes are unusable (too few layers or non-positive dims)."""


class ShapeMismatchError(BalnetError, ValueError):
    """Array shapes do not compose."""


class DataError(BalnetError, ValueError):
    """Input data violates a precondition (non-finite values, empty batch, empty arm)."""


class PositivityError(DataError):
    """Treatment mechanism is degenerate or a sampled arm came out empty."""


class ParseError(DataError):
    """A CSV row could not be parsed. Carries the 1-based line number."""

    def __init__(self, message: str, line: int | None = None):
        super().__init__(message)
        self.line = line


class LayoutError(DataError):
    """File contents do not match the declared column layout."""


class UnsupportedModelError(BalnetError, ValueError):
    """Operation does not apply to this model kind."""
