"""Exception types shared across the package."""


class DimensionError(ValueError):
    """A vector or scheme has an unusable length."""


class TriangleIndexError(IndexError):
    """A position (i, j) falls outside the triangular index range."""


class DomainError(ValueError):
    """An input value lies outside the domain a function is defined on."""


class InvalidMoveError(ValueError):
    """A rewrite move was applied to a scheme that does not match its pattern."""

    def __init__(self, move, position, expected, found):
        self.move = move
        self.position = position
        self.expected = expected
        self.found = found
        super().__init__(
            f"{move} requires '{expected}' at {position}, found '{found}'"
        )


class AlgorithmInvariantError(RuntimeError):
    """An internal invariant of the normalization algorithm failed.

    Raised when the certificate builder reaches a state the underlying
    counting identities rule out. Seeing this means a bug, not bad input.
    """


class ResourceLimitError(RuntimeError):
    """A requested computation exceeds the configured resource budget."""


class BoundViolationError(RuntimeError):
    """A numerically observed value exceeds a proven bound."""
