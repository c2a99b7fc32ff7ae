"""Exception hierarchy shared by all modules."""

from __future__ import annotations


class ExtremalTreesError(ValueError):
    """Base class for every error raised by this package."""


class RejectsEmpty(ExtremalTreesError):
    pass


class RejectsNonTree(ExtremalTreesError):
    """Degree list that no tree realises."""


class LengthMismatch(ExtremalTreesError):
    pass


class NotATree(ExtremalTreesError):
    pass


class SameVertex(ExtremalTreesError):
    pass


class ParseError(ExtremalTreesError):
    def __init__(self, message: str, position: int | None = None):
        self.position = position
        if position is not None:
            message = f"{message} (at position {position})"
        super().__init__(message)


class ROutOfRange(ExtremalTreesError):
    pass


class MissingDistanceValue(ExtremalTreesError):
    pass


class UnknownSelector(ExtremalTreesError):
    pass


class NonPositiveParameter(ExtremalTreesError):
    pass


class UnknownInvariant(ExtremalTreesError):
    pass


class BoundExceeded(ExtremalTreesError):
    """Common parent of the two size-limit errors; the CLI maps it to exit 3."""


class OracleSizeExceeded(BoundExceeded):
    pass


class SizeBoundExceeded(BoundExceeded):
    pass


class ConvergenceFailure(ExtremalTreesError, ArithmeticError):
    pass
