# efountain/errors.py
from __future__ import annotations
from typing import Optional, Tuple


class FountainError(ValueError):
    """Base class for every error raised by the library.

    `witness` holds the offending element indices when the failure has one.
    """

    def __init__(self, message: str, witness: Optional[Tuple] = None):
        super().__init__(message)
        self.witness = witness


class ParseError(FountainError):
    def __init__(self, message: str, line: int, column: int = 1):
        super().__init__(f"line {line}, column {column}: {message}")
        self.line = line
        self.column = column


class IndexOutOfRange(FountainError):
    pass


class NonAssociative(FountainError):
    pass


class MixedDegrees(FountainError):
    pass


class NotIdempotent(FountainError):
    pass


class NotEFountain(FountainError):
    pass


class NotReduced(FountainError):
    pass


class InternalMismatch(FountainError):
    """Two computations that must agree did not. Always a bug."""


class CongruenceConditionRequired(FountainError):
    pass


class AxiomFailure(FountainError):
    pass


class NotEhresmann(FountainError):
    pass


class BasisMismatch(FountainError):
    pass


class NotContained(FountainError):
    pass


class NonInvertibleDiagonal(FountainError):
    pass


class TheoremViolation(FountainError):
    """A computed biconditional disagreed with its proven counterpart. Always a bug."""


class DegreeTooLarge(FountainError):
    pass


class OrderTooLarge(FountainError):
    pass


class NotComparable(FountainError):
    pass


class RingSpecError(FountainError):
    pass


class StageFailure(FountainError):
    def __init__(self, stage: str, message: str, witness: Optional[Tuple] = None):
        super().__init__(f"[{stage}] {message}", witness)
        self.stage = stage
