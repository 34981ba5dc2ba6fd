"""Exception hierarchy for pellpoly."""

from __future__ import annotations

from typing import Any, Optional


class PellPolyError(Exception):
    """Base class for every error raised by pellpoly."""


class DomainError(PellPolyError, ValueError):
    """An input lies outside the domain an operation is defined on."""


class PerfectSquareError(DomainError):
    """The radicand is a perfect square, so it has no periodic expansion."""

    def __init__(self, value: int, root: int):
        self.value = value
        self.root = root
        super().__init__(f"{value} is a perfect square ({root}^2)")


class NotSquarefreeError(DomainError):
    """A squarefree integer was required."""

    def __init__(self, value: int, witness: int):
        self.value = value
        self.witness = witness
        super().__init__(f"{value} is not squarefree: {witness}^2 divides it")


class NotCoveredError(DomainError):
    """No family case predicts a continued-fraction pattern for this base."""

    def __init__(self, applicability: Any):
        self.applicability = applicability
        super().__init__(f"not covered: {applicability.case_label}")


class CongruenceError(DomainError):
    """The residue conditions needed to read off a unit do not hold."""


class NonIntegralError(PellPolyError, ArithmeticError):
    """A polynomial expected to have integer coefficients does not."""


class UnclassifiedError(PellPolyError):
    """A (c, h) pair matched no row of the residue table."""


class MismatchError(PellPolyError):
    """Two independent computations of the same quantity disagree."""

    def __init__(self, message: str, expected: Optional[Any] = None, actual: Optional[Any] = None):
        self.expected = expected
        self.actual = actual
        super().__init__(message)


class FactorizationError(PellPolyError, ArithmeticError):
    """The randomized splitter gave up on a composite."""
