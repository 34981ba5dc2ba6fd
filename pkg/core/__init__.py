"""Core arithmetic for continued fractions, Pell equations and polynomial families."""

from .exceptions import (
    CongruenceError,
    DomainError,
    FactorizationError,
    MismatchError,
    NonIntegralError,
    NotCoveredError,
    NotSquarefreeError,
    PellPolyError,
    PerfectSquareError,
    UnclassifiedError,
)
from .polynomial import IntPolynomial
from .types import FamilyId, PellSolution, SurdExpansion

__all__ = [
    "CongruenceError",
    "DomainError",
    "FactorizationError",
    "FamilyId",
    "IntPolynomial",
    "MismatchError",
    "NonIntegralError",
    "NotCoveredError",
    "NotSquarefreeError",
    "PellPolyError",
    "PellSolution",
    "PerfectSquareError",
    "SurdExpansion",
    "UnclassifiedError",
]
