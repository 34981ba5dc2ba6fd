"""Base family implementation that all Fermat-Pell polynomial families inherit from."""

from __future__ import annotations

import logging
from abc import ABC, abstractmethod
from typing import List, Sequence, Tuple

from core.contfrac import expand_sqrt, has_special_middle
from core.exceptions import NonIntegralError, NotCoveredError
from core.pell import fundamental_from_expansion
from core.polynomial import IntPolynomial
from core.types import Applicability, FamilyId, FamilyInstance, PredictedPattern, SurdExpansion

logger = logging.getLogger(__name__)

t = IntPolynomial.variable()

SolutionPolynomials = Tuple[IntPolynomial, IntPolynomial, IntPolynomial]


def constants(values: Sequence[int]) -> List[IntPolynomial]:
    """Lift integer quotients to constant polynomials."""
    return [IntPolynomial.constant(v) for v in values]


def middle_replaced(expansion: SurdExpansion, slope: int) -> List[IntPolynomial]:
    """a_1 ... a_n with the middle quotient a_m replaced by slope*t + a_m."""
    m = expansion.half_index
    quotients = constants(expansion.interior)
    quotients[m - 1] = slope * t + expansion.quotient(m)
    return quotients


def describe_middle(expansion: SurdExpansion) -> str:
    """Short text such as "m=3 odd, a_3=4=a0"."""
    m = expansion.half_index
    a_m = expansion.quotient(m)
    parity = "odd" if m % 2 else "even"
    if a_m == expansion.a0:
        relation = "=a0"
    elif a_m == expansion.a0 - 1:
        relation = "=a0-1"
    else:
        relation = f" not in {{{expansion.a0}, {expansion.a0 - 1}}}"
    text = f"m={m} {parity}, a_{m}={a_m}{relation}"
    if relation.startswith("=") and expansion.s_seq[m] != 2:
        text += f" but s_{m}={expansion.s_seq[m]}"
    return text


class BaseFamily(ABC):
    """Abstract base class for all polynomial families.

    A family turns a base radicand f, with fundamental solution (c, h),
    into polynomials f(t), X(t), Y(t) with X^2 - f*Y^2 = 1 identically.
    Subclasses supply the polynomials, the coverage test and the
    continued-fraction pattern predicted for sqrt(f(t)).
    """

    def __init__(self, family_id: FamilyId, name: str, aliases: Sequence[str], summary: str):
        """Initialize the family.

        Args:
            family_id: Registry id (F1 ... F5)
            name: Short descriptive name
            aliases: Extra names accepted on the command line
            summary: One line describing f(t)
        """
        self.family_id = family_id
        self.name = name
        self.aliases = tuple(aliases)
        self.summary = summary

    @property
    @abstractmethod
    def cases(self) -> Tuple[str, ...]:
        """Human readable description of every covered case."""

    @abstractmethod
    def _solution_polynomials(self, f: int, c: int, h: int) -> SolutionPolynomials:
        """Return (f(t), X(t), Y(t)), possibly with rational coefficients."""

    @abstractmethod
    def _cover(self, expansion: SurdExpansion) -> Applicability:
        """Decide which case, if any, covers sqrt(f)."""

    @abstractmethod
    def _pattern(
        self,
        expansion: SurdExpansion,
        c: int,
        h: int,
        applicability: Applicability
    ) -> PredictedPattern:
        """Build the pattern for a covered expansion."""

    def instantiate(self, f: int) -> FamilyInstance:
        """Build the family on base f.

        Raises:
            PerfectSquareError: If f is a perfect square
            NonIntegralError: If the polynomials are not integral for this base
        """
        expansion = expand_sqrt(f)
        c, h = fundamental_from_expansion(expansion)
        return self.instantiate_from(f, c, h)

    def instantiate_from(self, f: int, c: int, h: int) -> FamilyInstance:
        """Build the family from a known (c, h) without re-expanding sqrt(f)."""
        f_poly, X_poly, Y_poly = self._solution_polynomials(f, c, h)
        for label, poly in (("f(t)", f_poly), ("X(t)", X_poly), ("Y(t)", Y_poly)):
            if not poly.is_integral:
                raise NonIntegralError(f"{self.family_id.value} on f={f}: {label} = {poly} is not integral")
        logger.debug(f"{self.family_id.value} on f={f}: f(t) = {f_poly}")
        return FamilyInstance(
            family=self.family_id,
            f=f,
            c=c,
            h=h,
            f_poly=f_poly,
            X_poly=X_poly,
            Y_poly=Y_poly,
        )

    def applicability(self, f: int) -> Applicability:
        return self._cover(expand_sqrt(f))

    def predicted_pattern(self, f: int) -> PredictedPattern:
        """Symbolic expansion of sqrt(f(t)) for t >= 0.

        Raises:
            NotCoveredError: If no case applies to f
        """
        expansion = expand_sqrt(f)
        applicability = self._cover(expansion)
        if not applicability.covered:
            raise NotCoveredError(applicability)
        c, h = fundamental_from_expansion(expansion)
        return self._pattern(expansion, c, h, applicability)

    def _applicability(self, expansion: SurdExpansion, covered: bool, label: str, doubled: bool = False) -> Applicability:
        return Applicability(
            family=self.family_id,
            f=expansion.f,
            covered=covered,
            case_label=label,
            doubled=doubled,
        )

    def _middle_case(self, expansion: SurdExpansion, label: str, want_odd_m: bool) -> Applicability:
        """Coverage of the cases needing n odd, a given parity of m and a special middle."""
        if not expansion.is_even_period:
            return self._applicability(expansion, False, f"n even (period {expansion.period_length}), case needs n odd")
        m = expansion.half_index
        detail = f"n odd (period {expansion.period_length}), {describe_middle(expansion)}"
        if (m % 2 == 1) != want_odd_m:
            return self._applicability(expansion, False, f"{detail}, case needs m {'odd' if want_odd_m else 'even'}")
        if not has_special_middle(expansion):
            return self._applicability(expansion, False, detail)
        return self._applicability(expansion, True, f"{label}: {detail}")
