"""Family F1: f(t) = h^2 t^2 + 2ct + f."""

from __future__ import annotations

from typing import Tuple

from core.polynomial import IntPolynomial
from core.types import Applicability, FamilyId, PredictedPattern, SurdExpansion
from families.base_family import BaseFamily, SolutionPolynomials, constants, t


class ShiftFamily(BaseFamily):
    """The quadratic family every base f admits.

    X(t) = h^2 t + c and Y(t) = h, so the solution only shifts in X.
    """

    def __init__(self):
        super().__init__(
            FamilyId.F1,
            "shift",
            aliases=("shift", "quadratic"),
            summary="h^2 t^2 + 2ct + f",
        )

    @property
    def cases(self) -> Tuple[str, ...]:
        return (
            "(i) n even: [ht + a0; a_1..a_n, 2a0, a_1..a_n, 2(ht + a0)]",
            "(ii) n odd: [ht + a0; a_1..a_n, 2(ht + a0)]",
        )

    def _solution_polynomials(self, f: int, c: int, h: int) -> SolutionPolynomials:
        f_poly = h * h * t ** 2 + 2 * c * t + f
        X_poly = h * h * t + c
        return f_poly, X_poly, IntPolynomial.constant(h)

    def _cover(self, expansion: SurdExpansion) -> Applicability:
        if expansion.is_even_period:
            return self._applicability(expansion, True, f"F1(ii): n odd (period {expansion.period_length})")
        return self._applicability(
            expansion, True, f"F1(i): n even (period {expansion.period_length}), doubled interior", doubled=True
        )

    def _pattern(self, expansion, c, h, applicability) -> PredictedPattern:
        lead = h * t + expansion.a0
        interior = constants(expansion.interior)
        if applicability.doubled:
            periodic = interior + constants([2 * expansion.a0]) + interior + [2 * lead]
        else:
            periodic = interior + [2 * lead]
        return PredictedPattern(lead=lead, periodic=tuple(periodic))
