"""Family F4: f(t) = (c+1)^2 h^2 t^2 + 2(c^2-1) t + f, for bases of odd period."""

from __future__ import annotations

from fractions import Fraction
from typing import Tuple

from core.types import Applicability, FamilyId, PredictedPattern, SurdExpansion
from families.base_family import BaseFamily, SolutionPolynomials, constants, t


class OddPeriodFamily(BaseFamily):
    """Quadratic family whose solution carries the factor (c+1)/(c-1).

    When the period of sqrt(f) is odd, h^2 = 2(c-1) B_n^2, so
    (c+1)^2 h^4 / (c-1) and (c+1) h^3 / (c-1) are integers. For other
    bases instantiation fails unless they happen to be integral anyway.
    """

    def __init__(self):
        super().__init__(
            FamilyId.F4,
            "odd-period",
            aliases=("odd-period",),
            summary="(c+1)^2 h^2 t^2 + 2(c^2-1) t + f",
        )

    @property
    def cases(self) -> Tuple[str, ...]:
        return ("n even: [(c+1)ht + a0; a_1..a_n, 2(c+1)ht + 2a0]",)

    def _solution_polynomials(self, f: int, c: int, h: int) -> SolutionPolynomials:
        ratio = Fraction(c + 1, c - 1)
        f_poly = (c + 1) ** 2 * h * h * t ** 2 + 2 * (c * c - 1) * t + f
        X_poly = (c + 1) ** 2 * Fraction(h ** 4, c - 1) * t ** 2 + 2 * (c + 1) * h * h * t + c
        Y_poly = ratio * h ** 3 * t + h
        return f_poly, X_poly, Y_poly

    def _cover(self, expansion: SurdExpansion) -> Applicability:
        if expansion.is_even_period:
            return self._applicability(
                expansion, False, f"n odd (period {expansion.period_length} is even), case needs n even"
            )
        return self._applicability(expansion, True, f"F4: n even (period {expansion.period_length})")

    def _pattern(self, expansion, c, h, applicability) -> PredictedPattern:
        lead = (c + 1) * h * t + expansion.a0
        periodic = constants(expansion.interior) + [2 * lead]
        return PredictedPattern(lead=lead, periodic=tuple(periodic))
