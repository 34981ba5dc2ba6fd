"""Family F2: f(t) = (c-1)^2 h^2 t^2 + 2(c-1)^2 t + f."""

from __future__ import annotations

from typing import Tuple

from core.types import Applicability, FamilyId, PredictedPattern, SurdExpansion
from families.base_family import BaseFamily, SolutionPolynomials, constants, middle_replaced, t


class MinusOneFamily(BaseFamily):
    """Quadratic family scaled by k = c - 1.

    X(t) = k h^4 t^2 + 2k h^2 t + c and Y(t) = h^3 t + h. F3 reuses the
    same polynomials with k = c + 1.
    """

    offset = -1

    def __init__(self):
        super().__init__(
            FamilyId.F2,
            "minus-one",
            aliases=("minus-one", "c-1"),
            summary="(c-1)^2 h^2 t^2 + 2(c-1)^2 t + f",
        )

    @property
    def cases(self) -> Tuple[str, ...]:
        return (
            "(i) n even: [(c-1)ht + a0; a_1..a_n, 2((c-1)ht + a0)]",
            "(ii) n odd, m odd, a_m in {a0, a0-1}: middle quotient becomes (c-1)ht + a_m",
        )

    def scale(self, c: int) -> int:
        return c + self.offset

    def _solution_polynomials(self, f: int, c: int, h: int) -> SolutionPolynomials:
        k = self.scale(c)
        f_poly = k * k * h * h * t ** 2 + 2 * k * k * t + f
        X_poly = k * h ** 4 * t ** 2 + 2 * k * h * h * t + c
        Y_poly = h ** 3 * t + h
        return f_poly, X_poly, Y_poly

    def _cover(self, expansion: SurdExpansion) -> Applicability:
        if not expansion.is_even_period:
            return self._applicability(expansion, True, f"F2(i): n even (period {expansion.period_length})")
        return self._middle_case(expansion, "F2(ii)", want_odd_m=True)

    def _pattern(self, expansion, c, h, applicability) -> PredictedPattern:
        k = self.scale(c)
        lead = k * h * t + expansion.a0
        if expansion.is_even_period:
            interior = middle_replaced(expansion, k * h)
        else:
            interior = constants(expansion.interior)
        return PredictedPattern(lead=lead, periodic=tuple(interior + [2 * lead]))
