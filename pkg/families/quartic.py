"""Family F5: the quartic f(t) with a cubic X(t)."""

from __future__ import annotations

from typing import Tuple

from core.types import Applicability, FamilyId, PredictedPattern, SurdExpansion
from families.base_family import BaseFamily, SolutionPolynomials, constants, middle_replaced, t


def quartic_radicand(f: int, c: int, h: int, leading_h_power: int = 6):
    """(c-1)^2 h^p t^4 + 4(c-1)^2 h^4 t^3 + 6(c-1)^2 h^2 t^2 + 2(c-1)(2c-1) t + f.

    p = 6 gives the radicand matching X(t), Y(t); p = 7 is the form with
    the stray factor of h, whose Pell identity fails once h >= 2.
    """
    k = c - 1
    return (
        k * k * h ** leading_h_power * t ** 4
        + 4 * k * k * h ** 4 * t ** 3
        + 6 * k * k * h * h * t ** 2
        + 2 * k * (2 * c - 1) * t
        + f
    )


class QuarticFamily(BaseFamily):
    """With k = c - 1 and v = h^2 t + 1: X(t) = k v^3 + 1 and Y(t) = h v."""

    def __init__(self):
        super().__init__(
            FamilyId.F5,
            "quartic",
            aliases=("quartic",),
            summary="(c-1)^2 h^6 t^4 + 4(c-1)^2 h^4 t^3 + 6(c-1)^2 h^2 t^2 + 2(c-1)(2c-1) t + f",
        )

    @property
    def cases(self) -> Tuple[str, ...]:
        return (
            "(i) n odd, m odd, a_m in {a0, a0-1}: middle quotient becomes (c-1)ht + a_m",
            "(ii) n even: [lead; a_1..a_n, 2(c-1)ht + 2a0, a_1..a_n, 2 lead]",
        )

    def _solution_polynomials(self, f: int, c: int, h: int) -> SolutionPolynomials:
        k = c - 1
        X_poly = k * h ** 6 * t ** 3 + 3 * k * h ** 4 * t ** 2 + 3 * k * h * h * t + c
        Y_poly = h ** 3 * t + h
        return quartic_radicand(f, c, h), X_poly, Y_poly

    def _cover(self, expansion: SurdExpansion) -> Applicability:
        if not expansion.is_even_period:
            return self._applicability(
                expansion, True, f"F5(ii): n even (period {expansion.period_length}), doubled interior", doubled=True
            )
        return self._middle_case(expansion, "F5(i)", want_odd_m=True)

    def _pattern(self, expansion, c, h, applicability) -> PredictedPattern:
        k = c - 1
        lead = k * (h ** 3 * t ** 2 + 2 * h * t) + expansion.a0
        if applicability.doubled:
            interior = constants(expansion.interior)
            periodic = interior + [2 * k * h * t + 2 * expansion.a0] + interior + [2 * lead]
        else:
            periodic = middle_replaced(expansion, k * h) + [2 * lead]
        return PredictedPattern(lead=lead, periodic=tuple(periodic))
