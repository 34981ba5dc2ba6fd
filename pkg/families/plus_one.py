"""Family F3: f(t) = (c+1)^2 h^2 t^2 + 2(c+1)^2 t + f."""

from __future__ import annotations

from typing import Tuple

from core.types import Applicability, FamilyId, SurdExpansion
from families.base_family import BaseFamily
from families.minus_one import MinusOneFamily


class PlusOneFamily(MinusOneFamily):
    """F2's polynomials with c + 1 in place of c - 1.

    Only the n odd, m even case is covered; for n even no pattern is
    predicted.
    """

    offset = 1

    def __init__(self):
        BaseFamily.__init__(
            self,
            FamilyId.F3,
            "plus-one",
            aliases=("plus-one", "c+1"),
            summary="(c+1)^2 h^2 t^2 + 2(c+1)^2 t + f",
        )

    @property
    def cases(self) -> Tuple[str, ...]:
        return ("n odd, m even, a_m in {a0, a0-1}: middle quotient becomes (c+1)ht + a_m",)

    def _cover(self, expansion: SurdExpansion) -> Applicability:
        return self._middle_case(expansion, "F3", want_odd_m=False)
