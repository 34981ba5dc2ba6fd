"""Fermat-Pell polynomial families."""

from .base_family import BaseFamily
from .minus_one import MinusOneFamily
from .odd_period import OddPeriodFamily
from .plus_one import PlusOneFamily
from .quartic import QuarticFamily
from .shift import ShiftFamily

__all__ = [
    "BaseFamily",
    "MinusOneFamily",
    "OddPeriodFamily",
    "PlusOneFamily",
    "QuarticFamily",
    "ShiftFamily",
]
