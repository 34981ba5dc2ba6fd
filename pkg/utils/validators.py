"""Input validation utilities."""

from __future__ import annotations

import re
from typing import Optional, Tuple

from core.polynomial import IntPolynomial
from core.types import TFilter

_INTEGER = re.compile(r"^[+-]?\d+$")
_RANGE = re.compile(r"^\s*(\d+)\s*:\s*(\d+)\s*$")


class Validators:
    """Parsing and validation of command-line values."""

    @staticmethod
    def parse_int(text: str, name: str = "value", minimum: Optional[int] = 0) -> int:
        """Parse a decimal integer of any size.

        Args:
            text: Decimal digits, optionally signed, underscores allowed
            name: Name used in error messages
            minimum: Smallest accepted value, None for no bound

        Returns:
            The integer

        Raises:
            ValueError: If text is not an integer or is below minimum
        """
        cleaned = text.strip().replace("_", "") if isinstance(text, str) else ""
        if not _INTEGER.match(cleaned):
            raise ValueError(f"{name} must be an integer, got {text!r}")
        value = int(cleaned)
        if minimum is not None and value < minimum:
            raise ValueError(f"{name} must be at least {minimum}, got {value}")
        return value

    @staticmethod
    def parse_polynomial(text: str, max_degree: int = 4) -> IntPolynomial:
        """Parse constant-first coefficients such as "22,788,7056".

        Raises:
            ValueError: On a malformed list or a degree above max_degree
        """
        if not text or not text.strip():
            raise ValueError("polynomial must list at least one coefficient")
        coefficients = [Validators.parse_int(part, "coefficient", minimum=None) for part in text.split(",")]
        poly = IntPolynomial.of(*coefficients)
        if poly.degree > max_degree:
            raise ValueError(f"polynomial degree {poly.degree} exceeds {max_degree}")
        return poly

    @staticmethod
    def parse_range(text: str) -> Tuple[int, int]:
        """Parse an inclusive range "LO:HI" with 0 <= LO <= HI.

        Raises:
            ValueError: If the range is malformed or empty
        """
        match = _RANGE.match(text or "")
        if not match:
            raise ValueError(f"range must look like LO:HI, got {text!r}")
        lo, hi = int(match.group(1)), int(match.group(2))
        if hi < lo:
            raise ValueError(f"range {lo}:{hi} is empty")
        return lo, hi

    @staticmethod
    def parse_t_filter(text: str) -> TFilter:
        try:
            return TFilter(text.strip().lower())
        except ValueError:
            choices = ", ".join(f.value for f in TFilter)
            raise ValueError(f"filter must be one of {choices}, got {text!r}")

    @staticmethod
    def validate_file_path(path: str) -> str:
        """Validate an output path.

        Raises:
            ValueError: If path is empty or traverses upwards
        """
        if not path or not isinstance(path, str):
            raise ValueError("Path must be a non-empty string")
        if ".." in path.replace("\\", "/").split("/"):
            raise ValueError("Path contains directory traversal")
        return path
