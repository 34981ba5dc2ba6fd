"""Dense univariate polynomials with exact rational coefficients."""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from itertools import zip_longest
from typing import Iterable, Tuple, Union

from core.exceptions import NonIntegralError

Number = Union[int, Fraction]


def _normalize(coefficients: Iterable[Number]) -> Tuple[Fraction, ...]:
    coeffs = [Fraction(c) for c in coefficients]
    while coeffs and coeffs[-1] == 0:
        coeffs.pop()
    return tuple(coeffs)


@dataclass(frozen=True)
class IntPolynomial:
    """Polynomial in t, constant term first.

    Coefficients are kept as Fractions so that intermediate forms (the
    (c+1)/(c-1) factors of the odd-period family) stay exact; instances
    handed out by the family constructors are always integral.

    Attributes:
        coefficients: Normalized coefficients, no trailing zeros
    """
    coefficients: Tuple[Fraction, ...] = ()

    def __post_init__(self) -> None:
        object.__setattr__(self, "coefficients", _normalize(self.coefficients))

    @classmethod
    def of(cls, *coefficients: Number) -> IntPolynomial:
        """Build from coefficients given constant term first."""
        return cls(tuple(Fraction(c) for c in coefficients))

    @classmethod
    def constant(cls, value: Number) -> IntPolynomial:
        return cls.of(value)

    @classmethod
    def variable(cls) -> IntPolynomial:
        return cls.of(0, 1)

    @property
    def degree(self) -> int:
        """Degree, with -1 for the zero polynomial."""
        return len(self.coefficients) - 1

    @property
    def is_constant(self) -> bool:
        return self.degree <= 0

    @property
    def is_integral(self) -> bool:
        return all(c.denominator == 1 for c in self.coefficients)

    def integer_coefficients(self) -> Tuple[int, ...]:
        """Coefficients as ints, constant term first.

        Raises:
            NonIntegralError: If any coefficient is not an integer
        """
        if not self.is_integral:
            raise NonIntegralError(f"polynomial {self} has non-integral coefficients")
        return tuple(c.numerator for c in self.coefficients)

    def coefficient(self, power: int) -> Fraction:
        if 0 <= power < len(self.coefficients):
            return self.coefficients[power]
        return Fraction(0)

    def evaluate_exact(self, t: Number) -> Fraction:
        """Horner evaluation in exact arithmetic."""
        acc = Fraction(0)
        for c in reversed(self.coefficients):
            acc = acc * t + c
        return acc

    def evaluate(self, t: int) -> int:
        """Evaluate at an integer and return an int.

        Raises:
            NonIntegralError: If the value is not an integer
        """
        value = self.evaluate_exact(t)
        if value.denominator != 1:
            raise NonIntegralError(f"{self} is not integral at t={t}")
        return value.numerator

    def __call__(self, t: int) -> int:
        return self.evaluate(t)

    def derivative(self) -> IntPolynomial:
        return IntPolynomial(tuple(i * c for i, c in enumerate(self.coefficients) if i > 0))

    def substitute_scaled(self, step: int) -> IntPolynomial:
        """Return p(step * t)."""
        return IntPolynomial(tuple(c * step ** i for i, c in enumerate(self.coefficients)))

    def __add__(self, other: Union[IntPolynomial, Number]) -> IntPolynomial:
        other = _coerce(other)
        return IntPolynomial(tuple(
            a + b for a, b in zip_longest(self.coefficients, other.coefficients, fillvalue=Fraction(0))
        ))

    __radd__ = __add__

    def __neg__(self) -> IntPolynomial:
        return IntPolynomial(tuple(-c for c in self.coefficients))

    def __sub__(self, other: Union[IntPolynomial, Number]) -> IntPolynomial:
        return self + (-_coerce(other))

    def __rsub__(self, other: Number) -> IntPolynomial:
        return _coerce(other) - self

    def __mul__(self, other: Union[IntPolynomial, Number]) -> IntPolynomial:
        other = _coerce(other)
        if not self.coefficients or not other.coefficients:
            return IntPolynomial()
        product = [Fraction(0)] * (len(self.coefficients) + len(other.coefficients) - 1)
        for i, a in enumerate(self.coefficients):
            if a == 0:
                continue
            for j, b in enumerate(other.coefficients):
                product[i + j] += a * b
        return IntPolynomial(tuple(product))

    __rmul__ = __mul__

    def __pow__(self, exponent: int) -> IntPolynomial:
        if exponent < 0:
            raise ValueError("negative powers are not polynomials")
        result = IntPolynomial.of(1)
        base = self
        while exponent:
            if exponent & 1:
                result = result * base
            base = base * base
            exponent >>= 1
        return result

    def __str__(self) -> str:
        if not self.coefficients:
            return "0"
        terms = []
        for power in range(len(self.coefficients) - 1, -1, -1):
            c = self.coefficients[power]
            if c == 0:
                continue
            magnitude = abs(c)
            if power == 0:
                body = str(magnitude)
            else:
                coeff = "" if magnitude == 1 else str(magnitude)
                body = coeff + ("t" if power == 1 else f"t^{power}")
            sign = "-" if c < 0 else "+"
            terms.append((sign, body))
        first_sign, first_body = terms[0]
        text = ("-" if first_sign == "-" else "") + first_body
        for sign, body in terms[1:]:
            text += f" {sign} {body}"
        return text


def _coerce(value: Union[IntPolynomial, Number]) -> IntPolynomial:
    if isinstance(value, IntPolynomial):
        return value
    return IntPolynomial.constant(value)
