"""Fundamental units of real quadratic fields and squarefree testing."""

from __future__ import annotations

from typing import Optional, Tuple, Union

import gmpy2

from core.contfrac import ConvergentTable, expand_sqrt
from core.exceptions import CongruenceError, DomainError, MismatchError, NotSquarefreeError
from core.fermat_pell import applicability, instantiate
from core.types import FamilyId, FundamentalUnit, SquarefreeStatus
from utils.logging_config import get_logger
from utils.primes import factorize

logger = get_logger(__name__)


def is_squarefree(n: int, seed: Optional[int] = None) -> SquarefreeStatus:
    """Decide squarefreeness from the complete factorization of n.

    Returns:
        Status with the smallest prime p such that p^2 | n, if any

    Raises:
        DomainError: If n < 1
    """
    if n < 1:
        raise DomainError(f"squarefree test needs n >= 1, got {n}")
    repeated = [p for p, e in factorize(n, seed).items() if e >= 2]
    if repeated:
        return SquarefreeStatus(n=n, squarefree=False, witness=min(repeated))
    return SquarefreeStatus(n=n, squarefree=True)


def require_squarefree(D: int) -> None:
    status = is_squarefree(D)
    if not status.squarefree:
        raise NotSquarefreeError(D, status.witness)


def cube_root_in_field(P: int, Q: int, D: int) -> Optional[Tuple[int, int]]:
    """Find odd (a, b) with ((a + b*sqrt(D))/2)^3 = P + Q*sqrt(D).

    A real cube root is taken at a precision scaled to the size of P and
    Q, rounded to a candidate, and accepted only if the exact expansion
    (a^3 + 3ab^2 D, 3a^2 b + b^3 D) equals (8P, 8Q).

    Returns:
        (a, b), or None when D != 5 (mod 8), the norm is not +-1, or no cube root exists
    """
    if D % 8 != 5:
        return None
    norm = P * P - D * Q * Q
    if norm not in (1, -1):
        return None

    context = gmpy2.get_context()
    saved = context.precision
    context.precision = P.bit_length() + Q.bit_length() + D.bit_length() + 64
    try:
        root_d = gmpy2.sqrt(gmpy2.mpfr(D))
        eps = gmpy2.cbrt(gmpy2.mpfr(P) + gmpy2.mpfr(Q) * root_d)
        conjugate = norm / eps
        a = int(gmpy2.rint(eps + conjugate))
        b = int(gmpy2.rint((eps - conjugate) / root_d))
    finally:
        context.precision = saved

    if a % 2 == 0 or b % 2 == 0 or b <= 0:
        return None
    if a ** 3 + 3 * a * b * b * D != 8 * P or 3 * a * a * b + b ** 3 * D != 8 * Q:
        return None
    return a, b


def _unit_from_expansion(D: int) -> FundamentalUnit:
    expansion = expand_sqrt(D)
    L = expansion.period_length
    table = ConvergentTable(expansion, L - 1)
    P, Q = table.A(L - 1), table.B(L - 1)
    norm = 1 if L % 2 == 0 else -1

    root = cube_root_in_field(P, Q, D)
    if root is not None:
        logger.debug(f"D={D}: P + Q*sqrt(D) is a cube, unit ({root[0]} + {root[1]}*sqrt(D))/2")
        return FundamentalUnit(D=D, a=root[0], b=root[1], denom=2, norm=norm)
    return FundamentalUnit(D=D, a=P, b=Q, denom=1, norm=norm)


def fundamental_unit(D: int) -> FundamentalUnit:
    """The fundamental unit of Q(sqrt(D)) exceeding 1.

    P + Q*sqrt(D) from the last convergent of the first period, replaced by
    its cube root (a + b*sqrt(D))/2 when D = 5 (mod 8) and that root exists.
    The norm is +1 exactly when the period is even.

    Raises:
        DomainError: If D < 2
        NotSquarefreeError: If D is not squarefree
    """
    if D < 2:
        raise DomainError(f"D must be at least 2, got {D}")
    require_squarefree(D)
    return _unit_from_expansion(D)


def _square(unit: FundamentalUnit) -> Tuple[int, int]:
    return unit.a * unit.a + unit.D * unit.b * unit.b, 2 * unit.a * unit.b


def unit_from_family(family: Union[FamilyId, str], f: int, t: int, step: int = 1) -> FundamentalUnit:
    """The fundamental unit of Q(sqrt(f(t))) read off X(t), Y(t).

    When sqrt(f(t)) has an even period, X(t) + Y(t)*sqrt(f(t)) is the unit
    itself. When the period is odd the unit has norm -1 and X(t) + Y(t)*sqrt(f(t))
    is its square; the norm -1 unit is returned after that square is checked.
    A disagreement is an error when the family covers f; otherwise it is
    logged and the independently computed unit is returned.

    Args:
        family: Family id or alias
        f: Base radicand
        t: Parameter value, t >= 0
        step: Use the rescaled family f(step*t)

    Raises:
        CongruenceError: If f(t) = 0 (mod 4) or f(t) = 5 (mod 8)
        NotSquarefreeError: If f(t) is not squarefree
        MismatchError: If a covered prediction disagrees with the direct computation
    """
    if t < 0:
        raise DomainError(f"t must be non-negative, got {t}")
    instance = instantiate(family, f, step)
    D = instance.f_poly(t)
    if not (D % 4 in (2, 3) or D % 8 == 1):
        raise CongruenceError(f"f(t) = {D} is {D % 8} mod 8; the unit is not read off X(t), Y(t)")
    require_squarefree(D)

    predicted = FundamentalUnit(D=D, a=instance.X_poly(t), b=instance.Y_poly(t), denom=1, norm=1)
    direct = _unit_from_expansion(D)
    if (direct.a, direct.b, direct.denom) == (predicted.a, predicted.b, predicted.denom):
        return predicted
    if direct.norm == -1 and direct.denom == 1 and _square(direct) == (predicted.a, predicted.b):
        logger.debug(f"f(t) = {D} has odd period; {predicted.render()} is the square of {direct.render()}")
        return direct

    cover = applicability(family, f)
    if cover.covered:
        raise MismatchError(
            f"{instance.family.value}({f}) at t={t}: predicted {predicted.render()}, direct {direct.render()}",
            expected=direct,
            actual=predicted,
        )
    logger.warning(
        f"{instance.family.value}({f}) not covered ({cover.case_label}); "
        f"at t={t} the unit is {direct.render()}, not {predicted.render()}"
    )
    return direct
