"""Exact solutions of X^2 - f*Y^2 = +-1 read off the continued fraction of sqrt(f)."""

from __future__ import annotations

from math import isqrt
from typing import Dict, List, Optional, Tuple

from core.contfrac import ConvergentTable, expand_sqrt, require_non_square
from core.exceptions import DomainError, UnclassifiedError
from core.types import CongruenceMatch, CongruenceProfile, CongruenceRow, PellSolution, SurdExpansion
from utils.logging_config import get_logger

logger = get_logger(__name__)


# Admitted (c, h) residues of the fundamental solution, keyed by f mod 4.
# f = 0 mod 4 has no row: such f is never squarefree.
CONGRUENCE_TABLE: Dict[int, Tuple[CongruenceRow, ...]] = {
    1: (
        CongruenceRow("c = +-1 (mod 8), h = 0 (mod 4)", 8, frozenset({1, 7}), 4, 0),
    ),
    2: (
        CongruenceRow("c = +-1 (mod 16), h = 0 (mod 4)", 16, frozenset({1, 15}), 4, 0),
        CongruenceRow("c = +-3 (mod 8), h = 2 (mod 4)", 8, frozenset({3, 5}), 4, 2),
    ),
    3: (
        CongruenceRow("c = +-1 (mod 8), h = 0 (mod 4)", 8, frozenset({1, 7}), 4, 0),
        CongruenceRow("c = 0 (mod 2), h = 1 (mod 2)", 2, frozenset({0}), 2, 1),
    ),
}


def fundamental_from_expansion(expansion: SurdExpansion) -> Tuple[int, int]:
    """(c, h) of the fundamental solution of X^2 - f*Y^2 = 1.

    Even period L: (A_{L-1}, B_{L-1}). Odd period: (2A_n^2 + 1, 2A_n B_n)
    with n = L - 1, which avoids running a second period.
    """
    n = expansion.n
    table = ConvergentTable(expansion, n)
    A_n, B_n = table.A(n), table.B(n)
    if expansion.is_even_period:
        return A_n, B_n
    return 2 * A_n * A_n + 1, 2 * A_n * B_n


def fundamental_solution(f: int) -> PellSolution:
    """Smallest positive solution of X^2 - f*Y^2 = 1.

    Args:
        f: Non-square integer >= 2

    Returns:
        PellSolution with sign +1 and rank 1

    Raises:
        PerfectSquareError: If f is a perfect square
        DomainError: If f < 2
    """
    expansion = expand_sqrt(f)
    c, h = fundamental_from_expansion(expansion)
    logger.debug(f"fundamental solution for f={f}: period {expansion.period_length}, c has {c.bit_length()} bits")
    return PellSolution(f=f, X=c, Y=h, sign=1, rank=1)


def negative_fundamental(f: int) -> Optional[PellSolution]:
    """Smallest positive solution of X^2 - f*Y^2 = -1, or None.

    A solution exists exactly when the period of sqrt(f) is odd; it is
    then (A_n, B_n).
    """
    expansion = expand_sqrt(f)
    if expansion.is_even_period:
        return None
    n = expansion.n
    table = ConvergentTable(expansion, n)
    return PellSolution(f=f, X=table.A(n), Y=table.B(n), sign=-1, rank=1)


def _multiply(x1: int, y1: int, x2: int, y2: int, f: int) -> Tuple[int, int]:
    return x1 * x2 + f * y1 * y2, x1 * y2 + x2 * y1


def _power(x: int, y: int, f: int, k: int) -> Tuple[int, int]:
    """(x + y*sqrt(f))^k in Z[sqrt(f)] by binary exponentiation."""
    result = (1, 0)
    base = (x, y)
    while k:
        if k & 1:
            result = _multiply(*result, *base, f)
        base = _multiply(*base, *base, f)
        k >>= 1
    return result


def nth_solution(f: int, k: int) -> PellSolution:
    """The rank-k solution (c + h*sqrt(f))^k of X^2 - f*Y^2 = 1.

    Raises:
        DomainError: If k < 1
        PerfectSquareError: If f is a perfect square
    """
    if k < 1:
        raise DomainError(f"solution rank must be at least 1, got {k}")
    base = fundamental_solution(f)
    X, Y = _power(base.X, base.Y, f, k)
    return PellSolution(f=f, X=X, Y=Y, sign=1, rank=k)


def period_solution(f: int, k: int) -> PellSolution:
    """The solution at the end of the k'th period: (A_{kL-1}, B_{kL-1}).

    Its norm is (-1)^{kL}, L the period length.

    Raises:
        DomainError: If k < 1
    """
    if k < 1:
        raise DomainError(f"period count must be at least 1, got {k}")
    expansion = expand_sqrt(f)
    index = k * expansion.period_length - 1
    table = ConvergentTable(expansion, index)
    sign = 1 if (k * expansion.period_length) % 2 == 0 else -1
    return PellSolution(f=f, X=table.A(index), Y=table.B(index), sign=sign, rank=k)


def solutions(f: int, count: int) -> List[PellSolution]:
    """The first `count` positive solutions of X^2 - f*Y^2 = +-1 in increasing order.

    They are the successive powers of the smallest unit, which has norm -1
    when the period is odd.
    """
    if count < 0:
        raise DomainError(f"count must be non-negative, got {count}")
    negative = negative_fundamental(f)
    unit = negative if negative is not None else fundamental_solution(f)

    found: List[PellSolution] = []
    X, Y = unit.X, unit.Y
    for rank in range(1, count + 1):
        sign = unit.sign ** rank
        found.append(PellSolution(f=f, X=X, Y=Y, sign=sign, rank=rank))
        X, Y = _multiply(X, Y, unit.X, unit.Y, f)
    return found


def brute_force_solutions(f: int, y_max: int) -> List[Tuple[int, int, int]]:
    """Every (X, Y, sign) with X^2 - f*Y^2 = sign = +-1 and 1 <= Y <= y_max.

    Direct search, independent of the continued fraction.
    """
    require_non_square(f)
    found = []
    for Y in range(1, y_max + 1):
        target = f * Y * Y
        for sign in (-1, 1):
            square = target + sign
            X = isqrt(square)
            if X * X == square:
                found.append((X, Y, sign))
    return found


def congruence_profile(f: int) -> CongruenceProfile:
    f_class = f % 4
    return CongruenceProfile(f_class=f_class, admitted=CONGRUENCE_TABLE.get(f_class, ()))


def congruence_check(f: int) -> CongruenceMatch:
    """Classify the fundamental (c, h) of f against the residue table.

    Returns:
        The match; for f = 0 (mod 4) the row is None and outside_table is set

    Raises:
        UnclassifiedError: If (c, h) matches no admitted row, or several
        PerfectSquareError: If f is a perfect square
    """
    solution = fundamental_solution(f)
    profile = congruence_profile(f)
    if f % 4 == 0:
        logger.debug(f"f={f} is 0 mod 4, outside the residue table")
        return CongruenceMatch(profile=profile, solution=solution, row=None, outside_table=True)

    matched = [row for row in profile.admitted if row.matches(solution.X, solution.Y)]
    if len(matched) != 1:
        raise UnclassifiedError(
            f"(c, h) = ({solution.X}, {solution.Y}) for f={f} matched {len(matched)} rows"
        )
    return CongruenceMatch(profile=profile, solution=solution, row=matched[0])
