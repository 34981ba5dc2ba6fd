"""Continued fraction expansion of sqrt(f), convergents and their identities."""

from __future__ import annotations

from fractions import Fraction
from math import isqrt
from typing import Callable, Dict, List, Optional, Sequence, Tuple

from core.exceptions import DomainError, PerfectSquareError
from core.types import ConvergentPair, IdentityReport, LemmaCheck, SurdExpansion
from utils.logging_config import get_logger

logger = get_logger(__name__)


def require_non_square(f: int) -> int:
    """Validate a radicand and return floor(sqrt(f)).

    Raises:
        DomainError: If f < 2
        PerfectSquareError: If f is a perfect square
    """
    if not isinstance(f, int) or isinstance(f, bool):
        raise DomainError(f"radicand must be an integer, got {f!r}")
    if f < 2:
        raise DomainError(f"radicand must be at least 2, got {f}")
    root = isqrt(f)
    if root * root == f:
        raise PerfectSquareError(f, root)
    return root


def expand_sqrt(f: int) -> SurdExpansion:
    """Compute one full period of the continued fraction of sqrt(f).

    Runs r_{k+1} = a_k s_k - r_k, s_{k+1} = (f - r_{k+1}^2) / s_k,
    a_{k+1} = floor((a0 + r_{k+1}) / s_{k+1}) until s returns to 1.

    Args:
        f: Non-square integer >= 2

    Returns:
        The expansion with its r and s side sequences

    Raises:
        DomainError: If f < 2
        PerfectSquareError: If f is a perfect square
    """
    a0 = require_non_square(f)

    r, s, a = 0, 1, a0
    r_seq = [r]
    s_seq = [s]
    period: List[int] = []
    seen = set()

    while True:
        r = a * s - r
        numerator = f - r * r
        assert numerator % s == 0, f"s_k does not divide f - r^2 for f={f}"
        s = numerator // s
        a = (a0 + r) // s
        assert (r, s) not in seen, f"(r, s) repeated before s returned to 1 for f={f}"
        seen.add((r, s))
        r_seq.append(r)
        s_seq.append(s)
        period.append(a)
        if s == 1:
            break

    logger.debug(f"sqrt({f}): a0={a0}, period length {len(period)}")
    return SurdExpansion(f=f, a0=a0, period=tuple(period), r_seq=tuple(r_seq), s_seq=tuple(s_seq))


def convergents(a0: int, quotients: Sequence[int], k: int) -> List[ConvergentPair]:
    """Convergents A_0/B_0 ... A_k/B_k of [a0; quotients...].

    Seeds are A_{-1} = B_{-2} = 1 and A_{-2} = B_{-1} = 0.

    Args:
        a0: Leading quotient (index 0)
        quotients: a_1, a_2, ...
        k: Last index wanted

    Returns:
        Pairs for indices 0 ... k

    Raises:
        IndexError: If k is beyond the supplied quotients
        DomainError: If k is negative
    """
    if k < 0:
        raise DomainError(f"convergent index must be non-negative, got {k}")
    terms = [a0, *quotients]
    if k >= len(terms):
        raise IndexError(f"convergent {k} needs {k + 1} quotients, only {len(terms)} supplied")

    pairs = []
    A_prev, A = 0, 1
    B_prev, B = 1, 0
    for i in range(k + 1):
        A_prev, A = A, terms[i] * A + A_prev
        B_prev, B = B, terms[i] * B + B_prev
        pairs.append(ConvergentPair(index=i, A=A, B=B))
    return pairs


class ConvergentTable:
    """A_i and B_i of an expansion for -2 <= i <= upto."""

    def __init__(self, expansion: SurdExpansion, upto: int):
        """Build the table.

        Args:
            expansion: Expansion whose quotients repeat periodically
            upto: Largest index needed
        """
        self.expansion = expansion
        self.upto = upto
        self._A: Dict[int, int] = {-2: 0, -1: 1}
        self._B: Dict[int, int] = {-2: 1, -1: 0}
        for i in range(upto + 1):
            a = expansion.quotient(i)
            self._A[i] = a * self._A[i - 1] + self._A[i - 2]
            self._B[i] = a * self._B[i - 1] + self._B[i - 2]

    def A(self, i: int) -> int:
        return self._A[i]

    def B(self, i: int) -> int:
        return self._B[i]

    def pair(self, i: int) -> ConvergentPair:
        return ConvergentPair(index=i, A=self._A[i], B=self._B[i])


def reversed_value(quotients: Sequence[int]) -> Fraction:
    """Value of [b_m; b_{m-1}, ..., b_0] for quotients b_0 ... b_m.

    Equals P_m / P_{m-1} where P_i are the numerators of [b_0; b_1, ...].

    Raises:
        DomainError: For an empty sequence or a non-positive quotient
    """
    if not quotients:
        raise DomainError("reversed_value needs at least one quotient")
    if any(b <= 0 for b in quotients):
        raise DomainError(f"quotients must be positive: {list(quotients)}")

    value = Fraction(quotients[0])
    for b in quotients[1:]:
        value = b + 1 / value
    return value


def numerators(quotients: Sequence[int]) -> List[int]:
    """P_{-1}, P_0, ..., P_m of [b_0; b_1, ..., b_m]."""
    result = [1]
    previous = 0
    for b in quotients:
        result.append(b * result[-1] + previous)
        previous = result[-2]
    return result


def identity_report(f: int) -> IdentityReport:
    """Evaluate every convergent identity that applies to sqrt(f).

    Raises:
        PerfectSquareError: If f is a perfect square
    """
    expansion = expand_sqrt(f)
    L = expansion.period_length
    table = ConvergentTable(expansion, 2 * L + 1)
    checks: List[LemmaCheck] = []

    for name, applies, check in _IDENTITIES:
        if not applies(expansion):
            continue
        passed, statement, detail = check(expansion, table)
        checks.append(LemmaCheck(name=name, statement=statement, passed=passed, detail=detail))

    report = IdentityReport(f=f, period_length=L, checks=tuple(checks))
    if not report.passed:
        logger.warning(f"identity failures for f={f}: {[c.name for c in report.failures]}")
    return report


def _pell_pair(expansion: SurdExpansion, table: ConvergentTable) -> tuple:
    """(c, h) read straight from the convergents, without shortcuts."""
    L = expansion.period_length
    index = L - 1 if L % 2 == 0 else 2 * L - 1
    return table.A(index), table.B(index)


def _check_reversal(expansion, table):
    terms = expansion.terms(expansion.period_length + 1)
    bad: Optional[int] = None
    for m in range(1, len(terms)):
        if reversed_value(terms[:m + 1]) != Fraction(table.A(m), table.A(m - 1)):
            bad = m
            break
    detail = "all prefixes" if bad is None else f"fails at m={bad}"
    return bad is None, "[a_m; a_{m-1}, ..., a_0] = A_m / A_{m-1}", detail


_RS_STATEMENT = "A_k A_{k-1} - f B_k B_{k-1} = (-1)^k r_{k+1}; A_k^2 - f B_k^2 = (-1)^{k+1} s_{k+1}"


def _check_rs(expansion, table):
    f = expansion.f
    for k in range(-1, expansion.period_length):
        sign = -1 if k % 2 else 1
        cross = table.A(k) * table.A(k - 1) - f * table.B(k) * table.B(k - 1)
        norm = table.A(k) ** 2 - f * table.B(k) ** 2
        if cross != sign * expansion.r_seq[k + 1] or norm != -sign * expansion.s_seq[k + 1]:
            return False, _RS_STATEMENT, f"fails at k={k}"
    return True, _RS_STATEMENT, f"k=-1..{expansion.period_length - 1}"


def _check_remainder_bound(expansion, table):
    worst = max(expansion.r_seq)
    return worst <= expansion.a0, "r_k <= a0", f"max r_k = {worst}, a0 = {expansion.a0}"


def _check_palindrome(expansion, table):
    interior = expansion.interior
    closes = expansion.period[-1] == 2 * expansion.a0 and 1 not in expansion.s_seq[1:-1]
    return (interior == interior[::-1] and closes,
            "a_1..a_n is a palindrome and only the last quotient is 2*a0",
            f"interior {list(interior)}")


def middle_quotient_in_range(expansion: SurdExpansion) -> bool:
    """True for an even period 2m whose middle quotient a_m is a0 or a0 - 1."""
    if not expansion.is_even_period:
        return False
    a_m = expansion.quotient(expansion.half_index)
    return a_m in (expansion.a0, expansion.a0 - 1)


def has_special_middle(expansion: SurdExpansion) -> bool:
    """Even period 2m with a_m in {a0, a0 - 1} and s_m = 2.

    s_m = 2 follows from the quotient condition except when a_m = a0 - 1
    and a0 <= 3, which happens for f = 8 and f = 12 only.
    """
    return middle_quotient_in_range(expansion) and expansion.s_seq[expansion.half_index] == 2


def _middle_bound_holds(expansion: SurdExpansion) -> bool:
    return middle_quotient_in_range(expansion) and (
        expansion.quotient(expansion.half_index) == expansion.a0 or expansion.a0 >= 4
    )


def _check_middle_denominator(expansion, table):
    m = expansion.half_index
    s_m = expansion.s_seq[m]
    return s_m == 2, "s_m = 2 when a_m = a0, or a_m = a0 - 1 with a0 >= 4", f"m={m}, s_m={s_m}"


def _check_middle_remainder(expansion, table):
    m = expansion.half_index
    r = expansion.r_seq
    return r[m + 1] == r[m], "r_{m+1} = r_m for even period 2m", f"r_m={r[m]}, r_(m+1)={r[m + 1]}"


def _check_even_half(expansion, table):
    m = expansion.half_index
    c, h = _pell_pair(expansion, table)
    c_half = table.A(m) * table.B(m - 1) + table.A(m - 1) * table.B(m - 2)
    h_half = table.B(m - 1) * (table.B(m) + table.B(m - 2))
    return ((c_half, h_half) == (c, h),
            "c = A_m B_{m-1} + A_{m-1} B_{m-2}, h = B_{m-1}(B_m + B_{m-2})",
            f"m={m}: ({c_half}, {h_half}) vs ({c}, {h})")


def _check_odd_half(expansion, table):
    m = expansion.half_index
    c, h = _pell_pair(expansion, table)
    A, B = table.A, table.B
    cross = A(m) * B(m) + A(m - 1) * B(m - 1)
    squares_form = (A(m) ** 2 + A(m - 1) ** 2) * (B(m) ** 2 + B(m - 1) ** 2) + cross ** 2
    c_half = 2 * cross ** 2 + 1
    h_half = 2 * cross * (B(m) ** 2 + B(m - 1) ** 2)
    return ((squares_form, c_half, h_half) == (c, c, h),
            "c = (A_m^2 + A_{m-1}^2)(B_m^2 + B_{m-1}^2) + x^2 = 2x^2 + 1, "
            "h = 2x(B_m^2 + B_{m-1}^2), x = A_m B_m + A_{m-1} B_{m-1}",
            f"m={m}: c={c_half}, h={h_half}")


def _check_two_mod_four(expansion, table):
    m = expansion.half_index
    c, h = _pell_pair(expansion, table)
    value = h * table.A(m - 1) - (c - 1) * table.B(m - 1)
    return value == 0, "h A_{m-1} - (c - 1) B_{m-1} = 0", f"m={m}: {value}"


def _check_last_convergent(expansion, table):
    n = expansion.n
    lhs, rhs = table.A(n), expansion.a0 * table.B(n) + table.B(n - 1)
    return lhs == rhs, "A_n = a0 B_n + B_{n-1}", f"n={n}: {lhs} vs {rhs}"


def _check_norm_relation(expansion, table):
    n, a0 = expansion.n, expansion.a0
    lhs = table.B(n) * (expansion.f - a0 * a0)
    rhs = table.A(n - 1) + a0 * table.B(n - 1)
    return lhs == rhs, "B_n (f - a0^2) = A_{n-1} + a0 B_{n-1}", f"n={n}: {lhs} vs {rhs}"


def _check_odd_doubling(expansion, table):
    n = expansion.n
    c, h = _pell_pair(expansion, table)
    c_n, h_n = 2 * table.A(n) ** 2 + 1, 2 * table.A(n) * table.B(n)
    return (c_n, h_n) == (c, h), "c = 2 A_n^2 + 1, h = 2 A_n B_n", f"({c_n}, {h_n}) vs ({c}, {h})"


def _check_middle_quotient(expansion, table):
    m = expansion.half_index
    c, _ = _pell_pair(expansion, table)
    A, B = table.A, table.B
    span = B(m) + B(m - 2)
    first = A(m - 1) == span
    if m % 2:
        second, label = c - 1 == A(m - 1) * span, "c - 1"
    else:
        second, label = c + 1 == A(m - 1) * span, "c + 1"
    return (first and second,
            f"A_{{m-1}} = B_m + B_{{m-2}} and {label} = A_{{m-1}}(B_m + B_{{m-2}})",
            f"m={m}: A_(m-1)={A(m - 1)}, B_m + B_(m-2)={span}")


_Check = Callable[[SurdExpansion, ConvergentTable], tuple]

_IDENTITIES: List[Tuple[str, Callable[[SurdExpansion], bool], _Check]] = [
    ("reversal", lambda e: True, _check_reversal),
    ("rs_convergents", lambda e: True, _check_rs),
    ("remainder_bound", lambda e: True, _check_remainder_bound),
    ("palindrome", lambda e: True, _check_palindrome),
    ("middle_denominator", _middle_bound_holds, _check_middle_denominator),
    ("middle_remainder", lambda e: e.is_even_period, _check_middle_remainder),
    ("even_half_solution", lambda e: e.is_even_period, _check_even_half),
    ("odd_half_solution", lambda e: not e.is_even_period, _check_odd_half),
    ("period_two_mod_four", lambda e: e.period_length % 4 == 2, _check_two_mod_four),
    ("last_convergent", lambda e: True, _check_last_convergent),
    ("norm_relation", lambda e: True, _check_norm_relation),
    ("odd_period_doubling", lambda e: not e.is_even_period, _check_odd_doubling),
    ("middle_quotient", has_special_middle, _check_middle_quotient),
]
