"""Type definitions for pellpoly."""

from __future__ import annotations

from dataclasses import dataclass, field
from enum import Enum
from typing import FrozenSet, List, Optional, Tuple

from core.polynomial import IntPolynomial


@dataclass(frozen=True)
class SurdExpansion:
    """One full period of the continued fraction of sqrt(f).

    Attributes:
        f: Non-square radicand
        a0: floor(sqrt(f))
        period: Quotients a_1 ... a_{n+1}; the last one is 2*a0
        r_seq: r_0 ... r_{n+1} (r_0 = 0)
        s_seq: s_0 ... s_{n+1} (s_0 = s_{n+1} = 1)
    """
    f: int
    a0: int
    period: Tuple[int, ...]
    r_seq: Tuple[int, ...]
    s_seq: Tuple[int, ...]

    @property
    def period_length(self) -> int:
        return len(self.period)

    @property
    def n(self) -> int:
        """Index of the last quotient before 2*a0 closes the period."""
        return len(self.period) - 1

    @property
    def half_index(self) -> int:
        """m with period_length = 2m or 2m + 1."""
        return len(self.period) // 2

    @property
    def is_even_period(self) -> bool:
        return len(self.period) % 2 == 0

    @property
    def interior(self) -> Tuple[int, ...]:
        """a_1 ... a_n, the palindromic part of the period."""
        return self.period[:-1]

    def quotient(self, i: int) -> int:
        """Partial quotient a_i for any i >= 0, continuing periodically."""
        if i < 0:
            raise IndexError(f"quotient index must be non-negative, got {i}")
        if i == 0:
            return self.a0
        return self.period[(i - 1) % len(self.period)]

    def terms(self, count: int) -> List[int]:
        """The first `count` partial quotients a_0, a_1, ..."""
        return [self.quotient(i) for i in range(count)]

    def recovers_root(self) -> bool:
        """Check exactly that [a0; period, period, ...] equals sqrt(f).

        The purely periodic tail y = [a_1; a_2, ..., a_{n+1}, y] satisfies
        q*y^2 + (q' - p)*y - p' = 0 where (p, p'; q, q') is the product of
        the period's quotient matrices. Substituting y = (sqrt(f) + a0)/d,
        d = f - a0^2, both the rational and the irrational part must vanish.
        """
        p, p_prev, q, q_prev = 1, 0, 0, 1
        for a in self.period:
            p, p_prev = a * p + p_prev, p
            q, q_prev = a * q + q_prev, q
        d = self.f - self.a0 * self.a0
        rational = q * (self.f + self.a0 * self.a0) + (q_prev - p) * self.a0 * d - p_prev * d * d
        irrational = 2 * self.a0 * q + (q_prev - p) * d
        return rational == 0 and irrational == 0

    def render(self) -> str:
        """Text form such as "[7; 1,1,4,1,1,14]"."""
        return f"[{self.a0}; {','.join(str(a) for a in self.period)}]"


@dataclass(frozen=True)
class ConvergentPair:
    """Numerator and denominator of the i'th convergent A_i / B_i."""
    index: int
    A: int
    B: int


@dataclass(frozen=True)
class PellSolution:
    """A positive solution of X^2 - f*Y^2 = sign.

    Attributes:
        f: Non-square radicand
        X: Positive integer
        Y: Positive integer
        sign: +1 or -1
        rank: 1 for the fundamental solution of that sign, k for its k'th power
    """
    f: int
    X: int
    Y: int
    sign: int = 1
    rank: int = 1

    @property
    def norm(self) -> int:
        return self.X * self.X - self.f * self.Y * self.Y


@dataclass(frozen=True)
class CongruenceRow:
    """One admitted (c, h) residue pattern for a residue class of f."""
    label: str
    c_modulus: int
    c_residues: FrozenSet[int]
    h_modulus: int
    h_residue: int

    def matches(self, c: int, h: int) -> bool:
        return c % self.c_modulus in self.c_residues and h % self.h_modulus == self.h_residue


@dataclass(frozen=True)
class CongruenceProfile:
    """The rows of the residue table admitted for f mod 4."""
    f_class: int
    admitted: Tuple[CongruenceRow, ...]


@dataclass(frozen=True)
class CongruenceMatch:
    """Result of classifying the fundamental (c, h) of f.

    Attributes:
        profile: Rows admitted for the residue class of f
        solution: The fundamental solution that was classified
        row: The single row matched, None when f = 0 mod 4
        outside_table: True when f = 0 mod 4 (the table has no row for it)
    """
    profile: CongruenceProfile
    solution: PellSolution
    row: Optional[CongruenceRow]
    outside_table: bool = False


@dataclass(frozen=True)
class LemmaCheck:
    """A single identity evaluated on concrete convergents."""
    name: str
    statement: str
    passed: bool
    detail: str = ""


@dataclass(frozen=True)
class IdentityReport:
    """All convergent identities that apply to sqrt(f)."""
    f: int
    period_length: int
    checks: Tuple[LemmaCheck, ...]

    @property
    def passed(self) -> bool:
        return all(check.passed for check in self.checks)

    @property
    def failures(self) -> List[LemmaCheck]:
        return [check for check in self.checks if not check.passed]


class FamilyId(str, Enum):
    """The five polynomial families."""
    F1 = "F1"
    F2 = "F2"
    F3 = "F3"
    F4 = "F4"
    F5 = "F5"


@dataclass(frozen=True)
class FamilyInstance:
    """A family evaluated on a base triple (c, h, f).

    Attributes:
        family: Which family
        f: Base radicand, equal to f_poly(0)
        c: Fundamental X for f, equal to X_poly(0)
        h: Fundamental Y for f, equal to Y_poly(0)
        f_poly: f(t)
        X_poly: X(t)
        Y_poly: Y(t)
        step: Scale s of the substitution t -> s*t already applied
    """
    family: FamilyId
    f: int
    c: int
    h: int
    f_poly: IntPolynomial
    X_poly: IntPolynomial
    Y_poly: IntPolynomial
    step: int = 1

    def rescaled(self, step: int) -> FamilyInstance:
        """Substitute t -> step*t in all three polynomials."""
        if step < 1:
            raise ValueError(f"step must be positive, got {step}")
        return FamilyInstance(
            family=self.family,
            f=self.f,
            c=self.c,
            h=self.h,
            f_poly=self.f_poly.substitute_scaled(step),
            X_poly=self.X_poly.substitute_scaled(step),
            Y_poly=self.Y_poly.substitute_scaled(step),
            step=self.step * step,
        )


@dataclass(frozen=True)
class PredictedPattern:
    """Symbolic continued fraction [lead(t); periodic(t)...]."""
    lead: IntPolynomial
    periodic: Tuple[IntPolynomial, ...]

    @property
    def periodic_length(self) -> int:
        return len(self.periodic)

    def evaluate(self, t: int) -> Tuple[int, Tuple[int, ...]]:
        """Instantiate the pattern at t."""
        return self.lead(t), tuple(q(t) for q in self.periodic)

    def rescaled(self, step: int) -> PredictedPattern:
        return PredictedPattern(
            lead=self.lead.substitute_scaled(step),
            periodic=tuple(q.substitute_scaled(step) for q in self.periodic),
        )

    def render(self) -> str:
        return f"[{self.lead}; {', '.join(str(q) for q in self.periodic)}]"


@dataclass(frozen=True)
class Applicability:
    """Whether a family case predicts the expansion for a given base.

    Attributes:
        family: Which family
        f: Base radicand
        covered: True when a pattern is predicted
        case_label: The case that applies, or the precondition that failed
        doubled: True when the predicted period holds two copies of the interior
    """
    family: FamilyId
    f: int
    covered: bool
    case_label: str
    doubled: bool = False


@dataclass(frozen=True)
class VerificationReport:
    """Verdicts of one family at one t.

    Attributes:
        family: Which family
        f: Base radicand
        t: Parameter value
        value: f_poly(t)
        covered: Whether a pattern was predicted
        pattern_matches: Expansion equals the predicted pattern (None if not covered)
        fundamental_matches: (X(t), Y(t)) is the fundamental solution
        identity_holds: X(t)^2 - f(t) Y(t)^2 == 1
        expansion: The computed expansion of sqrt(f(t))
        predicted: (X(t), Y(t))
        fundamental: The independently computed fundamental solution
    """
    family: FamilyId
    f: int
    t: int
    value: int
    covered: bool
    pattern_matches: Optional[bool]
    fundamental_matches: bool
    identity_holds: bool
    expansion: SurdExpansion
    predicted: Tuple[int, int]
    fundamental: Tuple[int, int]

    @property
    def passed(self) -> bool:
        verdicts = [self.fundamental_matches, self.identity_holds]
        if self.pattern_matches is not None:
            verdicts.append(self.pattern_matches)
        return all(verdicts)


@dataclass(frozen=True)
class FundamentalUnit:
    """The fundamental unit (a + b*sqrt(D)) / denom of Q(sqrt(D)), exceeding 1."""
    D: int
    a: int
    b: int
    denom: int
    norm: int

    def render(self) -> str:
        body = f"{self.a} + {self.b}*sqrt(D)"
        if self.denom == 2:
            return f"({body})/2"
        return body


@dataclass(frozen=True)
class SquarefreeStatus:
    """Squarefreeness of n with the smallest prime p such that p^2 | n."""
    n: int
    squarefree: bool
    witness: Optional[int] = None


class TFilter(str, Enum):
    """Which t values of a range a scan examines."""
    ALL = "all"
    EVEN = "even"
    ODD = "odd"
    MOD4 = "mod4"

    def admits(self, t: int) -> bool:
        if self is TFilter.EVEN:
            return t % 2 == 0
        if self is TFilter.ODD:
            return t % 2 == 1
        if self is TFilter.MOD4:
            return t % 4 == 0
        return True


@dataclass(frozen=True)
class ScanSpec:
    """A squarefree density scan of poly(t) over t_lo <= t <= t_hi."""
    poly: IntPolynomial
    t_lo: int
    t_hi: int
    t_filter: TFilter = TFilter.ALL
    sieve_bound: int = 10_000
    seed: int = 0

    def __post_init__(self) -> None:
        if self.t_lo < 0 or self.t_hi < self.t_lo:
            raise ValueError(f"invalid range [{self.t_lo}, {self.t_hi}]")
        if not self.poly.is_integral:
            raise ValueError(f"scan polynomial must have integer coefficients: {self.poly}")
        if self.poly.degree > 4:
            raise ValueError(f"scan polynomial degree {self.poly.degree} exceeds 4")
        if self.sieve_bound < 2:
            raise ValueError(f"sieve bound must be at least 2, got {self.sieve_bound}")

    @property
    def length(self) -> int:
        return self.t_hi - self.t_lo + 1

    def with_range(self, t_lo: int, t_hi: int) -> ScanSpec:
        return ScanSpec(self.poly, t_lo, t_hi, self.t_filter, self.sieve_bound, self.seed)

    def with_sieve_bound(self, sieve_bound: int) -> ScanSpec:
        return ScanSpec(self.poly, self.t_lo, self.t_hi, self.t_filter, sieve_bound, self.seed)


@dataclass
class ScanReport:
    """Counts of a density scan.

    Attributes:
        total: Number of t examined
        squarefree_count: Number of t with poly(t) squarefree
        first_failures: Smallest (t, witness prime) pairs with poly(t) not squarefree
        largest_squarefree_t: Largest examined t with poly(t) squarefree
        sample_size: Cap on first_failures
    """
    total: int = 0
    squarefree_count: int = 0
    first_failures: List[Tuple[int, int]] = field(default_factory=list)
    largest_squarefree_t: Optional[int] = None
    sample_size: int = 10

    @property
    def density(self) -> float:
        return self.squarefree_count / self.total if self.total else 0.0

    def merge(self, other: ScanReport) -> ScanReport:
        """Combine reports of disjoint ranges; the result is order independent."""
        sample_size = max(self.sample_size, other.sample_size)
        largest = [t for t in (self.largest_squarefree_t, other.largest_squarefree_t) if t is not None]
        return ScanReport(
            total=self.total + other.total,
            squarefree_count=self.squarefree_count + other.squarefree_count,
            first_failures=sorted(self.first_failures + other.first_failures)[:sample_size],
            largest_squarefree_t=max(largest) if largest else None,
            sample_size=sample_size,
        )
