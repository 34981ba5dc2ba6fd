"""Pydantic models for --json output.

Integers are written as decimal strings because they routinely exceed
2^53; they validate back from those strings.
"""

from __future__ import annotations

from typing import Annotated, Any, Dict, List, Optional, Type

from pydantic import BaseModel, PlainSerializer

from core.types import (
    Applicability,
    FamilyInstance,
    FundamentalUnit,
    IdentityReport,
    PellSolution,
    ScanReport,
    ScanSpec,
    SurdExpansion,
    VerificationReport,
)
from families.base_family import BaseFamily

BigInt = Annotated[int, PlainSerializer(str, return_type=str, when_used="json")]


class ExpansionPayload(BaseModel):
    f: BigInt
    a0: BigInt
    period: List[BigInt]
    period_length: int
    text: str

    @classmethod
    def from_expansion(cls, expansion: SurdExpansion) -> ExpansionPayload:
        return cls(
            f=expansion.f,
            a0=expansion.a0,
            period=list(expansion.period),
            period_length=expansion.period_length,
            text=expansion.render(),
        )


class SolutionPayload(BaseModel):
    X: BigInt
    Y: BigInt
    sign: int
    rank: int

    @classmethod
    def from_solution(cls, solution: PellSolution) -> SolutionPayload:
        return cls(X=solution.X, Y=solution.Y, sign=solution.sign, rank=solution.rank)


class PellPayload(BaseModel):
    """Result of `pell`; solution is null when --negative finds none."""
    f: BigInt
    period_length: int
    solution: Optional[SolutionPayload]
    congruence_row: Optional[str] = None


class FamilyPayload(BaseModel):
    family: str
    f: BigInt
    c: BigInt
    h: BigInt
    step: int
    f_poly: str
    X_poly: str
    Y_poly: str
    f_coefficients: List[BigInt]
    identity_holds: bool
    covered: bool
    case_label: str
    pattern: Optional[str]

    @classmethod
    def from_instance(
        cls,
        instance: FamilyInstance,
        applicability: Applicability,
        identity_holds: bool,
        pattern: Optional[str]
    ) -> FamilyPayload:
        return cls(
            family=instance.family.value,
            f=instance.f,
            c=instance.c,
            h=instance.h,
            step=instance.step,
            f_poly=str(instance.f_poly),
            X_poly=str(instance.X_poly),
            Y_poly=str(instance.Y_poly),
            f_coefficients=list(instance.f_poly.integer_coefficients()),
            identity_holds=identity_holds,
            covered=applicability.covered,
            case_label=applicability.case_label,
            pattern=pattern,
        )


class VerifyPointPayload(BaseModel):
    t: BigInt
    value: BigInt
    covered: bool
    pattern_matches: Optional[bool]
    fundamental_matches: bool
    identity_holds: bool
    passed: bool
    expansion: str

    @classmethod
    def from_report(cls, report: VerificationReport) -> VerifyPointPayload:
        return cls(
            t=report.t,
            value=report.value,
            covered=report.covered,
            pattern_matches=report.pattern_matches,
            fundamental_matches=report.fundamental_matches,
            identity_holds=report.identity_holds,
            passed=report.passed,
            expansion=report.expansion.render(),
        )


class FamilyVerifyPayload(BaseModel):
    family: str
    f: BigInt
    t_max: int
    step: int
    failures: int
    points: List[VerifyPointPayload]


class FamilyEntryPayload(BaseModel):
    id: str
    name: str
    aliases: List[str]
    summary: str
    cases: List[str]

    @classmethod
    def from_family(cls, family: BaseFamily) -> FamilyEntryPayload:
        return cls(
            id=family.family_id.value,
            name=family.name,
            aliases=list(family.aliases),
            summary=family.summary,
            cases=list(family.cases),
        )


class FamilyListPayload(BaseModel):
    families: List[FamilyEntryPayload]


class UnitPayload(BaseModel):
    D: BigInt
    a: BigInt
    b: BigInt
    denom: int
    norm: int
    text: str

    @classmethod
    def from_unit(cls, unit: FundamentalUnit) -> UnitPayload:
        return cls(D=unit.D, a=unit.a, b=unit.b, denom=unit.denom, norm=unit.norm, text=unit.render())


class FailurePayload(BaseModel):
    t: BigInt
    witness: BigInt


class ScanPayload(BaseModel):
    poly: str
    t_lo: BigInt
    t_hi: BigInt
    filter: str
    sieve_bound: int
    total: int
    squarefree_count: int
    density: float
    first_failures: List[FailurePayload]
    largest_squarefree_t: Optional[BigInt]
    endpoint_counts: Optional[Dict[str, int]] = None

    @classmethod
    def from_report(
        cls,
        spec: ScanSpec,
        report: ScanReport,
        endpoint_counts: Optional[Dict[str, int]] = None
    ) -> ScanPayload:
        return cls(
            poly=str(spec.poly),
            t_lo=spec.t_lo,
            t_hi=spec.t_hi,
            filter=spec.t_filter.value,
            sieve_bound=spec.sieve_bound,
            total=report.total,
            squarefree_count=report.squarefree_count,
            density=report.density,
            first_failures=[FailurePayload(t=t, witness=w) for t, w in report.first_failures],
            largest_squarefree_t=report.largest_squarefree_t,
            endpoint_counts=endpoint_counts,
        )


class LemmaCheckPayload(BaseModel):
    name: str
    statement: str
    passed: bool
    detail: str


class LemmaPayload(BaseModel):
    f: BigInt
    period_length: int
    passed: bool
    checks: List[LemmaCheckPayload]

    @classmethod
    def from_report(cls, report: IdentityReport) -> LemmaPayload:
        return cls(
            f=report.f,
            period_length=report.period_length,
            passed=report.passed,
            checks=[
                LemmaCheckPayload(name=c.name, statement=c.statement, passed=c.passed, detail=c.detail)
                for c in report.checks
            ],
        )


class Envelope(BaseModel):
    """Top-level JSON document of every command."""
    command: str
    exit_code: int
    data: Optional[Dict[str, Any]] = None
    error: Optional[str] = None


PAYLOAD_MODELS: Dict[str, Type[BaseModel]] = {
    "envelope": Envelope,
    "expand": ExpansionPayload,
    "pell": PellPayload,
    "family show": FamilyPayload,
    "family verify": FamilyVerifyPayload,
    "family list": FamilyListPayload,
    "unit": UnitPayload,
    "scan": ScanPayload,
    "lemmas": LemmaPayload,
}


def json_schemas() -> Dict[str, Dict[str, Any]]:
    """JSON Schema of each payload, keyed by command."""
    return {name: model.model_json_schema(mode="serialization") for name, model in PAYLOAD_MODELS.items()}
