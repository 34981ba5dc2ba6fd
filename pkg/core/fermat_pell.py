"""Operations on the Fermat-Pell polynomial families F1 ... F5."""

from __future__ import annotations

from concurrent.futures import ProcessPoolExecutor
from typing import Iterable, List, Optional, Sequence, Union

from config import settings
from core.contfrac import expand_sqrt
from core.exceptions import DomainError, NonIntegralError, PerfectSquareError
from core.family_registry import default_registry
from core.pell import fundamental_from_expansion
from core.types import Applicability, FamilyId, FamilyInstance, PredictedPattern, VerificationReport
from families.base_family import BaseFamily
from families.quartic import quartic_radicand
from utils.logging_config import get_logger

logger = get_logger(__name__)

FamilyRef = Union[FamilyId, str]


def resolve_family(family: FamilyRef) -> BaseFamily:
    """Look a family up by id or alias.

    Raises:
        DomainError: For an unknown name
    """
    try:
        return default_registry().require(family)
    except KeyError as e:
        raise DomainError(str(e.args[0])) from e


def instantiate(family: FamilyRef, f: int, step: int = 1) -> FamilyInstance:
    """Build the family's polynomials on base f, optionally with t -> step*t.

    Raises:
        PerfectSquareError: If f is a perfect square
        NonIntegralError: If the family is not integral on this base
    """
    instance = resolve_family(family).instantiate(f)
    return instance if step == 1 else instance.rescaled(step)


def pell_identity_check(instance: FamilyInstance) -> bool:
    """True iff X(t)^2 - f(t) Y(t)^2 is the constant polynomial 1."""
    residual = instance.X_poly ** 2 - instance.f_poly * instance.Y_poly ** 2
    return residual.coefficients == (1,)


def applicability(family: FamilyRef, f: int) -> Applicability:
    return resolve_family(family).applicability(f)


def predicted_pattern(family: FamilyRef, f: int, step: int = 1) -> PredictedPattern:
    """Symbolic continued fraction of sqrt(f(t)).

    Raises:
        NotCoveredError: If no case of the family applies to f
    """
    pattern = resolve_family(family).predicted_pattern(f)
    return pattern if step == 1 else pattern.rescaled(step)


def pattern_agrees(expected: Sequence[int], period: Sequence[int]) -> bool:
    """True when `expected` is one or more whole copies of `period`."""
    if not period or len(expected) % len(period):
        return False
    return tuple(expected) == tuple(period) * (len(expected) // len(period))


def verify_at(family: FamilyRef, f: int, t: int, step: int = 1) -> VerificationReport:
    """Check a family at one parameter value against direct computation.

    Args:
        family: Family id or alias
        f: Base radicand
        t: Parameter value, t >= 0
        step: Evaluate the rescaled family f(step*t)

    Returns:
        Report with the pattern, fundamentality and identity verdicts

    Raises:
        DomainError: If t < 0
    """
    if t < 0:
        raise DomainError(f"t must be non-negative, got {t}")
    impl = resolve_family(family)
    instance = instantiate(impl.family_id, f, step)
    value = instance.f_poly(t)
    predicted = (instance.X_poly(t), instance.Y_poly(t))

    try:
        expansion = expand_sqrt(value)
    except PerfectSquareError:
        raise AssertionError(f"{impl.family_id.value}({f}) took the square value {value} at t={t}")
    fundamental = fundamental_from_expansion(expansion)
    identity_holds = predicted[0] ** 2 - value * predicted[1] ** 2 == 1

    cover = impl.applicability(f)
    pattern_matches: Optional[bool] = None
    if cover.covered:
        lead, periodic = predicted_pattern(impl.family_id, f, step).evaluate(t)
        pattern_matches = lead == expansion.a0 and pattern_agrees(periodic, expansion.period)

    report = VerificationReport(
        family=impl.family_id,
        f=f,
        t=t,
        value=value,
        covered=cover.covered,
        pattern_matches=pattern_matches,
        fundamental_matches=predicted == fundamental,
        identity_holds=identity_holds,
        expansion=expansion,
        predicted=predicted,
        fundamental=fundamental,
    )
    if not report.fundamental_matches:
        level = "covered" if cover.covered else "uncovered"
        logger.warning(
            f"{impl.family_id.value}({f}) at t={t} ({level}): predicted {predicted}, fundamental {fundamental}"
        )
    return report


def _verify_base(family_id: FamilyId, f: int, t_max: int, step: int) -> List[VerificationReport]:
    try:
        instantiate(family_id, f)
    except PerfectSquareError:
        return []
    except NonIntegralError as e:
        logger.debug(f"skipping f={f}: {e}")
        return []
    return [verify_at(family_id, f, t, step) for t in range(t_max + 1)]


def verify_grid(
    family: FamilyRef,
    f_values: Iterable[int],
    t_max: Optional[int] = None,
    step: int = 1,
    workers: Optional[int] = None
) -> List[VerificationReport]:
    """verify_at over every non-square base in f_values and every 0 <= t <= t_max.

    Bases on which the family is not integral are skipped.
    """
    family_id = resolve_family(family).family_id
    t_max = settings.family_t_max if t_max is None else t_max
    workers = settings.parallel_workers() if workers is None else workers
    bases = [f for f in f_values if f >= 2]

    if workers > 1 and len(bases) > 1:
        with ProcessPoolExecutor(max_workers=workers) as pool:
            chunks = pool.map(_verify_base, [family_id] * len(bases), bases, [t_max] * len(bases), [step] * len(bases))
            reports = [report for chunk in chunks for report in chunk]
    else:
        reports = [report for f in bases for report in _verify_base(family_id, f, t_max, step)]

    failed = sum(1 for report in reports if not report.passed)
    logger.info(f"{family_id.value}: verified {len(reports)} points over {len(bases)} bases, {failed} failed")
    return reports


def residue_profile(family: FamilyRef, f: int, modulus: int, t_max: int, step: int = 1) -> List[int]:
    """The t in [0, t_max] with f(step*t) = f (mod modulus)."""
    if modulus < 1:
        raise DomainError(f"modulus must be positive, got {modulus}")
    instance = instantiate(family, f, step)
    return [t for t in range(t_max + 1) if (instance.f_poly(t) - f) % modulus == 0]


def printed_quartic_instance(f: int) -> FamilyInstance:
    """The quartic family with leading coefficient (c-1)^2 h^7 in place of (c-1)^2 h^6.

    Its X(t), Y(t) are those of F5; the Pell identity fails whenever h >= 2.
    """
    instance = instantiate(FamilyId.F5, f)
    return FamilyInstance(
        family=FamilyId.F5,
        f=f,
        c=instance.c,
        h=instance.h,
        f_poly=quartic_radicand(f, instance.c, instance.h, leading_h_power=7),
        X_poly=instance.X_poly,
        Y_poly=instance.Y_poly,
    )
