"""Squarefree density scans of polynomial values over ranges of t."""

from __future__ import annotations

from concurrent.futures import ProcessPoolExecutor
from typing import Dict, List, Optional, Sequence, Set, Tuple, Union

import numpy as np

from config import settings
from core.exceptions import DomainError
from core.fermat_pell import instantiate
from core.polynomial import IntPolynomial
from core.quadfield import is_squarefree
from core.types import FamilyId, ScanReport, ScanSpec, TFilter
from tools.file_operations import SCAN_CSV_HEADER, FileOperations
from utils.logging_config import get_logger
from utils.modular import roots_mod_prime, roots_mod_prime_square, two_adic_roots
from utils.primes import is_prime, small_primes

logger = get_logger(__name__)

CsvRow = Tuple[int, int, int, str]


def quadratic_congruence_roots(poly: IntPolynomial, p: int, e: int) -> Set[int]:
    """All t mod p^e with p^e | poly(t), for an odd prime p and e in {1, 2}.

    Raises:
        DomainError: For p = 2 (see two_adic_congruence_roots), a non-prime p or another exponent
    """
    if p == 2:
        raise DomainError("p = 2 is handled by two_adic_congruence_roots")
    if not is_prime(p):
        raise DomainError(f"{p} is not an odd prime")
    if e not in (1, 2):
        raise DomainError(f"exponent must be 1 or 2, got {e}")
    coefficients = poly.integer_coefficients()
    if e == 1:
        return set(roots_mod_prime(coefficients, p))
    return set(roots_mod_prime_square(coefficients, p))


def two_adic_congruence_roots(poly: IntPolynomial, modulus: int = 4) -> Set[int]:
    """All t mod 2^k with poly(t) = 0 (mod 2^k), by enumeration."""
    return set(two_adic_roots(poly.integer_coefficients(), modulus))


def sieve_squarefree_range(spec: ScanSpec) -> np.ndarray:
    """Mark each t in [t_lo, t_hi] whose value has p^2 | poly(t) for some prime p <= sieve_bound.

    Returns:
        Boolean array, index i standing for t = t_lo + i
    """
    coefficients = spec.poly.integer_coefficients()
    marks = np.zeros(spec.length, dtype=bool)
    residues = 0
    for p in small_primes(spec.sieve_bound):
        p2 = p * p
        for root in roots_mod_prime_square(coefficients, p):
            residues += 1
            marks[(root - spec.t_lo) % p2::p2] = True
    logger.debug(
        f"sieve [{spec.t_lo}, {spec.t_hi}] to {spec.sieve_bound}: "
        f"{residues} residue classes, {int(marks.sum())} marked"
    )
    return marks


def _square_witness(value: int, primes: Sequence[int]) -> int:
    for p in primes:
        if value % (p * p) == 0:
            return p
    raise AssertionError(f"sieve marked {value} but no p^2 below the bound divides it")


def _scan_chunk(spec: ScanSpec, sample_size: int, keep_rows: bool) -> Tuple[ScanReport, List[CsvRow]]:
    marks = sieve_squarefree_range(spec)
    primes = small_primes(spec.sieve_bound)
    report = ScanReport(sample_size=sample_size)
    rows: List[CsvRow] = []

    for i, t in enumerate(range(spec.t_lo, spec.t_hi + 1)):
        if not spec.t_filter.admits(t):
            continue
        report.total += 1
        value = spec.poly(t)
        if value <= 0:
            raise DomainError(f"{spec.poly} is not positive at t={t}")
        if marks[i]:
            squarefree = False
            needs_witness = keep_rows or len(report.first_failures) < sample_size
            witness = _square_witness(value, primes) if needs_witness else None
        else:
            status = is_squarefree(value, spec.seed)
            squarefree, witness = status.squarefree, status.witness

        if squarefree:
            report.squarefree_count += 1
            report.largest_squarefree_t = t
        elif witness is not None and len(report.first_failures) < sample_size:
            report.first_failures.append((t, witness))
        if keep_rows:
            rows.append((t, value, int(squarefree), "" if witness is None else str(witness)))

    return report, rows


def chunk_specs(spec: ScanSpec, chunk_size: int) -> List[ScanSpec]:
    """Split a spec into consecutive sub-ranges of at most chunk_size values."""
    if chunk_size < 1:
        raise DomainError(f"chunk size must be positive, got {chunk_size}")
    return [
        spec.with_range(lo, min(lo + chunk_size - 1, spec.t_hi))
        for lo in range(spec.t_lo, spec.t_hi + 1, chunk_size)
    ]


def density_scan(
    spec: ScanSpec,
    csv_path: Optional[str] = None,
    workers: Optional[int] = None,
    chunk_size: Optional[int] = None
) -> ScanReport:
    """Count the t in range with poly(t) squarefree.

    Values are sieved by p^2 for p <= sieve_bound; every survivor is then
    factored completely, so the count does not depend on the bound.

    Args:
        spec: What to scan
        csv_path: Write one row per examined t when given
        workers: Worker processes (defaults to settings.parallel_workers())
        chunk_size: Values per work unit (defaults to settings.scan_chunk_size)

    Returns:
        Merged report over all chunks
    """
    workers = settings.parallel_workers() if workers is None else workers
    chunks = chunk_specs(spec, chunk_size or settings.scan_chunk_size)
    sample_size = settings.scan_failure_sample
    keep_rows = csv_path is not None

    if workers > 1 and len(chunks) > 1:
        with ProcessPoolExecutor(max_workers=workers) as pool:
            results = list(pool.map(_scan_chunk, chunks, [sample_size] * len(chunks), [keep_rows] * len(chunks)))
    else:
        results = []
        for index, chunk in enumerate(chunks, start=1):
            results.append(_scan_chunk(chunk, sample_size, keep_rows))
            logger.info(f"scan chunk {index}/{len(chunks)} [{chunk.t_lo}, {chunk.t_hi}] done")

    report = ScanReport(sample_size=sample_size)
    for chunk_report, _ in results:
        report = report.merge(chunk_report)

    if csv_path is not None:
        FileOperations().write_csv(csv_path, SCAN_CSV_HEADER, (row for _, rows in results for row in rows))

    logger.info(
        f"{spec.poly} on [{spec.t_lo}, {spec.t_hi}] ({spec.t_filter.value}): "
        f"{report.squarefree_count}/{report.total} squarefree"
    )
    return report


def naive_density(spec: ScanSpec) -> ScanReport:
    """The same count by factoring every value, with no sieve."""
    report = ScanReport(sample_size=settings.scan_failure_sample)
    for t in range(spec.t_lo, spec.t_hi + 1):
        if not spec.t_filter.admits(t):
            continue
        report.total += 1
        status = is_squarefree(spec.poly(t), spec.seed)
        if status.squarefree:
            report.squarefree_count += 1
            report.largest_squarefree_t = t
        elif len(report.first_failures) < report.sample_size:
            report.first_failures.append((t, status.witness))
    return report


def endpoint_counts(spec: ScanSpec, report: Optional[ScanReport] = None) -> Dict[str, int]:
    """Squarefree counts for [lo, hi], (lo, hi] and [lo, hi).

    Args:
        spec: Inclusive range to count over
        report: An existing density_scan report for spec, to avoid rescanning
    """
    report = report or density_scan(spec)

    def contributes(t: int) -> int:
        if not spec.t_filter.admits(t):
            return 0
        return int(is_squarefree(spec.poly(t), spec.seed).squarefree)

    return {
        "inclusive": report.squarefree_count,
        "left_open": report.squarefree_count - contributes(spec.t_lo),
        "right_open": report.squarefree_count - contributes(spec.t_hi),
    }


def spec_from_family(
    family: Union[FamilyId, str],
    f: int,
    t_lo: int,
    t_hi: int,
    step: int = 1,
    t_filter: TFilter = TFilter.ALL,
    sieve_bound: Optional[int] = None,
    seed: Optional[int] = None
) -> ScanSpec:
    """Scan spec over the values of a family's f(step*t)."""
    instance = instantiate(family, f, step)
    return ScanSpec(
        poly=instance.f_poly,
        t_lo=t_lo,
        t_hi=t_hi,
        t_filter=t_filter,
        sieve_bound=settings.sieve_bound if sieve_bound is None else sieve_bound,
        seed=settings.factor_seed if seed is None else seed,
    )
