"""Main CLI entry point for pellpoly."""

from __future__ import annotations

import argparse
import io
import json
import sys
from dataclasses import dataclass
from typing import Callable, List, Optional, Sequence, Tuple

from pydantic import BaseModel
from rich.console import Console
from rich.table import Table
from rich.text import Text

from config import settings
from core.contfrac import expand_sqrt, identity_report
from core.exceptions import (
    DomainError,
    FactorizationError,
    MismatchError,
    NonIntegralError,
    PellPolyError,
    UnclassifiedError,
)
from core.family_registry import default_registry
from core.fermat_pell import (
    applicability,
    instantiate,
    pell_identity_check,
    predicted_pattern,
    resolve_family,
    verify_grid,
)
from core.payloads import (
    Envelope,
    ExpansionPayload,
    FamilyEntryPayload,
    FamilyListPayload,
    FamilyPayload,
    FamilyVerifyPayload,
    LemmaPayload,
    PellPayload,
    ScanPayload,
    SolutionPayload,
    UnitPayload,
    VerifyPointPayload,
    json_schemas,
)
from core.pell import congruence_check, fundamental_solution, negative_fundamental, nth_solution
from core.quadfield import fundamental_unit, unit_from_family
from core.scan import density_scan, endpoint_counts, spec_from_family
from core.types import ScanSpec, TFilter
from utils.logging_config import setup_logging
from utils.validators import Validators

console = Console(markup=False, highlight=False, soft_wrap=True)
error_console = Console(stderr=True, markup=False, highlight=False, soft_wrap=True)

EXIT_OK = 0
EXIT_DOMAIN = 1
EXIT_MISMATCH = 2


@dataclass(frozen=True)
class CommandOutcome:
    """What a command produced: an exit code and the text or JSON to print."""
    exit_code: int
    payload: str


class UsageError(Exception):
    """Raised instead of argparse's own exit on a usage error."""


class CliArgumentParser(argparse.ArgumentParser):
    """ArgumentParser that reports usage errors by raising."""

    def error(self, message: str) -> None:  # type: ignore[override]
        raise UsageError(f"{self.format_help().rstrip()}\n\n{self.prog}: error: {message}")


Handler = Callable[[argparse.Namespace], Tuple[int, Optional[BaseModel], str]]


def _int_arg(name: str, minimum: int = 0) -> Callable[[str], int]:
    def parse(text: str) -> int:
        try:
            return Validators.parse_int(text, name, minimum)
        except ValueError as e:
            raise argparse.ArgumentTypeError(str(e))
    return parse


def _render(renderable: object) -> str:
    """Render a rich object to plain text."""
    buffer = io.StringIO()
    Console(file=buffer, width=120, markup=False, highlight=False, color_system=None).print(renderable)
    return buffer.getvalue().rstrip("\n")


def _norm_text(sign: int) -> str:
    return "+1" if sign > 0 else "-1"


def cmd_expand(args: argparse.Namespace):
    expansion = expand_sqrt(args.f)
    return EXIT_OK, ExpansionPayload.from_expansion(expansion), expansion.render()


def cmd_pell(args: argparse.Namespace):
    expansion = expand_sqrt(args.f)
    if args.negative:
        solution = negative_fundamental(args.f)
        if solution is None:
            text = f"no solution of X^2 - {args.f}*Y^2 = -1 (period {expansion.period_length} is even)"
        else:
            text = f"X={solution.X} Y={solution.Y} norm -1"
        payload = PellPayload(
            f=args.f,
            period_length=expansion.period_length,
            solution=SolutionPayload.from_solution(solution) if solution else None,
        )
        return EXIT_OK, payload, text

    solution = nth_solution(args.f, args.rank) if args.rank > 1 else fundamental_solution(args.f)
    text = f"c={solution.X} h={solution.Y}"
    row = None
    if args.rank == 1:
        match = congruence_check(args.f)
        row = "outside table (f = 0 mod 4)" if match.outside_table else match.row.label
    if args.rank > 1:
        text += f" rank={args.rank}"
    payload = PellPayload(
        f=args.f,
        period_length=expansion.period_length,
        solution=SolutionPayload.from_solution(solution),
        congruence_row=row,
    )
    return EXIT_OK, payload, text


def cmd_family_show(args: argparse.Namespace):
    instance = instantiate(args.family, args.f, args.step)
    cover = applicability(args.family, args.f)
    pattern = predicted_pattern(args.family, args.f, args.step).render() if cover.covered else None
    holds = pell_identity_check(instance)
    payload = FamilyPayload.from_instance(instance, cover, holds, pattern)

    lines = [
        f"{instance.family.value} on f={instance.f} (c={instance.c}, h={instance.h})"
        + (f", t -> {instance.step}t" if instance.step != 1 else ""),
        f"f(t) = {instance.f_poly}",
        f"X(t) = {instance.X_poly}",
        f"Y(t) = {instance.Y_poly}",
        f"identity X^2 - f*Y^2 = 1: {'holds' if holds else 'FAILS'}",
        f"case: {cover.case_label}",
        f"pattern: {pattern if pattern else 'not covered'}",
    ]
    return (EXIT_OK if holds else EXIT_MISMATCH), payload, "\n".join(lines)


def cmd_family_verify(args: argparse.Namespace):
    family = resolve_family(args.family)
    instantiate(family.family_id, args.f)
    t_max = settings.family_t_max if args.t_max is None else args.t_max
    reports = verify_grid(family.family_id, [args.f], t_max, args.step)

    lines = []
    for report in reports:
        verdict = "PASS" if report.passed else "FAIL"
        pattern = {None: "n/a", True: "ok", False: "MISMATCH"}[report.pattern_matches]
        lines.append(
            f"{verdict} t={report.t} f(t)={report.value} {report.expansion.render()} "
            f"pattern={pattern} fundamental={'ok' if report.fundamental_matches else 'MISMATCH'} "
            f"identity={'ok' if report.identity_holds else 'MISMATCH'}"
        )
    failures = sum(1 for report in reports if not report.passed)
    payload = FamilyVerifyPayload(
        family=family.family_id.value,
        f=args.f,
        t_max=t_max,
        step=args.step,
        failures=failures,
        points=[VerifyPointPayload.from_report(report) for report in reports],
    )
    return (EXIT_MISMATCH if failures else EXIT_OK), payload, "\n".join(lines)


def cmd_family_list(args: argparse.Namespace):
    families = default_registry().get_all_families()
    table = Table(title="Families")
    table.add_column("id")
    table.add_column("aliases")
    table.add_column("f(t)")
    table.add_column("cases")
    for family in families:
        table.add_row(
            Text(family.family_id.value),
            Text(", ".join(family.aliases)),
            Text(family.summary),
            Text("\n".join(family.cases)),
        )
    payload = FamilyListPayload(families=[FamilyEntryPayload.from_family(family) for family in families])
    return EXIT_OK, payload, _render(table)


def cmd_unit(args: argparse.Namespace):
    target = args.target
    if target[0] == "from-family":
        if len(target) != 4:
            raise UsageError("usage: unit from-family FAM F T [--step S]")
        f = Validators.parse_int(target[2], "F", minimum=2)
        t = Validators.parse_int(target[3], "T", minimum=0)
        unit = unit_from_family(target[1], f, t, args.step)
        text = f"D = {unit.D}\n{unit.render()}, norm {_norm_text(unit.norm)}"
    else:
        if len(target) != 1:
            raise UsageError("usage: unit D | unit from-family FAM F T [--step S]")
        unit = fundamental_unit(Validators.parse_int(target[0], "D", minimum=2))
        text = f"{unit.render()}, norm {_norm_text(unit.norm)}"
    return EXIT_OK, UnitPayload.from_unit(unit), text


def _scan_spec(args: argparse.Namespace) -> ScanSpec:
    lo, hi = Validators.parse_range(args.range)
    t_filter = Validators.parse_t_filter(args.filter)
    sieve_bound = settings.sieve_bound if args.sieve_bound is None else args.sieve_bound
    seed = settings.factor_seed if args.seed is None else args.seed
    if args.poly is not None:
        if args.family is not None:
            raise UsageError("give either --poly or --family/--base, not both")
        return ScanSpec(Validators.parse_polynomial(args.poly), lo, hi, t_filter, sieve_bound, seed)
    if args.family is None or args.base is None:
        raise UsageError("scan needs --poly or both --family and --base")
    return spec_from_family(args.family, args.base, lo, hi, args.step, t_filter, sieve_bound, seed)


def cmd_scan(args: argparse.Namespace):
    spec = _scan_spec(args)
    csv_path = Validators.validate_file_path(args.csv) if args.csv else None
    report = density_scan(spec, csv_path=csv_path, workers=args.workers)
    counts = endpoint_counts(spec, report) if args.endpoints else None

    lines = [
        f"poly {spec.poly} on [{spec.t_lo}, {spec.t_hi}] ({spec.t_filter.value})",
        f"squarefree {report.squarefree_count} of {report.total} (density {report.density:.6f})",
    ]
    if report.first_failures:
        sample = ", ".join(f"t={t} ({p}^2)" for t, p in report.first_failures)
        lines.append(f"first failures: {sample}")
    if counts:
        lines.append(", ".join(f"{name} {value}" for name, value in counts.items()))
    return EXIT_OK, ScanPayload.from_report(spec, report, counts), "\n".join(lines)


def cmd_lemmas(args: argparse.Namespace):
    report = identity_report(args.f)
    lines = [f"sqrt({report.f}): period {report.period_length}"]
    for check in report.checks:
        lines.append(f"{'PASS' if check.passed else 'FAIL'} {check.name}: {check.statement} ({check.detail})")
    return (EXIT_OK if report.passed else EXIT_MISMATCH), LemmaPayload.from_report(report), "\n".join(lines)


def cmd_schema(args: argparse.Namespace):
    return EXIT_OK, None, json.dumps(json_schemas(), indent=2)


def build_parser() -> CliArgumentParser:
    """Build the command-line parser."""
    parser = CliArgumentParser(
        prog="pellpoly",
        description="Continued fractions, Pell equations and Fermat-Pell polynomial families",
        formatter_class=argparse.RawDescriptionHelpFormatter,
        epilog="""
Examples:
  python main.py expand 57
  python main.py pell 22
  python main.py family verify F1 22 --t-max 5
  python main.py unit 282234512826670
  python main.py scan --poly 22,788,7056 --range 0:2000
        """
    )
    parser.add_argument("--json", action="store_true", help="Emit a JSON document instead of text")
    parser.add_argument("--quiet", action="store_true", help="Only log warnings and errors")
    parser.add_argument("-v", "--verbose", action="store_true", help="Enable verbose logging")
    sub = parser.add_subparsers(dest="command", required=True)

    expand = sub.add_parser("expand", help="Continued fraction of sqrt(F)")
    expand.add_argument("f", type=_int_arg("F", 2))
    expand.set_defaults(handler=cmd_expand)

    pell = sub.add_parser("pell", help="Solutions of X^2 - F*Y^2 = +-1")
    pell.add_argument("f", type=_int_arg("F", 2))
    pell.add_argument("--rank", type=_int_arg("rank", 1), default=1, help="Power of the fundamental solution")
    pell.add_argument("--negative", action="store_true", help="Solve X^2 - F*Y^2 = -1 instead")
    pell.set_defaults(handler=cmd_pell)

    family = sub.add_parser("family", help="Fermat-Pell polynomial families")
    family_sub = family.add_subparsers(dest="family_command", required=True)

    show = family_sub.add_parser("show", help="Polynomials, case and predicted pattern")
    show.add_argument("family")
    show.add_argument("f", type=_int_arg("F", 2))
    show.add_argument("--step", type=_int_arg("step", 1), default=1, help="Substitute t -> step*t")
    show.set_defaults(handler=cmd_family_show)

    verify = family_sub.add_parser("verify", help="Check the family for 0 <= t <= t-max")
    verify.add_argument("family")
    verify.add_argument("f", type=_int_arg("F", 2))
    verify.add_argument("--t-max", type=_int_arg("t-max", 0), default=None)
    verify.add_argument("--step", type=_int_arg("step", 1), default=1)
    verify.set_defaults(handler=cmd_family_verify)

    listing = family_sub.add_parser("list", help="Registered families")
    listing.set_defaults(handler=cmd_family_list)

    unit = sub.add_parser("unit", help="Fundamental unit of Q(sqrt(D))")
    unit.add_argument("target", nargs="+", help="D, or: from-family FAM F T")
    unit.add_argument("--step", type=_int_arg("step", 1), default=1)
    unit.set_defaults(handler=cmd_unit)

    scan = sub.add_parser("scan", help="Squarefree density of polynomial values")
    scan.add_argument("--poly", help="Coefficients, constant term first: c0,c1,c2")
    scan.add_argument("--family", help="Scan f(t) of a family instead of --poly")
    scan.add_argument("--base", type=_int_arg("base", 2), help="Base radicand for --family")
    scan.add_argument("--step", type=_int_arg("step", 1), default=1)
    scan.add_argument("--range", required=True, help="Inclusive LO:HI")
    scan.add_argument("--filter", default=TFilter.ALL.value, choices=[f.value for f in TFilter])
    scan.add_argument("--csv", help="Write one row per t to this file")
    scan.add_argument("--sieve-bound", type=_int_arg("sieve-bound", 2), default=None)
    scan.add_argument("--seed", type=_int_arg("seed", 0), default=None)
    scan.add_argument("--workers", type=_int_arg("workers", 1), default=None)
    scan.add_argument("--endpoints", action="store_true", help="Also report counts with open endpoints")
    scan.set_defaults(handler=cmd_scan)

    lemmas = sub.add_parser("lemmas", help="Convergent identities for sqrt(F)")
    lemmas.add_argument("f", type=_int_arg("F", 2))
    lemmas.set_defaults(handler=cmd_lemmas)

    schema = sub.add_parser("schema", help="JSON Schema of every --json payload")
    schema.set_defaults(handler=cmd_schema)

    return parser


def _command_name(args: argparse.Namespace) -> str:
    if args.command == "family":
        return f"family {args.family_command}"
    return args.command


def _outcome(args: Optional[argparse.Namespace], exit_code: int, payload: Optional[BaseModel], text: str) -> CommandOutcome:
    if args is None or not args.json or args.command == "schema":
        return CommandOutcome(exit_code, text)
    envelope = Envelope(
        command=_command_name(args),
        exit_code=exit_code,
        data=payload.model_dump(mode="json") if payload is not None else None,
        error=None if exit_code == EXIT_OK or payload is not None else text,
    )
    return CommandOutcome(exit_code, envelope.model_dump_json(indent=2))


def _configure_logging(args: argparse.Namespace) -> None:
    level = settings.log_level
    if args.verbose:
        level = "DEBUG"
    elif args.quiet:
        level = "WARNING"
    setup_logging(
        level=level,
        use_rich_console=settings.log_use_rich_console,
        enable_rotation=settings.log_rotation_enabled,
        max_bytes=settings.log_max_bytes,
        backup_count=settings.log_backup_count
    )


def run(argv: Optional[Sequence[str]] = None, configure_logging: bool = False) -> CommandOutcome:
    """Parse argv, run one command and return its outcome without printing.

    Exit codes: 0 success, 1 invalid input or usage, 2 a verification failed.
    """
    parser = build_parser()
    try:
        args = parser.parse_args(list(argv) if argv is not None else None)
    except UsageError as e:
        return CommandOutcome(EXIT_DOMAIN, str(e))
    except SystemExit as e:
        # --help prints and exits through argparse
        return CommandOutcome(int(e.code or 0), "")

    if configure_logging:
        _configure_logging(args)

    handler: Handler = args.handler
    try:
        exit_code, payload, text = handler(args)
    except UsageError as e:
        return _outcome(args, EXIT_DOMAIN, None, f"error: {e}")
    except (MismatchError, UnclassifiedError) as e:
        return _outcome(args, EXIT_MISMATCH, None, f"error: {e}")
    except (DomainError, NonIntegralError, FactorizationError, ValueError) as e:
        return _outcome(args, EXIT_DOMAIN, None, f"error: {e}")
    except PellPolyError as e:
        return _outcome(args, EXIT_DOMAIN, None, f"error: {e}")
    return _outcome(args, exit_code, payload, text)


def main(argv: Optional[List[str]] = None) -> int:
    """Entry point: run a command, print its payload and return the exit code."""
    outcome = run(argv, configure_logging=True)
    if outcome.payload:
        target = error_console if outcome.payload.startswith(("error:", "usage:")) else console
        target.print(outcome.payload)
    return outcome.exit_code


if __name__ == "__main__":
    try:
        sys.exit(main())
    except KeyboardInterrupt:
        error_console.print("\nInterrupted")
        sys.exit(130)
