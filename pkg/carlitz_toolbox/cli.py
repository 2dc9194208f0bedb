from __future__ import annotations

import json
import logging
import sys
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Callable, Literal, NamedTuple, Optional

from jsonargparse import ActionConfigFile, ArgumentParser, Namespace

from . import analysis, series_oracle
from .carlitz_seq import CarlitzSequence, entry_to_dict, render_entry
from .errors import CarlitzError, DomainError
from .triangles import (
    TRIANGLES,
    connection_series,
    g_rec,
    get_triangle,
    verify_a_recurrence,
    verify_eq5,
    verify_eq6,
    verify_eq7,
    verify_eq8,
    verify_g_formulas,
    verify_h_diagonal,
    verify_numerators,
)


logger = logging.getLogger(__name__)

COMMANDS = ("sequence", "table", "verify", "oracle", "asym")
SUITES = ("identities", "formulas", "oracle", "integrality", "all")

EXIT_OK, EXIT_CHECK_FAILED, EXIT_USAGE = 0, 1, 2

Format = Literal["text", "csv", "json"]
Variable = Literal["lambda", "zeta"]
Suite = Literal["identities", "formulas", "oracle", "integrality", "all"]
LogLevel = Literal["DEBUG", "INFO", "WARNING", "ERROR"]
TriangleName = Literal[tuple(TRIANGLES)]


@dataclass
class CommandConfig:
    command: str
    parameters: dict = field(default_factory=dict)
    format: str = "text"

    @staticmethod
    def from_namespace(cfg: Namespace) -> CommandConfig:
        params = cfg[cfg.command].as_dict()
        fmt = params.pop("format", "text")
        return CommandConfig(cfg.command, params, fmt)


def build_parser() -> ArgumentParser:
    """Root parser with repeatable --config files. A config file holds one mapping per subcommand, e.g.

    sequence:
      m_min: -5
      m_max: 6
    """
    parser = ArgumentParser(prog="carlitz", description="Exact generating functions of the tree function")
    parser.add_argument("--config", action=ActionConfigFile, help="YAML config, may be repeated, later files win")
    parser.add_argument("--log-level", dest="log_level", type=LogLevel, default="WARNING")

    sequence = ArgumentParser(description="G_m or H_m in closed form")
    sequence.add_argument("--var", type=Variable, default="lambda")
    sequence.add_argument("--m-min", dest="m_min", type=int, default=-5)
    sequence.add_argument("--m-max", dest="m_max", type=int, default=6)
    sequence.add_argument("--format", type=Format, default="text")
    sequence.add_argument("--bound", type=int, default=64)

    table = ArgumentParser(description="one coefficient triangle")
    table.add_argument("--triangle", type=TriangleName, default="g")
    table.add_argument("--max-m", dest="max_m", type=int, default=6)
    table.add_argument("--format", type=Format, default="text")

    verify = ArgumentParser(description="run a verification suite")
    verify.add_argument("--suite", type=Suite, default="all")
    verify.add_argument("--depth", type=int, default=12)
    # unset falls back to the CARLITZ_ENUM_BUDGET environment variable
    verify.add_argument("--budget", type=Optional[int], default=None)

    oracle = ArgumentParser(description="compare closed forms with the defining series")
    oracle.add_argument("--m-min", dest="m_min", type=int, default=-8)
    oracle.add_argument("--m-max", dest="m_max", type=int, default=12)
    oracle.add_argument("--order", type=int, default=12)

    asym = ArgumentParser(description="polynomial asymptote of (k-1)! h(m,k)")
    asym.add_argument("--k", type=int, default=2)
    asym.add_argument("--m-max", dest="m_max", type=int, default=40)
    asym.add_argument("--format", type=Format, default="text")
    asym.add_argument(
        "--tolerance", type=str, default=str(analysis.DEFAULT_TOLERANCE), help="exact fraction, e.g. 1/1000000"
    )
    asym.add_argument("--shift", type=int, default=analysis.DEFAULT_SHIFT)
    asym.add_argument("--window", type=int, default=analysis.DEFAULT_WINDOW)

    subcommands = parser.add_subcommands(required=True, dest="command")
    for name, sub in zip(COMMANDS, (sequence, table, verify, oracle, asym)):
        subcommands.add_subcommand(name, sub, help=sub.description)
    return parser


def cmd_sequence(args: Namespace) -> int:
    if args.m_min > args.m_max:
        raise DomainError(f"--m-min {args.m_min} is larger than --m-max {args.m_max}")
    entries = CarlitzSequence(args.bound).entries(args.m_min, args.m_max)

    if args.format == "text":
        out = "".join(render_entry(e, args.var) + "\n" for e in reversed(entries))
    elif args.format == "csv":
        lines = ["m,variable,power,k,coefficient"]
        for e in entries:
            form = e.form(args.var)
            lines.extend(f"{e.m},{args.var},{form.power},{k},{c}" for k, c in enumerate(form.numerator.coeffs))
        out = "\n".join(lines) + "\n"
    else:
        out = "".join(json.dumps(entry_to_dict(e, args.var)) + "\n" for e in entries)
    sys.stdout.write(out)
    return EXIT_OK


def cmd_table(args: Namespace) -> int:
    if args.max_m < 1:
        raise DomainError(f"--max-m must be >= 1, got {args.max_m}")
    triangle = get_triangle(args.triangle)
    if args.format == "text":
        out = triangle.to_text(args.max_m)
    elif args.format == "csv":
        out = triangle.to_csv(args.max_m)
    else:
        out = triangle.to_json(args.max_m) + "\n"
    sys.stdout.write(out)
    return EXIT_OK


class Check(NamedTuple):
    suite: str
    name: str
    fn: Callable[..., bool]
    cases: list[tuple]


class CheckResult(NamedTuple):
    check: Check
    passed: int
    first_failure: tuple | None


def _describe_case(case: tuple) -> str:
    return "(" + ", ".join(str(x) for x in case) + ")"


def build_checks(suite: str, depth: int, budget: int | None = None) -> list[Check]:
    d = depth
    ms = [(m,) for m in range(1, d + 1)]
    suites: dict[str, list[Check]] = {}

    suites["identities"] = [
        Check("identities", "eq5", verify_eq5, ms),
        Check("identities", "eq6", verify_eq6, [(n, q) for n in range(1, d + 1) for q in range(1, d + 1)]),
        Check("identities", "eq7", verify_eq7, [(n, q) for n in range(1, d + 1) for q in range(0, d + 1)]),
        Check("identities", "eq8", verify_eq8, ms),
    ]
    suites["formulas"] = [
        Check("formulas", "g_formulas", verify_g_formulas, ms),
        Check("formulas", "numerators", verify_numerators, ms),
        Check("formulas", "connection", lambda k: connection_series(k, 8), [(k,) for k in range(1, min(d, 6) + 1)]),
        Check("formulas", "a_recurrence", verify_a_recurrence, ms),
        Check("formulas", "h_diagonal", verify_h_diagonal, [(m,) for m in range(2, d + 1)]),
    ]
    suites["oracle"] = [
        Check(
            "oracle",
            "closed_form",
            lambda m: series_oracle.verify_closed_form(m, d),
            [(m,) for m in range(-min(d, 8), d + 1)],
        ),
        Check("oracle", "lambda_zeta", series_oracle.verify_lambda_zeta_relation, [(d,)]),
        Check(
            "oracle",
            "probability",
            lambda m, k: series_oracle.g_probability_bruteforce(m, k, budget) == g_rec(m, k),
            series_oracle.in_budget_cells(d, budget),
        ),
    ]
    suites["integrality"] = [
        Check("integrality", "scalings", analysis.integrality_check, ms),
        Check("integrality", "alternating_sum", lambda m: analysis.alternating_sum_h(m).ok, ms),
        Check("integrality", "eulerian2_rowsum", analysis.eulerian2_rowsum_check, ms),
        Check("integrality", "diagonal_trend", lambda M: analysis.diag_limit_trend(M).decreasing, [(max(d, 2),)]),
    ]

    if suite == "all":
        return [c for name in SUITES[:-1] for c in suites[name]]
    return suites[suite]


def run_check(check: Check) -> CheckResult:
    passed, first = 0, None
    for case in check.cases:
        if check.fn(*case):
            passed += 1
        elif first is None:
            first = case
    logger.info("%s/%s: %d/%d", check.suite, check.name, passed, len(check.cases))
    return CheckResult(check, passed, first)


def cmd_verify(args: Namespace) -> int:
    if args.depth < 1:
        raise DomainError(f"--depth must be >= 1, got {args.depth}")
    results = [run_check(c) for c in build_checks(args.suite, args.depth, args.budget)]

    lines = []
    for r in results:
        total = len(r.check.cases)
        status = "ok" if r.first_failure is None else f"FAIL at {_describe_case(r.first_failure)}"
        lines.append(f"{r.check.suite:<12} {r.check.name:<18} {r.passed:>5}/{total:<5} {status}")

    failed = [r for r in results if r.first_failure is not None]
    if failed:
        first = failed[0]
        lines.append(
            f"FAILED: {first.check.suite}/{first.check.name} first counterexample {_describe_case(first.first_failure)}"
        )
    else:
        lines.append(f"PASSED: {len(results)} checks at depth {args.depth}")
    sys.stdout.write("\n".join(lines) + "\n")
    return EXIT_CHECK_FAILED if failed else EXIT_OK


def cmd_oracle(args: Namespace) -> int:
    if args.m_min > args.m_max:
        raise DomainError(f"--m-min {args.m_min} is larger than --m-max {args.m_max}")
    if args.order < 1:
        raise DomainError(f"--order must be >= 1, got {args.order}")

    lines, first = [], None
    for m in range(args.m_min, args.m_max + 1):
        ok = series_oracle.verify_closed_form(m, args.order)
        lines.append(f"m={m:<4} order={args.order} {'ok' if ok else 'FAIL'}")
        if not ok and first is None:
            first = f"m={m}"
    ok = series_oracle.verify_lambda_zeta_relation(args.order)
    lines.append(f"lambda/(1-lambda) = zeta order={args.order} {'ok' if ok else 'FAIL'}")
    if not ok and first is None:
        first = "lambda/zeta relation"

    lines.append(f"FAILED: first counterexample {first}" if first else "PASSED")
    sys.stdout.write("\n".join(lines) + "\n")
    return EXIT_CHECK_FAILED if first else EXIT_OK


def _parse_fraction(text: str) -> Fraction:
    try:
        return Fraction(str(text))
    except (ValueError, ZeroDivisionError):
        raise DomainError(f"--tolerance expects an exact fraction such as 1/1000000, got {text!r}") from None


def cmd_asym(args: Namespace) -> int:
    tolerance = _parse_fraction(args.tolerance)
    report = analysis.asym_fit(args.k, args.m_max, tolerance, args.shift, args.window)
    if args.format == "text":
        out = report.to_text()
    elif args.format == "json":
        out = report.to_json()
    else:
        lines = ["row,m,value"]
        lo = report.m_range[0]
        for j, row in enumerate(report.difference_table):
            lines.extend(f"{j},{lo + i},{v}" for i, v in enumerate(row))
        out = "\n".join(lines) + "\n"
    sys.stdout.write(out)
    return EXIT_OK


_HANDLERS = dict(sequence=cmd_sequence, table=cmd_table, verify=cmd_verify, oracle=cmd_oracle, asym=cmd_asym)


def main(argv: list[str] | None = None) -> int:
    argv = sys.argv[1:] if argv is None else list(argv)
    parser = build_parser()

    try:
        cfg = parser.parse_args(argv)
    except SystemExit as e:
        return e.code if isinstance(e.code, int) else EXIT_USAGE
    except Exception as e:
        # anything raised while reading flags or config files is a usage error
        print(f"error: invalid arguments or config: {e}", file=sys.stderr)
        return EXIT_USAGE

    logging.basicConfig(level=cfg.log_level, stream=sys.stderr, format="%(levelname)s %(name)s: %(message)s")
    logger.debug("running %s", CommandConfig.from_namespace(cfg))

    try:
        return _HANDLERS[cfg.command](cfg[cfg.command])
    except DomainError as e:
        print(f"error: {e}", file=sys.stderr)
        return EXIT_USAGE
    except CarlitzError as e:
        print(f"check failed: {e}", file=sys.stderr)
        return EXIT_CHECK_FAILED
