"""Command-line entry point: ``superspace-verify``."""

import argparse
import json
import logging
import sys
from pathlib import Path
from typing import List, Optional

import anyio

from .config import EngineSettings
from .engine import CONTRACTION_TARGETS, VerificationEngine
from .hopfstar import STAR_ROUTES
from .suites import CHECK_GROUPS, SUITES
from .tools import BASIS_CHANGES


logger = logging.getLogger(__name__)


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="superspace-verify",
        description="Exact checks of deformed 3d superspaces, their R-matrices and contractions",
    )
    parser.add_argument("--log-level", default=None, help="Logging level (default: LOG_LEVEL)")
    sub = parser.add_subparsers(dest="command", required=True)

    verify = sub.add_parser("verify", help="Run a verification suite")
    verify.add_argument("suite", choices=SUITES + tuple(CHECK_GROUPS))
    verify.add_argument("--matrix", choices=["pq", "hh"])
    verify.add_argument("--algebra", help="Restrict every preset-bound check to one preset")
    verify.add_argument("--example", help="Restrict the reps checks to one representation or label")
    verify.add_argument("--mode", choices=["graded", "ungraded", "both"])
    verify.add_argument("--order", type=int, help="Truncation order of the exponential checks")
    verify.add_argument("--strict", action="store_true", default=None,
                        help="Adjudication failures also fail the run")
    verify.add_argument("--jobs", type=int, help="Checks run concurrently")
    verify.add_argument("--format", choices=["json", "text"], default="text")
    verify.add_argument("--report", type=Path, help="Also write the JSON report here")

    contract = sub.add_parser("contract", help="Transform and contract along a basis change")
    contract.add_argument("target", choices=CONTRACTION_TARGETS)
    contract.add_argument("--g", dest="kind", choices=BASIS_CHANGES, default="full")

    derive = sub.add_parser("derive", help="Derive a structure through a basis change")
    derive.add_argument("what", choices=["star"])
    derive.add_argument("--g", dest="kind", choices=list(STAR_ROUTES), default="h-only")

    normal = sub.add_parser("normal-form", help="Reduce an expression in a preset algebra")
    normal.add_argument("preset")
    normal.add_argument("expression")
    return parser


async def _verify(engine: VerificationEngine, args: argparse.Namespace) -> int:
    report = await engine.run_suite(
        args.suite,
        mode=args.mode,
        order=args.order,
        jobs=args.jobs,
        strict=args.strict,
        example=args.example,
        algebra=args.algebra,
        matrix=args.matrix,
    )
    if args.report:
        args.report.write_text(report.to_json(include_timing=True), encoding="utf-8")
        logger.info(f"Report written to {args.report}")
    print(report.to_json() if args.format == "json" else report.summary_text())
    strict = engine.settings.strict if args.strict is None else args.strict
    return report.exit_code(strict)


async def _contract(engine: VerificationEngine, args: argparse.Namespace) -> int:
    summary = await engine.contract(args.target, args.kind)
    print(summary.model_dump_json(indent=2))
    return 0 if summary.verdict.passed else 1


async def _derive(engine: VerificationEngine, args: argparse.Namespace) -> int:
    summary = await engine.derive_star(args.kind)
    print(summary.model_dump_json(indent=2))
    return 0 if summary.verdict.passed else 1


async def _normal_form(engine: VerificationEngine, args: argparse.Namespace) -> int:
    result = await engine.normal_form(args.preset, args.expression)
    print(json.dumps(result.model_dump(), indent=2))
    return 0


COMMANDS = {
    "verify": _verify,
    "contract": _contract,
    "derive": _derive,
    "normal-form": _normal_form,
}


def main(argv: Optional[List[str]] = None) -> int:
    """Parse arguments, run one command and return its exit code."""
    args = build_parser().parse_args(argv)
    settings = EngineSettings.from_env().with_overrides(
        log_level=args.log_level.upper() if args.log_level else None
    )
    logging.basicConfig(level=settings.log_level)

    try:
        engine = VerificationEngine(settings)
        return anyio.run(COMMANDS[args.command], engine, args)
    except Exception as e:
        logger.error(f"{args.command} failed: {e}")
        print(f"Error: {e}", file=sys.stderr)
        return 2


if __name__ == "__main__":
    sys.exit(main())
