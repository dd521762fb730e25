# -*- coding: utf-8 -*-
"""
Command-line surface.

    python -m twinv involutions --n 4
    python -m twinv verify --n 5 --format text

Exit codes: 0 success, 1 a verification or computation failed, 2 usage error.
"""
from __future__ import annotations

import argparse
import sys
from typing import Optional, Sequence, TextIO

from pydantic import BaseModel

from twinv.core.config import config
from twinv.core.errors import (
    InvalidInputError, InvariantViolation, PreconditionError, RankMismatchError,
    SpecializationDegenerate, TwinvError,
)
from twinv.core.logging import setup_logging
from twinv.services import queries
from twinv.services.reports import (
    BraidReport, BraidSweepReport, ExpressionsReport, InvolutionList, PsigmaTable,
    RhoReport, RskReport, ThetaReport, VerifyReport,
)

EXIT_OK = 0
EXIT_FAILED = 1
EXIT_USAGE = 2

GREEN = "\033[32m"
RED = "\033[31m"
RESET = "\033[0m"


class CommandParser(argparse.ArgumentParser):
    """Raises on usage errors instead of printing to sys.stderr and exiting."""

    def error(self, message: str):
        raise InvalidInputError(f"{self.prog}: {message}")


def build_parser() -> argparse.ArgumentParser:
    common = CommandParser(add_help=False)
    common.add_argument("--format", choices=("json", "text", "dot"), default="json",
                        help="output format (dot only for braid-graph)")
    common.add_argument("--seed", type=int, default=None,
                        help=f"specialization seed (default {config.seed})")
    common.add_argument("--jobs", type=int, default=None,
                        help=f"worker processes (default {config.jobs})")
    common.add_argument("--verbose", action="store_true", help="log progress at DEBUG level on stderr")

    parser = CommandParser(
        prog="twinv",
        description="Involutions of S_n, braid moves, and the Hecke module spanned by X_∅.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    def command(name: str, help_text: str) -> argparse.ArgumentParser:
        p = sub.add_parser(name, parents=[common], help=help_text)
        p.add_argument("--n", type=int, required=True, help="rank of the symmetric group")
        return p

    command("involutions", "list the involutions of S_n with their rank")
    command("rho", "rank of one involution").add_argument("--w", required=True, help="one-line notation, e.g. 3,2,1")
    command("expressions", "all reduced I*-expressions").add_argument("--w", required=True)
    p = command("braid-graph", "braid-move graph of one involution")
    p.add_argument("--w", required=True)
    p.add_argument("--dot", action="store_true", help="same as --format dot")
    command("verify-braid", "connectivity of every braid graph in S_n")
    command("psigma", "the polynomials P^σ_{y,w}").add_argument("--w", default=None)
    command("theta", "eta image along one reduced I*-expression").add_argument(
        "--word", required=True, help="comma separated generator indices, e.g. 1,2")
    p = command("verify", "certify dim H X_∅ = #involutions")
    p.add_argument("--slow", action="store_true", help="raise the rank cap to the slow tier")
    p.add_argument("--exact", action="store_true", help="cross-check the rank by exact elimination")
    command("rsk", "Robinson-Schensted and the tableau count").add_argument("--w", default=None)
    return parser


def _status(ok: bool, color: bool) -> str:
    word = "ok" if ok else "FAILED"
    if not color:
        return word
    return f"{GREEN if ok else RED}{word}{RESET}"


def render_text(report: BaseModel, color: bool = False) -> str:
    """Plain-text rendering; deterministic apart from elapsed_ms."""
    if isinstance(report, InvolutionList):
        width = max(len(e.involution) for e in report.involutions)
        lines = [f"{e.involution.ljust(width)}  rho={e.rho}  l={e.length}  ({e.canonical})"
                 for e in report.involutions]
        return "\n".join(lines + [f"{report.count} involutions"])
    if isinstance(report, RhoReport):
        return str(report.rho)
    if isinstance(report, ExpressionsReport):
        return "\n".join(f"({e})" for e in report.expressions)
    if isinstance(report, BraidReport):
        lines = [f"{report.vertex_count} expressions, {report.edge_count} moves, "
                 f"diameter {report.diameter}, connected: {_status(report.connected, color)}"]
        lines += [f"  ({e.source}) -- ({e.target})  {e.kind}" for e in report.edges]
        return "\n".join(lines)
    if isinstance(report, BraidSweepReport):
        lines = [f"S_{report.n}: {report.involution_count} involutions, "
                 f"all connected: {_status(report.all_connected, color)}"]
        lines += [f"  {t.pattern} case {t.case}: {t.count}" for t in report.trichotomy]
        return "\n".join(lines)
    if isinstance(report, PsigmaTable):
        if not report.rows:
            return ""
        wy = max(len(r.y) for r in report.rows)
        ww = max(len(r.w) for r in report.rows)
        return "\n".join(f"{r.y.ljust(wy)}  {r.w.ljust(ww)}  {r.poly_in_u}" for r in report.rows)
    if isinstance(report, ThetaReport):
        steps = " ".join(f"{s.letter}:{'div' if s.kind != 'mul-t' else 'mul'}" for s in report.steps)
        return f"({report.word}) -> {report.involution}  [{steps}]\n{report.text}"
    if isinstance(report, VerifyReport):
        lines = [
            f"S_{report.n}",
            f"  theta well defined  {_status(report.theta_well_defined, color)}",
            f"  homomorphism        {_status(report.homomorphism_ok, color)}",
            f"  case-3 identity     {_status(report.case3_ok, color)}",
            f"  dim H X_∅           {report.dim_image} (involutions: {report.involution_count})",
            f"  eta injective       {_status(report.injective, color)}",
            f"  certified           {_status(report.conjecture_certified, color)}",
        ]
        if report.exact_dim_image is not None:
            lines.append(f"  exact dim           {report.exact_dim_image}")
        if report.counterexample:
            lines.append(f"  counterexample: {report.counterexample}")
        return "\n".join(lines)
    if isinstance(report, RskReport):
        lines = [f"{shape}: {count}" for shape, count in report.shapes.items()]
        lines.append(f"sum = {report.identity.lhs}, involutions = {report.identity.rhs}, "
                     f"{_status(report.identity.equal, color)}")
        for pair in report.pairs:
            lines.append(f"{pair.permutation}  P={pair.p}  Q={pair.q}")
        return "\n".join(lines)
    return report.model_dump_json(indent=2)


def _failed(report: BaseModel) -> bool:
    if isinstance(report, VerifyReport):
        return not report.conjecture_certified
    if isinstance(report, BraidSweepReport):
        return not report.all_connected
    if isinstance(report, BraidReport):
        return not report.connected
    if isinstance(report, RskReport):
        return not report.identity.equal
    return False


def dispatch(args: argparse.Namespace):
    """Runs the selected command; returns a report, or DOT text."""
    n = args.n
    if args.command == "involutions":
        return queries.involution_list(n)
    if args.command == "rho":
        return queries.rho_report(n, args.w)
    if args.command == "expressions":
        return queries.expressions_report(n, args.w)
    if args.command == "braid-graph":
        if args.dot or args.format == "dot":
            return queries.braid_dot(n, args.w)
        return queries.braid_report(n, args.w)
    if args.command == "verify-braid":
        return queries.braid_sweep(n, args.jobs)
    if args.command == "psigma":
        return queries.psigma_table(n, args.w)
    if args.command == "theta":
        return queries.theta_report(n, args.word)
    if args.command == "verify":
        return queries.verify_report(n, slow=args.slow, exact=args.exact, seed=args.seed, jobs=args.jobs)
    if args.command == "rsk":
        return queries.rsk_report(n, args.w)
    raise InvalidInputError(f"unknown command {args.command!r}")


def run(argv: Optional[Sequence[str]] = None, out: TextIO = sys.stdout, err: TextIO = sys.stderr) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except InvalidInputError as e:
        err.write(f"error: {e}\n")
        return EXIT_USAGE
    except SystemExit as e:
        # --help
        return EXIT_USAGE if e.code else EXIT_OK
    setup_logging("DEBUG" if args.verbose else None)
    if args.format == "dot" and args.command != "braid-graph":
        err.write("error: --format dot is only available for braid-graph\n")
        return EXIT_USAGE
    try:
        result = dispatch(args)
    except (InvalidInputError, PreconditionError, RankMismatchError) as e:
        err.write(f"error: {e}\n")
        return EXIT_USAGE
    except (InvariantViolation, SpecializationDegenerate) as e:
        err.write(f"verification failed: {e}\n")
        return EXIT_FAILED
    except (TwinvError, ZeroDivisionError) as e:
        err.write(f"error: {type(e).__name__}: {e}\n")
        return EXIT_FAILED
    if isinstance(result, str):
        out.write(result)
        return EXIT_OK
    if args.format == "text":
        color = not config.no_color and out.isatty()
        out.write(render_text(result, color) + "\n")
    else:
        out.write(result.model_dump_json(indent=2) + "\n")
    return EXIT_FAILED if _failed(result) else EXIT_OK


def main() -> None:
    sys.exit(run())


if __name__ == "__main__":
    main()
