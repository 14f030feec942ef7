"""Command-line interface: ``cocofiso rank | compare | sensitivity``.

Exit codes: 0 success, 1 I/O or validation error, 2 degenerate criterion
(classic normalization), 3 zero minimum aggregate (classic k_ib).
"""

from __future__ import annotations

import argparse
import sys
from pathlib import Path

from . import io
from .compare import METHOD_NAMES, compare_methods, rank_with
from .core import DEFAULT_TIE_TOL
from .engine import DEFAULT_LAMBDA, Variant
from .exceptions import CoCoSoError, DegenerateCriterion, ScenarioFailed, ZeroMinAggregate
from .sensitivity import generate_rotated_scenarios, generate_table11_scenarios, run_sensitivity

EXIT_OK, EXIT_ERROR, EXIT_DEGENERATE, EXIT_ZERO_MIN = 0, 1, 2, 3


def exit_code_for(exc: BaseException) -> int:
    if isinstance(exc, ScenarioFailed):
        exc = exc.cause
    if isinstance(exc, DegenerateCriterion):
        return EXIT_DEGENERATE
    if isinstance(exc, ZeroMinAggregate):
        return EXIT_ZERO_MIN
    return EXIT_ERROR


def _common(p: argparse.ArgumentParser, method=True):
    src = p.add_mutually_exclusive_group(required=True)
    src.add_argument("--config", type=Path, help="problem config file")
    src.add_argument("--matrix", type=Path,
                     help="matrix CSV; all criteria benefit, equal weights")
    if method:
        p.add_argument("--method", choices=METHOD_NAMES, help="overrides the config's method")
    p.add_argument("--lambda", dest="lam", type=float, help=f"k_ic balance (default {DEFAULT_LAMBDA})")
    p.add_argument("--tie-tol", type=float, help=f"absolute tie tolerance (default {DEFAULT_TIE_TOL:g})")
    p.add_argument("--out", type=Path, help="write the report here instead of stdout")
    p.add_argument("--pretty", action="store_true", help="aligned text table instead of CSV")
    p.add_argument("--auto-repair", action="store_true",
                   help="classic CoCoSo: drop constant criteria instead of failing")
    p.add_argument("--paper-exact-weights", action="store_true",
                   help="accept weights that do not sum to 1; sensitivity: replay the "
                        "reference weight sets verbatim")


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="cocofiso", description="CoCoSo / CoCoFISo decision ranking")
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("rank", help="rank alternatives with one method")
    _common(p)

    p = sub.add_parser("compare", help="rank correlation between methods")
    _common(p, method=False)
    p.add_argument("--methods", default="cocofiso,promethee2,wsm,topsis",
                   help="comma-separated list; the first is the reference (default: %(default)s)")

    p = sub.add_parser("sensitivity", help="20-scenario weight replacement analysis")
    _common(p)
    p.add_argument("--generalized", action="store_true",
                   help="rotated weight template for any criterion count (not the reference sets)")
    return parser


def _load(args):
    if args.config is not None:
        cfg = io.load_config(args.config)
    else:
        matrix = io.load_matrix(args.matrix)
        cfg = io.ProblemConfig(args.matrix, matrix.criteria)
    if getattr(args, "method", None):
        cfg.method = args.method
    if args.lam is not None:
        cfg.lam = args.lam
    if args.tie_tol is not None:
        cfg.tie_tol = args.tie_tol
    cfg.auto_repair = cfg.auto_repair or args.auto_repair
    cfg.paper_exact_weights = cfg.paper_exact_weights or args.paper_exact_weights
    return cfg


def _emit(text: str, out):
    if out is None:
        sys.stdout.write(text)
    else:
        Path(out).write_text(text, encoding="utf-8")


def cmd_rank(args) -> int:
    cfg = _load(args)
    ranking = rank_with(cfg.method, cfg.load(), cfg.lam, cfg.tie_tol, cfg.auto_repair)
    _emit(io.ranking_report(ranking, args.pretty), args.out)
    return EXIT_OK


def cmd_compare(args) -> int:
    cfg = _load(args)
    methods = [m.strip().lower() for m in args.methods.split(",") if m.strip()]
    bad = [m for m in methods if m not in METHOD_NAMES]
    if bad:
        raise ValueError(f"unknown method(s): {', '.join(bad)}")
    results = compare_methods(cfg.load(), methods, cfg.lam, cfg.tie_tol, cfg.auto_repair)
    _emit(io.compare_report(results, args.pretty), args.out)
    return EXIT_OK


def cmd_sensitivity(args) -> int:
    cfg = _load(args)
    matrix = cfg.load()
    if cfg.method not in ("cocoso", "cocofiso"):
        raise ValueError("sensitivity runs support only cocoso and cocofiso")
    if args.generalized:
        scenarios = generate_rotated_scenarios(matrix.criteria)
    else:
        mode = "paper-exact" if cfg.paper_exact_weights else "normalized"
        scenarios = generate_table11_scenarios(matrix.criteria, mode)
    report = run_sensitivity(matrix, scenarios, Variant.parse(cfg.method), cfg.lam,
                             tie_tol=cfg.tie_tol, auto_repair=cfg.auto_repair)
    _emit(io.sensitivity_report(report, args.pretty), args.out)
    return EXIT_OK


COMMANDS = {"rank": cmd_rank, "compare": cmd_compare, "sensitivity": cmd_sensitivity}


def main(argv=None) -> int:
    args = build_parser().parse_args(argv)
    try:
        return COMMANDS[args.command](args)
    except (CoCoSoError, ValueError, OSError) as exc:
        print(f"cocofiso: error: {exc}", file=sys.stderr)
        return exit_code_for(exc)


if __name__ == "__main__":
    sys.exit(main())
