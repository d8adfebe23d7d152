"""Command-line frontend: per-(n, g) reports, grid sweeps, verification.

Exit codes: 0 success, 1 verification failure, 2 usage or resource-guard
error.  Output goes to stdout (or --out FILE); diagnostics to stderr.  The
SPSURF_THREADS environment variable caps the worker pool used to build the
rings of a grid sweep; the default is the available parallelism.
"""

from __future__ import annotations

import argparse
import os
import sys
from concurrent.futures import ThreadPoolExecutor
from typing import List, Optional

from . import report as rpt
from .errors import ResourceGuardError, SpsurfError
from .macdonald import RELATION_FAMILIES, build, check_guard
from .verifier import run_suite


def _thread_count() -> int:
    env = os.environ.get("SPSURF_THREADS", "")
    if env.strip():
        try:
            value = int(env)
        except ValueError:
            raise SpsurfError(f"SPSURF_THREADS must be an integer: {env!r}")
        if value >= 1:
            return value
        raise SpsurfError("SPSURF_THREADS must be >= 1")
    return os.cpu_count() or 1


def _emit(text: str, out: Optional[str]) -> None:
    if out:
        with open(out, "w", encoding="utf-8") as handle:
            handle.write(text)
    else:
        sys.stdout.write(text)


def _grid_documents(max_n: int, max_g: int, override: bool) -> List[dict]:
    points = [(n, g) for n in range(1, max_n + 1) for g in range(max_g + 1)]
    for n, g in points:
        check_guard(n, g, override)
    with ThreadPoolExecutor(max_workers=_thread_count()) as pool:
        rings = list(pool.map(
            lambda p: build(p[0], p[1], override_guard=override), points))
    return [rpt.report_document(n, g, ring=ring)
            for (n, g), ring in zip(points, rings)]


def _cmd_report(args) -> int:
    check_guard(args.n, args.g, args.override_guard)
    doc = rpt.report_document(args.n, args.g,
                              override_guard=args.override_guard)
    if args.format == "json":
        _emit(rpt.render_json(doc), args.out)
    else:
        _emit(rpt.render_report_text(doc), args.out)
    return 0


def _cmd_grid(args) -> int:
    docs = _grid_documents(args.max_n, args.max_g, args.override_guard)
    if args.format == "json":
        _emit(rpt.render_json_lines(docs), args.out)
    elif args.format == "csv":
        _emit(rpt.render_grid_csv(docs), args.out)
    else:
        _emit(rpt.render_grid_text(docs), args.out)
    return 0


def _cmd_verify(args) -> int:
    for n in range(1, args.max_n + 1):
        for g in range(args.max_g + 1):
            check_guard(n, g, args.override_guard)
    results = run_suite(args.max_n, args.max_g,
                        drop_family=args.mutate_ideal,
                        override_guard=args.override_guard)
    doc = rpt.verify_document(args.max_n, args.max_g, results,
                              args.mutate_ideal)
    if args.format == "json":
        _emit(rpt.render_json(doc), args.out)
    else:
        _emit(rpt.render_verify_text(doc), args.out)
    return 0 if doc["passed"] else 1


def _parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="spsurf",
        description="Exact cohomology, characteristic classes, and "
                    "topological invariants of symmetric products of "
                    "surfaces.")
    sub = parser.add_subparsers(dest="command", required=True)

    p_report = sub.add_parser(
        "report", help="invariant report for one (n, g)")
    p_report.add_argument("--n", type=int, required=True,
                          help="symmetric power, n >= 1")
    p_report.add_argument("--g", type=int, required=True,
                          help="genus, g >= 0")
    p_report.add_argument("--format", choices=("text", "json"),
                          default="text")
    p_report.add_argument("--override-guard", action="store_true",
                          help="ignore the monomial-count resource guard")
    p_report.add_argument("--out", metavar="FILE", default=None)
    p_report.set_defaults(func=_cmd_report)

    p_grid = sub.add_parser("grid", help="reports for a whole (n, g) grid")
    p_grid.add_argument("--max-n", type=int, default=6)
    p_grid.add_argument("--max-g", type=int, default=6)
    p_grid.add_argument("--format", choices=("text", "json", "csv"),
                        default="text",
                        help="json emits one document per line")
    p_grid.add_argument("--override-guard", action="store_true")
    p_grid.add_argument("--out", metavar="FILE", default=None)
    p_grid.set_defaults(func=_cmd_grid)

    p_verify = sub.add_parser(
        "verify", help="machine-check the ring identities over a grid")
    p_verify.add_argument("--max-n", type=int, default=6)
    p_verify.add_argument("--max-g", type=int, default=6)
    p_verify.add_argument("--format", choices=("text", "json"),
                          default="text")
    p_verify.add_argument("--override-guard", action="store_true")
    p_verify.add_argument("--mutate-ideal", choices=RELATION_FAMILIES,
                          default=None,
                          help="debug: drop one relation family from the "
                               "build and watch the suite fail")
    p_verify.add_argument("--out", metavar="FILE", default=None)
    p_verify.set_defaults(func=_cmd_verify)
    return parser


def main(argv: Optional[List[str]] = None) -> int:
    args = _parser().parse_args(argv)
    try:
        return args.func(args)
    except ResourceGuardError as exc:
        print(f"resource guard: {exc}", file=sys.stderr)
        return 2
    except SpsurfError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2


if __name__ == "__main__":
    sys.exit(main())
