"""Command-line front end: solve, exact, gen, verify, bench."""

from __future__ import annotations

import argparse
import logging
import sys
from pathlib import Path as FsPath

from longpath import bench
from longpath.driver import SolveConfig, solve
from longpath.graph_core import (
    FAMILIES,
    GraphError,
    Path,
    format_edge_list,
    generate,
    load_graph,
    validate_path,
)
from longpath.oracle import OracleLimits, OracleRefused, OracleTimeout, exact_longest_path
from longpath.search import TieBreakPolicy
from longpath.weights import create

EXIT_OK = 0
EXIT_USAGE = 1
EXIT_INFEASIBLE = 2

log = logging.getLogger("longpath")


class CliError(Exception):
    def __init__(self, message: str, code: int = EXIT_USAGE):
        super().__init__(message)
        self.code = code


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        self.print_usage(sys.stderr)
        self.exit(EXIT_USAGE, f"{self.prog}: error: {message}\n")


def _load(path: str, fmt: str):
    try:
        return load_graph(path, fmt)
    except OSError as exc:
        raise CliError(f"cannot read {path}: {exc}") from exc
    except (GraphError, UnicodeDecodeError) as exc:
        raise CliError(f"{path}: {exc}") from exc


def _report(length: int, path: Path) -> None:
    print(f"length: {length}")
    print(path.format())


def cmd_solve(args) -> int:
    g = _load(args.input, args.format)
    if g.n == 0:
        raise CliError("empty graph", EXIT_INFEASIBLE)
    mode = bench.POLICY_MODES[args.tie_break]
    cfg = SolveConfig(
        variant=bench.VARIANT_NAMES[args.variant],
        policy=TieBreakPolicy(mode, args.seed),
        improve=args.improve,
        max_roots=args.max_roots,
        workers=args.workers,
    )
    result = solve(g, cfg)
    ok, why = validate_path(g, result.best)
    if not ok:
        raise AssertionError(f"self-check failed: {why}")
    if args.dump_weights:
        with open(args.dump_weights, "w") as fh:
            create(g, result.root).dump(fh)
    _report(result.length, result.best)
    log.info(
        "root=%d start=%d roots=%d searches=%d wall=%.3fs",
        result.root,
        result.start,
        result.stats.roots,
        result.stats.searches,
        result.stats.wall_time,
    )
    return EXIT_OK


def cmd_exact(args) -> int:
    g = _load(args.input, args.format)
    if g.n == 0:
        raise CliError("empty graph", EXIT_INFEASIBLE)
    limits = OracleLimits(max_vertices=args.max_n, time_budget=args.budget)
    try:
        p = exact_longest_path(g, limits, method=args.method)
    except OracleRefused as exc:
        raise CliError(str(exc), EXIT_INFEASIBLE) from exc
    except OracleTimeout as exc:
        if exc.best is not None:
            print(f"best-so-far (not proven optimal): {exc.best.length}", file=sys.stderr)
            print(exc.best.format(), file=sys.stderr)
        raise CliError(str(exc), EXIT_INFEASIBLE) from exc
    _report(p.length, p)
    return EXIT_OK


def cmd_gen(args) -> int:
    try:
        g = generate(args.family, *args.params, seed=args.seed)
    except GraphError as exc:
        raise CliError(str(exc)) from exc
    text = format_edge_list(g)
    if args.output:
        FsPath(args.output).write_text(text)
    else:
        sys.stdout.write(text)
    return EXIT_OK


def _read_path(path: str) -> Path:
    try:
        tokens = FsPath(path).read_text().split()
    except OSError as exc:
        raise CliError(f"cannot read {path}: {exc}") from exc
    try:
        return Path(int(t) for t in tokens)
    except ValueError as exc:
        raise CliError(f"{path}: malformed vertex id ({exc})") from exc


def cmd_verify(args) -> int:
    g = _load(args.graph, args.format)
    p = _read_path(args.path)
    ok, why = validate_path(g, p)
    if ok:
        print(f"valid: length {p.length}")
        return EXIT_OK
    print(f"invalid: {why}")
    return EXIT_USAGE


def cmd_bench(args) -> int:
    try:
        suite = bench.load_suite(args.suite)
        records = list(bench.run_suite(suite, oracle_max_n=args.oracle_max_n))
    except (bench.SuiteError, GraphError) as exc:
        raise CliError(str(exc)) from exc
    if args.csv:
        with open(args.csv, "w", newline="") as fh:
            bench.write_csv(records, fh)
    else:
        bench.write_csv(records, sys.stdout)
    return EXIT_OK


def build_parser() -> argparse.ArgumentParser:
    parser = _Parser(prog="longpath", description="Greedy longest-path approximation.")
    parser.add_argument("-v", "--verbose", action="store_true")
    sub = parser.add_subparsers(dest="command", required=True, parser_class=_Parser)

    p = sub.add_parser("solve", help="run the greedy heuristic on a graph file")
    p.add_argument("input")
    p.add_argument("--variant", choices=sorted(bench.VARIANT_NAMES), default="all-pairs")
    p.add_argument("--tie-break", choices=sorted(bench.POLICY_MODES), default="first")
    p.add_argument("--seed", type=int, default=0)
    p.add_argument("--improve", action="store_true")
    p.add_argument("--format", choices=["edgelist", "dimacs"], default="edgelist")
    p.add_argument("--dump-weights", metavar="FILE", help="write G' of the winning root as 'u v w' lines")
    p.add_argument("--max-roots", type=int)
    p.add_argument("--workers", type=int, default=1)
    p.set_defaults(func=cmd_solve)

    p = sub.add_parser("exact", help="exact longest path for small graphs")
    p.add_argument("input")
    p.add_argument("--max-n", type=int, default=18)
    p.add_argument("--budget", type=float, default=60.0, metavar="SECONDS")
    p.add_argument("--method", choices=["dfs", "dp"], default="dfs")
    p.add_argument("--format", choices=["edgelist", "dimacs"], default="edgelist")
    p.set_defaults(func=cmd_exact)

    p = sub.add_parser("gen", help="write a generated graph as an edge list")
    p.add_argument("family", choices=FAMILIES)
    p.add_argument("params", nargs="*", type=float)
    p.add_argument("--seed", type=int, default=0)
    p.add_argument("-o", "--output")
    p.set_defaults(func=cmd_gen)

    p = sub.add_parser("verify", help="check that a path file is a simple path in a graph")
    p.add_argument("graph")
    p.add_argument("path")
    p.add_argument("--format", choices=["edgelist", "dimacs"], default="edgelist")
    p.set_defaults(func=cmd_verify)

    p = sub.add_parser("bench", help="run a benchmark suite and write CSV")
    p.add_argument("suite", help=f"built-in suite ({', '.join(bench.BUILTIN_SUITES)}) or JSON file")
    p.add_argument("--csv", metavar="OUT")
    p.add_argument("--oracle-max-n", type=int, default=14)
    p.set_defaults(func=cmd_bench)
    return parser


def main(argv: list[str] | None = None) -> int:
    args = build_parser().parse_args(argv)
    logging.basicConfig(
        level=logging.INFO if args.verbose else logging.WARNING,
        format="%(levelname)s %(name)s: %(message)s",
    )
    try:
        return args.func(args)
    except CliError as exc:
        print(f"longpath: {exc}", file=sys.stderr)
        return exc.code


if __name__ == "__main__":
    sys.exit(main())
