"""Benchmark suites: run the driver over generated instances and emit CSV rows."""

from __future__ import annotations

import csv
import io
import json
from dataclasses import asdict, dataclass
from pathlib import Path as FsPath
from typing import Iterable, Iterator

import numpy as np

from longpath.driver import SolveConfig, improve, solve
from longpath.graph_core import Graph, generate
from longpath.oracle import OracleLimits, exact_longest_path
from longpath.search import TieBreakPolicy

CSV_COLUMNS = (
    "instance",
    "n",
    "m",
    "variant",
    "policy",
    "seed",
    "found_length",
    "improved_length",
    "oracle_length",
    "wall_time_ms",
)

POLICY_MODES = {"first": "first_seen", "lowest": "lowest_id", "random": "seeded_random"}
VARIANT_NAMES = {"all-pairs": "all_pairs", "farthest": "farthest"}

SMOKE_SUITE = {
    "name": "smoke",
    "variants": ["all-pairs", "farthest"],
    "policies": ["first", "random"],
    "instances": [
        {"family": "path", "params": [8]},
        {"family": "cycle", "params": [8]},
        {"family": "complete", "params": [6]},
        {"family": "complete_bipartite", "params": [3, 3]},
        {"family": "grid", "params": [3, 4]},
        {"family": "dodecahedron", "params": []},
        {"family": "gnp", "params": [12, 0.3], "seeds": [1, 2]},
        {"family": "random_tree", "params": [12], "seeds": [3]},
    ],
}

SCALING_SUITE = {
    "name": "scaling",
    "variants": ["all-pairs", "farthest"],
    "policies": ["first"],
    "instances": [{"family": "gnp", "params": [n, 0.1], "seeds": [1]} for n in (100, 200, 400)],
}

BUILTIN_SUITES = {"smoke": SMOKE_SUITE, "scaling": SCALING_SUITE}


class SuiteError(ValueError):
    pass


@dataclass(frozen=True)
class BenchRecord:
    instance: str
    n: int
    m: int
    variant: str
    policy: str
    seed: int
    found_length: int
    improved_length: int
    oracle_length: int | None
    wall_time_ms: float

    def __post_init__(self):
        if self.found_length > self.improved_length:
            raise AssertionError(f"{self.instance}: improvement shortened the path")
        if self.oracle_length is not None and self.improved_length > self.oracle_length:
            raise AssertionError(f"{self.instance}: heuristic beat the exact oracle")
        if self.wall_time_ms < 0:
            raise AssertionError("negative wall time")

    def row(self) -> dict:
        out = asdict(self)
        out["oracle_length"] = "" if self.oracle_length is None else self.oracle_length
        out["wall_time_ms"] = f"{self.wall_time_ms:.3f}"
        return out


def load_suite(source: str) -> dict:
    """A built-in suite name or a path to a JSON suite file."""
    if source in BUILTIN_SUITES:
        suite = BUILTIN_SUITES[source]
    else:
        try:
            suite = json.loads(FsPath(source).read_text())
        except OSError as exc:
            raise SuiteError(f"cannot read suite {source!r}: {exc}") from exc
        except json.JSONDecodeError as exc:
            raise SuiteError(f"suite {source!r} is not valid JSON: {exc}") from exc
    _check_suite(suite)
    return suite


def _check_suite(suite) -> None:
    if not isinstance(suite, dict) or not isinstance(suite.get("instances"), list):
        raise SuiteError("suite must be an object with an 'instances' list")
    for k, inst in enumerate(suite["instances"]):
        if not isinstance(inst, dict) or "family" not in inst:
            raise SuiteError(f"instance {k}: missing 'family'")
        for key, what, table in (
            ("variants", "variant", VARIANT_NAMES),
            ("policies", "policy", POLICY_MODES),
        ):
            for name in inst.get(key, suite.get(key, [])):
                if name not in table:
                    raise SuiteError(f"instance {k}: unknown {what} {name!r}")
        if not isinstance(inst.get("params", []), list):
            raise SuiteError(f"instance {k}: 'params' must be a list")
        if not all(isinstance(s, int) for s in inst.get("seeds", [0])):
            raise SuiteError(f"instance {k}: 'seeds' must be integers")


def _label(family: str, params: list, seed: int) -> str:
    inner = ",".join(str(p) for p in params)
    return f"{family}({inner})#s{seed}"


def iter_instances(suite: dict) -> Iterator[tuple[str, Graph, int, dict]]:
    for inst in suite["instances"]:
        params = inst.get("params", [])
        for seed in inst.get("seeds", [0]):
            g = generate(inst["family"], *params, seed=seed)
            yield _label(inst["family"], params, seed), g, seed, inst


def run_suite(suite: dict, oracle_max_n: int = 14) -> Iterator[BenchRecord]:
    """Yield one record per (instance, variant, policy), in suite order."""
    for label, g, seed, inst in iter_instances(suite):
        oracle_length = None
        if 0 < g.n <= oracle_max_n:
            oracle_length = exact_longest_path(g, OracleLimits(max_vertices=oracle_max_n)).length
        for variant in inst.get("variants", suite.get("variants", ["all-pairs"])):
            for policy in inst.get("policies", suite.get("policies", ["first"])):
                cfg = SolveConfig(
                    variant=VARIANT_NAMES[variant],
                    policy=TieBreakPolicy(POLICY_MODES[policy], seed),
                )
                result = solve(g, cfg)
                improved = improve(g, result.best)
                yield BenchRecord(
                    instance=label,
                    n=g.n,
                    m=g.m,
                    variant=variant,
                    policy=policy,
                    seed=seed,
                    found_length=result.length,
                    improved_length=improved.length,
                    oracle_length=oracle_length,
                    wall_time_ms=result.stats.wall_time * 1000.0,
                )


def write_csv(records: Iterable[BenchRecord], fh) -> None:
    writer = csv.DictWriter(fh, fieldnames=CSV_COLUMNS, lineterminator="\n")
    writer.writeheader()
    for rec in records:
        writer.writerow(rec.row())


def to_csv(records: Iterable[BenchRecord]) -> str:
    buf = io.StringIO()
    write_csv(records, buf)
    return buf.getvalue()


def loglog_slope(xs: list[float], ys: list[float]) -> float:
    """Least-squares slope of log(y) against log(x)."""
    return float(np.polyfit(np.log(xs), np.log(ys), 1)[0])
