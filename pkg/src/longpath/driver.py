"""Greedy longest-path driver: root loop, farthest-vertex variant, insertion pass."""

from __future__ import annotations

import time
from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass, field

from longpath import _kernels
from longpath.graph_core import Graph, GraphError, Path, validate_path
from longpath.search import TieBreakPolicy

VARIANTS = ("all_pairs", "farthest")


@dataclass(frozen=True)
class SolveConfig:
    variant: str = "all_pairs"
    policy: TieBreakPolicy = field(default_factory=TieBreakPolicy)
    improve: bool = False
    max_roots: int | None = None
    workers: int = 1

    def __post_init__(self):
        if self.variant not in VARIANTS:
            raise ValueError(f"unknown variant {self.variant!r}; expected one of {VARIANTS}")
        if self.max_roots is not None and self.max_roots < 1:
            raise ValueError("max_roots must be >= 1")
        if self.workers < 1:
            raise ValueError("workers must be >= 1")


@dataclass(frozen=True)
class SolveStats:
    roots: int
    searches: int
    wall_time: float


@dataclass(frozen=True)
class SolveResult:
    best: Path
    length: int
    root: int
    start: int
    stats: SolveStats


def _sweep(g: Graph, root: int, farthest: bool, policy: TieBreakPolicy):
    length, start, path, searches = _kernels.sweep_root(
        g.indptr, g.indices, root, farthest, policy.code, policy.seed64
    )
    return int(length), int(start), path, int(searches)


def _solve(g: Graph, cfg: SolveConfig, farthest: bool) -> SolveResult:
    if g.n == 0:
        raise GraphError("empty graph")
    t0 = time.perf_counter()
    if g.n == 1:
        return SolveResult(Path([0]), 0, 0, 0, SolveStats(1, 0, time.perf_counter() - t0))
    n_roots = g.n if cfg.max_roots is None else min(cfg.max_roots, g.n)
    roots = range(n_roots)

    def run(root):
        return _sweep(g, root, farthest, cfg.policy)

    if cfg.workers > 1:
        with ThreadPoolExecutor(max_workers=cfg.workers) as pool:
            per_root = list(pool.map(run, roots))
    else:
        per_root = [run(r) for r in roots]

    # roots arrive in ascending order, so strict '>' keeps the smallest (root, start)
    best = None
    searches = 0
    for root, (length, start, path, count) in zip(roots, per_root):
        searches += count
        if best is None or length > best[0]:
            best = (length, root, start, path)
    length, root, start, path = best
    best_path = Path(path.tolist())
    if cfg.improve:
        best_path = improve(g, best_path)
    elapsed = time.perf_counter() - t0

    ok, why = validate_path(g, best_path)
    if not ok:
        raise AssertionError(f"driver produced an invalid path: {why}")
    return SolveResult(
        best=best_path,
        length=best_path.length,
        root=root,
        start=start,
        stats=SolveStats(roots=n_roots, searches=searches, wall_time=elapsed),
    )


def solve_all_pairs(g: Graph, cfg: SolveConfig | None = None) -> SolveResult:
    """Create(G, i) for every root i, then Search from every j != i; keep the longest."""
    return _solve(g, cfg or SolveConfig(), farthest=False)


def solve_farthest(g: Graph, cfg: SolveConfig | None = None) -> SolveResult:
    """Like solve_all_pairs, but each root searches only from its farthest vertex.

    Farthest means maximum BFS depth, lowest id on ties. An isolated root
    searches from the lowest other id, which yields a length-0 path.
    """
    return _solve(g, cfg or SolveConfig(variant="farthest"), farthest=True)


def solve(g: Graph, cfg: SolveConfig | None = None) -> SolveResult:
    cfg = cfg or SolveConfig()
    if cfg.variant == "farthest":
        return solve_farthest(g, cfg)
    return solve_all_pairs(g, cfg)


def improve(g: Graph, p: Path) -> Path:
    """Splice unused vertices between consecutive path vertices until none fit.

    Each round inserts the lowest-id vertex u outside the path with both
    (v_i, u) and (u, v_i+1) in E, at the leftmost pair that admits one.
    """
    ok, why = validate_path(g, p)
    if not ok:
        raise GraphError(f"cannot improve an invalid path: {why}")
    verts = list(p.vertices)
    used = set(verts)
    adj = g.adjacency
    i = 0
    # an insertion only shrinks the candidate pool, so pairs left of i stay closed
    while i < len(verts) - 1:
        cands = (adj[verts[i]] & adj[verts[i + 1]]) - used
        if cands:
            u = min(cands)
            verts.insert(i + 1, u)
            used.add(u)
        else:
            i += 1
    return Path(verts)
