"""Exact longest simple path for small graphs (ground truth for tests and benches)."""

from __future__ import annotations

import time
from dataclasses import dataclass

from longpath.graph_core import Graph, GraphError, Path, _check_vertex, components


class OracleRefused(GraphError):
    """Instance exceeds the configured vertex cap."""


class OracleTimeout(RuntimeError):
    """Time budget ran out; ``best`` is the longest path seen, not proven optimal."""

    def __init__(self, best: Path | None, budget: float):
        self.best = best
        length = "none" if best is None else best.length
        super().__init__(f"time budget {budget:g}s exceeded; best so far (non-authoritative): {length}")


@dataclass(frozen=True)
class OracleLimits:
    max_vertices: int = 18
    time_budget: float | None = 60.0


def _masks(g: Graph) -> list[int]:
    out = []
    for v in range(g.n):
        m = 0
        for u in g.neighbors(v).tolist():
            m |= 1 << u
        out.append(m)
    return out


def _bits(mask: int):
    while mask:
        low = mask & -mask
        yield low.bit_length() - 1
        mask ^= low


def _reach_count(adj: list[int], v: int, blocked: int) -> tuple[int, int]:
    """Vertices reachable from v without entering ``blocked`` (v excluded): (count, mask)."""
    seen = 0
    frontier = adj[v] & ~blocked
    while frontier:
        seen |= frontier
        nxt = 0
        for x in _bits(frontier):
            nxt |= adj[x]
        frontier = nxt & ~blocked & ~seen
    return seen.bit_count() if hasattr(seen, "bit_count") else bin(seen).count("1"), seen


class _Clock:
    def __init__(self, budget: float | None):
        self.budget = budget
        self.deadline = None if budget is None else time.monotonic() + budget
        self.ticks = 0

    def expired(self) -> bool:
        self.ticks += 1
        if self.deadline is None or self.ticks & 1023:
            return False
        return time.monotonic() > self.deadline


def _check_cap(g: Graph, limits: OracleLimits) -> None:
    if g.n > limits.max_vertices:
        raise OracleRefused(f"n = {g.n} exceeds oracle cap of {limits.max_vertices} vertices")


def exact_longest_path(g: Graph, limits: OracleLimits | None = None, method: str = "dfs") -> Path:
    """Longest simple path by exhaustive search.

    ``dfs`` enumerates paths from every start, pruning when the current length
    plus the number of unvisited vertices still reachable from the endpoint
    cannot beat the incumbent. ``dp`` runs a subset-reachability table and
    is only sensible for n <= 20.
    """
    limits = limits or OracleLimits()
    _check_cap(g, limits)
    if g.n == 0:
        raise GraphError("empty graph")
    if method == "dp":
        return _longest_dp(g)
    if method != "dfs":
        raise ValueError(f"unknown oracle method {method!r}")

    adj = _masks(g)
    ceiling = max(len(c) for c in components(g)) - 1
    clock = _Clock(limits.time_budget)
    best: list[int] = [0]
    path: list[int] = []

    def extend(v: int, visited: int) -> bool:
        nonlocal best
        if clock.expired():
            raise OracleTimeout(Path(best), limits.time_budget)
        if len(path) > len(best):
            best = path.copy()
            if len(best) - 1 == ceiling:
                return True
        cands = adj[v] & ~visited
        if not cands:
            return False
        reach, _ = _reach_count(adj, v, visited)
        if len(path) - 1 + reach <= len(best) - 1:
            return False
        for u in _bits(cands):
            path.append(u)
            if extend(u, visited | (1 << u)):
                return True
            path.pop()
        return False

    for s in range(g.n):
        path[:] = [s]
        if extend(s, 1 << s):
            break
    return Path(best)


def _longest_dp(g: Graph) -> Path:
    n = g.n
    adj = _masks(g)
    # ends[mask]: bitmask of vertices at which some path covering exactly mask can end
    ends = [0] * (1 << n)
    for v in range(n):
        ends[1 << v] = 1 << v
    best_mask = 1
    best_size = 1
    for mask in range(1, 1 << n):
        e = ends[mask]
        if not e:
            continue
        size = bin(mask).count("1")
        if size > best_size:
            best_size, best_mask = size, mask
        for v in _bits(e):
            for u in _bits(adj[v] & ~mask):
                ends[mask | (1 << u)] |= 1 << u
    # walk back: drop the current end, pick any predecessor that can end the rest
    mask = best_mask
    v = next(_bits(ends[mask]))
    out = [v]
    while mask != (1 << v):
        rest = mask ^ (1 << v)
        v = next(_bits(adj[v] & ends[rest]))
        out.append(v)
        mask = rest
    return Path(reversed(out))


def exact_from_pair(g: Graph, s: int, t: int, limits: OracleLimits | None = None) -> Path | None:
    """Longest simple s-t path, or None when t is not reachable from s."""
    limits = limits or OracleLimits()
    _check_cap(g, limits)
    _check_vertex(g, s, "s")
    _check_vertex(g, t, "t")
    if s == t:
        raise GraphError("s and t must differ")
    adj = _masks(g)
    tbit = 1 << t
    clock = _Clock(limits.time_budget)
    best: list[int] | None = None
    path = [s]

    def extend(v: int, visited: int) -> None:
        nonlocal best
        if clock.expired():
            raise OracleTimeout(None if best is None else Path(best), limits.time_budget)
        if v == t:
            if best is None or len(path) > len(best):
                best = path.copy()
            return
        reach, seen = _reach_count(adj, v, visited)
        if not seen & tbit:
            return
        if best is not None and len(path) - 1 + reach <= len(best) - 1:
            return
        for u in _bits(adj[v] & ~visited):
            path.append(u)
            extend(u, visited | (1 << u))
            path.pop()

    extend(s, 1 << s)
    return None if best is None else Path(best)
