"""Greedy max-weight-first walk over G' (Search)."""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from longpath import _kernels
from longpath.graph_core import GraphError, Path
from longpath.weights import WeightedGraph

_MODES = {
    "first_seen": _kernels.FIRST_SEEN,
    "lowest_id": _kernels.LOWEST_ID,
    "seeded_random": _kernels.SEEDED_RANDOM,
}

_MASK64 = (1 << 64) - 1


@dataclass(frozen=True)
class TieBreakPolicy:
    """How to choose among several unvisited neighbours of equal maximum weight.

    ``first_seen`` keeps the earliest candidate in G' row order, which is what
    a strict ``>`` comparison does. ``lowest_id`` keeps the smallest vertex id.
    ``seeded_random`` picks uniformly, driven by (seed, start, step).
    """

    mode: str = "first_seen"
    seed: int = 0

    def __post_init__(self):
        if self.mode not in _MODES:
            raise ValueError(f"unknown tie-break mode {self.mode!r}; expected one of {sorted(_MODES)}")

    @property
    def code(self) -> int:
        return _MODES[self.mode]

    @property
    def seed64(self) -> np.uint64:
        return np.uint64(self.seed & _MASK64)

    def label(self) -> str:
        return {"first_seen": "first", "lowest_id": "lowest", "seeded_random": "random"}[self.mode]


@dataclass(frozen=True)
class SearchOutcome:
    best_length: int
    best_path: Path


def search(wg: WeightedGraph, start: int, policy: TieBreakPolicy | None = None) -> SearchOutcome:
    """Walk G' from ``start``, always stepping to the heaviest unvisited neighbour.

    Dead ends pop the stack and the new top rescans its row; visited marks are
    never cleared. The result is the deepest stack prefix seen.
    """
    policy = policy or TieBreakPolicy()
    if not 0 <= start < wg.n:
        raise GraphError(f"start {start} out of range [0, {wg.n})")
    visited = np.zeros(wg.n, dtype=np.bool_)
    stack = np.empty(wg.n, dtype=np.int64)
    best = np.empty(wg.n, dtype=np.int64)
    length = _kernels.search_kernel(
        wg.indptr, wg.count, wg.nbr, wg.wt, start, policy.code, policy.seed64, visited, stack, best
    )
    return SearchOutcome(best_length=int(length), best_path=Path(best[: length + 1].tolist()))
