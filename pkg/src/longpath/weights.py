"""Rooted weighted graph G' built by the modified BFS (Create)."""

from __future__ import annotations

from dataclasses import dataclass
from typing import TextIO

import numpy as np

from longpath._kernels import create_kernel
from longpath.graph_core import Graph, _check_vertex


@dataclass(frozen=True, eq=False)
class WeightedGraph:
    """Per-root derivative of a Graph whose edges carry hop-count weights.

    Row ``u`` lives in ``nbr``/``wt`` at ``indptr[u] : indptr[u] + count[u]``,
    in BFS discovery order. Vertices outside the root's component keep an
    empty row. ``depth`` is the BFS depth of each vertex from the root
    (-1 when unreachable), a by-product of the same pass.
    """

    root: int
    n: int
    indptr: np.ndarray
    count: np.ndarray
    nbr: np.ndarray
    wt: np.ndarray
    depth: np.ndarray

    def weighted_neighbors(self, u: int) -> list[tuple[int, int]]:
        lo = int(self.indptr[u])
        hi = lo + int(self.count[u])
        return list(zip(self.nbr[lo:hi].tolist(), self.wt[lo:hi].tolist()))

    def weight(self, u: int, v: int) -> int | None:
        for x, w in self.weighted_neighbors(u):
            if x == v:
                return w
        return None

    def edges(self) -> list[tuple[int, int, int]]:
        """Each edge once as ``(u, v, w)`` with ``u < v``, sorted."""
        out = []
        for u in range(self.n):
            for v, w in self.weighted_neighbors(u):
                if u < v:
                    out.append((u, v, w))
        out.sort()
        return out

    def dump(self, fh: TextIO) -> None:
        for u, v, w in self.edges():
            fh.write(f"{u} {v} {w}\n")


def create(g: Graph, root: int) -> WeightedGraph:
    """Run the modified BFS from ``root``.

    Expanding ``u`` at depth d records every edge to a not-yet-expanded
    neighbour, in both directions, with weight d + 1. Each edge of the root's
    component is therefore stored once per direction with weight
    ``min(depth(u), depth(v)) + 1``.
    """
    _check_vertex(g, root, "root")
    count, nbr, wt, depth = create_kernel(g.indptr, g.indices, root)
    for arr in (count, nbr, wt, depth):
        arr.flags.writeable = False
    return WeightedGraph(
        root=root, n=g.n, indptr=g.indptr, count=count, nbr=nbr, wt=wt, depth=depth
    )
