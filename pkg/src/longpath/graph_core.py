"""Graph substrate: CSR adjacency, parsers, generators, BFS distances, path checks."""

from __future__ import annotations

import logging
import re
from collections import deque
from dataclasses import dataclass
from functools import cached_property
from pathlib import Path as FsPath
from typing import Iterable, Sequence

import numpy as np

log = logging.getLogger(__name__)

UNREACHABLE = -1

FAMILIES = (
    "path",
    "cycle",
    "complete",
    "complete_bipartite",
    "grid",
    "dodecahedron",
    "gnp",
    "random_tree",
)

# Skeleton of the regular dodecahedron. The labelling follows the LCF notation
# [10, 7, 4, -4, -7, 10, -4, 7, -7, 4]^2, so 0-1-2-...-19-0 is a Hamiltonian cycle.
DODECAHEDRON_EDGES = (
    (0, 1), (0, 10), (0, 19), (1, 2), (1, 8), (2, 3), (2, 6), (3, 4), (3, 19), (4, 5),
    (4, 17), (5, 6), (5, 15), (6, 7), (7, 8), (7, 14), (8, 9), (9, 10), (9, 13), (10, 11),
    (11, 12), (11, 18), (12, 13), (12, 16), (13, 14), (14, 15), (15, 16), (16, 17), (17, 18),
    (18, 19),
)  # fmt: skip

_N_HEADER = re.compile(r"^#\s*n\s+(\d+)\s*$")


class GraphError(ValueError):
    """Invalid graph construction or generator parameters."""


class ParseError(GraphError):
    def __init__(self, message: str, line: int | None = None):
        self.line = line
        if line is not None:
            message = f"line {line}: {message}"
        super().__init__(message)


@dataclass(frozen=True, eq=False)
class Graph:
    """Immutable simple undirected graph in CSR form.

    ``indices[indptr[v]:indptr[v + 1]]`` is N(v), sorted ascending.
    """

    n: int
    m: int
    indptr: np.ndarray
    indices: np.ndarray

    @classmethod
    def from_edges(cls, n: int, edges: Iterable[tuple[int, int]]) -> Graph:
        """Build a graph over ids ``0..n-1``; duplicate edges collapse, loops raise."""
        if n < 0:
            raise GraphError(f"vertex count must be non-negative, got {n}")
        pairs = set()
        for u, v in edges:
            u, v = int(u), int(v)
            if u == v:
                raise GraphError(f"self-loop on vertex {u}")
            if not (0 <= u < n and 0 <= v < n):
                raise GraphError(f"edge ({u}, {v}) outside vertex range [0, {n})")
            pairs.add((u, v) if u < v else (v, u))
        return cls._from_canonical(n, pairs)

    @classmethod
    def _from_canonical(cls, n: int, pairs: Iterable[tuple[int, int]]) -> Graph:
        arr = np.array(sorted(pairs), dtype=np.int64).reshape(-1, 2)
        m = len(arr)
        src = np.concatenate([arr[:, 0], arr[:, 1]])
        dst = np.concatenate([arr[:, 1], arr[:, 0]])
        order = np.lexsort((dst, src))
        indices = dst[order]
        indptr = np.zeros(n + 1, dtype=np.int64)
        np.cumsum(np.bincount(src, minlength=n), out=indptr[1:])
        indptr.flags.writeable = False
        indices.flags.writeable = False
        return cls(n=n, m=m, indptr=indptr, indices=indices)

    def neighbors(self, v: int) -> np.ndarray:
        return self.indices[self.indptr[v] : self.indptr[v + 1]]

    def degree(self, v: int) -> int:
        return int(self.indptr[v + 1] - self.indptr[v])

    @cached_property
    def adjacency(self) -> list[frozenset[int]]:
        return [frozenset(self.neighbors(v).tolist()) for v in range(self.n)]

    def has_edge(self, u: int, v: int) -> bool:
        if not (0 <= u < self.n and 0 <= v < self.n):
            return False
        return v in self.adjacency[u]

    def edges(self) -> list[tuple[int, int]]:
        """Edges as ``(u, v)`` with ``u < v``, in ascending order."""
        out = []
        for u in range(self.n):
            for v in self.neighbors(u).tolist():
                if u < v:
                    out.append((u, v))
        return out

    def audit(self) -> None:
        """Raise GraphError unless every simple-graph invariant holds."""
        if len(self.indptr) != self.n + 1 or self.indptr[0] != 0:
            raise GraphError("malformed indptr")
        if int(self.indptr[-1]) != 2 * self.m:
            raise GraphError(f"adjacency size {int(self.indptr[-1])} != 2m = {2 * self.m}")
        for v in range(self.n):
            nbrs = self.neighbors(v)
            if np.any(nbrs == v):
                raise GraphError(f"self-loop at {v}")
            if len(nbrs) > 1 and np.any(np.diff(nbrs) <= 0):
                raise GraphError(f"N({v}) not strictly ascending")
            for u in nbrs.tolist():
                if not 0 <= u < self.n:
                    raise GraphError(f"neighbor {u} of {v} out of range")
                if v not in self.adjacency[u]:
                    raise GraphError(f"asymmetric edge ({v}, {u})")

    def same_as(self, other: Graph) -> bool:
        return (
            self.n == other.n
            and self.m == other.m
            and np.array_equal(self.indptr, other.indptr)
            and np.array_equal(self.indices, other.indices)
        )

    def __repr__(self) -> str:
        return f"Graph(n={self.n}, m={self.m})"


@dataclass(frozen=True)
class Path:
    vertices: tuple[int, ...]

    def __init__(self, vertices: Iterable[int]):
        object.__setattr__(self, "vertices", tuple(int(v) for v in vertices))

    @property
    def length(self) -> int:
        return max(len(self.vertices) - 1, 0)

    def __len__(self) -> int:
        return len(self.vertices)

    def __iter__(self):
        return iter(self.vertices)

    def __getitem__(self, i):
        return self.vertices[i]

    def format(self) -> str:
        return " ".join(map(str, self.vertices))


@dataclass(frozen=True, eq=False)
class DistanceMap:
    root: int
    dist: np.ndarray

    def __getitem__(self, v: int) -> int:
        return int(self.dist[v])

    def reachable(self) -> np.ndarray:
        return np.flatnonzero(self.dist != UNREACHABLE)


def _as_text(data: str | bytes) -> str:
    if isinstance(data, bytes):
        return data.decode("utf-8")
    return data


def _parse_vertex(token: str, lineno: int) -> int:
    try:
        value = int(token)
    except ValueError:
        raise ParseError(f"malformed vertex id {token!r}", lineno) from None
    if value < 0:
        raise ParseError(f"negative vertex id {value}", lineno)
    return value


def parse_edge_list(data: str | bytes) -> Graph:
    """Parse ``u v`` lines into a Graph over ids ``0..max_id``.

    A ``# n N`` comment raises the vertex count to at least N, which lets a
    file describe trailing isolated vertices.
    """
    pairs: set[tuple[int, int]] = set()
    n = 0
    for lineno, raw in enumerate(_as_text(data).splitlines(), start=1):
        line = raw.strip()
        if not line:
            continue
        if line.startswith("#"):
            header = _N_HEADER.match(line)
            if header:
                n = max(n, int(header.group(1)))
            continue
        tokens = line.split()
        if len(tokens) != 2:
            raise ParseError(f"expected 2 vertex ids, got {len(tokens)}", lineno)
        u, v = (_parse_vertex(t, lineno) for t in tokens)
        if u == v:
            raise ParseError(f"self-loop {u} {v}", lineno)
        n = max(n, u + 1, v + 1)
        pairs.add((u, v) if u < v else (v, u))
    return Graph._from_canonical(n, pairs)


def parse_dimacs(data: str | bytes) -> Graph:
    """Parse DIMACS ``p edge n m`` / ``e u v`` text with 1-based ids."""
    n: int | None = None
    declared_m = 0
    pairs: set[tuple[int, int]] = set()
    for lineno, raw in enumerate(_as_text(data).splitlines(), start=1):
        tokens = raw.split()
        if not tokens or tokens[0] == "c":
            continue
        kind = tokens[0]
        if kind == "p":
            if n is not None:
                raise ParseError("duplicate p-line", lineno)
            if len(tokens) != 4:
                raise ParseError("p-line must be 'p edge n m'", lineno)
            n = _parse_vertex(tokens[2], lineno)
            declared_m = _parse_vertex(tokens[3], lineno)
        elif kind == "e":
            if n is None:
                raise ParseError("missing p-line before first edge", lineno)
            if len(tokens) != 3:
                raise ParseError("e-line must be 'e u v'", lineno)
            u, v = (_parse_vertex(t, lineno) for t in tokens[1:])
            for x in (u, v):
                if not 1 <= x <= n:
                    raise ParseError(f"endpoint {x} outside [1, {n}]", lineno)
            if u == v:
                raise ParseError(f"self-loop e {u} {v}", lineno)
            u, v = u - 1, v - 1
            pairs.add((u, v) if u < v else (v, u))
        else:
            raise ParseError(f"unknown line type {kind!r}", lineno)
    if n is None:
        raise ParseError("missing p-line")
    if declared_m != len(pairs):
        log.warning("p-line declares %d edges, found %d distinct", declared_m, len(pairs))
    return Graph._from_canonical(n, pairs)


def load_graph(path: str | FsPath, fmt: str = "edgelist") -> Graph:
    data = FsPath(path).read_bytes()
    if fmt == "edgelist":
        return parse_edge_list(data)
    if fmt == "dimacs":
        return parse_dimacs(data)
    raise GraphError(f"unknown graph format {fmt!r}")


def format_edge_list(g: Graph) -> str:
    lines = [f"# n {g.n}"]
    lines.extend(f"{u} {v}" for u, v in g.edges())
    return "\n".join(lines) + "\n"


def _require(cond: bool, message: str) -> None:
    if not cond:
        raise GraphError(message)


def generate(family: str, *params: float, seed: int = 0) -> Graph:
    """Build a graph from a named family.

    Parameters by family: ``path n``, ``cycle n``, ``complete n``,
    ``complete_bipartite a b``, ``grid rows cols``, ``dodecahedron``,
    ``gnp n p``, ``random_tree n``. Only ``gnp`` and ``random_tree`` use ``seed``.
    """
    expected = {
        "path": 1,
        "cycle": 1,
        "complete": 1,
        "complete_bipartite": 2,
        "grid": 2,
        "dodecahedron": 0,
        "gnp": 2,
        "random_tree": 1,
    }
    if family not in expected:
        raise GraphError(f"unknown family {family!r}; expected one of {', '.join(FAMILIES)}")
    if len(params) != expected[family]:
        raise GraphError(f"{family} takes {expected[family]} parameter(s), got {len(params)}")

    if family == "dodecahedron":
        return Graph.from_edges(20, DODECAHEDRON_EDGES)
    if family == "gnp":
        n, p = params
        n = _int_param(n, "n")
        p = float(p)
        _require(n >= 0, "gnp requires n >= 0")
        _require(0.0 <= p <= 1.0, "gnp requires 0 <= p <= 1")
        rng = np.random.default_rng(seed)
        rows, cols = np.triu_indices(n, k=1)
        keep = rng.random(len(rows)) < p
        return Graph._from_canonical(n, zip(rows[keep].tolist(), cols[keep].tolist()))

    ints = [_int_param(x, "parameter") for x in params]
    if family == "path":
        (n,) = ints
        _require(n >= 1, "path requires n >= 1")
        return Graph.from_edges(n, ((v, v + 1) for v in range(n - 1)))
    if family == "cycle":
        (n,) = ints
        _require(n >= 3, "cycle requires n >= 3")
        return Graph.from_edges(n, ((v, (v + 1) % n) for v in range(n)))
    if family == "complete":
        (n,) = ints
        _require(n >= 1, "complete requires n >= 1")
        return Graph.from_edges(n, ((u, v) for u in range(n) for v in range(u + 1, n)))
    if family == "complete_bipartite":
        a, b = ints
        _require(a >= 1 and b >= 1, "complete_bipartite requires a >= 1 and b >= 1")
        return Graph.from_edges(a + b, ((u, a + v) for u in range(a) for v in range(b)))
    if family == "grid":
        rows, cols = ints
        _require(rows >= 1 and cols >= 1, "grid requires rows >= 1 and cols >= 1")
        edges = []
        for r in range(rows):
            for c in range(cols):
                v = r * cols + c
                if c + 1 < cols:
                    edges.append((v, v + 1))
                if r + 1 < rows:
                    edges.append((v, v + cols))
        return Graph.from_edges(rows * cols, edges)
    # random_tree: uniform random recursive tree, vertex v attaches to a parent in [0, v)
    (n,) = ints
    _require(n >= 1, "random_tree requires n >= 1")
    rng = np.random.default_rng(seed)
    parents = [int(rng.integers(0, v)) for v in range(1, n)]
    return Graph.from_edges(n, ((p, v) for v, p in zip(range(1, n), parents)))


def _int_param(x: float, name: str) -> int:
    if isinstance(x, str):
        x = float(x)
    if float(x) != int(x):
        raise GraphError(f"{name} must be an integer, got {x}")
    return int(x)


def _check_vertex(g: Graph, v: int, what: str = "vertex") -> None:
    if not 0 <= v < g.n:
        raise GraphError(f"{what} {v} out of range [0, {g.n})")


def bfs_distances(g: Graph, root: int) -> DistanceMap:
    """Plain BFS hop distances from ``root``; other components get UNREACHABLE."""
    _check_vertex(g, root, "root")
    dist = np.full(g.n, UNREACHABLE, dtype=np.int64)
    dist[root] = 0
    queue = deque([root])
    while queue:
        u = queue.popleft()
        du = dist[u] + 1
        for v in g.neighbors(u).tolist():
            if dist[v] == UNREACHABLE:
                dist[v] = du
                queue.append(v)
    return DistanceMap(root=root, dist=dist)


def components(g: Graph) -> list[list[int]]:
    """Connected components, each sorted, ordered by smallest member."""
    seen = np.zeros(g.n, dtype=bool)
    out = []
    for s in range(g.n):
        if seen[s]:
            continue
        members = bfs_distances(g, s).reachable()
        seen[members] = True
        out.append(members.tolist())
    return out


def is_connected(g: Graph) -> bool:
    return g.n > 0 and len(components(g)) == 1


def validate_path(g: Graph, p: Path | Sequence[int]) -> tuple[bool, str | None]:
    """Check that ``p`` is a simple path in ``g``.

    Returns ``(True, None)`` or ``(False, reason)`` for the first failing index.
    """
    vertices = list(p.vertices if isinstance(p, Path) else p)
    if not vertices:
        return False, "empty path"
    seen: set[int] = set()
    for idx, v in enumerate(vertices):
        if not 0 <= v < g.n:
            return False, f"index {idx}: vertex {v} out of range"
        if v in seen:
            return False, f"index {idx}: repeated vertex {v}"
        seen.add(v)
        if idx and not g.has_edge(vertices[idx - 1], v):
            return False, f"index {idx}: missing edge ({vertices[idx - 1]}, {v})"
    return True, None
