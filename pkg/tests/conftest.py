from __future__ import annotations

from collections import deque

import numpy as np
import pytest
from hypothesis import strategies as st

from longpath.graph_core import Graph, generate, is_connected

PETERSEN_EDGES = [
    (0, 1), (0, 4), (0, 5), (1, 2), (1, 6), (2, 3), (2, 7), (3, 4),
    (3, 8), (4, 9), (5, 7), (5, 8), (6, 8), (6, 9), (7, 9),
]  # fmt: skip


@pytest.fixture
def petersen() -> Graph:
    return Graph.from_edges(10, PETERSEN_EDGES)


def two_triangles() -> Graph:
    return Graph.from_edges(6, [(0, 1), (1, 2), (0, 2), (3, 4), (4, 5), (3, 5)])


def random_graphs(count: int, n_range=(1, 16), seed: int = 0):
    """Deterministic stream of G(n, p) graphs with varied density."""
    rng = np.random.default_rng(seed)
    for _ in range(count):
        n = int(rng.integers(n_range[0], n_range[1] + 1))
        p = float(rng.choice([0.1, 0.2, 0.3, 0.5, 0.8]))
        yield generate("gnp", n, p, seed=int(rng.integers(1 << 31)))


def connected_gnp(n: int, p: float, seed: int) -> Graph:
    g = generate("gnp", n, p, seed=seed)
    while not is_connected(g):
        seed += 1_000_003
        g = generate("gnp", n, p, seed=seed)
    return g


@st.composite
def gnp_graphs(draw, min_n=1, max_n=14):
    n = draw(st.integers(min_n, max_n))
    p = draw(st.sampled_from([0.0, 0.15, 0.3, 0.5, 0.9]))
    seed = draw(st.integers(0, 2**32 - 1))
    return generate("gnp", n, p, seed=seed)


def reference_bfs(g: Graph, root: int) -> dict[int, int]:
    """Dict-based BFS, kept separate from the library's array BFS."""
    dist = {root: 0}
    q = deque([root])
    while q:
        u = q.popleft()
        for v in g.adjacency[u]:
            if v not in dist:
                dist[v] = dist[u] + 1
                q.append(v)
    return dist


def reference_create(g: Graph, root: int) -> list[list[tuple[int, int]]]:
    """Line-by-line transcription of the Create pseudocode with Python lists."""
    out: list[list[tuple[int, int]]] = [[] for _ in range(g.n)]
    visited = [False] * g.n
    in_q = [False] * g.n
    queue = [(root, 0)]
    j = 0
    while j < len(queue):
        u, w = queue[j]
        visited[u] = True
        for v in g.neighbors(u).tolist():
            if not visited[v]:
                out[u].append((v, w + 1))
                out[v].append((u, w + 1))
                if not in_q[v]:
                    queue.append((v, w + 1))
                    in_q[v] = True
        j += 1
    return out


def reference_search(rows: list[list[tuple[int, int]]], start: int, lowest: bool = False):
    """Line-by-line transcription of the Search pseudocode (strict '>' ties)."""
    visited = [False] * len(rows)
    stack = [start]
    best_len, best_path = 0, [start]
    while stack:
        u = stack[-1]
        visited[u] = True
        mx, x = 0, None
        for v, w in rows[u]:
            if not visited[v]:
                if w > mx or (lowest and w == mx and v < x):
                    mx, x = w, v
        if mx == 0:
            stack.pop()
        else:
            stack.append(x)
            if best_len < len(stack) - 1:
                best_len = len(stack) - 1
                best_path = list(stack)
    return best_len, best_path


def pytest_terminal_summary(terminalreporter):
    import sys

    mod = sys.modules.get("test_acceptance")
    results = getattr(mod, "RESULTS", None)
    if not results:
        return
    terminalreporter.section("acceptance criteria")
    for number in sorted(results):
        ok, detail = results[number]
        terminalreporter.write_line(f"[{'PASS' if ok else 'FAIL'}] criterion {number}: {detail}")
