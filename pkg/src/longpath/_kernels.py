"""Compiled inner loops for Create/Search and the per-root sweep.

All arrays are int64 CSR views of a Graph. The weighted graph G' shares the
source graph's ``indptr`` as row offsets: row ``u`` of G' occupies
``wnbr[indptr[u] : indptr[u] + wcount[u]]`` in BFS insertion order.
"""

from __future__ import annotations

import numba
import numpy as np

FIRST_SEEN = 0
LOWEST_ID = 1
SEEDED_RANDOM = 2

_GOLDEN = np.uint64(0x9E3779B97F4A7C15)
_MUL1 = np.uint64(0xBF58476D1CE4E5B9)
_MUL2 = np.uint64(0x94D049BB133111EB)
_S30 = np.uint64(30)
_S27 = np.uint64(27)
_S31 = np.uint64(31)
_ONE = np.uint64(1)

jit = numba.njit(cache=True, nogil=True)


@jit
def mix64(z):
    z = (z ^ (z >> _S30)) * _MUL1
    z = (z ^ (z >> _S27)) * _MUL2
    return z ^ (z >> _S31)


@jit
def tie_draw(seed, start, step, ties):
    """Index in ``[0, ties)`` determined only by (seed, start, step)."""
    h = mix64(seed + _GOLDEN * (np.uint64(start) + _ONE))
    h = mix64(h + _GOLDEN * (np.uint64(step) + _ONE))
    return np.int64(h % np.uint64(ties))


@jit
def create_kernel(indptr, indices, root):
    n = indptr.shape[0] - 1
    wcount = np.zeros(n, dtype=np.int64)
    wnbr = np.empty(indices.shape[0], dtype=np.int64)
    wwt = np.empty(indices.shape[0], dtype=np.int64)
    depth = np.full(n, -1, dtype=np.int64)
    visited = np.zeros(n, dtype=np.bool_)
    in_q = np.zeros(n, dtype=np.bool_)
    q_u = np.empty(n, dtype=np.int64)
    q_w = np.empty(n, dtype=np.int64)

    q_u[0] = root
    q_w[0] = 0
    depth[root] = 0
    j = 0
    k = 1
    while j < k:
        u = q_u[j]
        visited[u] = True
        w = q_w[j] + 1
        for e in range(indptr[u], indptr[u + 1]):
            v = indices[e]
            if not visited[v]:
                slot = indptr[u] + wcount[u]
                wnbr[slot] = v
                wwt[slot] = w
                wcount[u] += 1
                slot = indptr[v] + wcount[v]
                wnbr[slot] = u
                wwt[slot] = w
                wcount[v] += 1
                if not in_q[v]:
                    q_u[k] = v
                    q_w[k] = w
                    depth[v] = w
                    in_q[v] = True
                    k += 1
        j += 1
    return wcount, wnbr, wwt, depth


@jit
def search_kernel(indptr, wcount, wnbr, wwt, start, mode, seed, visited, stack, best):
    """Max-weight-first stack walk; writes the best prefix into ``best``.

    ``visited``, ``stack`` and ``best`` are caller-owned scratch of length n.
    Returns the best length in edges.
    """
    visited[:] = False
    stack[0] = start
    best[0] = start
    top = 0
    best_len = 0
    # stack[0..low] is known to equal best[0..low]
    low = 0
    step = 0
    while top >= 0:
        u = stack[top]
        visited[u] = True
        base = indptr[u]
        end = base + wcount[u]
        mx = 0
        x = -1
        ties = 0
        for e in range(base, end):
            v = wnbr[e]
            if not visited[v]:
                w = wwt[e]
                if w > mx:
                    mx = w
                    x = v
                    ties = 1
                elif w == mx:
                    ties += 1
                    if mode == LOWEST_ID and v < x:
                        x = v
        if mx == 0:
            top -= 1
            if top < low:
                low = top
        else:
            if mode == SEEDED_RANDOM and ties > 1:
                r = tie_draw(seed, start, step, ties)
                for e in range(base, end):
                    v = wnbr[e]
                    if not visited[v] and wwt[e] == mx:
                        if r == 0:
                            x = v
                            break
                        r -= 1
            top += 1
            stack[top] = x
            if best_len < top:
                best_len = top
                for t in range(low + 1, top + 1):
                    best[t] = stack[t]
                low = top
        step += 1
    return best_len


@jit
def farthest_vertex(depth, root):
    """Lowest-id vertex at maximum BFS depth; lowest id != root if root is isolated."""
    n = depth.shape[0]
    far = -1
    far_d = 0
    for v in range(n):
        if depth[v] > far_d:
            far_d = depth[v]
            far = v
    if far == -1:
        far = 1 if root == 0 else 0
    return far


@jit
def sweep_root(indptr, indices, root, farthest, mode, seed):
    """Create(G, root) followed by Search from every other vertex, or only the farthest.

    Returns (best_len, best_start, best_path, searches). Ties keep the
    smallest start id.
    """
    n = indptr.shape[0] - 1
    wcount, wnbr, wwt, depth = create_kernel(indptr, indices, root)
    visited = np.zeros(n, dtype=np.bool_)
    stack = np.empty(n, dtype=np.int64)
    scratch = np.empty(n, dtype=np.int64)
    best_path = np.empty(n, dtype=np.int64)
    best_len = -1
    best_start = -1
    searches = 0
    if farthest:
        lo = farthest_vertex(depth, root)
        hi = lo + 1
    else:
        lo = 0
        hi = n
    for j in range(lo, hi):
        if j == root:
            continue
        length = search_kernel(indptr, wcount, wnbr, wwt, j, mode, seed, visited, stack, scratch)
        searches += 1
        if length > best_len:
            best_len = length
            best_start = j
            best_path[: length + 1] = scratch[: length + 1]
    return best_len, best_start, best_path[: best_len + 1].copy(), searches
