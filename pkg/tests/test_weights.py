import time

import pytest

from conftest import random_graphs, reference_bfs, reference_create, two_triangles
from longpath.graph_core import GraphError, bfs_distances, generate
from longpath.weights import create


def test_star_rooted_at_centre():
    star = generate("complete_bipartite", 1, 3)
    wg = create(star, 0)
    assert wg.edges() == [(0, 1, 1), (0, 2, 1), (0, 3, 1)]


def test_triangle_rooted_at_zero():
    # hand trace: expand 0 (depth 0) records 0-1 and 0-2 at weight 1,
    # expand 1 (depth 1) records 1-2 at weight 2, expand 2 records nothing
    wg = create(generate("complete", 3), 0)
    assert wg.edges() == [(0, 1, 1), (0, 2, 1), (1, 2, 2)]
    assert wg.weighted_neighbors(1) == [(0, 1), (2, 2)]
    assert wg.weighted_neighbors(2) == [(0, 1), (1, 2)]


def test_path_weights_increase_from_root():
    wg = create(generate("path", 4), 0)
    assert wg.edges() == [(0, 1, 1), (1, 2, 2), (2, 3, 3)]


def test_other_components_are_empty():
    wg = create(two_triangles(), 4)
    assert all(wg.weighted_neighbors(v) == [] for v in (0, 1, 2))
    assert {(u, v) for u, v, _ in wg.edges()} == {(3, 4), (3, 5), (4, 5)}
    assert wg.n == 6


def test_root_out_of_range():
    with pytest.raises(GraphError):
        create(generate("path", 3), -1)


def test_depth_matches_bfs():
    g = generate("grid", 4, 5)
    wg = create(g, 7)
    assert wg.depth.tolist() == bfs_distances(g, 7).dist.tolist()


def test_row_order_is_bfs_insertion_order():
    g = generate("dodecahedron")
    for root in (0, 5, 13):
        wg = create(g, root)
        ref = reference_create(g, root)
        for u in range(g.n):
            assert wg.weighted_neighbors(u) == ref[u]


def test_weight_characterisation_1000_pairs():
    for k, g in enumerate(random_graphs(1000, n_range=(1, 25), seed=5)):
        root = k % g.n
        wg = create(g, root)
        dist = reference_bfs(g, root)
        expected = {
            (u, v): min(dist[u], dist[v]) + 1 for u, v in g.edges() if u in dist
        }
        got = {}
        for u in range(g.n):
            for v, w in wg.weighted_neighbors(u):
                assert (v, w) not in got.get(u, [])
                got.setdefault(u, []).append((v, w))
        # exactly one entry per direction, symmetric weights
        for u, row in got.items():
            assert len({v for v, _ in row}) == len(row)
            for v, w in row:
                assert (u, w) in got[v]
                assert expected[min(u, v), max(u, v)] == w
        assert sum(len(r) for r in got.values()) == 2 * len(expected)


def test_create_scales_linearly():
    # n + m grows 8x; allow a generous envelope around linear
    small = generate("gnp", 1000, 0.01, seed=1)
    big = generate("gnp", 8000, 0.00125, seed=1)
    create(small, 0)

    def best_of(g, reps=5):
        out = float("inf")
        for _ in range(reps):
            t = time.perf_counter()
            create(g, 0)
            out = min(out, time.perf_counter() - t)
        return out

    ratio = best_of(big) / best_of(small)
    size_ratio = (big.n + big.m) / (small.n + small.m)
    assert ratio < 4 * size_ratio
