import math
import random

import pytest

from tricount import (AdjacencyGraph, GraphError, DuplicateEdgeError,
                      canonical_edge, count_triangles_exact, triangle_stats,
                      classify_edges, count_new_triangles, gen_complete)
from tricount.graph import _dense_triangle_count, _dense_eligible

from conftest import path_graph, k4_minus_edge
import oracles


def random_graph(n, p_edge, seed):
    rng = random.Random(seed)
    edges = [(u, v) for u in range(n) for v in range(u + 1, n)
             if rng.random() < p_edge]
    return edges


def test_canonical_edge():
    assert canonical_edge(2, 1) == (1, 2)
    assert canonical_edge(1, 2) == (1, 2)
    with pytest.raises(GraphError):
        canonical_edge(3, 3)
    with pytest.raises(GraphError):
        canonical_edge(-1, 2)


def test_duplicate_edges_rejected():
    g = AdjacencyGraph([(1, 2)])
    with pytest.raises(DuplicateEdgeError):
        g.add_edge(1, 2)
    with pytest.raises(DuplicateEdgeError):
        g.add_edge(2, 1)


def test_graph_shape():
    g = AdjacencyGraph([(0, 1), (1, 2)], vertices=[9])
    assert g.vertex_count == 4
    assert g.edge_count == 2
    assert g.has_edge(2, 1)
    assert not g.has_edge(0, 2)
    assert g.degree(1) == 2 and g.degree(9) == 0
    assert g.edges() == [(0, 1), (1, 2)]
    # symmetry and the handshake identity
    assert sum(len(g.neighbors(v)) for v in g.vertices()) == 2 * g.edge_count


def test_count_small_cliques():
    assert count_triangles_exact(gen_complete(3)) == 1
    assert count_triangles_exact(gen_complete(4)) == 4
    assert count_triangles_exact(AdjacencyGraph()) == 0
    assert count_triangles_exact(path_graph(4)) == 0


def test_count_petersen():
    g = AdjacencyGraph(oracles.petersen_edges())
    assert count_triangles_exact(g) == 0


def test_count_matches_brute_force_small():
    for seed in range(40):
        edges = random_graph(8, 0.45, seed)
        g = AdjacencyGraph(edges)
        assert count_triangles_exact(g) == oracles.brute_triangles(edges), seed


def test_dense_and_sparse_paths_agree():
    for seed in range(10):
        edges = random_graph(40, 0.35, 100 + seed)
        g = AdjacencyGraph(edges)
        assert _dense_eligible(g)
        want = oracles.brute_triangles(edges)
        assert _dense_triangle_count(g) == want
        assert count_triangles_exact(g) == want


def test_stats_k4():
    st = triangle_stats(gen_complete(4))
    assert (st.t, st.J, st.K) == (4, 2, 3)
    assert sum(st.per_edge.values()) == 3 * st.t
    assert all(c == 2 for c in st.per_edge.values())


def test_stats_k3_and_edgeless():
    st = triangle_stats(gen_complete(3))
    assert (st.t, st.J, st.K) == (1, 1, 1)
    st = triangle_stats(AdjacencyGraph(vertices=range(5)))
    assert (st.t, st.J, st.K) == (0, 0, 0)


def test_stats_match_brute_force():
    for seed in range(25):
        edges = random_graph(9, 0.4, 500 + seed)
        st = triangle_stats(AdjacencyGraph(edges))
        t, per_edge, per_vertex, J, K = oracles.brute_stats(edges)
        assert st.t == t
        assert st.J == J
        assert st.K == K
        assert {e: c for e, c in st.per_edge.items() if c} == per_edge
        assert sum(st.per_edge.values()) == 3 * t


def test_classify_k3():
    part = classify_edges(gen_complete(3), 0.25)
    assert part.threshold == pytest.approx(6.0)
    assert len(part.heavy) == 0
    assert len(part.light) == 3
    assert part.two_light_triangle_count == 1


def test_classify_k4():
    part = classify_edges(gen_complete(4), 0.25)
    assert part.threshold == pytest.approx(12.0)
    assert len(part.light) == 6
    assert part.two_light_triangle_count == 4


def test_classify_rejections():
    with pytest.raises(GraphError):
        classify_edges(path_graph(3), 0.25)  # no triangles
    for bad in (0.0, 0.5, 0.7, -0.1):
        with pytest.raises(GraphError):
            classify_edges(gen_complete(3), bad)


def test_classify_partition_and_bounds():
    for seed in range(12):
        edges = random_graph(10, 0.5, 900 + seed)
        g = AdjacencyGraph(edges)
        st = triangle_stats(g)
        if st.t == 0:
            continue
        for eps in (0.1, 0.25, 0.4):
            part = classify_edges(g, eps, stats=st)
            assert part.heavy | part.light == set(g.edges())
            assert not (part.heavy & part.light)
            for e in part.light:
                assert st.per_edge.get(e, 0) <= part.threshold
            for e in part.heavy:
                assert st.per_edge.get(e, 0) > part.threshold
            assert len(part.heavy) <= math.sqrt(eps * st.t)
            assert part.two_light_triangle_count >= (1 - eps) * st.t


def test_count_new_triangles_cases():
    wedge = AdjacencyGraph([(0, 1), (1, 2)])
    assert count_new_triangles(wedge, (0, 2)) == 1
    assert count_new_triangles(k4_minus_edge(), (0, 1)) == 2
    assert count_new_triangles(AdjacencyGraph(), (0, 1)) == 0


def test_count_new_triangles_equals_per_edge_on_full_graph():
    for seed in (0, 1):
        edges = random_graph(9, 0.5, 40 + seed)
        g = AdjacencyGraph(edges)
        st = triangle_stats(g)
        for e in g.edges():
            assert count_new_triangles(g, e) == st.per_edge.get(e, 0)
