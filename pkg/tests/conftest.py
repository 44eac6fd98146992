import itertools
import sys
from pathlib import Path

import pytest

sys.path.insert(0, str(Path(__file__).parent))

from tricount import AdjacencyGraph, gen_planted, gen_complete, gen_tripartite


def k3():
    return gen_complete(3)


def k4():
    return gen_complete(4)


def path_graph(n_edges):
    return AdjacencyGraph((i, i + 1) for i in range(n_edges))


def two_triangles():
    return AdjacencyGraph([(0, 1), (0, 2), (1, 2), (3, 4), (3, 5), (4, 5)])


def triangle_with_pendant():
    return AdjacencyGraph([(0, 1), (0, 2), (1, 2), (2, 3)])


def k4_minus_edge():
    g = k4()
    edges = [e for e in g.edges() if e != (0, 1)]
    return AdjacencyGraph(edges)


@pytest.fixture(scope="session")
def small_suite():
    """Named small graphs used across the exhaustive checks (m <= 12)."""
    return {
        "k3": k3(),
        "k4": k4(),
        "path4": path_graph(3),
        "path6": path_graph(5),
        "planted9": gen_planted(9, 2, seed=3),
        "planted12": gen_planted(12, 3, seed=5),
        "tripartite222": gen_tripartite(2, 2, 2),
    }


@pytest.fixture(scope="session")
def tiny_suite():
    """Graphs with at most 6 edges, for order x sampling enumeration."""
    return {
        "k3": k3(),
        "pendant": triangle_with_pendant(),
        "k4_minus": k4_minus_edge(),
        "k4": k4(),
        "two_triangles": two_triangles(),
    }


@pytest.fixture(scope="session")
def planted_2000():
    return gen_planted(2000, 200, seed=42)


def all_weight_vectors(n, w):
    """Every 0/1 vector of length n with exactly w ones."""
    out = []
    for ones in itertools.combinations(range(n), w):
        v = [0] * n
        for i in ones:
            v[i] = 1
        out.append(v)
    return out
