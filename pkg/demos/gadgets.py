"""Hard-instance gadgets: blow-up amplification and the disjointness graph.

The blow-up replaces each vertex with T copies and each edge with a T x T
biclique, multiplying edges by T^2 and triangles by T^3; it runs as a
stream transform without materializing the output.  The disjointness
gadget turns two bitvectors into a tripartite graph that has triangles
exactly where the vectors intersect, T per shared position.
"""

from tricount import (AdjacencyGraph, gen_complete, count_triangles_exact,
                      blow_up, gen_disjointness, gen_disjointness_random)


def main():
    print("blow-up of K_4 (m=6, t=4):")
    for T in (1, 2, 3, 5):
        out = blow_up(gen_complete(4), T)
        edges = list(out.iter_edges())
        t = count_triangles_exact(AdjacencyGraph(edges))
        print("  T=%d: m=%4d (=6*T^2)  t=%5d (=4*T^3)" % (T, len(edges), t))

    print()
    print("disjointness gadget, length-6 vectors, T=9:")
    cases = [
        ([1, 1, 1, 0, 0, 0], [0, 0, 0, 1, 1, 1]),
        ([1, 1, 1, 0, 0, 0], [0, 0, 1, 1, 1, 0]),
        ([1, 1, 1, 0, 0, 0], [0, 1, 1, 1, 0, 0]),
        ([1, 1, 1, 0, 0, 0], [1, 1, 1, 0, 0, 0]),
    ]
    for x, y in cases:
        g = gen_disjointness(x, y, 9)
        overlap = sum(a & b for a, b in zip(x, y))
        print("  x=%s y=%s overlap=%d -> m=%2d t=%2d"
              % ("".join(map(str, x)), "".join(map(str, y)), overlap,
                 g.edge_count, count_triangles_exact(g)))
    print("  (zero overlap gives a triangle-free graph; one shared position "
          "gives exactly T)")

    print()
    print("random weight-n/2 instances, n=10, T=4:")
    for seed in range(4):
        g0 = gen_disjointness_random(10, 4, intersecting=False, seed=seed)
        g1 = gen_disjointness_random(10, 4, intersecting=True, seed=seed)
        print("  seed %d: disjoint t=%d, intersecting t=%d"
              % (seed, count_triangles_exact(g0), count_triangles_exact(g1)))


if __name__ == "__main__":
    main()
