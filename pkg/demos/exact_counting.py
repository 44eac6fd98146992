"""Exact counting, per-edge statistics, and the heavy/light edge split.

Walks a few graphs through the ground-truth layer: the triangle count, the
per-edge census with its maxima J (per edge) and K (per vertex), and the
partition of edges at the threshold 3*sqrt(t/eps).
"""

import math

from tricount import (gen_complete, gen_planted, gen_tripartite,
                      count_triangles_exact, triangle_stats, classify_edges)


def describe(name, g, eps=0.25):
    st = triangle_stats(g)
    print("%-18s n=%-5d m=%-6d t=%-9d J=%-4d K=%d"
          % (name, g.vertex_count, g.edge_count, st.t, st.J, st.K))
    if st.t == 0:
        print("%18s (triangle free, no heavy/light split)" % "")
        return
    part = classify_edges(g, eps, stats=st)
    print("%18s eps=%.2f threshold=%.1f heavy=%d light=%d "
          "two-light triangles=%d (of %d)"
          % ("", eps, part.threshold, len(part.heavy), len(part.light),
             part.two_light_triangle_count, st.t))
    bound = math.sqrt(eps * st.t)
    print("%18s heavy bound sqrt(eps*t)=%.2f holds: %s"
          % ("", bound, len(part.heavy) <= bound))


def main():
    print("exact counting and edge statistics")
    print("-" * 64)
    describe("K_4", gen_complete(4))
    describe("K_30", gen_complete(30))
    describe("tripartite 4,5,6", gen_tripartite(4, 5, 6))
    describe("planted m=2000", gen_planted(2000, 200, seed=7))
    describe("planted t=0", gen_planted(50, 0, seed=7))

    # a lopsided graph: one edge shared by many triangles goes heavy
    from tricount import AdjacencyGraph
    g = AdjacencyGraph([(0, 1)] + [(0, k) for k in range(2, 30)]
                       + [(1, k) for k in range(2, 30)])
    describe("book of 28 pages", g, eps=0.4)


if __name__ == "__main__":
    main()
