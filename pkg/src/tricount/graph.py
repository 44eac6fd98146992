"""Exact triangle counting and edge statistics on simple undirected graphs.

The graphs here are the ground truth side of the toolkit: everything the
sampling estimators claim is checked against these routines.  Counting is
done by degree-ordered neighbor intersection, which costs O(m^{3/2}) and
stays practical up to a few million edges.  Dense graphs with small vertex
ranges additionally get a BLAS matrix path that computes the same number
much faster.
"""

import numpy as np


class GraphError(ValueError):
    pass


class DuplicateEdgeError(GraphError):
    pass


# dense counting kicks in when the adjacency matrix is small enough to
# build and the graph is dense enough that BLAS beats set intersections
_DENSE_MAX_N = 2048
_DENSE_MIN_FILL = 1.0 / 32.0


def canonical_edge(u, v):
    """Return the edge as (min, max), rejecting self-loops and bad ids."""
    u = int(u)
    v = int(v)
    if u < 0 or v < 0:
        raise GraphError("vertex ids must be non-negative, got (%d, %d)" % (u, v))
    if u == v:
        raise GraphError("self-loop at vertex %d" % u)
    return (u, v) if u < v else (v, u)


class AdjacencyGraph:
    """Simple undirected graph stored as a dict of neighbor sets.

    Duplicate edges are an error, not silently dropped: every input model
    in this package streams distinct edges, so a repeat means the input is
    broken.  Isolated vertices may be declared through `vertices`.
    """

    def __init__(self, edges=(), vertices=()):
        self.adj = {}
        self.edge_count = 0
        for v in vertices:
            self.add_vertex(v)
        for u, v in edges:
            self.add_edge(u, v)

    def add_vertex(self, v):
        v = int(v)
        if v < 0:
            raise GraphError("vertex ids must be non-negative, got %d" % v)
        if v not in self.adj:
            self.adj[v] = set()

    def add_edge(self, u, v):
        u, v = canonical_edge(u, v)
        nbrs = self.adj.get(u)
        if nbrs is not None and v in nbrs:
            raise DuplicateEdgeError("duplicate edge (%d, %d)" % (u, v))
        if nbrs is None:
            self.adj[u] = {v}
        else:
            nbrs.add(v)
        if v in self.adj:
            self.adj[v].add(u)
        else:
            self.adj[v] = {u}
        self.edge_count += 1

    def _bulk_add_unchecked(self, pairs):
        """Insert distinct edges without validation (either orientation)."""
        adj = self.adj
        n = 0
        for u, v in pairs:
            if u in adj:
                adj[u].add(v)
            else:
                adj[u] = {v}
            if v in adj:
                adj[v].add(u)
            else:
                adj[v] = {u}
            n += 1
        self.edge_count += n

    def has_edge(self, u, v):
        u, v = canonical_edge(u, v)
        nbrs = self.adj.get(u)
        return nbrs is not None and v in nbrs

    def neighbors(self, v):
        return self.adj.get(int(v), set())

    def degree(self, v):
        return len(self.adj.get(int(v), ()))

    @property
    def vertex_count(self):
        return len(self.adj)

    def vertices(self):
        return sorted(self.adj)

    def edges(self):
        """All edges as canonical pairs, sorted for deterministic output."""
        out = []
        for u in self.adj:
            for v in self.adj[u]:
                if u < v:
                    out.append((u, v))
        out.sort()
        return out

    def edge_arrays(self):
        """Edges as two int64 arrays (canonical, sorted)."""
        es = self.edges()
        if not es:
            return np.empty(0, dtype=np.int64), np.empty(0, dtype=np.int64)
        a = np.array(es, dtype=np.int64)
        return a[:, 0].copy(), a[:, 1].copy()

    def __contains__(self, v):
        return int(v) in self.adj

    def __repr__(self):
        return "AdjacencyGraph(n=%d, m=%d)" % (self.vertex_count, self.edge_count)


class TriangleStats:
    """Exact triangle census: total t, per-edge counts, and the maxima
    J (over edges) and K (over vertices)."""

    def __init__(self, t, per_edge, J, K):
        self.t = t
        self.per_edge = per_edge
        self.J = J
        self.K = K

    def __repr__(self):
        return "TriangleStats(t=%d, J=%d, K=%d)" % (self.t, self.J, self.K)


class EdgePartition:
    """Split of the edge set into heavy and light at threshold 3*sqrt(t/eps).

    An edge is heavy when it lies in strictly more than the threshold many
    triangles ("at most threshold" reads as light, which forces this
    tie-break).  two_light_triangle_count is the number of triangles having
    at least two light edges.
    """

    def __init__(self, heavy, light, threshold, two_light_triangle_count):
        self.heavy = heavy
        self.light = light
        self.threshold = threshold
        self.two_light_triangle_count = two_light_triangle_count

    def __repr__(self):
        return "EdgePartition(heavy=%d, light=%d, threshold=%.3f)" % (
            len(self.heavy), len(self.light), self.threshold)


def _forward_adjacency(g):
    """Neighbors restricted to higher rank, ranking vertices by (degree, id).

    Every triangle {a, b, c} is then found exactly once, at its lowest
    ranked vertex, and the intersection work is O(m^{3/2}) in total.
    """
    rank = {}
    for i, v in enumerate(sorted(g.adj, key=lambda v: (len(g.adj[v]), v))):
        rank[v] = i
    fwd = {}
    for v, nbrs in g.adj.items():
        rv = rank[v]
        fwd[v] = {w for w in nbrs if rank[w] > rv}
    return fwd, rank


def _dense_eligible(g):
    if not g.adj:
        return False
    nmax = max(g.adj) + 1
    if nmax > _DENSE_MAX_N:
        return False
    return g.edge_count >= _DENSE_MIN_FILL * nmax * nmax


def _dense_triangle_count(g):
    nmax = max(g.adj) + 1
    a = np.zeros((nmax, nmax), dtype=np.float32)
    for u, nbrs in g.adj.items():
        for v in nbrs:
            a[u, v] = 1.0
    # entries of a@a are at most nmax < 2^24, exact in float32
    aa = a @ a
    total = float((aa * a).sum(dtype=np.float64))
    return int(round(total)) // 6


def count_triangles_exact(g):
    """Exact number of triangles in g."""
    if g.edge_count == 0:
        return 0
    if _dense_eligible(g):
        return _dense_triangle_count(g)
    fwd, _ = _forward_adjacency(g)
    t = 0
    for v, fv in fwd.items():
        for w in fv:
            t += len(fv & fwd[w])
    return t


def triangle_stats(g):
    """Full census: t, triangles per edge, max per edge (J), max per vertex (K)."""
    per_edge = {}
    per_vertex = {}
    fwd, _ = _forward_adjacency(g)
    t = 0
    for a, fa in fwd.items():
        for b in fa:
            common = fa & fwd[b]
            if not common:
                continue
            t += len(common)
            k = len(common)
            per_edge[canonical_edge(a, b)] = per_edge.get(canonical_edge(a, b), 0) + k
            per_vertex[a] = per_vertex.get(a, 0) + k
            per_vertex[b] = per_vertex.get(b, 0) + k
            for c in common:
                per_edge[canonical_edge(a, c)] = per_edge.get(canonical_edge(a, c), 0) + 1
                per_edge[canonical_edge(b, c)] = per_edge.get(canonical_edge(b, c), 0) + 1
                per_vertex[c] = per_vertex.get(c, 0) + 1
    J = max(per_edge.values(), default=0)
    K = max(per_vertex.values(), default=0)
    return TriangleStats(t, per_edge, J, K)


def classify_edges(g, epsilon, stats=None):
    """Partition edges into heavy and light at threshold 3*sqrt(t/epsilon).

    Undefined on triangle-free graphs and only meaningful for
    0 < epsilon < 1/2; both are rejected.  Pass a precomputed census in
    `stats` to avoid recounting.
    """
    if not (0.0 < epsilon < 0.5):
        raise GraphError("epsilon must lie in (0, 1/2), got %r" % (epsilon,))
    if stats is None:
        stats = triangle_stats(g)
    t = stats.t
    if t <= 0:
        raise GraphError("edge classification needs a graph with at least one triangle")
    threshold = 3.0 * (t / epsilon) ** 0.5
    heavy = set()
    light = set()
    per_edge = stats.per_edge
    for e in g.edges():
        if per_edge.get(e, 0) > threshold:
            heavy.add(e)
        else:
            light.add(e)
    # triangles with at least two light edges, found by one more enumeration
    fwd, _ = _forward_adjacency(g)
    s_count = 0
    for a, fa in fwd.items():
        for b in fa:
            for c in fa & fwd[b]:
                n_light = ((canonical_edge(a, b) in light)
                           + (canonical_edge(a, c) in light)
                           + (canonical_edge(b, c) in light))
                if n_light >= 2:
                    s_count += 1
    return EdgePartition(frozenset(heavy), frozenset(light), threshold, s_count)


def count_new_triangles(sampled, e):
    """Number of triangles that edge e closes against the sampled graph,
    i.e. common neighbors of its endpoints there."""
    u, v = canonical_edge(*e)
    nu = sampled.adj.get(u)
    if not nu:
        return 0
    nv = sampled.adj.get(v)
    if not nv:
        return 0
    return len(nu & nv)
