"""Test graphs and hard-instance gadgets with known triangle counts.

Ground truth is never assumed: gen_planted re-counts its output before
returning it, and the gadgets are small enough that the test suite checks
them against the exact counter as well.
"""

import math

import numpy as np

from .graph import AdjacencyGraph, GraphError, count_triangles_exact
from .stream import EdgeStream, Order, open_stream, _ExpanderSource, check_seed


class GeneratorError(ValueError):
    pass


def gen_planted(m, t_target, seed=0):
    """Graph with exactly t_target triangles and m edges.

    t_target vertex-disjoint 3-cliques, then a random bipartite filler on
    fresh vertices for the remaining m - 3*t_target edges.  Bipartite
    filler is triangle-free and shares no vertex with the cliques, so the
    count is exact by construction; we still verify it with the oracle.
    """
    m = int(m)
    t_target = int(t_target)
    if t_target < 0 or m < 0:
        raise GeneratorError("m and t_target must be non-negative")
    if 3 * t_target > m:
        raise GeneratorError("need m >= 3*t_target (each planted triangle "
                             "spends 3 edges); got m=%d, t_target=%d" % (m, t_target))
    g = AdjacencyGraph()
    for i in range(t_target):
        a, b, c = 3 * i, 3 * i + 1, 3 * i + 2
        g.add_edge(a, b)
        g.add_edge(a, c)
        g.add_edge(b, c)
    fill = m - 3 * t_target
    if fill > 0:
        side = max(1, math.isqrt(fill - 1) + 1)
        while side * side < fill:
            side += 1
        base = 3 * t_target
        rng = np.random.default_rng(np.random.SeedSequence((check_seed(seed), 7)))
        picks = rng.choice(side * side, size=fill, replace=False)
        for x in picks.tolist():
            i, j = divmod(x, side)
            g.add_edge(base + i, base + side + j)
    got = count_triangles_exact(g)
    if got != t_target:
        raise GeneratorError("internal check failed: wanted %d triangles, built %d"
                             % (t_target, got))
    return g


def gen_complete(n):
    """Complete graph K_n."""
    n = int(n)
    if n < 1:
        raise GeneratorError("n must be at least 1")
    g = AdjacencyGraph(vertices=range(n))
    for u in range(n):
        for v in range(u + 1, n):
            g.add_edge(u, v)
    return g


def gen_tripartite(a, b, c):
    """Complete tripartite graph; every triangle takes one vertex per part,
    so t = a*b*c and m = ab + ac + bc."""
    a, b, c = int(a), int(b), int(c)
    if min(a, b, c) < 1:
        raise GeneratorError("all three part sizes must be at least 1")
    g = AdjacencyGraph()
    pa = range(a)
    pb = range(a, a + b)
    pc = range(a + b, a + b + c)
    for u in pa:
        for v in pb:
            g.add_edge(u, v)
    for u in pa:
        for v in pc:
            g.add_edge(u, v)
    for u in pb:
        for v in pc:
            g.add_edge(u, v)
    return g


def blow_up(source, T):
    """Replace every vertex v by copies v*T .. v*T+T-1 and every edge by the
    full T x T biclique between the copy blocks.

    Triangles multiply by T^3 and edges by T^2.  The transform streams:
    each input edge expands to T^2 output edges with O(1) working state, so
    the result is returned as a replayable EdgeStream rather than a
    materialized graph.  Accepts an AdjacencyGraph or an EdgeStream.
    """
    T = int(T)
    if T < 1:
        raise GeneratorError("blow-up factor must be at least 1")
    if isinstance(source, AdjacencyGraph):
        base = open_stream(source)
    elif isinstance(source, EdgeStream):
        base = source
    else:
        raise GeneratorError("blow_up wants an AdjacencyGraph or EdgeStream")

    offsets_i, offsets_j = np.meshgrid(np.arange(T, dtype=np.int64),
                                       np.arange(T, dtype=np.int64), indexing="ij")
    oi = offsets_i.ravel()
    oj = offsets_j.ravel()

    def expand_chunks(chunk_size):
        # emit T^2 copies per input edge, regrouped into chunks of the
        # requested size
        bu = []
        bv = []
        size = 0
        for U, V in base.iter_chunks():
            eu = (U[:, None] * T + oi[None, :]).ravel()
            ev = (V[:, None] * T + oj[None, :]).ravel()
            bu.append(eu)
            bv.append(ev)
            size += eu.size
            while size >= chunk_size:
                cu = np.concatenate(bu)
                cv = np.concatenate(bv)
                yield cu[:chunk_size], cv[:chunk_size]
                bu = [cu[chunk_size:]]
                bv = [cv[chunk_size:]]
                size = bu[0].size
        if size:
            yield np.concatenate(bu), np.concatenate(bv)

    n_out = base.n * T if base.n is not None else None
    max_out = (base.max_vertex_id + 1) * T - 1 if base.max_vertex_id is not None else None
    src = _ExpanderSource(base.m * T * T, expand_chunks, n=n_out, max_id=max_out)
    return EdgeStream(src, order=Order.AS_GIVEN, seed=0, n=n_out, max_vertex_id=max_out)


def _check_bitvector(x, name):
    out = []
    for b in x:
        b = int(b)
        if b not in (0, 1):
            raise GeneratorError("%s must contain only 0s and 1s" % name)
        out.append(b)
    return out


def gen_disjointness(x, y, T):
    """Tripartite gadget whose triangles witness intersections of x and y.

    Vertices: A = one per bit position, B and C of size sqrt(T) each.
    y routes A to B (a_i joined to all of B iff y[i] = 1), x routes C to A
    (c_j joined to a_i for all j iff x[i] = 1), and C x B is complete.
    Position i then contributes sqrt(T)^2 = T triangles iff x[i] = y[i] = 1;
    disjoint vectors give a triangle-free graph and a single shared
    position gives exactly T triangles.
    """
    x = _check_bitvector(x, "x")
    y = _check_bitvector(y, "y")
    if len(x) != len(y):
        raise GeneratorError("x and y must have equal length, got %d and %d"
                             % (len(x), len(y)))
    T = int(T)
    sq = math.isqrt(T)
    if T < 1 or sq * sq != T:
        raise GeneratorError("T must be a positive perfect square, got %d" % T)
    n_len = len(x)
    b0 = n_len
    c0 = n_len + sq
    g = AdjacencyGraph(vertices=range(n_len + 2 * sq))
    for i, bit in enumerate(y):
        if bit:
            for k in range(sq):
                g.add_edge(i, b0 + k)
    for j in range(sq):
        for k in range(sq):
            g.add_edge(c0 + j, b0 + k)
    for i, bit in enumerate(x):
        if bit:
            for j in range(sq):
                g.add_edge(c0 + j, i)
    return g


def gen_disjointness_random(n_len, T, intersecting, seed=0):
    """Random weight-n/2 instance of the disjointness gadget.

    Draws x and y with exactly n_len/2 ones each and |x & y| = 1 when
    intersecting, 0 otherwise (the disjoint case forces y to be the
    complement of x).
    """
    n_len = int(n_len)
    if n_len < 2 or n_len % 2:
        raise GeneratorError("n_len must be a positive even integer, got %d" % n_len)
    w = n_len // 2
    rng = np.random.default_rng(np.random.SeedSequence((check_seed(seed), 8)))
    x = [0] * n_len
    y = [0] * n_len
    if intersecting:
        shared = int(rng.integers(n_len))
        rest = [i for i in range(n_len) if i != shared]
        xs = rng.choice(len(rest), size=w - 1, replace=False)
        x_rest = {rest[i] for i in xs.tolist()}
        pool = [i for i in rest if i not in x_rest]
        if len(pool) < w - 1:
            raise GeneratorError("cannot place both vectors with a single overlap")
        ys = rng.choice(len(pool), size=w - 1, replace=False)
        y_rest = {pool[i] for i in ys.tolist()}
        for i in x_rest | {shared}:
            x[i] = 1
        for i in y_rest | {shared}:
            y[i] = 1
    else:
        xs = rng.choice(n_len, size=w, replace=False)
        for i in xs.tolist():
            x[i] = 1
        for i in range(n_len):
            y[i] = 1 - x[i]
    return gen_disjointness(x, y, T)
