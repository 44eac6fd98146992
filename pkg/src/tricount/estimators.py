"""Sampling estimators for the triangle count of an edge stream.

Four algorithms share one sampling primitive (keep each edge with
probability p):

* alg1: two passes.  Pass 1 keeps a subsample G'.  Pass 2 adds, for every
  stream edge that was not kept, the number of triangles it closes against
  G'.  A fixed triangle is counted when exactly two of its edges are kept,
  which happens with probability 3p^2(1-p), so s / (3p^2(1-p)) is an
  unbiased estimate of t.

* alg1-rand: the same idea in a single pass over a randomly ordered
  stream.  An arriving edge is either counted against the current sample
  (when its coin says drop) or added to it.  A triangle is detected only
  when its last edge in stream order is the dropped one, so the detection
  probability drops to p^2(1-p) and the estimate is s / (p^2(1-p)).

* alg2: two passes, l independent repetitions, each counting r = triangles
  with all three edges kept plus triangles whose two kept edges are closed
  by an unkept stream edge in pass 2.  Per triangle that detection
  probability is 3p^2(1-p) + p^3; each repetition reports
  r / (3p^2(1-p) + p^3) and the output is the minimum over repetitions,
  which trades a small downward bias for one-sided concentration.

* alg2-rand: one-pass random-order version of alg2.  Every arriving edge
  is first counted against the sample, then possibly added.  A triangle is
  detected exactly when its first two edges in stream order were both
  kept, probability p^2, so each repetition reports r / p^2.

Repetition seeds derive from (master_seed, repetition_index); running
repetitions in parallel or serially gives identical reports.
"""

import json
import math
from concurrent.futures import ThreadPoolExecutor

import numpy as np

from .graph import AdjacencyGraph, count_triangles_exact
from .stream import (Order, SpaceMeter, sample_pass, sampler_rng, trial_rng,
                     check_probability)


class Algorithm:
    ALG1_TWO_PASS = "alg1"
    ALG1_ONE_PASS_RANDOM = "alg1-rand"
    ALG2_TWO_PASS = "alg2"
    ALG2_ONE_PASS_RANDOM = "alg2-rand"

    ALL = (ALG1_TWO_PASS, ALG1_ONE_PASS_RANDOM, ALG2_TWO_PASS, ALG2_ONE_PASS_RANDOM)
    ONE_PASS = (ALG1_ONE_PASS_RANDOM, ALG2_ONE_PASS_RANDOM)
    MULTI_TRIAL = (ALG2_TWO_PASS, ALG2_ONE_PASS_RANDOM)


class EstimatorParams:
    """Knobs of a single estimator run."""

    def __init__(self, p, epsilon=None, T=None, l=None, master_seed=0):
        self.p = p
        self.epsilon = epsilon
        self.T = T
        self.l = l
        self.master_seed = master_seed


class EstimateReport:
    """Result of one estimator run, including space accounting."""

    def __init__(self, algorithm, estimate, params, max_stored_edges,
                 passes_used, per_trial_estimates, degenerate=False):
        self.algorithm = algorithm
        self.estimate = estimate
        self.params = params
        self.max_stored_edges = max_stored_edges
        self.passes_used = passes_used
        self.per_trial_estimates = per_trial_estimates
        self.degenerate = degenerate

    def to_json_dict(self):
        d = {
            "algorithm": self.algorithm,
            "estimate": self.estimate,
            "p": self.params.p,
            "epsilon": self.params.epsilon,
            "T": self.params.T,
            "l": self.params.l,
            "seed": self.params.master_seed,
            "max_stored_edges": self.max_stored_edges,
            "passes": self.passes_used,
            "per_trial_estimates": self.per_trial_estimates,
        }
        if self.degenerate:
            d["degenerate"] = True
        return d

    def to_json(self):
        return json.dumps(self.to_json_dict())

    def __repr__(self):
        return "EstimateReport(%s, estimate=%.6g, p=%.6g, stored=%d)" % (
            self.algorithm, self.estimate, self.params.p, self.max_stored_edges)


# ---------------------------------------------------------------------------
# parameter selection

P_CAP_ALG1 = 0.99


def _check_epsilon(epsilon):
    epsilon = float(epsilon)
    if not (0.0 < epsilon <= 0.5):
        raise ValueError("epsilon must lie in (0, 0.5], got %r" % (epsilon,))
    return epsilon


def choose_p_alg1(n, T, epsilon, c1=1.0):
    """Sampling probability for alg1: min(0.99, c1 * eps^{-4/3} sqrt(ln n) / T^{1/3}).

    c1 scales the whole expression; 1.0 is a practical default.  Capped
    below 1 because the two-pass unbiased estimator degenerates at p = 1.
    """
    n = float(n)
    T = int(T)
    epsilon = _check_epsilon(epsilon)
    if n <= 1.0:
        raise ValueError("n must exceed 1, got %r" % (n,))
    if T < 1:
        raise ValueError("T must be a positive integer, got %r" % (T,))
    if not c1 > 0:
        raise ValueError("c1 must be positive, got %r" % (c1,))
    p = c1 * epsilon ** (-4.0 / 3.0) * math.sqrt(math.log(n)) / T ** (1.0 / 3.0)
    return min(P_CAP_ALG1, p)


def choose_p_alg2(T, epsilon):
    """Sampling probability for alg2: min(1, 320 / (eps^3.5 sqrt(T)))."""
    T = int(T)
    epsilon = _check_epsilon(epsilon)
    if T < 1:
        raise ValueError("T must be a positive integer, got %r" % (T,))
    return min(1.0, 320.0 / (epsilon ** 3.5 * math.sqrt(T)))


def choose_repetitions(epsilon):
    """Number of alg2 repetitions: ceil(16 / eps)."""
    epsilon = _check_epsilon(epsilon)
    q = 16.0 / epsilon
    r = round(q)
    # 16/eps often lands a hair off an exact integer in floating point
    if abs(q - r) < 1e-9:
        return int(r)
    return int(math.ceil(q))


# ---------------------------------------------------------------------------
# shared inner loops, also driven exhaustively by the test oracles

def _closures_missing(adj, us, vs, keeps):
    """Pass-2 counting: for every unkept edge, triangles it closes in adj."""
    s = 0
    get = adj.get
    for u, v, k in zip(us, vs, keeps):
        if k:
            continue
        nu = get(u)
        if not nu:
            continue
        nv = get(v)
        if nv:
            s += len(nu & nv)
    return s


def _one_pass_chunk_alg1(adj, us, vs, keeps):
    """Kept edges grow the sample; dropped edges are counted against it."""
    s = 0
    get = adj.get
    for u, v, k in zip(us, vs, keeps):
        if k:
            if u in adj:
                adj[u].add(v)
            else:
                adj[u] = {v}
            if v in adj:
                adj[v].add(u)
            else:
                adj[v] = {u}
        else:
            nu = get(u)
            if nu:
                nv = get(v)
                if nv:
                    s += len(nu & nv)
    return s


def _one_pass_chunk_alg2(adj, us, vs, keeps):
    """Every arriving edge is counted against the sample, then maybe added."""
    s = 0
    get = adj.get
    for u, v, k in zip(us, vs, keeps):
        nu = get(u)
        if nu:
            nv = get(v)
            if nv:
                s += len(nu & nv)
        if k:
            if u in adj:
                adj[u].add(v)
            else:
                adj[u] = {v}
            if v in adj:
                adj[v].add(u)
            else:
                adj[v] = {u}
    return s


def _build_sample(edges, keep):
    g = AdjacencyGraph()
    g._bulk_add_unchecked(e for e, k in zip(edges, keep) if k)
    return g


def alg1_pass2_count(edges, keep):
    """Two-pass counter s for an explicit edge list and keep mask."""
    g = _build_sample(edges, keep)
    us = [e[0] for e in edges]
    vs = [e[1] for e in edges]
    return _closures_missing(g.adj, us, vs, keep)


def alg2_detected_count(edges, keep):
    """Repetition count r: triangles inside the sample plus triangles whose
    third edge streams by unkept."""
    g = _build_sample(edges, keep)
    us = [e[0] for e in edges]
    vs = [e[1] for e in edges]
    return count_triangles_exact(g) + _closures_missing(g.adj, us, vs, keep)


def alg1_one_pass_count(edges_in_order, keep):
    """Single-pass counter s for an explicit arrival order and keep mask."""
    adj = {}
    us = [e[0] for e in edges_in_order]
    vs = [e[1] for e in edges_in_order]
    return _one_pass_chunk_alg1(adj, us, vs, keep)


def alg2_one_pass_count(edges_in_order, keep):
    """Single-pass repetition count r for an explicit arrival order and mask."""
    adj = {}
    us = [e[0] for e in edges_in_order]
    vs = [e[1] for e in edges_in_order]
    return _one_pass_chunk_alg2(adj, us, vs, keep)


# ---------------------------------------------------------------------------
# engines for one alg2 repetition

_DENSE_MAX_N = 2048
_DENSE_FORCE_MAX_N = 8192


def _pick_engine(engine, stream, p):
    if engine not in ("auto", "dense", "sets"):
        raise ValueError("engine must be auto, dense or sets, got %r" % (engine,))
    nmax = stream.max_vertex_id
    if engine == "sets":
        return "sets"
    if engine == "dense":
        if nmax is None or nmax + 1 > _DENSE_FORCE_MAX_N:
            raise ValueError("dense engine needs a known vertex range up to %d"
                             % _DENSE_FORCE_MAX_N)
        return "dense"
    # auto: dense pays off when the matrix is small and the sample is not sparse
    if nmax is not None and nmax + 1 <= _DENSE_MAX_N and p * stream.m >= 8.0 * (nmax + 1):
        return "dense"
    return "sets"


def _alg2_trial_sets(stream, p, make_rng, meter):
    sg = sample_pass(stream, p, make_rng(), meter)
    t_in = count_triangles_exact(sg.graph)
    rng2 = make_rng()
    adj = sg.graph.adj
    s = 0
    for U, V in stream.iter_chunks():
        keep = rng2.random(U.size) < p
        s += _closures_missing(adj, U.tolist(), V.tolist(), keep.tolist())
    return t_in + s


def _alg2_trial_dense(stream, p, make_rng, meter):
    """Same counts as the sets engine, via a float32 adjacency matrix.

    The coin sequence is identical (one uniform per edge in stream order),
    so both engines return the same integer r for the same seed.  Matrix
    entries stay far below 2^24, making the float32 products exact.
    """
    nmax = stream.max_vertex_id + 1
    A = np.zeros((nmax, nmax), dtype=np.float32)
    rng1 = make_rng()
    kept = 0
    for U, V in stream.iter_chunks():
        keep = rng1.random(U.size) < p
        ku = U[keep]
        kv = V[keep]
        A[ku, kv] = 1.0
        A[kv, ku] = 1.0
        kept += int(keep.sum())
    if meter is not None:
        meter.add(kept)
    AA = A @ A
    t_in = int(round(float((AA * A).sum(dtype=np.float64)))) // 6
    rng2 = make_rng()
    s = 0.0
    for U, V in stream.iter_chunks():
        drop = rng2.random(U.size) >= p
        s += float(AA[U[drop], V[drop]].sum(dtype=np.float64))
    return t_in + int(round(s))


def _alg2_trial(stream, p, make_rng, meter, engine):
    if engine == "dense":
        return _alg2_trial_dense(stream, p, make_rng, meter)
    return _alg2_trial_sets(stream, p, make_rng, meter)


# ---------------------------------------------------------------------------
# drivers

def _require_random_order(stream, algorithm):
    if stream.order != Order.RANDOM_PERMUTATION:
        raise ValueError("%s needs a randomly ordered stream; "
                         "open it with order='random'" % algorithm)


def alg1_two_pass(stream, p, seed, epsilon=None, T=None, meter=None):
    """Unbiased two-pass estimate of the triangle count of the stream."""
    p = check_probability(p, allow_one=False)
    if meter is None:
        meter = SpaceMeter()
    sg = sample_pass(stream, p, sampler_rng(seed), meter)
    rng2 = sampler_rng(seed)
    adj = sg.graph.adj
    s = 0
    for U, V in stream.iter_chunks():
        keep = rng2.random(U.size) < p
        s += _closures_missing(adj, U.tolist(), V.tolist(), keep.tolist())
    estimate = s / (3.0 * p * p * (1.0 - p))
    params = EstimatorParams(p, epsilon, T, None, seed)
    return EstimateReport(Algorithm.ALG1_TWO_PASS, estimate, params,
                          meter.max_stored_edges, 2, [estimate])


def alg1_one_pass_random(stream, p, seed, epsilon=None, T=None, meter=None):
    """One-pass variant of alg1 for randomly ordered streams."""
    p = check_probability(p, allow_one=False)
    _require_random_order(stream, Algorithm.ALG1_ONE_PASS_RANDOM)
    if meter is None:
        meter = SpaceMeter()
    rng = sampler_rng(seed)
    adj = {}
    s = 0
    for U, V in stream.iter_chunks():
        keep = rng.random(U.size) < p
        s += _one_pass_chunk_alg1(adj, U.tolist(), V.tolist(), keep.tolist())
        meter.add(int(keep.sum()))
    estimate = s / (p * p * (1.0 - p))
    params = EstimatorParams(p, epsilon, T, None, seed)
    return EstimateReport(Algorithm.ALG1_ONE_PASS_RANDOM, estimate, params,
                          meter.max_stored_edges, 1, [estimate])


def alg2_single_trial(stream, p, seed, meter=None, engine="auto"):
    """One alg2 repetition; returns r / (3p^2(1-p) + p^3)."""
    p = check_probability(p)
    engine = _pick_engine(engine, stream, p)
    r = _alg2_trial(stream, p, lambda: sampler_rng(seed), meter, engine)
    return r / (3.0 * p * p * (1.0 - p) + p ** 3)


def _run_trials(l, workers, run_one):
    l = int(l)
    if l < 1:
        raise ValueError("l must be a positive integer, got %r" % (l,))
    if workers and workers > 1:
        with ThreadPoolExecutor(max_workers=workers) as pool:
            vals = list(pool.map(run_one, range(l)))
    else:
        vals = [run_one(i) for i in range(l)]
    return vals


def alg2_two_pass(stream, p, l, master_seed, epsilon=None, T=None, meter=None,
                  workers=1, engine="auto"):
    """Min over l independent two-pass repetitions.

    The repetitions conceptually share the same two passes, so the meter
    accumulates all their samples at once: expect about l*p*m stored edges.
    At p = 1 every repetition is exact counting; the report flags that as
    degenerate.
    """
    p = check_probability(p)
    eng = _pick_engine(engine, stream, p)
    if meter is None:
        meter = SpaceMeter()
    denom = 3.0 * p * p * (1.0 - p) + p ** 3

    def run_one(i):
        r = _alg2_trial(stream, p, lambda: trial_rng(master_seed, i), meter, eng)
        return r / denom

    vals = _run_trials(l, workers, run_one)
    params = EstimatorParams(p, epsilon, T, int(l), master_seed)
    return EstimateReport(Algorithm.ALG2_TWO_PASS, min(vals), params,
                          meter.max_stored_edges, 2, vals, degenerate=(p == 1.0))


def alg2_one_pass_random(stream, p, l, master_seed, epsilon=None, T=None,
                         meter=None, workers=1):
    """Min over l one-pass repetitions on a randomly ordered stream."""
    p = check_probability(p)
    _require_random_order(stream, Algorithm.ALG2_ONE_PASS_RANDOM)
    if meter is None:
        meter = SpaceMeter()
    denom = p * p

    def run_one(i):
        rng = trial_rng(master_seed, i)
        adj = {}
        r = 0
        for U, V in stream.iter_chunks():
            keep = rng.random(U.size) < p
            r += _one_pass_chunk_alg2(adj, U.tolist(), V.tolist(), keep.tolist())
            meter.add(int(keep.sum()))
        return r / denom

    vals = _run_trials(l, workers, run_one)
    params = EstimatorParams(p, epsilon, T, int(l), master_seed)
    return EstimateReport(Algorithm.ALG2_ONE_PASS_RANDOM, min(vals), params,
                          meter.max_stored_edges, 1, vals, degenerate=(p == 1.0))
