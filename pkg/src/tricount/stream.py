"""Replayable edge streams, pass-1 sampling, and space accounting.

An EdgeStream is a finite sequence of distinct edges that can be traversed
any number of times; every traversal of the same instance yields the exact
same order.  The order is either the source order or a random permutation
drawn once at construction from a seed, never redrawn between passes.

Streams over files do not load the edge list into memory during passes;
they read through a bounded buffer (TRICOUNT_STREAM_BUFFER edges, default
65536).  Opening a stream runs one validation scan that temporarily keeps
a set of seen edges to reject duplicates; pass `validate=False` to skip it
for trusted inputs.

Randomness is split by purpose.  The permutation, the sampling coins and
the per-trial substreams are derived from (seed, tag) so that reusing one
integer seed across roles never correlates them, and so that trials run in
parallel or serially with identical results.
"""

import os
import threading

import numpy as np

from .graph import AdjacencyGraph, GraphError, DuplicateEdgeError
from .edgelist import parse_edge_line, EdgeListParseError


class Order:
    AS_GIVEN = "given"
    RANDOM_PERMUTATION = "random"

    ALL = (AS_GIVEN, RANDOM_PERMUTATION)


# domain tags for seed derivation; arbitrary but fixed distinct constants
_ORDER_TAG = 101
_SAMPLER_TAG = 202
_TRIAL_TAG = 303
_BENCH_TAG = 404


def check_seed(seed):
    seed = int(seed)
    if seed < 0:
        raise ValueError("seeds must be non-negative integers, got %d" % seed)
    return seed


def order_rng(seed):
    """Generator that drives stream permutations for this seed."""
    return np.random.default_rng(np.random.SeedSequence((check_seed(seed), _ORDER_TAG)))


def sampler_rng(seed):
    """Generator that drives sampling coins for this seed."""
    return np.random.default_rng(np.random.SeedSequence((check_seed(seed), _SAMPLER_TAG)))


def trial_rng(master_seed, trial_index):
    """Independent substream for one repetition; scheduling never matters."""
    return np.random.default_rng(
        np.random.SeedSequence((check_seed(master_seed), _TRIAL_TAG, int(trial_index))))


def bench_seed(master_seed, point_index, trial_index):
    """Small reproducible per-row seed for benchmark sweeps."""
    ss = np.random.SeedSequence(
        (check_seed(master_seed), _BENCH_TAG, int(point_index), int(trial_index)))
    return int(ss.generate_state(1)[0])


def default_chunk_size():
    try:
        n = int(os.environ.get("TRICOUNT_STREAM_BUFFER", "65536"))
    except ValueError:
        n = 65536
    return max(1, n)


class _MemorySource:
    """Edges held as two int64 arrays."""

    kind = "memory"
    seekable = True

    def __init__(self, U, V):
        self.U = U
        self.V = V
        self.m = int(U.size)

    def iter_chunks(self, chunk_size):
        for s in range(0, self.m, chunk_size):
            yield self.U[s:s + chunk_size], self.V[s:s + chunk_size]

    def take(self, idx):
        return self.U[idx], self.V[idx]

    def scan(self):
        U, V = self.U, self.V
        if U.size == 0:
            return 0, None
        if (U == V).any():
            bad = int(U[(U == V).argmax()])
            raise GraphError("self-loop at vertex %d" % bad)
        if U.size and min(U.min(), V.min()) < 0:
            raise GraphError("vertex ids must be non-negative")
        pairs = np.stack([np.minimum(U, V), np.maximum(U, V)], axis=1)
        uniq = np.unique(pairs, axis=0)
        if uniq.shape[0] != pairs.shape[0]:
            # locate one duplicate for the message
            seen = set()
            for u, v in map(tuple, pairs):
                if (u, v) in seen:
                    raise DuplicateEdgeError("duplicate edge (%d, %d)" % (u, v))
                seen.add((u, v))
        n = int(np.unique(pairs).size)
        max_id = int(pairs.max())
        return n, max_id


class _FileSource:
    """Edges read from an edge list file; passes re-read the file."""

    kind = "file"
    seekable = True

    def __init__(self, path):
        self.path = str(path)
        self.m = None
        self._offsets = None

    def scan(self):
        offsets = []
        seen = set()
        verts = set()
        pos = 0
        with open(self.path, "rb") as f:
            lineno = 0
            while True:
                raw = f.readline()
                if not raw:
                    break
                lineno += 1
                e = parse_edge_line(raw.decode("ascii", errors="replace"), lineno)
                if e is not None:
                    if e in seen:
                        raise EdgeListParseError("duplicate edge (%d, %d)" % e, lineno)
                    seen.add(e)
                    verts.add(e[0])
                    verts.add(e[1])
                    offsets.append(pos)
                pos += len(raw)
        self.m = len(offsets)
        self._offsets = np.array(offsets, dtype=np.int64)
        n = len(verts)
        max_id = max(verts) if verts else None
        return n, max_id

    def _require_offsets(self):
        if self._offsets is None:
            self.scan()

    def iter_chunks(self, chunk_size):
        bu = []
        bv = []
        with open(self.path, "r") as f:
            for line in f:
                e = parse_edge_line(line)
                if e is None:
                    continue
                bu.append(e[0])
                bv.append(e[1])
                if len(bu) >= chunk_size:
                    yield np.array(bu, dtype=np.int64), np.array(bv, dtype=np.int64)
                    bu = []
                    bv = []
        if bu:
            yield np.array(bu, dtype=np.int64), np.array(bv, dtype=np.int64)

    def take(self, idx):
        self._require_offsets()
        off = self._offsets
        bu = np.empty(len(idx), dtype=np.int64)
        bv = np.empty(len(idx), dtype=np.int64)
        with open(self.path, "rb") as f:
            for k, i in enumerate(idx):
                f.seek(off[i])
                e = parse_edge_line(f.readline().decode("ascii", errors="replace"))
                bu[k] = e[0]
                bv[k] = e[1]
        return bu, bv


class _ExpanderSource:
    """Lazily expanded stream (used by the blow-up transform); sequential only."""

    kind = "expanded"
    seekable = False

    def __init__(self, m, chunk_iter_factory, n=None, max_id=None):
        self.m = m
        self._factory = chunk_iter_factory
        self._n = n
        self._max_id = max_id

    def iter_chunks(self, chunk_size):
        return self._factory(chunk_size)

    def scan(self):
        return self._n, self._max_id


class EdgeStream:
    """A replayable sequence of distinct edges with a fixed traversal order."""

    def __init__(self, source, order=Order.AS_GIVEN, seed=0, n=None, max_vertex_id=None):
        if order not in Order.ALL:
            raise ValueError("unknown order %r (use %r or %r)" %
                             (order, Order.AS_GIVEN, Order.RANDOM_PERMUTATION))
        self._source = source
        self.order = order
        self.seed = check_seed(seed)
        self.m = source.m
        self.n = n
        self.max_vertex_id = max_vertex_id
        if order == Order.RANDOM_PERMUTATION:
            if not source.seekable:
                raise ValueError("this stream source only supports as-given order")
            self._perm = order_rng(self.seed).permutation(self.m)
        else:
            self._perm = None

    @property
    def source_kind(self):
        return self._source.kind

    def iter_chunks(self, chunk_size=None):
        """Yield (U, V) int64 array pairs covering one full pass."""
        cs = chunk_size if chunk_size else default_chunk_size()
        if self._perm is None:
            yield from self._source.iter_chunks(cs)
        else:
            for s in range(0, self.m, cs):
                yield self._source.take(self._perm[s:s + cs])

    def iter_edges(self, chunk_size=None):
        """Yield (u, v) integer tuples covering one full pass."""
        for U, V in self.iter_chunks(chunk_size):
            yield from zip(U.tolist(), V.tolist())

    def __len__(self):
        return self.m

    def __repr__(self):
        return "EdgeStream(kind=%s, m=%d, order=%s, seed=%d)" % (
            self.source_kind, self.m, self.order, self.seed)


def _memory_source_from(source):
    if isinstance(source, AdjacencyGraph):
        U, V = source.edge_arrays()
        return _MemorySource(U, V)
    if isinstance(source, tuple) and len(source) == 2 and isinstance(source[0], np.ndarray):
        U = np.asarray(source[0], dtype=np.int64)
        V = np.asarray(source[1], dtype=np.int64)
        if U.shape != V.shape:
            raise ValueError("endpoint arrays must have equal length")
        return _MemorySource(U, V)
    pairs = list(source)
    if not pairs:
        return _MemorySource(np.empty(0, dtype=np.int64), np.empty(0, dtype=np.int64))
    arr = np.array(pairs, dtype=np.int64)
    if arr.ndim != 2 or arr.shape[1] != 2:
        raise ValueError("in-memory edge source must be pairs of vertex ids")
    return _MemorySource(arr[:, 0].copy(), arr[:, 1].copy())


def open_stream(source, order=Order.AS_GIVEN, seed=0, validate=True):
    """Build an EdgeStream from a file path, an AdjacencyGraph, a pair of
    endpoint arrays, or any iterable of (u, v) pairs.

    Validation scans the whole input once: malformed lines and duplicate
    edges are errors.  The scan also records the vertex count and the
    largest id, which the estimators use for parameter selection.
    """
    if isinstance(source, (str, os.PathLike)):
        src = _FileSource(source)
        n, max_id = src.scan()
    else:
        src = _memory_source_from(source)
        if validate:
            n, max_id = src.scan()
        else:
            n, max_id = None, None
            if src.m:
                max_id = int(max(src.U.max(), src.V.max()))
    return EdgeStream(src, order=order, seed=seed, n=n, max_vertex_id=max_id)


class SpaceMeter:
    """Counts stored edges in words; max is monotone over a run.

    Thread safe so concurrent repetitions can share one meter; because
    every repetition only ever adds, the final maximum is the sum of the
    per-repetition sample sizes no matter how they interleave.
    """

    def __init__(self):
        self._lock = threading.Lock()
        self.current_stored_edges = 0
        self.max_stored_edges = 0

    def add(self, k):
        with self._lock:
            self.current_stored_edges += int(k)
            if self.current_stored_edges > self.max_stored_edges:
                self.max_stored_edges = self.current_stored_edges

    def release(self, k):
        with self._lock:
            self.current_stored_edges -= int(k)
            if self.current_stored_edges < 0:
                raise ValueError("released more edges than were stored")


class SampledGraph:
    """Subgraph kept by one sampling pass."""

    def __init__(self, graph, p):
        self.graph = graph
        self.p = p

    @property
    def sampled_count(self):
        return self.graph.edge_count

    def __repr__(self):
        return "SampledGraph(p=%.4f, edges=%d)" % (self.p, self.sampled_count)


def check_probability(p, allow_one=True):
    p = float(p)
    ok = 0.0 < p <= 1.0 if allow_one else 0.0 < p < 1.0
    if not ok:
        raise ValueError("p must lie in %s, got %r" %
                         ("(0, 1]" if allow_one else "(0, 1)", p))
    return p


def sample_pass(stream, p, rng, meter=None):
    """One pass that keeps each edge independently with probability p.

    The coins come from `rng` in stream order, one uniform draw per edge,
    so a fresh generator seeded the same way reproduces the sample exactly.
    """
    p = check_probability(p)
    g = AdjacencyGraph()
    for U, V in stream.iter_chunks():
        keep = rng.random(U.size) < p
        ku = U[keep]
        kv = V[keep]
        g._bulk_add_unchecked(zip(ku.tolist(), kv.tolist()))
        if meter is not None:
            meter.add(int(keep.sum()))
    return SampledGraph(g, p)
