"""Command line front end.

Subcommands:
  gen       write a generated graph as an edge list file
  exact     exact triangle count of an edge list file
  estimate  run one estimator, JSON report on stdout
  bench     sweep a parameter, CSV of per-run rows

Exit codes: 0 success, 1 I/O or parse failure, 2 invalid parameters.
Identical invocations with the same seed produce byte-identical output,
except for the wall_time_ms column of bench CSV.
"""

import argparse
import sys
import time

import numpy as np

from .edgelist import EdgeListParseError, read_edge_list, write_edge_list
from .graph import (AdjacencyGraph, DuplicateEdgeError, GraphError,
                    count_triangles_exact, triangle_stats, _dense_eligible)
from .stream import Order, open_stream, order_rng, bench_seed
from .estimators import (Algorithm, choose_p_alg1, choose_p_alg2,
                         choose_repetitions, alg1_two_pass,
                         alg1_one_pass_random, alg2_two_pass,
                         alg2_one_pass_random, P_CAP_ALG1)
from . import generators

CSV_HEADER = ("algorithm,m,n,t_true,T,epsilon,p,l,seed,estimate,"
              "relative_error,max_stored_edges,wall_time_ms")

# above this, gen skips printing the exact count for sparse instances
_SUMMARY_SETS_MAX_M = 100_000


class ParamError(ValueError):
    pass


def _fmt(x):
    if x is None:
        return ""
    if isinstance(x, float):
        return repr(x)
    return str(x)


def _summary_count(g):
    if _dense_eligible(g) or g.edge_count <= _SUMMARY_SETS_MAX_M:
        return count_triangles_exact(g)
    return None


def _parse_bits(s, name):
    if not s or any(ch not in "01" for ch in s):
        raise ParamError("%s must be a nonempty string of 0s and 1s" % name)
    return [int(ch) for ch in s]


# ---------------------------------------------------------------------------
# gen

def _cmd_gen(args):
    kind = args.kind
    if kind == "planted":
        g = generators.gen_planted(args.m, args.t, args.seed)
    elif kind == "complete":
        if args.n is None:
            raise ParamError("gen complete needs --n")
        g = generators.gen_complete(args.n)
    elif kind == "tripartite":
        g = generators.gen_tripartite(args.a, args.b, args.c)
    elif kind == "blowup":
        if args.input is None:
            raise ParamError("gen blowup needs --input")
        if args.T is None:
            raise ParamError("gen blowup needs --T")
        stream = open_stream(args.input)
        out = generators.blow_up(stream, args.T)
        edges = out.iter_edges()
        if args.shuffle is not None:
            edges = list(edges)
            perm = order_rng(args.shuffle).permutation(len(edges))
            edges = [edges[i] for i in perm]
        m = write_edge_list(args.out, edges)
        n = out.n if out.n is not None else "?"
        g2 = None
        if m <= _SUMMARY_SETS_MAX_M:
            g2 = AdjacencyGraph()
            g2._bulk_add_unchecked(read_edge_list(args.out))
        t = _summary_count(g2) if g2 is not None else None
        print("wrote %s: n=%s m=%d%s" % (args.out, n, m,
                                         "" if t is None else " t=%d" % t))
        return 0
    elif kind == "disj":
        if (args.x is None) != (args.y is None):
            raise ParamError("give both --x and --y or neither")
        if args.x is not None:
            if args.T is None:
                raise ParamError("gen disj needs --T")
            g = generators.gen_disjointness(_parse_bits(args.x, "--x"),
                                            _parse_bits(args.y, "--y"), args.T)
        else:
            if args.n is None or args.T is None:
                raise ParamError("gen disj needs --n and --T (or explicit --x/--y)")
            g = generators.gen_disjointness_random(args.n, args.T,
                                                   args.intersecting, args.seed)
    else:
        raise ParamError("unknown generator kind %r" % kind)

    edges = g.edges()
    if args.shuffle is not None:
        perm = order_rng(args.shuffle).permutation(len(edges))
        edges = [edges[i] for i in perm]
    write_edge_list(args.out, edges)
    t = _summary_count(g)
    print("wrote %s: n=%d m=%d%s" % (args.out, g.vertex_count, g.edge_count,
                                     "" if t is None else " t=%d" % t))
    return 0


# ---------------------------------------------------------------------------
# exact

def _cmd_exact(args):
    g = AdjacencyGraph()
    g._bulk_add_unchecked(read_edge_list(args.input))
    if args.stats:
        st = triangle_stats(g)
        print('{"n": %d, "m": %d, "t": %d, "J": %d, "K": %d}'
              % (g.vertex_count, g.edge_count, st.t, st.J, st.K))
    else:
        print('{"n": %d, "m": %d, "t": %d}'
              % (g.vertex_count, g.edge_count, count_triangles_exact(g)))
    return 0


# ---------------------------------------------------------------------------
# estimate

def _default_order(algorithm):
    return Order.RANDOM_PERMUTATION if algorithm in Algorithm.ONE_PASS else Order.AS_GIVEN


def _resolve_order(args):
    if args.order is None:
        return _default_order(args.algorithm)
    if args.algorithm in Algorithm.ONE_PASS and args.order == Order.AS_GIVEN:
        raise ParamError("%s needs --order random (its guarantee only holds on "
                         "randomly ordered streams)" % args.algorithm)
    return args.order


def _resolve_p(args, n):
    """Explicit --p wins; otherwise derive it from the promise --T."""
    if args.p is not None:
        return float(args.p), False
    if args.T is None:
        raise ParamError("give --p, or --T so p can be derived")
    if args.algorithm in (Algorithm.ALG1_TWO_PASS, Algorithm.ALG1_ONE_PASS_RANDOM):
        if n is None or n <= 1:
            raise ParamError("cannot derive p: the input has fewer than 2 vertices")
        p = choose_p_alg1(n, args.T, args.epsilon, args.c1)
        clamped = p == P_CAP_ALG1
    else:
        p = choose_p_alg2(args.T, args.epsilon)
        clamped = p == 1.0
    return p, clamped


def _cmd_estimate(args):
    order = _resolve_order(args)
    stream = open_stream(args.input, order=order, seed=args.seed)
    p, clamped = _resolve_p(args, stream.n)
    if clamped:
        print("warning: derived p hit its cap (%g); space savings degenerate"
              % p, file=sys.stderr)
    alg = args.algorithm
    if alg in Algorithm.MULTI_TRIAL:
        l = args.l if args.l is not None else choose_repetitions(args.epsilon)
    else:
        l = None
    if alg == Algorithm.ALG1_TWO_PASS:
        rep = alg1_two_pass(stream, p, args.seed, epsilon=args.epsilon, T=args.T)
    elif alg == Algorithm.ALG1_ONE_PASS_RANDOM:
        rep = alg1_one_pass_random(stream, p, args.seed, epsilon=args.epsilon, T=args.T)
    elif alg == Algorithm.ALG2_TWO_PASS:
        rep = alg2_two_pass(stream, p, l, args.seed, epsilon=args.epsilon,
                            T=args.T, workers=args.workers, engine=args.engine)
    else:
        rep = alg2_one_pass_random(stream, p, l, args.seed, epsilon=args.epsilon,
                                   T=args.T, workers=args.workers)
    print(rep.to_json())
    return 0


# ---------------------------------------------------------------------------
# bench

def _parse_gen_spec(spec):
    """Parse 'kind:key=val,key=val' generator specs for bench."""
    kind, _, rest = spec.partition(":")
    params = {}
    if rest:
        for part in rest.split(","):
            key, _, val = part.partition("=")
            if not key or not val:
                raise ParamError("bad generator spec %r" % spec)
            params[key] = int(val)
    if kind == "planted":
        return generators.gen_planted(params.get("m", 0), params.get("t", 0),
                                      params.get("seed", 0))
    if kind == "complete":
        return generators.gen_complete(params.get("n", 0))
    if kind == "tripartite":
        return generators.gen_tripartite(params.get("a", 0), params.get("b", 0),
                                         params.get("c", 0))
    if kind == "disj":
        return generators.gen_disjointness_random(
            params.get("n", 0), params.get("T", 0),
            bool(params.get("intersecting", 0)), params.get("seed", 0))
    raise ParamError("unknown generator kind %r in spec" % kind)


def _parse_sweep(sweep):
    if sweep is None:
        return None, None
    key, _, vals = sweep.partition("=")
    key = key.strip()
    if key not in ("p", "epsilon") or not vals:
        raise ParamError("--sweep wants 'p=v1,v2,...' or 'epsilon=v1,v2,...'")
    try:
        values = [float(v) for v in vals.split(",")]
    except ValueError:
        raise ParamError("bad sweep values in %r" % sweep)
    return key, values


def _predict_oracle_seconds(g):
    if _dense_eligible(g):
        n = (max(g.adj) + 1) if g.adj else 1
        return n ** 3 / 5e9
    return g.edge_count ** 1.5 / 2e7


def _cmd_bench(args):
    if (args.input is None) == (args.gen is None):
        raise ParamError("bench needs exactly one of --input or --gen")
    if args.input is not None:
        edges = read_edge_list(args.input)
        g = AdjacencyGraph()
        g._bulk_add_unchecked(edges)
    else:
        g = _parse_gen_spec(args.gen)
        edges = g.edges()

    predicted = _predict_oracle_seconds(g)
    if predicted > args.oracle_budget:
        raise ParamError("exact count would take about %.0f s, over the budget "
                         "of %.0f s (raise --oracle-budget to force)"
                         % (predicted, args.oracle_budget))
    t_true = count_triangles_exact(g)
    m = g.edge_count
    n = g.vertex_count

    sweep_key, sweep_vals = _parse_sweep(args.sweep)
    if sweep_key is None:
        points = [(args.epsilon, args.p)]
    elif sweep_key == "p":
        points = [(args.epsilon, v) for v in sweep_vals]
    else:
        points = [(v, None if args.p is None else args.p) for v in sweep_vals]

    alg = args.algorithm
    arr = np.array(edges, dtype=np.int64) if edges else np.empty((0, 2), dtype=np.int64)
    U, V = (arr[:, 0].copy(), arr[:, 1].copy())
    base_stream = open_stream((U, V), validate=False)

    rows = []
    for pi, (eps, p_fixed) in enumerate(points):
        if p_fixed is not None:
            p = float(p_fixed)
        elif args.T is not None:
            if alg in (Algorithm.ALG1_TWO_PASS, Algorithm.ALG1_ONE_PASS_RANDOM):
                p = choose_p_alg1(max(n, 2), args.T, eps, args.c1)
            else:
                p = choose_p_alg2(args.T, eps)
        else:
            raise ParamError("give --p, a p sweep, or --T so p can be derived")
        if alg in Algorithm.MULTI_TRIAL:
            l = args.l if args.l is not None else choose_repetitions(eps)
        else:
            l = None
        for ti in range(args.trials):
            seed = bench_seed(args.seed, pi, ti)
            t0 = time.perf_counter()
            if alg in Algorithm.ONE_PASS:
                stream = open_stream((U, V), order=Order.RANDOM_PERMUTATION,
                                     seed=seed, validate=False)
            else:
                stream = base_stream
            if alg == Algorithm.ALG1_TWO_PASS:
                rep = alg1_two_pass(stream, p, seed, epsilon=eps, T=args.T)
            elif alg == Algorithm.ALG1_ONE_PASS_RANDOM:
                rep = alg1_one_pass_random(stream, p, seed, epsilon=eps, T=args.T)
            elif alg == Algorithm.ALG2_TWO_PASS:
                rep = alg2_two_pass(stream, p, l, seed, epsilon=eps, T=args.T,
                                    workers=args.workers, engine=args.engine)
            else:
                rep = alg2_one_pass_random(stream, p, l, seed, epsilon=eps,
                                           T=args.T, workers=args.workers)
            ms = (time.perf_counter() - t0) * 1e3
            rel = abs(rep.estimate - t_true) / t_true if t_true > 0 else None
            rows.append((pi, ti, [alg, m, n, t_true, args.T, eps, p, l, seed,
                                  rep.estimate, rel, rep.max_stored_edges,
                                  "%.3f" % ms]))

    rows.sort(key=lambda r: (r[0], r[1]))
    lines = [CSV_HEADER]
    for _, _, row in rows:
        lines.append(",".join(_fmt(x) for x in row))
    text = "\n".join(lines) + "\n"
    if args.out:
        with open(args.out, "w") as f:
            f.write(text)
        print("wrote %s: %d rows" % (args.out, len(rows)))
    else:
        sys.stdout.write(text)
    return 0


# ---------------------------------------------------------------------------

def _add_estimator_flags(sp):
    sp.add_argument("algorithm", choices=list(Algorithm.ALL))
    sp.add_argument("--input", required=True, help="edge list file")
    sp.add_argument("--order", choices=list(Order.ALL), default=None,
                    help="stream order; default: given for two-pass "
                         "algorithms, random for one-pass ones")
    sp.add_argument("--p", type=float, default=None, help="sampling probability")
    sp.add_argument("--epsilon", type=float, default=0.5, help="target relative error")
    sp.add_argument("--T", type=int, default=None,
                    help="promised lower bound on the triangle count; "
                         "required when --p is omitted")
    sp.add_argument("--l", type=int, default=None,
                    help="alg2 repetitions (default: ceil(16/epsilon))")
    sp.add_argument("--seed", type=int, default=0)
    sp.add_argument("--c1", type=float, default=1.0,
                    help="scale constant for the alg1 p formula")
    sp.add_argument("--workers", type=int, default=1,
                    help="threads for alg2 repetitions (result is identical)")
    sp.add_argument("--engine", choices=["auto", "dense", "sets"], default="auto",
                    help="alg2 counting engine")


def build_parser():
    ap = argparse.ArgumentParser(
        prog="tricount",
        description="Streaming triangle counting: generators, exact counts, "
                    "sampling estimators, benchmarks.")
    sub = ap.add_subparsers(dest="command", required=True)

    g = sub.add_parser("gen", help="generate a graph and write an edge list")
    g.add_argument("kind", choices=["planted", "complete", "tripartite",
                                    "blowup", "disj"])
    g.add_argument("--out", required=True, help="output edge list path")
    g.add_argument("--m", type=int, default=0, help="planted: edge count")
    g.add_argument("--t", type=int, default=0, help="planted: triangle count")
    g.add_argument("--n", type=int, default=None,
                   help="complete: vertex count; disj: vector length")
    g.add_argument("--a", type=int, default=1, help="tripartite part size")
    g.add_argument("--b", type=int, default=1, help="tripartite part size")
    g.add_argument("--c", type=int, default=1, help="tripartite part size")
    g.add_argument("--T", type=int, default=None,
                   help="blowup factor / disj triangle count (perfect square)")
    g.add_argument("--input", default=None, help="blowup: base edge list")
    g.add_argument("--intersecting", action="store_true",
                   help="disj: vectors share exactly one position")
    g.add_argument("--x", default=None, help="disj: explicit bit string")
    g.add_argument("--y", default=None, help="disj: explicit bit string")
    g.add_argument("--seed", type=int, default=0)
    g.add_argument("--shuffle", type=int, default=None, metavar="SEED",
                   help="permute the emitted edge order")
    g.set_defaults(func=_cmd_gen)

    e = sub.add_parser("exact", help="exact triangle count of an edge list")
    e.add_argument("--input", required=True)
    e.add_argument("--stats", action="store_true",
                   help="also report the per-edge and per-vertex maxima J and K")
    e.set_defaults(func=_cmd_exact)

    est = sub.add_parser("estimate", help="run one estimator, JSON on stdout")
    _add_estimator_flags(est)
    est.set_defaults(func=_cmd_estimate)

    b = sub.add_parser("bench", help="parameter sweep, CSV rows")
    b.add_argument("algorithm", choices=list(Algorithm.ALL))
    b.add_argument("--input", default=None, help="edge list file")
    b.add_argument("--gen", default=None,
                   help="generator spec, e.g. planted:m=2000,t=200,seed=1")
    b.add_argument("--sweep", default=None,
                   help="'p=0.1,0.2,...' or 'epsilon=0.1,0.25,...'")
    b.add_argument("--trials", type=int, default=10, help="runs per sweep point")
    b.add_argument("--p", type=float, default=None)
    b.add_argument("--epsilon", type=float, default=0.5)
    b.add_argument("--T", type=int, default=None)
    b.add_argument("--l", type=int, default=None)
    b.add_argument("--seed", type=int, default=0, help="master seed for row seeds")
    b.add_argument("--c1", type=float, default=1.0)
    b.add_argument("--workers", type=int, default=1)
    b.add_argument("--engine", choices=["auto", "dense", "sets"], default="auto")
    b.add_argument("--out", default=None, help="CSV path (default stdout)")
    b.add_argument("--oracle-budget", type=float, default=60.0,
                   help="refuse inputs whose exact count would exceed this "
                        "many seconds")
    b.set_defaults(func=_cmd_bench)
    return ap


def main(argv=None):
    ap = build_parser()
    args = ap.parse_args(argv)
    try:
        return args.func(args)
    except (EdgeListParseError, DuplicateEdgeError, OSError) as exc:
        print("error: %s" % exc, file=sys.stderr)
        return 1
    except (ParamError, GraphError, ValueError) as exc:
        print("error: %s" % exc, file=sys.stderr)
        return 2


if __name__ == "__main__":
    sys.exit(main())
