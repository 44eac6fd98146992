"""Edge streams: replay, ordering, sampling, and space accounting.

Shows that a stream replays identically pass after pass (the property the
two-pass estimators rely on), that a random-order stream fixes its
permutation at construction, and how the sampling pass and the space meter
interact.
"""

import os
import tempfile

from tricount import (gen_planted, open_stream, Order, SpaceMeter,
                      sample_pass, sampler_rng, write_edge_list)


def main():
    g = gen_planted(30, 3, seed=4)
    edges = g.edges()

    print("as-given stream, two passes:")
    s = open_stream(edges)
    print("  pass 1:", list(s.iter_edges())[:6], "...")
    print("  pass 2:", list(s.iter_edges())[:6], "...")

    print("random-order stream, seed 11, two passes (same permutation):")
    r = open_stream(edges, order=Order.RANDOM_PERMUTATION, seed=11)
    print("  pass 1:", list(r.iter_edges())[:6], "...")
    print("  pass 2:", list(r.iter_edges())[:6], "...")
    r2 = open_stream(edges, order=Order.RANDOM_PERMUTATION, seed=12)
    print("  seed 12:", list(r2.iter_edges())[:6], "...")

    with tempfile.NamedTemporaryFile("w", suffix=".el", delete=False) as f:
        path = f.name
    write_edge_list(path, edges)
    sf = open_stream(path, order=Order.RANDOM_PERMUTATION, seed=11)
    same = list(sf.iter_edges()) == list(r.iter_edges())
    os.unlink(path)
    print("file-backed stream with the same seed matches in-memory:", same)

    print()
    print("sampling pass at p=0.3, m=%d:" % s.m)
    for seed in range(4):
        meter = SpaceMeter()
        sg = sample_pass(s, 0.3, sampler_rng(seed), meter)
        print("  seed %d: kept %2d edges (meter max %2d, expect about %.0f)"
              % (seed, sg.sampled_count, meter.max_stored_edges, 0.3 * s.m))

    meter = SpaceMeter()
    sample_pass(s, 0.3, sampler_rng(0), meter)
    sample_pass(s, 0.3, sampler_rng(1), meter)
    print("two samples held at once, meter max:", meter.max_stored_edges)


if __name__ == "__main__":
    main()
