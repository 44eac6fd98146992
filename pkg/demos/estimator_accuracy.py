"""Accuracy of the four estimators on a planted instance.

alg1 is unbiased: averaging many runs recovers the exact count.  alg2
takes the minimum of repetitions, which pulls slightly low on purpose in
exchange for rarely overshooting (1+eps)t.  The one-pass variants trade a
pass for a smaller detection probability, i.e. more variance at equal p.
"""

import numpy as np

from tricount import (gen_planted, open_stream, Order,
                      alg1_two_pass, alg1_one_pass_random,
                      alg2_two_pass, alg2_one_pass_random)


def main():
    t_true = 200
    g = gen_planted(2000, t_true, seed=42)
    stream = open_stream(g)
    arrays = g.edge_arrays()
    runs = 400
    p = 0.25
    l = 8

    print("planted graph: m=%d, t=%d, p=%.2f, %d runs each" %
          (stream.m, t_true, p, runs))

    rows = []
    vals = [alg1_two_pass(stream, p, s).estimate for s in range(runs)]
    rows.append(("alg1 (two passes, unbiased)", vals))

    vals = []
    for s in range(runs):
        rs = open_stream(arrays, order=Order.RANDOM_PERMUTATION, seed=s,
                         validate=False)
        vals.append(alg1_one_pass_random(rs, p, s).estimate)
    rows.append(("alg1-rand (one pass)", vals))

    vals = [alg2_two_pass(stream, p, l, s).estimate for s in range(runs)]
    rows.append(("alg2 (min of %d trials)" % l, vals))

    vals = []
    for s in range(runs):
        rs = open_stream(arrays, order=Order.RANDOM_PERMUTATION, seed=s,
                         validate=False)
        vals.append(alg2_one_pass_random(rs, p, l, s).estimate)
    rows.append(("alg2-rand (one pass, min)", vals))

    print("%-30s %8s %8s %8s %8s" % ("estimator", "mean", "std",
                                     "frac<t", "frac>1.5t"))
    for name, vals in rows:
        a = np.array(vals)
        print("%-30s %8.1f %8.1f %8.2f %8.2f"
              % (name, a.mean(), a.std(), (a < t_true).mean(),
                 (a > 1.5 * t_true).mean()))
    print()
    print("note the alg2 rows sit a bit under t with almost no mass above "
          "1.5t; that one-sidedness is the point of taking the minimum")


if __name__ == "__main__":
    main()
