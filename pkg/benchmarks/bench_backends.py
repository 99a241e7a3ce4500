#!/usr/bin/env python3
"""Time the compiled kernels against the pure-Python fallback on one graph.

Usage: python benchmarks/bench_backends.py [--n 600] [--d 14] [--seed 1]
"""

import argparse
import time
from math import lcm

import numpy as np

from facbal import sample_gnd
from facbal._kernels import _pykern

try:
    from facbal._kernels import _ckern
except ImportError:
    _ckern = None


def timeit(fn, repeat=3):
    best = float("inf")
    for _ in range(repeat):
        t0 = time.perf_counter()
        fn()
        best = min(best, time.perf_counter() - t0)
    return best


def main() -> None:
    ap = argparse.ArgumentParser(description=__doc__)
    ap.add_argument("--n", type=int, default=600)
    ap.add_argument("--d", type=float, default=14)
    ap.add_argument("--seed", type=int, default=1)
    ap.add_argument("--placements", type=int, default=200)
    args = ap.parse_args()

    g = sample_gnd(args.n, args.d, args.seed)
    ip, ix = g.indptr, g.indices
    rng = np.random.default_rng(args.seed)
    x = rng.standard_normal(g.n)
    pairs = np.array([rng.choice(g.n, size=2, replace=False) for _ in range(args.placements)])
    L = lcm(1, 2)
    rows = {int(v) for v in pairs.ravel()}
    sub = max(16, min(g.n, 18))
    dist_small = np.vstack(
        [(_ckern or _pykern).bfs_distances(ip, ix, v) for v in range(sub)]
    )[:, :sub].copy(order="C")

    def bench(mod):
        out = {}
        out["n BFS (eccentricities)"] = timeit(lambda: mod.eccentricities(ip, ix), 1)
        out["ball sizes to r-1"] = timeit(lambda: mod.ball_sizes(ip, ix, 2), 1)

        def score_batch():
            for u, v in pairs:
                d2 = np.vstack(
                    [mod.bfs_distances(ip, ix, int(u)), mod.bfs_distances(ip, ix, int(v))]
                )
                mod.accumulate_scores(d2, L)

        out[f"{args.placements} pair scorings"] = timeit(score_batch, 1)
        out["placement sweep (n=%d, k=2)" % sub] = timeit(
            lambda: mod.enumerate_placements(dist_small, 2, 2, 1, -1, 10**9, False, True), 1
        )
        out["200 matvecs"] = timeit(
            lambda: [mod.matvec(ip, ix, x) for _ in range(200)], 1
        )
        return out

    print(f"graph: n={g.n} m={g.m} (seed {args.seed})")
    py = bench(_pykern)
    if _ckern is None:
        print("compiled kernels unavailable; pure-Python timings only")
        for key, t in py.items():
            print(f"  {key:32s} {t * 1e3:10.2f} ms")
        return
    ck = bench(_ckern)
    print(f"{'kernel':34s} {'pure ms':>10s} {'compiled ms':>12s} {'speedup':>9s}")
    for key in py:
        print(f"{key:34s} {py[key] * 1e3:10.2f} {ck[key] * 1e3:12.2f} {py[key] / ck[key]:8.1f}x")


if __name__ == "__main__":
    main()
