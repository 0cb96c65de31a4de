"""Distance of the stochastic bisection iterate from the exact point, over seeds.

Prints the median and 90th percentile error at several iteration counts for
each polygon given on the command line.
"""

import argparse

import numpy as np

from taxitomo.bisection import bisect_exact, bisect_stochastic
from taxitomo.geometry import SeededRng, read_polygon


def main():
    ap = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    ap.add_argument("polygons", nargs="+")
    ap.add_argument("--seeds", type=int, default=20)
    ap.add_argument("--iterations", type=int, default=100_000)
    args = ap.parse_args()

    checkpoints = [k for k in (10, 100, 1_000, 10_000, 100_000, 1_000_000) if k <= args.iterations]
    for path in args.polygons:
        p = read_polygon(path)
        exact = bisect_exact(p)
        errs = np.empty((args.seeds, len(checkpoints)))
        for seed in range(args.seeds):
            traj = bisect_stochastic(p, args.iterations, SeededRng(seed)).trajectory
            errs[seed] = np.max(np.abs(traj[checkpoints] - exact), axis=1)
        print(f"{path}: exact point {exact[0]:.6f} {exact[1]:.6f}")
        print(f"{'k':>9} {'median':>10} {'p90':>10}")
        for c, k in enumerate(checkpoints):
            print(f"{k:>9} {np.median(errs[:, c]):10.5f} {np.percentile(errs[:, c], 90):10.5f}")
        print()


if __name__ == "__main__":
    main()
