"""Greedy grid reconstruction of box-minus-corner shapes against the exhaustive optimum.

For every shape "n x n box minus a top-right a x b block" the script checks
whether greedy and antigreedy return the shape itself, and for n <= 4 whether
the exhaustive search does.
"""

import argparse

import numpy as np

from taxitomo.gridrecon import ControlGrid, GridSet, exhaustive_optimum, greedy_reconstruct


def shape(n, a, b):
    occ = np.ones((n, n), bool)
    occ[:a, n - b:] = False
    return GridSet(occ)


def main():
    ap = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    ap.add_argument("--sizes", type=int, nargs="+", default=[3, 4, 6, 8])
    args = ap.parse_args()

    for n in args.sizes:
        grid = ControlGrid((0.0, 1.0, 0.0, 1.0), n)
        hits = {"greedy": 0, "antigreedy": 0, "exhaustive": 0}
        total = 0
        for a in range(1, n):
            for b in range(1, n):
                K = shape(n, a, b)
                x1, x2 = K.xrays(grid)
                total += 1
                for mode in ("greedy", "antigreedy"):
                    L = greedy_reconstruct(x1, x2, n, mode).gridset
                    hits[mode] += np.array_equal(L.occupancy, K.occupancy)
                if n <= 4:
                    best, _ = exhaustive_optimum(x1, x2, n)
                    hits["exhaustive"] += np.array_equal(best.occupancy, K.occupancy)
        line = f"n={n}: greedy {hits['greedy']}/{total}, antigreedy {hits['antigreedy']}/{total}"
        if n <= 4:
            line += f", exhaustive {hits['exhaustive']}/{total}"
        print(line)


if __name__ == "__main__":
    main()
