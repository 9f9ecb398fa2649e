#!/usr/bin/env python3
"""Feasible modal ranks of K(l^k) over a grid, written as CSV.

    python scripts/run_scan.py --kmax 6 --lmax 4 > scan.csv
"""

import argparse
import csv
import sys
import time

from rectcomp.mcdsearch import conjecture_scan


def main():
    ap = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    ap.add_argument("--kmax", type=int, default=6)
    ap.add_argument("--lmax", type=int, default=4)
    args = ap.parse_args()

    t0 = time.perf_counter()
    rows = conjecture_scan(args.kmax, args.lmax)
    w = csv.writer(sys.stdout, lineterminator="\n")
    w.writerow(["k", "l", "predicted_rank", "feasible_ranks", "agree"])
    for r in rows:
        w.writerow([r.k, r.l, r.predicted, " ".join(map(str, r.feasible)), int(r.agree)])
    misses = [(r.k, r.l) for r in rows if not r.agree]
    print(f"{len(rows)} cells, prediction missed at {misses or 'none'}, "
          f"{time.perf_counter() - t0:.1f}s", file=sys.stderr)


if __name__ == "__main__":
    main()
