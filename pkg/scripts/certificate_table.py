"""Print lower-bound certificates for the k-tree family as a table or CSV."""

import argparse
import csv
import sys

from impropriety.ktree import certificate, size_for_target


def main():
    ap = argparse.ArgumentParser(description=__doc__)
    ap.add_argument("--k", type=int, nargs="+", default=[2, 3, 4, 5])
    ap.add_argument("--targets", type=int, nargs="+", default=[1, 2, 3, 5, 10, 20, 50, 100])
    ap.add_argument("--csv", action="store_true", help="write CSV to stdout")
    args = ap.parse_args()

    rows = []
    for k in args.k:
        for target in args.targets:
            n, m = size_for_target(k, target)
            c = certificate(k, m, n)
            rows.append({"k": k, "target": target, "n": n, "vertices": k + m * n,
                         "colors": c.color_count, "lower_bound": c.lower_bound})
    if args.csv:
        w = csv.DictWriter(sys.stdout, fieldnames=list(rows[0]))
        w.writeheader()
        w.writerows(rows)
        return
    print(f"{'k':>3} {'target':>7} {'n':>6} {'|V|':>9} {'colors':>7} {'bound':>6}")
    for r in rows:
        print(f"{r['k']:>3} {r['target']:>7} {r['n']:>6} {r['vertices']:>9} {r['colors']:>7} {r['lower_bound']:>6}")


if __name__ == "__main__":
    main()
