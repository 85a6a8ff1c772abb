"""Color seeded random outerplanar graphs and tabulate the defects reached.

    python scripts/outerplanar_sweep.py --count 500 --max-n 200 --seed 1
"""

import argparse
import collections
import random
import time

from impropriety.generators import random_outerplanar
from impropriety.outerplanar import color_outerplanar


def main():
    ap = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    ap.add_argument("--count", type=int, default=500)
    ap.add_argument("--min-n", type=int, default=3)
    ap.add_argument("--max-n", type=int, default=200)
    ap.add_argument("--seed", type=int, default=0)
    args = ap.parse_args()

    rng = random.Random(args.seed)
    defects = collections.Counter()
    start = time.perf_counter()
    for _ in range(args.count):
        g = random_outerplanar(rng.randint(args.min_n, args.max_n), rng)
        _, report = color_outerplanar(g)
        assert report.is_interval and report.defect <= 2, g
        defects[report.defect] += 1
    elapsed = time.perf_counter() - start
    print(f"{args.count} graphs in {elapsed:.2f}s")
    for d in sorted(defects):
        print(f"defect {d}: {defects[d]}")


if __name__ == "__main__":
    main()
