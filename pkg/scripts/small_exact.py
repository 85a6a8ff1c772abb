"""Exact impropriety of small named graphs and of small k-tree witnesses,
side by side with the certificate bound where one applies."""

import argparse
import itertools

from impropriety.exact import SearchConfig, exact_impropriety
from impropriety.graph import Graph
from impropriety.ktree import certificate, gen_ktree


def named():
    for n in range(3, 10):
        yield f"C{n}", Graph(n, tuple((i, (i + 1) % n) for i in range(n)))
    for s in range(1, 7):
        yield f"K1,{s}", Graph(s + 1, tuple((0, i) for i in range(1, s + 1)))
    for n in (3, 4, 5):
        yield f"K{n}", Graph(n, tuple(itertools.combinations(range(n), 2)))


def main():
    ap = argparse.ArgumentParser(description=__doc__)
    ap.add_argument("--budget", type=int, default=10**7)
    args = ap.parse_args()
    cfg = SearchConfig(node_budget=args.budget)

    for name, g in named():
        res = exact_impropriety(g, cfg)
        print(f"{name:8} impro = {res.value}  ({res.nodes} nodes)")
    for k, m, n in [(2, 1, 1), (2, 1, 2), (2, 2, 1), (2, 2, 2), (3, 1, 1), (2, 3, 2)]:
        res = exact_impropriety(gen_ktree(k, m, n).graph, cfg)
        value = res.value if res.exact else f"[{res.lower}, {res.upper}]"
        lb = certificate(k, m, n).lower_bound
        print(f"T(k={k},m={m},n={n}) impro = {value}  certificate >= {lb}")


if __name__ == "__main__":
    main()
