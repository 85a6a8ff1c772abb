"""Exact impropriety of small graphs by backtracking.

One edge is pinned to color 0 (colorings are translation invariant) and
the search runs over the window ``[-H, H]``. For a connected graph
``H = 2|E| - |V|`` loses nothing: along a path from the pinned edge each
interior vertex moves the color by at most ``deg - 1``.
"""

from __future__ import annotations

import enum
import logging
import sys
from collections import deque
from dataclasses import dataclass, replace

from .graph import EdgeColoring, Graph

log = logging.getLogger(__name__)

EDGE_ORDERS = ("bfs", "degeneracy", "input")


class Status(enum.Enum):
    YES = "yes"
    NO = "no"
    BUDGET = "budget-exhausted"


@dataclass(frozen=True)
class SearchConfig:
    max_defect: int = 1
    color_halfwidth: int | None = None  # None: the sufficient 2|E| - |V|
    node_budget: int = 10**8
    edge_order: str = "bfs"
    progress_every: int = 10**6


@dataclass(frozen=True)
class Decision:
    status: Status
    coloring: EdgeColoring | None = None
    nodes: int = 0


@dataclass(frozen=True)
class ImproprietyResult:
    """``value`` is set when exact; otherwise ``lower <= impro <= upper``."""

    value: int | None
    lower: int
    upper: int
    witness: EdgeColoring
    nodes: int

    @property
    def exact(self) -> bool:
        return self.value is not None


def sufficient_halfwidth(graph: Graph) -> int:
    return max(0, 2 * graph.m - graph.n)


def edge_order(graph: Graph, kind: str = "bfs") -> list[int]:
    """Edge ids in search order; the first is the pinned edge."""
    if kind == "input":
        return list(range(graph.m))
    if kind == "bfs":
        order, seen = [], [False] * graph.m
        for start in range(graph.m):
            if seen[start]:
                continue
            seen[start] = True
            q = deque([start])
            while q:
                e = q.popleft()
                order.append(e)
                for x in graph.edges[e]:
                    for f in graph.incidence[x]:
                        if not seen[f]:
                            seen[f] = True
                            q.append(f)
        return order
    if kind == "degeneracy":
        # smallest-last vertex order; colour edges around high-degree vertices first
        deg = [graph.degree(v) for v in range(graph.n)]
        removed = [False] * graph.n
        last = []
        for _ in range(graph.n):
            v = min((d, v) for v, d in enumerate(deg) if not removed[v])[1]
            removed[v] = True
            last.append(v)
            for u in graph.neighbors[v]:
                if not removed[u]:
                    deg[u] -= 1
        rank = {v: i for i, v in enumerate(reversed(last))}
        return sorted(range(graph.m), key=lambda e: sorted((rank[x] for x in graph.edges[e]), reverse=True))
    raise ValueError(f"unknown edge order {kind!r}")


def prune_ok(deg: int, lo: int, hi: int, distinct: int, assigned: int,
             top_count: int, max_defect: int) -> bool:
    """Whether a vertex's partial assignment can still be completed.

    ``lo``/``hi`` are the extreme assigned colors, ``distinct`` the number of
    different ones, ``top_count`` the largest multiplicity. The window clamp
    is applied when candidate colors are generated.
    """
    if hi - lo > deg - 1:
        return False
    if top_count > max_defect:
        return False
    return (hi - lo + 1) - distinct <= deg - assigned


class _Budget(Exception):
    pass


def exists_coloring(graph: Graph, cfg: SearchConfig, _budget: list[int] | None = None) -> Decision:
    """Search for an interval coloring with defect at most ``cfg.max_defect``.

    ``graph`` must be connected. ``NO`` is only reported after exhausting a
    window at least as wide as :func:`sufficient_halfwidth`; a narrower
    window that runs dry reports ``BUDGET`` instead.
    """
    if graph.m == 0:
        return Decision(Status.YES, EdgeColoring(()))
    if not graph.is_connected():
        raise ValueError("exists_coloring needs a connected graph; split components first")
    k = cfg.max_defect
    H = sufficient_halfwidth(graph) if cfg.color_halfwidth is None else cfg.color_halfwidth
    complete = H >= sufficient_halfwidth(graph)
    budget = _budget if _budget is not None else [cfg.node_budget]
    order = edge_order(graph, cfg.edge_order)
    deg = [graph.degree(v) for v in range(graph.n)]
    counts: list[dict[int, int]] = [{} for _ in range(graph.n)]
    colors = [0] * graph.m
    # candidate colors in increasing |c|, positive first
    palette = [0]
    for a in range(1, H + 1):
        palette += [a, -a]

    def fits(v, c):
        cnt = counts[v]
        if not cnt:
            return True
        lo, hi = min(cnt), max(cnt)
        lo, hi = min(lo, c), max(hi, c)
        top = max(cnt.get(c, 0) + 1, max(cnt.values()))
        distinct = len(cnt) + (c not in cnt)
        return prune_ok(deg[v], lo, hi, distinct, sum(cnt.values()) + 1, top, k)

    def put(e, c, sign):
        colors[e] = c
        for x in graph.edges[e]:
            cnt = counts[x]
            nv = cnt.get(c, 0) + sign
            if nv:
                cnt[c] = nv
            else:
                del cnt[c]

    nodes = [0]
    reflect_free = [True]  # no nonzero color placed yet: c -> -c symmetry unbroken

    def search(i):
        if i == len(order):
            return True
        e = order[i]
        u, v = graph.edges[e]
        cands = palette if i else [0]
        for c in cands:
            if reflect_free[0] and c < 0:
                continue
            if not (fits(u, c) and fits(v, c)):
                continue
            nodes[0] += 1
            budget[0] -= 1
            if budget[0] < 0:
                raise _Budget
            if cfg.progress_every and nodes[0] % cfg.progress_every == 0:
                log.info("search: %d nodes, depth %d/%d, k=%d", nodes[0], i, len(order), k)
            put(e, c, 1)
            flipped = reflect_free[0] and c != 0
            if flipped:
                reflect_free[0] = False
            if search(i + 1):
                return True
            if flipped:
                reflect_free[0] = True
            put(e, c, -1)
        return False

    if sys.getrecursionlimit() < len(order) + 100:
        sys.setrecursionlimit(len(order) + 100)
    try:
        found = search(0)
    except _Budget:
        return Decision(Status.BUDGET, None, nodes[0])
    if found:
        return Decision(Status.YES, EdgeColoring(tuple(colors)), nodes[0])
    return Decision(Status.NO if complete else Status.BUDGET, None, nodes[0])


def exact_impropriety(graph: Graph, cfg: SearchConfig | None = None) -> ImproprietyResult:
    """Smallest defect of an interval coloring, component by component.

    The node budget is shared by the whole run. When it runs out the result
    carries bounds ``[lower, max degree]`` and a witness meeting the upper one.
    """
    if graph.m == 0:
        raise ValueError("impropriety is undefined without edges")
    cfg = cfg or SearchConfig()
    budget = [cfg.node_budget]
    colors = [0] * graph.m
    lower = upper = 1
    nodes = 0
    for comp in graph.components():
        sub, origin = graph.subgraph(comp)
        if sub.m == 0:
            continue
        delta = sub.max_degree
        # components below the running lower bound only need a witness at it
        for k in range(min(lower, delta), delta + 1):
            if k == delta:
                # all edges 0: each vertex sees one color deg times
                local = EdgeColoring((0,) * sub.m)
                lower, upper = max(lower, k), max(upper, k)
                break
            dec = exists_coloring(sub, replace(cfg, max_defect=k), budget)
            nodes += dec.nodes
            if dec.status is Status.YES:
                local = dec.coloring
                lower, upper = max(lower, k), max(upper, k)
                break
            if dec.status is Status.BUDGET:
                local = EdgeColoring((0,) * sub.m)
                lower, upper = max(lower, k), max(upper, delta)
                break
        for i, e in enumerate(origin):
            colors[e] = local[i]
    witness = EdgeColoring(tuple(colors))
    return ImproprietyResult(lower if lower == upper else None, lower, upper, witness, nodes)
