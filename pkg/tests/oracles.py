"""Independent reference implementations used only by the tests.

Nothing here imports the algorithms it checks: outerplanarity goes through
networkx planarity testing, impropriety through a plain enumeration, and
the corpora are built from networkx isomorphism classes.
"""

from __future__ import annotations

import itertools
from collections import Counter
from functools import lru_cache

import networkx as nx

from impropriety.graph import Graph


def to_nx(g: Graph) -> nx.Graph:
    h = nx.Graph()
    h.add_nodes_from(range(g.n))
    h.add_edges_from(g.edges)
    return h


def from_nx(h: nx.Graph) -> Graph:
    idx = {v: i for i, v in enumerate(sorted(h.nodes))}
    return Graph(len(idx), tuple(sorted((min(idx[u], idx[v]), max(idx[u], idx[v])) for u, v in h.edges)))


def is_outerplanar(g: Graph) -> bool:
    """G is outerplanar iff G plus a vertex joined to everything is planar."""
    h = to_nx(g)
    apex = g.n
    h.add_edges_from((apex, v) for v in range(g.n))
    return nx.check_planarity(h)[0]


class _IsoSet:
    def __init__(self):
        self.buckets: dict[str, list[nx.Graph]] = {}

    def add(self, h: nx.Graph) -> bool:
        key = nx.weisfeiler_lehman_graph_hash(h, iterations=3)
        bucket = self.buckets.setdefault(key, [])
        if any(nx.is_isomorphic(h, x) for x in bucket):
            return False
        bucket.append(h)
        return True


@lru_cache(maxsize=None)
def connected_outerplanar(max_n: int) -> tuple[Graph, ...]:
    """Connected outerplanar graphs on 1..max_n vertices, one per isomorphism class.

    Each such graph on n >= 2 vertices has a non-cut vertex of degree 1 or 2
    (take a leaf block), so joining a new vertex to one or two vertices of
    every (n-1)-vertex graph reaches them all.
    """
    level = [nx.empty_graph(1)]
    out = [from_nx(level[0])]
    for n in range(2, max_n + 1):
        seen = _IsoSet()
        nxt = []
        for h in level:
            old = list(h.nodes)
            for k in (1, 2):
                for nbrs in itertools.combinations(old, k):
                    c = h.copy()
                    c.add_edges_from((n - 1, x) for x in nbrs)
                    if seen.add(c) and is_outerplanar(from_nx(c)):
                        nxt.append(c)
        level = nxt
        out.extend(from_nx(h) for h in level)
    return tuple(out)


@lru_cache(maxsize=None)
def connected_graphs_upto_edges(max_m: int) -> tuple[Graph, ...]:
    """Connected graphs with 1..max_m edges, one per isomorphism class.

    Removing a leaf edge or a cycle edge keeps a graph connected, so adding a
    pendant edge or a chord to every graph with m-1 edges reaches them all.
    """
    level = [nx.empty_graph(1)]
    out = []
    for m in range(1, max_m + 1):
        seen = _IsoSet()
        nxt = []
        for h in level:
            n = h.number_of_nodes()
            cands = []
            for v in range(n):
                c = h.copy()
                c.add_edge(v, n)
                cands.append(c)
            for u, v in itertools.combinations(range(n), 2):
                if not h.has_edge(u, v):
                    c = h.copy()
                    c.add_edge(u, v)
                    cands.append(c)
            nxt.extend(c for c in cands if seen.add(c))
        level = nxt
        out.extend(from_nx(h) for h in level)
    return tuple(out)


def interval_defect(g: Graph, colors) -> int | None:
    """Defect of ``colors`` if it is an interval coloring, else None."""
    at: list[list[int]] = [[] for _ in range(g.n)]
    for (u, v), c in zip(g.edges, colors):
        at[u].append(c)
        at[v].append(c)
    worst = 0
    for cs in at:
        if not cs:
            continue
        if set(cs) != set(range(min(cs), max(cs) + 1)):
            return None
        worst = max(worst, max(Counter(cs).values()))
    return worst


def naive_has_coloring(g: Graph, k: int) -> bool:
    """Is there an interval coloring of connected ``g`` with defect <= k?

    In a connected graph the colors used form one interval, so after a shift
    every coloring lives in ``[0, |E| - 1]``. Edges are enumerated in
    depth-first order; partial assignments are cut only when two colors at a
    vertex of degree d differ by more than d - 1 or a color passes k uses.
    Complete assignments are checked by :func:`interval_defect`.
    """
    m = g.m
    deg = [0] * g.n
    adj = [[] for _ in range(g.n)]
    for i, (u, v) in enumerate(g.edges):
        deg[u] += 1
        deg[v] += 1
        adj[u].append(i)
        adj[v].append(i)
    order, seen = [], set()
    stack = [0]
    while stack:
        e = stack.pop()
        if e in seen:
            continue
        seen.add(e)
        order.append(e)
        for x in g.edges[e]:
            stack.extend(f for f in reversed(adj[x]) if f not in seen)
    colors = [None] * m
    at: list[list[int]] = [[] for _ in range(g.n)]

    def ok(x, c):
        cs = at[x]
        if not cs:
            return True
        if max(max(cs), c) - min(min(cs), c) > deg[x] - 1:
            return False
        return cs.count(c) < k

    def rec(i):
        if i == m:
            d = interval_defect(g, colors)
            return d is not None and d <= k
        e = order[i]
        u, v = g.edges[e]
        for c in range(m):
            if ok(u, c) and ok(v, c):
                colors[e] = c
                at[u].append(c)
                at[v].append(c)
                if rec(i + 1):
                    return True
                at[u].pop()
                at[v].pop()
        colors[e] = None
        return False

    return rec(0)


def naive_impropriety(g: Graph) -> int:
    """Least k with :func:`naive_has_coloring`; k = max degree always works."""
    k = 1
    while not naive_has_coloring(g, k):
        k += 1
    return k
