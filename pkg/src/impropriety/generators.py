"""Seeded generators for outerplanar test corpora."""

from __future__ import annotations

import random
from typing import Iterator

from .graph import Graph


def random_triangulation(n: int, rng: random.Random) -> list[tuple[int, int]]:
    """Edges of a random triangulated n-gon on vertices ``0..n-1`` in order."""
    if n < 3:
        return [(0, 1)] if n == 2 else []
    edges = [(i, i + 1) for i in range(n - 1)] + [(0, n - 1)]
    stack = [(0, n - 1)]
    while stack:
        i, j = stack.pop()
        if j - i < 2:
            continue
        apex = rng.randint(i + 1, j - 1)
        for a, b in ((i, apex), (apex, j)):
            if b - a >= 2:
                edges.append((a, b))
            stack.append((a, b))
    return edges


def random_outerplanar(n: int, rng: random.Random, keep: float | None = None,
                       shuffle: bool = True) -> Graph:
    """Random subgraph of a random triangulated n-gon.

    Each edge survives with probability ``keep`` (drawn uniformly from
    [0.4, 1] when omitted). Vertex labels and edge order are shuffled so the
    polygon order is not visible in the labels.
    """
    if keep is None:
        keep = rng.uniform(0.4, 1.0)
    edges = [e for e in random_triangulation(n, rng) if rng.random() < keep]
    perm = list(range(n))
    if shuffle:
        rng.shuffle(perm)
        rng.shuffle(edges)
    return Graph(n, tuple((perm[u], perm[v]) for u, v in edges))


def noncrossing_graphs(n: int) -> Iterator[tuple[tuple[int, int], ...]]:
    """Every edge set on the convex n-gon ``0..n-1`` with no crossing pair."""
    cands = [(i, j) for i in range(n) for j in range(i + 1, n)]

    def cross(e, f):
        (a, b), (c, d) = e, f
        return a < c < b < d or c < a < d < b

    chosen: list[tuple[int, int]] = []

    def rec(idx):
        if idx == len(cands):
            yield tuple(chosen)
            return
        yield from rec(idx + 1)
        e = cands[idx]
        if not any(cross(e, f) for f in chosen):
            chosen.append(e)
            yield from rec(idx + 1)
            chosen.pop()

    yield from rec(0)


def _dihedral_key(n: int, edges) -> tuple:
    best = None
    for r in range(n):
        for flip in (False, True):
            img = []
            for u, v in edges:
                a, b = ((-u + r) % n, (-v + r) % n) if flip else ((u + r) % n, (v + r) % n)
                img.append((a, b) if a < b else (b, a))
            key = tuple(sorted(img))
            if best is None or key < best:
                best = key
    return best


def connected_outerplanar_corpus(max_n: int) -> list[Graph]:
    """All connected outerplanar graphs on ``1..max_n`` vertices.

    Every such graph has a non-crossing drawing on the convex polygon, so
    enumerating connected non-crossing edge sets covers them all; drawings
    equal up to rotation or reflection are kept once. Isomorphic graphs with
    different drawings may appear more than once.
    """
    out = [Graph(1)]
    for n in range(2, max_n + 1):
        seen = set()
        for edges in noncrossing_graphs(n):
            if len(edges) < n - 1:
                continue
            g = Graph(n, edges)
            if not g.is_connected():
                continue
            key = _dihedral_key(n, edges)
            if key in seen:
                continue
            seen.add(key)
            out.append(g)
    return out
