"""The k-tree family T(k, m, n) and its pigeonhole lower-bound certificate.

T(k, m, n) is an m-star centred at ``v0`` whose edges are subdivided into
paths of n edges, plus k-1 mutually adjacent apex vertices ``w1..w_{k-1}``
joined to every other vertex. Any interval coloring normalised so that
``c(w1 v0) = 0`` puts every edge ``w1 v_i^(j)`` inside
``[-(m + kn + k - 2), m + kn + k - 2]``, so one of those colors repeats at
``w1`` at least ``ceil(mn / (2m + 2kn + 2k - 3))`` times.
"""

from __future__ import annotations

import json
from dataclasses import asdict, dataclass
from typing import Sequence

from .graph import Graph


class InvalidWalk(ValueError):
    pass


@dataclass(frozen=True)
class KTreeWitness:
    k: int
    m: int
    n: int
    graph: Graph
    labels: tuple[str, ...]
    e1: tuple[int, ...]

    def w(self, i: int) -> int:
        return i - 1

    @property
    def v0(self) -> int:
        return self.k - 1

    def v(self, i: int, j: int) -> int:
        """Vertex index of the i-th path vertex on branch j (both 1-based)."""
        return self.k + (j - 1) * self.n + (i - 1)

    def branch_walk(self, i: int, j: int) -> list[int]:
        """Closed walk w1, v0, v_1^(j), ..., v_i^(j), w1."""
        return [self.w(1), self.v0] + [self.v(p, j) for p in range(1, i + 1)] + [self.w(1)]


def gen_ktree(k: int, m: int, n: int) -> KTreeWitness:
    """Build T(k, m, n).

    Vertex layout: ``w1..w_{k-1}`` get ``0..k-2``, ``v0`` gets ``k-1``, then
    ``v_i^(j)`` row-major with branch ``j`` outer and position ``i`` inner.
    """
    if k < 2:
        raise ValueError(f"k must be at least 2, got {k}")
    if m < 1 or n < 1:
        raise ValueError(f"m and n must be positive, got m={m}, n={n}")
    nv = k + m * n
    v0 = k - 1

    def v(i, j):
        return k + (j - 1) * n + (i - 1)

    labels = [f"w{i}" for i in range(1, k)] + ["v0"]
    labels += [f"v{i}^({j})" for j in range(1, m + 1) for i in range(1, n + 1)]
    edges = [(v0, v(1, j)) for j in range(1, m + 1)]
    edges += [(v(i, j), v(i + 1, j)) for j in range(1, m + 1) for i in range(1, n)]
    for i in range(k - 1):
        edges += [(i, x) for x in range(nv) if x != i and not (x < k - 1 and x < i)]
    graph = Graph(nv, tuple(edges))
    e1 = tuple(graph.edge_id(0, v(i, j)) for j in range(1, m + 1) for i in range(1, n + 1))
    return KTreeWitness(k, m, n, graph, tuple(labels), e1)


def verify_ktree(graph: Graph, k: int) -> bool:
    """True iff ``graph`` is a k-tree.

    Strips simplicial vertices of degree exactly k; a k-tree always has one
    while it is larger than K_{k+1}, and removing one leaves a k-tree.
    """
    if k < 1 or graph.n < k + 1:
        return False
    adj = [set(s) for s in graph.neighbors]
    alive = set(range(graph.n))

    def simplicial(v):
        nb = list(adj[v])
        return len(nb) == k and all(b in adj[a] for x, a in enumerate(nb) for b in nb[x + 1:])

    queue = [v for v in range(graph.n) if len(adj[v]) == k]
    while len(alive) > k + 1:
        while queue and (queue[-1] not in alive or not simplicial(queue[-1])):
            queue.pop()
        if not queue:
            return False
        v = queue.pop()
        alive.discard(v)
        for u in adj[v]:
            adj[u].discard(v)
            if len(adj[u]) == k:
                queue.append(u)
        adj[v] = set()
    return all(len(adj[v]) == k for v in alive)


def walk_bound(graph: Graph, walk: Sequence[int]) -> int:
    """Sum of ``deg - 1`` over the interior vertices of ``walk``.

    Bounds ``|c(p0 p1) - c(p_l p_{l+1})|`` for every interval coloring ``c``.
    """
    if len(walk) < 2:
        raise InvalidWalk("a walk needs at least one edge")
    for a, b in zip(walk, walk[1:]):
        if not graph.has_edge(a, b):
            raise InvalidWalk(f"{a} and {b} are not adjacent")
    return sum(graph.degree(p) - 1 for p in walk[1:-1])


@dataclass(frozen=True)
class ImproprietyCertificate:
    k: int
    m: int
    n: int
    color_interval_halfwidth: int
    color_count: int
    e1_size: int
    lower_bound: int
    simplified_bound: int | None

    def to_dict(self) -> dict:
        d = asdict(self)
        d["inequality_chain"] = self.inequality_chain()
        return d

    def to_json(self) -> str:
        return json.dumps(self.to_dict(), indent=2)

    def inequality_chain(self) -> list[str]:
        k, m, n = self.k, self.m, self.n
        h = self.color_interval_halfwidth
        lines = [
            f"deg(v0) - 1 = m + k - 2 = {m + k - 2}",
            f"deg(v_p^(j)) - 1 <= k = {k} for 1 <= p <= n",
            f"|c(w1 v_i^(j))| <= (m + k - 2) + i*k <= m + (n+1)k - 2 = {m + (n + 1) * k - 2}",
            f"colors on E1 lie in [{-h}, {h}]: {self.color_count} integers",
            f"|E1| = m*n = {self.e1_size}",
            f"some color repeats at w1 at least ceil({self.e1_size}/{self.color_count}) = {self.lower_bound} times",
        ]
        if self.simplified_bound is not None:
            lines.append(
                f"m = n >= 2k - 3: at most (2k+3)n = {(2 * k + 3) * n} colors, "
                f"so impro >= floor(n/(2k+3)) = {self.simplified_bound}"
            )
        return lines

    def report(self) -> str:
        head = f"T(k={self.k}, m={self.m}, n={self.n}): impro >= {self.lower_bound}"
        return "\n".join([head] + ["  " + s for s in self.inequality_chain()]) + "\n"


def certificate(k: int, m: int, n: int) -> ImproprietyCertificate:
    if k < 2 or m < 1 or n < 1:
        raise ValueError(f"need k >= 2 and m, n >= 1, got k={k}, m={m}, n={n}")
    half = m + k * n + (k - 2)
    count = 2 * half + 1
    lower = -(-(m * n) // count)
    simplified = n // (2 * k + 3) if m == n and n >= 2 * k - 3 else None
    return ImproprietyCertificate(k, m, n, half, count, m * n, lower, simplified)


def size_for_target(k: int, target: int) -> tuple[int, int]:
    """Smallest ``n >= 2k - 3`` whose certificate for T(k, n, n) reaches ``target``."""
    if k < 2 or target < 1:
        raise ValueError(f"need k >= 2 and a positive target, got k={k}, N={target}")
    n = max(1, 2 * k - 3)
    # the bound n/(2k+3) >= N caps the scan
    cap = max(n, target * (2 * k + 3))
    while certificate(k, n, n).lower_bound < target:
        n += 1
        if n > cap:
            raise AssertionError("exact bound fell below the relaxed bound")
    return n, n

