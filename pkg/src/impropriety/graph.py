"""Simple graphs, integer edge colorings and the interval/defect validators."""

from __future__ import annotations

from collections import Counter
from dataclasses import dataclass, field
from functools import cached_property
from typing import Iterable, Mapping, Sequence


class GraphError(ValueError):
    """Raised when an edge list does not describe a simple graph."""


class ColoringError(ValueError):
    """Raised when a coloring is not total on the edges of its graph."""


@dataclass(frozen=True)
class Graph:
    """Simple undirected graph on vertices ``0..n-1``.

    Edge identifiers are positions in ``edges``; each edge is stored as
    ``(u, v)`` with ``u < v``.
    """

    n: int
    edges: tuple[tuple[int, int], ...] = ()

    def __post_init__(self):
        if self.n < 0:
            raise GraphError(f"negative vertex count {self.n}")
        norm = []
        seen = set()
        for idx, (u, v) in enumerate(self.edges):
            u, v = int(u), int(v)
            if u == v:
                raise GraphError(f"edge {idx}: self-loop at vertex {u}")
            if not (0 <= u < self.n and 0 <= v < self.n):
                raise GraphError(f"edge {idx}: vertex out of range in ({u}, {v})")
            e = (u, v) if u < v else (v, u)
            if e in seen:
                raise GraphError(f"edge {idx}: duplicate edge {e}")
            seen.add(e)
            norm.append(e)
        object.__setattr__(self, "edges", tuple(norm))

    @property
    def m(self) -> int:
        return len(self.edges)

    @cached_property
    def incidence(self) -> tuple[tuple[int, ...], ...]:
        """Incident edge ids per vertex, in increasing edge id order."""
        inc: list[list[int]] = [[] for _ in range(self.n)]
        for idx, (u, v) in enumerate(self.edges):
            inc[u].append(idx)
            inc[v].append(idx)
        return tuple(tuple(x) for x in inc)

    @cached_property
    def neighbors(self) -> tuple[frozenset[int], ...]:
        nbr: list[set[int]] = [set() for _ in range(self.n)]
        for u, v in self.edges:
            nbr[u].add(v)
            nbr[v].add(u)
        return tuple(frozenset(x) for x in nbr)

    @cached_property
    def edge_index(self) -> dict[tuple[int, int], int]:
        return {e: i for i, e in enumerate(self.edges)}

    def degree(self, v: int) -> int:
        return len(self.incidence[v])

    @property
    def max_degree(self) -> int:
        return max((len(x) for x in self.incidence), default=0)

    def has_edge(self, u: int, v: int) -> bool:
        return (min(u, v), max(u, v)) in self.edge_index

    def edge_id(self, u: int, v: int) -> int:
        return self.edge_index[(min(u, v), max(u, v))]

    def other(self, e: int, v: int) -> int:
        a, b = self.edges[e]
        return b if a == v else a

    def components(self) -> list[list[int]]:
        """Connected components as sorted vertex lists, ordered by least vertex."""
        seen = [False] * self.n
        comps = []
        for s in range(self.n):
            if seen[s]:
                continue
            seen[s] = True
            stack, comp = [s], [s]
            while stack:
                x = stack.pop()
                for y in self.neighbors[x]:
                    if not seen[y]:
                        seen[y] = True
                        stack.append(y)
                        comp.append(y)
            comps.append(sorted(comp))
        return comps

    def is_connected(self) -> bool:
        return self.n <= 1 or len(self.components()) == 1

    def subgraph(self, vertices: Sequence[int]) -> tuple["Graph", list[int]]:
        """Induced subgraph relabelled to ``0..len(vertices)-1``.

        Returns the subgraph and, for each of its edges, the id of the
        corresponding edge in ``self`` (in ``self``'s edge order).
        """
        local = {v: i for i, v in enumerate(vertices)}
        edges, origin = [], []
        for idx, (u, v) in enumerate(self.edges):
            if u in local and v in local:
                edges.append((local[u], local[v]))
                origin.append(idx)
        return Graph(len(vertices), tuple(edges)), origin

    def relabel(self, perm: Sequence[int]) -> "Graph":
        """Graph with vertex ``v`` renamed ``perm[v]``; edge order kept."""
        return Graph(self.n, tuple((perm[u], perm[v]) for u, v in self.edges))

    @classmethod
    def from_edges(cls, n: int, edges: Iterable[tuple[int, int]]) -> "Graph":
        return cls(n, tuple(edges))


@dataclass(frozen=True)
class EdgeColoring:
    """Integer color per edge id; ``colors[e]`` is the color of edge ``e``."""

    colors: tuple[int, ...]

    def __post_init__(self):
        object.__setattr__(self, "colors", tuple(int(c) for c in self.colors))

    def __getitem__(self, e: int) -> int:
        return self.colors[e]

    def __len__(self) -> int:
        return len(self.colors)

    @classmethod
    def from_mapping(cls, mapping: Mapping[int, int], m: int) -> "EdgeColoring":
        missing = [e for e in range(m) if e not in mapping]
        if missing:
            raise ColoringError(f"coloring is not total: missing edges {missing[:10]}")
        extra = sorted(e for e in mapping if not 0 <= e < m)
        if extra:
            raise ColoringError(f"coloring names unknown edges {extra[:10]}")
        return cls(tuple(mapping[e] for e in range(m)))

    def translate(self, shift: int) -> "EdgeColoring":
        return EdgeColoring(tuple(c + shift for c in self.colors))

    def restrict(self, m: int) -> "EdgeColoring":
        """Coloring of the first ``m`` edges."""
        return EdgeColoring(self.colors[:m])


@dataclass(frozen=True)
class DefectReport:
    is_interval: bool
    defect: int
    violations: tuple[tuple[int, int], ...] = ()
    witness: tuple[int, int, tuple[int, ...]] | None = field(default=None)

    def summary(self) -> str:
        return f"interval={'true' if self.is_interval else 'false'} defect={self.defect}"


def _check_total(graph: Graph, coloring: EdgeColoring) -> None:
    if len(coloring) != graph.m:
        raise ColoringError(
            f"coloring has {len(coloring)} colors for a graph with {graph.m} edges"
        )


def validate_interval(graph: Graph, coloring: EdgeColoring) -> DefectReport:
    """Check the interval property at every vertex and measure the defect.

    Violations list every ``(vertex, missing color)`` gap. The witness is the
    lowest vertex, then lowest color, attaining the defect.
    """
    _check_total(graph, coloring)
    violations = []
    defect = 0
    witness = None
    for v in range(graph.n):
        inc = graph.incidence[v]
        if not inc:
            continue
        counts = Counter(coloring[e] for e in inc)
        lo, hi = min(counts), max(counts)
        if hi - lo + 1 != len(counts):
            violations.extend((v, c) for c in range(lo, hi + 1) if c not in counts)
        top = max(counts.values())
        if top > defect:
            color = min(c for c, k in counts.items() if k == top)
            defect = top
            witness = (v, color, tuple(e for e in inc if coloring[e] == color))
    return DefectReport(not violations, defect, tuple(violations), witness)


def impropriety_defect(graph: Graph, coloring: EdgeColoring) -> int:
    """Largest number of same-colored edges at a single vertex."""
    _check_total(graph, coloring)
    best = 0
    for inc in graph.incidence:
        if inc:
            best = max(best, max(Counter(coloring[e] for e in inc).values()))
    return best
