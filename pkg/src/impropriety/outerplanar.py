"""Outerplanar embeddings, polygon dissections, the weak dual tree and the
defect-2 distance coloring.

Vertices are placed on a convex polygon by a cyclic order only; two chords
cross iff their endpoint positions strictly interleave.

The coloring runs on ``G'``: the input graph plus every polygon side. Its
bounded faces are colored by tree distance to a root face, and every edge
gets the smallest distance among the faces containing it. Restricting back
to the input edges keeps every vertex an interval. Triangulating ``G'``
further before coloring does not: on a hexagon fanned from one corner the
corner sees only the colors 0 and 3 once the diagonals are dropped.
"""

from __future__ import annotations

from collections import deque
from dataclasses import dataclass
from functools import cached_property
from typing import Sequence

from .graph import DefectReport, EdgeColoring, Graph, validate_interval


class NotOuterplanar(ValueError):
    """The input has no outerplanar drawing.

    ``obstruction`` is ``"K4"`` or ``"K2,3"``: the forbidden minor present in
    the offending block (``block`` lists its vertices).
    """

    def __init__(self, obstruction: str, stage: str, block: Sequence[int] = ()):
        self.obstruction = obstruction
        self.stage = stage
        self.block = tuple(block)
        super().__init__(f"not outerplanar: {obstruction} obstruction ({stage})")


class DegenerateTriangulation(ValueError):
    """Fewer than three vertices: there is no polygon to dissect."""


class InvariantError(AssertionError):
    """An internal invariant that the construction guarantees was violated."""


def crosses(pos: Sequence[int], e: tuple[int, int], f: tuple[int, int]) -> bool:
    """True when chords ``e`` and ``f`` cross, given polygon positions ``pos``."""
    a, b = sorted((pos[e[0]], pos[e[1]]))
    c, d = sorted((pos[f[0]], pos[f[1]]))
    return a < c < b < d or c < a < d < b


def first_crossing(pos: Sequence[int], edges) -> tuple[tuple[int, int], tuple[int, int]] | None:
    """A crossing pair of chords, or None. Runs in O(m log m) via laminarity."""
    spans = sorted(
        ((min(pos[u], pos[v]), max(pos[u], pos[v]), (u, v)) for u, v in edges),
        key=lambda s: (s[0], -s[1]),
    )
    stack: list[tuple[int, int, tuple[int, int]]] = []
    for lo, hi, e in spans:
        while stack and stack[-1][1] <= lo:
            stack.pop()
        if stack and stack[-1][1] < hi:
            return stack[-1][2], e
        stack.append((lo, hi, e))
    return None


@dataclass(frozen=True)
class OuterplanarEmbedding:
    """Cyclic polygon order of all vertices; input edges are sides or chords."""

    graph: Graph
    polygon_order: tuple[int, ...]

    @cached_property
    def position(self) -> tuple[int, ...]:
        pos = [0] * self.graph.n
        for i, v in enumerate(self.polygon_order):
            pos[v] = i
        return tuple(pos)

    def sides(self) -> list[tuple[int, int]]:
        order = self.polygon_order
        n = len(order)
        if n < 2:
            return []
        if n == 2:
            return [tuple(sorted(order))]
        return [tuple(sorted((order[i], order[(i + 1) % n]))) for i in range(n)]

    def is_noncrossing(self) -> bool:
        return first_crossing(self.position, self.graph.edges) is None


# --- embedding -----------------------------------------------------------


def _biconnected_blocks(graph: Graph, root: int) -> list[list[int]]:
    """Edge-id lists of the blocks in the component containing ``root``."""
    disc = [-1] * graph.n
    low = [0] * graph.n
    blocks = []
    edge_stack: list[int] = []
    disc[root] = 0
    t = 1
    # frames: (vertex, edge id used to enter, iterator over incident edges)
    stack = [(root, -1, iter(graph.incidence[root]))]
    while stack:
        v, via, it = stack[-1]
        advanced = False
        for e in it:
            if e == via:
                continue
            w = graph.other(e, v)
            if disc[w] == -1:
                edge_stack.append(e)
                disc[w] = low[w] = t
                t += 1
                stack.append((w, e, iter(graph.incidence[w])))
                advanced = True
                break
            if disc[w] < disc[v]:
                edge_stack.append(e)
                low[v] = min(low[v], disc[w])
        if advanced:
            continue
        stack.pop()
        if stack:
            p = stack[-1][0]
            low[p] = min(low[p], low[v])
            if low[v] >= disc[p]:
                block = []
                while True:
                    e = edge_stack.pop()
                    block.append(e)
                    if e == via:
                        break
                blocks.append(block)
    return blocks


def _k4_minor_free(vertices, edges) -> bool:
    # partial 2-trees reduce to nothing by deleting degree <= 2 vertices
    # and joining the two neighbours of a degree-2 vertex
    adj = {v: set() for v in vertices}
    for u, v in edges:
        adj[u].add(v)
        adj[v].add(u)
    queue = [v for v in adj if len(adj[v]) <= 2]
    while queue:
        v = queue.pop()
        if v not in adj or len(adj[v]) > 2:
            continue
        nbrs = list(adj.pop(v))
        for u in nbrs:
            adj[u].discard(v)
        if len(nbrs) == 2:
            a, b = nbrs
            adj[a].add(b)
            adj[b].add(a)
        queue.extend(u for u in nbrs if len(adj[u]) <= 2)
    return not adj


def _reject(vertices, edges, stage: str):
    kind = "K2,3" if _k4_minor_free(vertices, edges) else "K4"
    raise NotOuterplanar(kind, stage, sorted(vertices))


def _outer_cycle(edges: list[tuple[int, int]]) -> list[int]:
    """Hamiltonian boundary cycle of a biconnected outerplanar block.

    Repeatedly removes a degree-2 vertex ``v`` with neighbours ``a, b``,
    remembering that the boundary runs ``a .. v .. b``; the edge ``ab`` is
    added when absent. Three vertices remain at the end.
    """
    adj: dict[int, set[int]] = {}
    for u, v in edges:
        adj.setdefault(u, set()).add(v)
        adj.setdefault(v, set()).add(u)
    vertices = list(adj)
    # boundary path represented by a (possibly contracted) edge
    path: dict[frozenset, tuple[int, ...]] = {}

    def oriented(a, b):
        p = path.get(frozenset((a, b)), (a, b))
        return p if p[0] == a else p[::-1]

    stack = sorted((v for v in adj if len(adj[v]) == 2), reverse=True)
    alive = len(adj)
    while alive > 3:
        while stack and (stack[-1] not in adj or len(adj[stack[-1]]) != 2):
            stack.pop()
        if not stack:
            _reject(vertices, edges, "no degree-2 vertex left in a block")
        v = stack.pop()
        a, b = sorted(adj[v])
        key = frozenset((a, b))
        if b in adj[a] and len(path.get(key, ())) > 2:
            _reject(vertices, edges, "two boundary paths share their ends")
        merged = oriented(a, v) + oriented(v, b)[1:]
        adj[a].discard(v)
        adj[b].discard(v)
        del adj[v]
        alive -= 1
        adj[a].add(b)
        adj[b].add(a)
        path[key] = merged
        for x in (a, b):
            if len(adj[x]) == 2:
                stack.append(x)
    x, y, z = sorted(adj)
    if len(adj[x]) != 2 or len(adj[y]) != 2:
        _reject(vertices, edges, "reduction did not end at a triangle")
    cycle = list(oriented(x, y)) + list(oriented(y, z)[1:]) + list(oriented(z, x)[1:-1])
    if len(cycle) != len(vertices) or len(set(cycle)) != len(cycle):
        _reject(vertices, edges, "boundary walk is not a Hamiltonian cycle")
    return cycle


def outerplanar_embedding(graph: Graph) -> OuterplanarEmbedding:
    """Place every vertex on a convex polygon so no two edges cross.

    Blocks get their unique boundary cycle; blocks sharing a cut vertex are
    nested into the gap after that vertex. Components occupy contiguous arcs.
    Raises :class:`NotOuterplanar` otherwise.
    """
    order: list[int] = []
    for comp in graph.components():
        if len(comp) == 1:
            order.append(comp[0])
            continue
        root = comp[0]
        blocks = []
        for block in _biconnected_blocks(graph, root):
            bedges = [graph.edges[e] for e in sorted(block)]
            if len(bedges) == 1:
                blocks.append(list(bedges[0]))
            else:
                blocks.append(_outer_cycle(bedges))
        blocks_of: dict[int, list[int]] = {}
        for bi, cyc in enumerate(blocks):
            for v in cyc:
                blocks_of.setdefault(v, []).append(bi)
        # preorder walk of the block-cut tree: after a vertex come, block by
        # block, the remaining cycle vertices of each child block
        stack = [(root, -1)]
        while stack:
            v, parent = stack.pop()
            order.append(v)
            children = []
            for bi in blocks_of[v]:
                if bi == parent:
                    continue
                cyc = blocks[bi]
                k = cyc.index(v)
                children.extend((u, bi) for u in cyc[k + 1:] + cyc[:k])
            stack.extend(reversed(children))
    emb = OuterplanarEmbedding(graph, tuple(order))
    bad = first_crossing(emb.position, graph.edges)
    if bad is not None:
        _reject(range(graph.n), graph.edges, f"chords {bad[0]} and {bad[1]} cross")
    return emb


# --- dissections of the polygon -----------------------------------------


@dataclass(frozen=True)
class Triangulation:
    """Bounded faces of a polygon whose sides are all present.

    ``graph`` lists the input edges first (ids ``0..original_edges-1``) and
    the added sides and diagonals after them. Faces are sorted vertex tuples;
    ``edge_faces[e]`` holds the one or two faces containing edge ``e``.
    When produced by :func:`add_boundary` faces may have more than three
    corners; :func:`complete_to_maximal` always yields triangles.
    """

    embedding: OuterplanarEmbedding
    graph: Graph
    original_edges: int
    faces: tuple[tuple[int, ...], ...]
    edge_faces: tuple[tuple[int, ...], ...]

    @property
    def n(self) -> int:
        return self.graph.n

    @property
    def added(self) -> tuple[bool, ...]:
        return tuple(e >= self.original_edges for e in range(self.graph.m))

    def is_triangulated(self) -> bool:
        return all(len(f) == 3 for f in self.faces)

    @cached_property
    def faces_at(self) -> tuple[tuple[int, ...], ...]:
        """Face indices incident with each vertex."""
        at: list[list[int]] = [[] for _ in range(self.n)]
        for fi, face in enumerate(self.faces):
            for v in face:
                at[v].append(fi)
        return tuple(tuple(x) for x in at)

    def annotations(self) -> list[str | None]:
        return [None] * self.original_edges + ["added"] * (self.graph.m - self.original_edges)


def _faces(order: Sequence[int], pos: Sequence[int], edges) -> list[tuple[int, ...]]:
    # Every edge spanning >= 2 positions (the side n-1..0 included) lies
    # directly above exactly one face: walk from its low end taking the
    # longest edge that stays under it.
    n = len(order)
    up: list[list[int]] = [[] for _ in range(n)]
    for u, v in edges:
        a, b = sorted((pos[u], pos[v]))
        up[a].append(b)
    for lst in up:
        lst.sort(reverse=True)
    faces = []
    for i in range(n):
        for j in up[i]:
            if j - i < 2:
                continue
            walk = [i]
            cur = i
            while cur != j:
                nxt = next(q for q in up[cur] if q <= j and (cur, q) != (i, j))
                walk.append(nxt)
                cur = nxt
            faces.append(tuple(order[p] for p in walk))
    return faces


def _dissect(emb: OuterplanarEmbedding, extra: list[tuple[int, int]], cyclic_faces=None) -> Triangulation:
    g = emb.graph
    full = Graph(g.n, g.edges + tuple(extra))
    cyc = cyclic_faces if cyclic_faces is not None else _faces(emb.polygon_order, emb.position, full.edges)
    faces = sorted(tuple(sorted(f)) for f in cyc)
    index = {f: i for i, f in enumerate(faces)}
    ef: list[list[int]] = [[] for _ in range(full.m)]
    for f in cyc:
        fi = index[tuple(sorted(f))]
        k = len(f)
        for t in range(k):
            ef[full.edge_id(f[t], f[(t + 1) % k])].append(fi)
    return Triangulation(emb, full, g.m, tuple(faces), tuple(tuple(sorted(x)) for x in ef))


def add_boundary(embedding: OuterplanarEmbedding) -> Triangulation:
    """Dissection of ``G'``: the input plus every missing polygon side."""
    g = embedding.graph
    if g.n < 3:
        raise DegenerateTriangulation(f"{g.n} vertices do not span a polygon")
    extra = [s for s in embedding.sides() if not g.has_edge(*s)]
    return _dissect(embedding, extra)


def complete_to_maximal(embedding: OuterplanarEmbedding) -> Triangulation:
    """Triangulate the polygon around the input edges.

    Adds the missing sides, then fans every face with more than three corners
    from its lowest-index vertex. The result has ``n - 3`` diagonals.
    """
    g = embedding.graph
    if g.n < 3:
        raise DegenerateTriangulation(f"{g.n} vertices do not span a polygon")
    extra = [s for s in embedding.sides() if not g.has_edge(*s)]
    pos = embedding.position
    cyc = _faces(embedding.polygon_order, pos, g.edges + tuple(extra))
    diagonals, triangles = [], []
    for face in cyc:
        k = len(face)
        if k == 3:
            triangles.append(face)
            continue
        s = face.index(min(face))
        rot = face[s:] + face[:s]
        apex = rot[0]
        for t in range(1, k - 1):
            triangles.append((apex, rot[t], rot[t + 1]))
        diagonals.extend(tuple(sorted((apex, rot[t]))) for t in range(2, k - 1))
    return _dissect(embedding, extra + sorted(diagonals), triangles)


# --- weak dual ---------------------------------------------------------------


@dataclass(frozen=True)
class DualTree:
    """Faces adjacent across shared edges, with BFS distance from ``root``."""

    nodes: tuple[int, ...]
    edges: tuple[tuple[int, int], ...]
    root: int
    dist: tuple[int, ...]

    @cached_property
    def adjacency(self) -> tuple[tuple[int, ...], ...]:
        adj: list[list[int]] = [[] for _ in self.nodes]
        for a, b in self.edges:
            adj[a].append(b)
            adj[b].append(a)
        return tuple(tuple(sorted(x)) for x in adj)


def root_for_edge(tri: Triangulation, u: int, v: int) -> int:
    """Lowest-index face containing edge ``uv``; anchors the root at that edge."""
    return tri.edge_faces[tri.graph.edge_id(u, v)][0]


def build_dual_tree(tri: Triangulation, root: int = 0) -> DualTree:
    """Weak dual of ``tri`` and distances ``d_T(f, root)``."""
    nf = len(tri.faces)
    if not 0 <= root < nf:
        raise ValueError(f"root face {root} out of range 0..{nf - 1}")
    edges = sorted({tuple(fs) for fs in tri.edge_faces if len(fs) == 2})
    adj: list[list[int]] = [[] for _ in range(nf)]
    for a, b in edges:
        adj[a].append(b)
        adj[b].append(a)
    dist = [-1] * nf
    dist[root] = 0
    q = deque([root])
    while q:
        f = q.popleft()
        for g in adj[f]:
            if dist[g] < 0:
                dist[g] = dist[f] + 1
                q.append(g)
    if len(edges) != nf - 1 or min(dist) < 0:
        raise InvariantError("weak dual of a polygon dissection is not a tree")
    return DualTree(tuple(range(nf)), tuple(edges), root, tuple(dist))


def distance_coloring(tri: Triangulation, dual: DualTree) -> EdgeColoring:
    """Color each edge by the least root distance among the faces containing it."""
    return EdgeColoring(tuple(min(dual.dist[f] for f in fs) for fs in tri.edge_faces))


def unique_min_face(dual: DualTree, tri: Triangulation, v: int) -> int:
    """The face at ``v`` closest to the root; it is always unique."""
    at = tri.faces_at[v]
    if not at:
        raise ValueError(f"vertex {v} lies on no bounded face")
    best = min(dual.dist[f] for f in at)
    winners = [f for f in at if dual.dist[f] == best]
    if len(winners) != 1:
        raise InvariantError(f"vertex {v}: faces {winners} all at distance {best}")
    return winners[0]


def dual_path_partition(tri: Triangulation, dual: DualTree, v: int) -> tuple[list[int], list[int]]:
    """Split the edges at ``v`` into the two runs leaving its closest face.

    Edges at ``v`` are taken in polygon order; the closest face sits between
    two consecutive ones. Each returned list starts next to that face and
    moves outward, so its colors are ``d, d+1, d+2, ...``.
    """
    pos = tri.embedding.position
    n = tri.n
    fv = unique_min_face(dual, tri, v)
    around = sorted(tri.graph.incidence[v], key=lambda e: (pos[tri.graph.other(e, v)] - pos[v]) % n)
    for s in range(1, len(around)):
        shared = set(tri.edge_faces[around[s - 1]]) & set(tri.edge_faces[around[s]])
        if fv in shared:
            return around[s - 1::-1], around[s:]
    raise InvariantError(f"closest face of vertex {v} not found between its edges")


# --- the pipeline --------------------------------------------------------------


def _color_component(graph: Graph, root: int | None) -> EdgeColoring:
    emb = outerplanar_embedding(graph)
    tri = add_boundary(emb)
    dual = build_dual_tree(tri, 0 if root is None else root)
    return distance_coloring(tri, dual).restrict(graph.m)


def color_outerplanar(graph: Graph, root_face: int | None = None) -> tuple[EdgeColoring, DefectReport]:
    """Interval edge coloring with at most two equal colors at any vertex.

    Each component is colored on its own and shifted to start at 0.
    ``root_face`` picks the root of the dual tree and is only accepted for
    inputs with a single component on three or more vertices.
    """
    colors = [0] * graph.m
    comps = [c for c in graph.components() if len(c) >= 2]
    big = [c for c in comps if len(c) >= 3]
    if root_face is not None and len(big) != 1:
        raise ValueError("root_face needs exactly one component with three or more vertices")
    for comp in comps:
        sub, origin = graph.subgraph(comp)
        if len(comp) == 2:
            local = EdgeColoring((0,))
        else:
            local = _color_component(sub, root_face)
            local = local.translate(-min(local.colors))
        for i, e in enumerate(origin):
            colors[e] = local[i]
    coloring = EdgeColoring(tuple(colors))
    report = validate_interval(graph, coloring)
    if not report.is_interval or report.defect > 2:
        raise InvariantError(f"distance coloring failed: {report.summary()}")
    return coloring, report
