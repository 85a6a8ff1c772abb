"""Text formats: edge lists, graph6, coloring files and DOT output."""

from __future__ import annotations

from typing import Sequence

from .graph import ColoringError, EdgeColoring, Graph, GraphError

FORMATS = ("edge-list", "graph6")

# color attribute for DOT edges, keyed by color mod len(PALETTE)
PALETTE = (
    "#1f77b4", "#d62728", "#2ca02c", "#ff7f0e", "#9467bd",
    "#8c564b", "#e377c2", "#7f7f7f", "#bcbd22", "#17becf",
)


class ParseError(ValueError):
    """Malformed input; ``where`` is a 1-based line number or 0-based byte offset."""

    def __init__(self, msg: str, where: str = ""):
        super().__init__(f"{where}: {msg}" if where else msg)
        self.where = where


def _text(data: bytes | str) -> str:
    return data.decode("ascii", errors="replace") if isinstance(data, bytes) else data


def _content_lines(text: str):
    for lineno, raw in enumerate(text.splitlines(), start=1):
        line = raw.split("#", 1)[0].strip()
        if line:
            yield lineno, line


def parse_edge_list(data: bytes | str) -> Graph:
    lines = _content_lines(_text(data))
    try:
        lineno, header = next(lines)
    except StopIteration:
        raise ParseError("empty input, expected vertex count") from None
    parts = header.split()
    if len(parts) != 1 or not parts[0].isdigit():
        raise ParseError(f"bad header {header!r}, expected a vertex count", f"line {lineno}")
    n = int(parts[0])
    edges: list[tuple[int, int]] = []
    seen = set()
    for lineno, line in lines:
        parts = line.split()
        if len(parts) != 2:
            raise ParseError(f"expected 'u v', got {line!r}", f"line {lineno}")
        try:
            u, v = int(parts[0]), int(parts[1])
        except ValueError:
            raise ParseError(f"non-integer vertex in {line!r}", f"line {lineno}") from None
        if not (0 <= u < n and 0 <= v < n):
            raise ParseError(f"vertex out of range 0..{n - 1} in {line!r}", f"line {lineno}")
        if u == v:
            raise ParseError(f"self-loop at vertex {u}", f"line {lineno}")
        key = (min(u, v), max(u, v))
        if key in seen:
            raise ParseError(f"duplicate edge {key}", f"line {lineno}")
        seen.add(key)
        edges.append((u, v))
    return Graph(n, tuple(edges))


def parse_graph6(data: bytes | str) -> Graph:
    raw = data.encode("ascii") if isinstance(data, str) else data
    raw = raw.strip()
    if raw.startswith(b">>graph6<<"):
        raw = raw[len(b">>graph6<<"):]
        offset = len(b">>graph6<<")
    else:
        offset = 0
    for pos, byte in enumerate(raw):
        if not 63 <= byte <= 126:
            raise ParseError(f"invalid graph6 byte {byte!r}", f"byte {offset + pos}")
    vals = [b - 63 for b in raw]
    if not vals:
        raise ParseError("empty graph6 string", f"byte {offset}")
    if vals[0] < 63:
        n, pos = vals[0], 1
    elif len(vals) >= 4 and vals[1] < 63:
        n = (vals[1] << 12) | (vals[2] << 6) | vals[3]
        pos = 4
    elif len(vals) >= 8 and vals[1] == 63:
        n = 0
        for x in vals[2:8]:
            n = (n << 6) | x
        pos = 8
    else:
        raise ParseError("truncated graph6 size header", f"byte {offset}")
    nbits = n * (n - 1) // 2
    need = (nbits + 5) // 6
    body = vals[pos:]
    if len(body) != need:
        raise ParseError(
            f"graph6 body has {len(body)} bytes, expected {need} for n={n}",
            f"byte {offset + pos}",
        )
    edges = []
    k = 0
    for j in range(1, n):
        for i in range(j):
            if (body[k // 6] >> (5 - k % 6)) & 1:
                edges.append((i, j))
            k += 1
    edges.sort()
    return Graph(n, tuple(edges))


def parse_graph(data: bytes | str, format: str = "edge-list") -> Graph:
    """Parse ``data`` in ``format`` ('edge-list' or 'graph6')."""
    if format == "edge-list":
        return parse_edge_list(data)
    if format == "graph6":
        return parse_graph6(data)
    raise ValueError(f"unknown graph format {format!r}")


def to_edge_list(graph: Graph, annotations: Sequence[str | None] | None = None) -> str:
    """Serialize ``graph``; ``annotations[e]``, when set, becomes a trailing comment."""
    out = [str(graph.n)]
    for idx, (u, v) in enumerate(graph.edges):
        note = annotations[idx] if annotations else None
        out.append(f"{u} {v}  # {note}" if note else f"{u} {v}")
    return "\n".join(out) + "\n"


def to_graph6(graph: Graph) -> str:
    n = graph.n
    if n < 63:
        head = [n]
    elif n < 258048:
        head = [63, (n >> 12) & 63, (n >> 6) & 63, n & 63]
    else:
        head = [63, 63] + [(n >> s) & 63 for s in (30, 24, 18, 12, 6, 0)]
    bits = []
    for j in range(1, n):
        for i in range(j):
            bits.append(1 if graph.has_edge(i, j) else 0)
    bits += [0] * (-len(bits) % 6)
    body = [int("".join(map(str, bits[i:i + 6])), 2) for i in range(0, len(bits), 6)]
    return bytes(x + 63 for x in head + body).decode("ascii")


def parse_coloring(data: bytes | str, graph: Graph) -> EdgeColoring:
    """Read 'edge-index color' lines; every edge of ``graph`` must be colored once."""
    mapping: dict[int, int] = {}
    for lineno, line in _content_lines(_text(data)):
        parts = line.split()
        if len(parts) != 2:
            raise ParseError(f"expected 'edge color', got {line!r}", f"line {lineno}")
        try:
            e, c = int(parts[0]), int(parts[1])
        except ValueError:
            raise ParseError(f"non-integer entry in {line!r}", f"line {lineno}") from None
        if e in mapping:
            raise ParseError(f"edge {e} colored twice", f"line {lineno}")
        mapping[e] = c
    return EdgeColoring.from_mapping(mapping, graph.m)


def format_coloring(coloring: EdgeColoring) -> str:
    return "".join(f"{e} {c}\n" for e, c in enumerate(coloring.colors))


def emit_dot(graph: Graph, coloring: EdgeColoring | None = None, name: str = "G") -> str:
    """Deterministic Graphviz text; colored edges get a label and palette color."""
    if coloring is not None and len(coloring) != graph.m:
        raise ColoringError(f"coloring has {len(coloring)} colors for {graph.m} edges")
    lines = [f"graph {name} {{"]
    lines += [f"  {v};" for v in range(graph.n)]
    for idx, (u, v) in enumerate(graph.edges):
        if coloring is None:
            lines.append(f"  {u} -- {v};")
        else:
            c = coloring[idx]
            lines.append(f'  {u} -- {v} [label="{c}", color="{PALETTE[c % len(PALETTE)]}"];')
    lines.append("}")
    return "\n".join(lines) + "\n"


__all__ = [
    "FORMATS", "PALETTE", "ParseError", "GraphError", "ColoringError",
    "parse_graph", "parse_edge_list", "parse_graph6", "to_edge_list", "to_graph6",
    "parse_coloring", "format_coloring", "emit_dot",
]
