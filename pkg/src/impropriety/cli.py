"""Command line entry point: ``impro color|ktree|exact|verify``.

Exit codes: 0 ok, 1 input or parameter error, 2 not outerplanar,
3 search budget exhausted, 4 verification failed.

Output goes to stdout unless ``--out-dir`` (or ``$IMPRO_OUT_DIR``) names a
directory; then every produced file lands there next to one
``manifest.json`` recording the command, parameters and input digest.
"""

from __future__ import annotations

import argparse
import hashlib
import json
import logging
import os
import sys
from dataclasses import replace
from importlib import metadata
from pathlib import Path

from .exact import EDGE_ORDERS, SearchConfig, Status, exact_impropriety, exists_coloring
from .formats import (
    FORMATS, ParseError, emit_dot, format_coloring, parse_coloring, parse_graph,
    to_edge_list, to_graph6,
)
from .graph import ColoringError, EdgeColoring, GraphError, validate_interval
from .ktree import certificate, gen_ktree, size_for_target
from .outerplanar import (
    NotOuterplanar, add_boundary, build_dual_tree, color_outerplanar, outerplanar_embedding,
)

EXIT_OK, EXIT_INPUT, EXIT_NOT_OUTERPLANAR, EXIT_BUDGET, EXIT_VERIFY = 0, 1, 2, 3, 4
OUT_DIR_ENV = "IMPRO_OUT_DIR"


class InputError(Exception):
    pass


def _version() -> str:
    try:
        return metadata.version("artifact")
    except metadata.PackageNotFoundError:
        return "0+unknown"


class Output:
    """Collects named outputs; writes them plus a manifest, or prints them."""

    def __init__(self, args, command: str, inputs: list[bytes]):
        out_dir = getattr(args, "out_dir", None) or os.environ.get(OUT_DIR_ENV)
        self.dir = Path(out_dir) if out_dir else None
        self.command = command
        self.params = {k: v for k, v in vars(args).items() if k not in ("func", "out_dir")}
        digest = hashlib.sha256()
        for blob in inputs:
            digest.update(blob)
        self.digest = digest.hexdigest() if inputs else None
        self.files: dict[str, str] = {}

    def add(self, name: str, text: str):
        self.files[name] = text

    def finish(self, exit_code: int) -> int:
        if self.dir is None:
            for text in self.files.values():
                sys.stdout.write(text)
            return exit_code
        self.dir.mkdir(parents=True, exist_ok=True)
        for name, text in self.files.items():
            (self.dir / name).write_text(text)
        manifest = {
            "command": self.command,
            "input_sha256": self.digest,
            "parameters": self.params,
            "version": _version(),
            "outputs": sorted(self.files),
            "exit_code": exit_code,
        }
        (self.dir / "manifest.json").write_text(json.dumps(manifest, indent=2, default=str) + "\n")
        return exit_code


def _read(path: str) -> bytes:
    try:
        return Path(path).read_bytes() if path != "-" else sys.stdin.buffer.read()
    except OSError as exc:
        raise InputError(f"cannot read {path}: {exc.strerror}") from None


def _load_graph(path: str, fmt: str):
    raw = _read(path)
    try:
        return raw, parse_graph(raw, fmt)
    except (ParseError, GraphError) as exc:
        raise InputError(f"{path}: {exc}") from None


def cmd_color(args) -> int:
    raw, graph = _load_graph(args.graph, args.format)
    out = Output(args, "color", [raw])
    try:
        coloring, report = color_outerplanar(graph, args.root_face)
    except NotOuterplanar as exc:
        print(str(exc))
        return EXIT_NOT_OUTERPLANAR
    except ValueError as exc:
        raise InputError(str(exc)) from None
    stem = Path(args.graph).stem if args.graph != "-" else "graph"
    if args.emit == "report":
        out.add(f"{stem}.report.txt", report.summary() + "\n")
    elif args.emit == "coloring":
        out.add(f"{stem}.coloring", format_coloring(coloring))
    elif args.emit == "dot":
        out.add(f"{stem}.dot", emit_dot(graph, coloring))
    else:
        if graph.n < 3 or not graph.is_connected():
            raise InputError(f"--emit {args.emit} needs a connected graph on three or more vertices")
        tri = add_boundary(outerplanar_embedding(graph))
        if args.emit == "triangulation":
            out.add(f"{stem}.faces.edges", to_edge_list(tri.graph, tri.annotations()))
        else:
            dual = build_dual_tree(tri, args.root_face or 0)
            lines = ["graph dual {"]
            for f, face in enumerate(tri.faces):
                lines.append(f'  f{f} [label="{" ".join(map(str, face))}\\nd={dual.dist[f]}"];')
            lines += [f"  f{a} -- f{b};" for a, b in dual.edges]
            out.add(f"{stem}.dual.dot", "\n".join(lines + ["}"]) + "\n")
    return out.finish(EXIT_OK)


def cmd_ktree(args) -> int:
    k = args.k
    if args.target is not None:
        if args.m is not None or args.n is not None:
            raise InputError("give either m n or --target, not both")
        try:
            m, n = size_for_target(k, args.target)
        except ValueError as exc:
            raise InputError(str(exc)) from None
    else:
        if args.m is None or args.n is None:
            raise InputError("ktree needs k m n, or k with --target N")
        m, n = args.m, args.n
    try:
        wit = gen_ktree(k, m, n)
        cert = certificate(k, m, n)
    except ValueError as exc:
        raise InputError(str(exc)) from None
    out = Output(args, "ktree", [])
    stem = f"T_k{k}_m{m}_n{n}"
    if args.emit in ("graph", "both"):
        if args.format == "graph6":
            out.add(f"{stem}.g6", to_graph6(wit.graph) + "\n")
        else:
            out.add(f"{stem}.edges", to_edge_list(wit.graph))
    if args.emit in ("certificate", "both"):
        out.add(f"{stem}.certificate.txt", cert.report())
        out.add(f"{stem}.certificate.json", cert.to_json() + "\n")
    return out.finish(EXIT_OK)


def cmd_exact(args) -> int:
    raw, graph = _load_graph(args.graph, args.format)
    if graph.m == 0:
        raise InputError("graph has no edges")
    if graph.m > 30:
        print(f"warning: {graph.m} edges; exact search may not finish", file=sys.stderr)
    cfg = SearchConfig(
        color_halfwidth=args.halfwidth, node_budget=args.budget, edge_order=args.order,
    )
    out = Output(args, "exact", [raw])
    stem = Path(args.graph).stem if args.graph != "-" else "graph"
    if args.max_defect is not None:
        return _decide(graph, cfg, args.max_defect, out, stem)
    res = exact_impropriety(graph, cfg)
    if not res.exact:
        out.add(f"{stem}.exact.txt", f"budget exhausted after {res.nodes} nodes: bounds [{res.lower}, {res.upper}]\n")
        return out.finish(EXIT_BUDGET)
    text = f"impro = {res.value}\nnodes = {res.nodes}\n"
    out.add(f"{stem}.exact.txt", text)
    out.add(f"{stem}.witness.coloring", format_coloring(res.witness))
    return out.finish(EXIT_OK)


def _decide(graph, cfg, k, out, stem) -> int:
    colors = [0] * graph.m
    budget = [cfg.node_budget]
    for comp in graph.components():
        sub, origin = graph.subgraph(comp)
        if sub.m == 0:
            continue
        dec = exists_coloring(sub, replace(cfg, max_defect=k), budget)
        if dec.status is Status.BUDGET:
            out.add(f"{stem}.exact.txt", f"defect <= {k}: budget exhausted\n")
            return out.finish(EXIT_BUDGET)
        if dec.status is Status.NO:
            out.add(f"{stem}.exact.txt", f"defect <= {k}: no\nimpro > {k}\n")
            return out.finish(EXIT_OK)
        for i, e in enumerate(origin):
            colors[e] = dec.coloring[i]
    out.add(f"{stem}.exact.txt", f"defect <= {k}: yes\nimpro <= {k}\n")
    out.add(f"{stem}.witness.coloring", format_coloring(EdgeColoring(tuple(colors))))
    return out.finish(EXIT_OK)


def cmd_verify(args) -> int:
    raw, graph = _load_graph(args.graph, args.format)
    craw = _read(args.coloring)
    try:
        coloring = parse_coloring(craw, graph)
    except (ParseError, ColoringError) as exc:
        raise InputError(f"{args.coloring}: {exc}") from None
    report = validate_interval(graph, coloring)
    lines = [report.summary()]
    lines += [f"gap: vertex {v} missing color {c}" for v, c in report.violations]
    if report.witness is not None:
        v, c, es = report.witness
        lines.append(f"witness: vertex {v} color {c} edges {' '.join(map(str, es))}")
    out = Output(args, "verify", [raw, craw])
    out.add("verify.txt", "\n".join(lines) + "\n")
    return out.finish(EXIT_OK if report.is_interval else EXIT_VERIFY)


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        # usage errors are input errors, not the not-outerplanar code 2
        self.print_usage(sys.stderr)
        self.exit(EXIT_INPUT, f"{self.prog}: error: {message}\n")


def build_parser() -> argparse.ArgumentParser:
    parser = _Parser(prog="impro", description="Improper interval edge colorings.")
    parser.add_argument("-v", "--verbose", action="store_true", help="log search progress")
    sub = parser.add_subparsers(dest="command", required=True)

    def common(p, graph=True):
        if graph:
            p.add_argument("graph", help="graph file, or - for stdin")
            p.add_argument("--format", choices=FORMATS, default="edge-list")
        p.add_argument("--out-dir", help=f"write files here (default: ${OUT_DIR_ENV} or stdout)")

    p = sub.add_parser("color", help="defect-2 interval coloring of an outerplanar graph")
    common(p)
    p.add_argument("--root-face", type=int, default=None, help="index of the root face")
    p.add_argument("--emit", choices=("report", "coloring", "dot", "triangulation", "dual"),
                   default="report")
    p.set_defaults(func=cmd_color)

    p = sub.add_parser("ktree", help="witness k-tree T(k,m,n) and its lower-bound certificate")
    p.add_argument("k", type=int)
    p.add_argument("m", type=int, nargs="?")
    p.add_argument("n", type=int, nargs="?")
    p.add_argument("--target", type=int, help="pick the smallest m = n certifying impro >= N")
    p.add_argument("--emit", choices=("graph", "certificate", "both"), default="both")
    p.add_argument("--format", choices=FORMATS, default="edge-list")
    common(p, graph=False)
    p.set_defaults(func=cmd_ktree)

    p = sub.add_parser("exact", help="exact impropriety by backtracking")
    common(p)
    p.add_argument("--max-defect", type=int, help="only decide whether defect <= K is possible")
    p.add_argument("--budget", type=int, default=10**8, help="search node budget")
    p.add_argument("--halfwidth", type=int, default=None, help="color window [-H, H]")
    p.add_argument("--order", choices=EDGE_ORDERS, default="bfs")
    p.set_defaults(func=cmd_exact)

    p = sub.add_parser("verify", help="check a coloring file against a graph")
    common(p)
    p.add_argument("coloring", help="coloring file: 'edge-index color' per line")
    p.set_defaults(func=cmd_verify)
    return parser


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    logging.basicConfig(level=logging.INFO if args.verbose else logging.WARNING,
                        format="%(levelname)s %(name)s: %(message)s")
    try:
        return args.func(args)
    except InputError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_INPUT


if __name__ == "__main__":
    sys.exit(main())
