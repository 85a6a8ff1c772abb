"""Improper interval edge colorings: defect-2 colorings of outerplanar
graphs, k-tree lower-bound witnesses and an exact impropriety solver."""

from .exact import SearchConfig, Status, exact_impropriety, exists_coloring
from .formats import emit_dot, parse_coloring, parse_graph, to_edge_list, to_graph6
from .graph import DefectReport, EdgeColoring, Graph, impropriety_defect, validate_interval
from .ktree import certificate, gen_ktree, size_for_target, verify_ktree, walk_bound
from .outerplanar import (
    NotOuterplanar, add_boundary, build_dual_tree, color_outerplanar, complete_to_maximal,
    distance_coloring, outerplanar_embedding, unique_min_face,
)

__all__ = [
    "Graph", "EdgeColoring", "DefectReport", "validate_interval", "impropriety_defect",
    "parse_graph", "parse_coloring", "to_edge_list", "to_graph6", "emit_dot",
    "NotOuterplanar", "outerplanar_embedding", "add_boundary", "complete_to_maximal",
    "build_dual_tree", "distance_coloring", "unique_min_face", "color_outerplanar",
    "gen_ktree", "verify_ktree", "walk_bound", "certificate", "size_for_target",
    "SearchConfig", "Status", "exists_coloring", "exact_impropriety",
]
