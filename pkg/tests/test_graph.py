import pytest
from hypothesis import given, strategies as st

from impropriety.graph import (
    ColoringError, EdgeColoring, Graph, GraphError, impropriety_defect, validate_interval,
)

from conftest import path, star


def triangle():
    return Graph(3, ((0, 1), (1, 2), (2, 0)))


def test_path_proper_interval():
    rep = validate_interval(path(3), EdgeColoring((1, 2)))
    assert rep.is_interval and rep.defect == 1
    assert rep.violations == ()


def test_triangle_defect_two():
    # ab=1, bc=2, ca=1: vertex a sees {1, 1}
    rep = validate_interval(triangle(), EdgeColoring((1, 2, 1)))
    assert rep.is_interval
    assert rep.defect == 2
    assert rep.witness == (0, 1, (0, 2))


def test_star_gap():
    rep = validate_interval(star(3), EdgeColoring((1, 3, 4)))
    assert not rep.is_interval
    assert rep.violations == ((0, 2),)
    assert rep.defect == 1


@pytest.mark.parametrize("graph, colors, expected", [
    (Graph(2, ((0, 1),)), (7,), 1),
    (triangle(), (1, 2, 1), 2),
    (star(4), (0, 0, 0, 0), 4),
])
def test_impropriety_defect(graph, colors, expected):
    c = EdgeColoring(colors)
    assert impropriety_defect(graph, c) == expected
    assert validate_interval(graph, c).defect == expected


def test_isolated_vertices_are_fine():
    g = Graph(4, ((0, 1),))
    rep = validate_interval(g, EdgeColoring((5,)))
    assert rep.is_interval and rep.defect == 1


def test_edgeless():
    rep = validate_interval(Graph(3), EdgeColoring(()))
    assert rep.is_interval and rep.defect == 0 and rep.witness is None


def test_totality():
    with pytest.raises(ColoringError):
        validate_interval(triangle(), EdgeColoring((1, 2)))
    with pytest.raises(ColoringError):
        impropriety_defect(triangle(), EdgeColoring((1, 2, 3, 4)))
    with pytest.raises(ColoringError):
        EdgeColoring.from_mapping({0: 1, 2: 1}, 3)


@pytest.mark.parametrize("edges", [((0, 0),), ((0, 1), (1, 0)), ((0, 5),)])
def test_graph_rejects_non_simple(edges):
    with pytest.raises(GraphError):
        Graph(3, edges)


def test_degree_sum():
    g = Graph(5, ((0, 1), (1, 2), (2, 0), (3, 4)))
    assert sum(g.degree(v) for v in range(g.n)) == 2 * g.m
    assert g.components() == [[0, 1, 2], [3, 4]]


@st.composite
def colored_graphs(draw):
    n = draw(st.integers(1, 8))
    pairs = [(i, j) for i in range(n) for j in range(i + 1, n)]
    edges = draw(st.lists(st.sampled_from(pairs), unique=True, max_size=len(pairs))) if pairs else []
    colors = draw(st.lists(st.integers(-5, 5), min_size=len(edges), max_size=len(edges)))
    return Graph(n, tuple(edges)), EdgeColoring(tuple(colors))


@given(colored_graphs(), st.integers(-1000, 1000))
def test_translation_invariance(gc, shift):
    g, c = gc
    a = validate_interval(g, c)
    b = validate_interval(g, c.translate(shift))
    assert (a.is_interval, a.defect) == (b.is_interval, b.defect)


@given(colored_graphs())
def test_defect_between_one_and_max_degree(gc):
    g, c = gc
    d = impropriety_defect(g, c)
    if g.m:
        assert 1 <= d <= g.max_degree
    else:
        assert d == 0


@given(colored_graphs())
def test_violations_iff_not_interval(gc):
    g, c = gc
    rep = validate_interval(g, c)
    assert rep.is_interval == (not rep.violations)
    for v, missing in rep.violations:
        seen = {c[e] for e in g.incidence[v]}
        assert missing not in seen and min(seen) < missing < max(seen)
