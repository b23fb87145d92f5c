import pytest
from hypothesis import given, settings, strategies as st

from polyvis import (
    Point,
    Polygon,
    PolygonError,
    boundary_cycle,
    convex_vertex_indices,
    gen_pseudo_tower,
    gen_pseudo_triangle,
    gen_tower,
    render_svg,
    segment_inside,
    visibility_graph,
    write_polygon,
)
from polyvis.geometry import parse_polygon, PolygonParseError

from conftest import PT6_EDGES, T5_EDGES


def test_segment_inside_t5_chord(t5_polygon):
    assert segment_inside(t5_polygon, 1, 4)  # chord between the reflex vertices


def test_segment_inside_t5_blocked(t5_polygon):
    assert not segment_inside(t5_polygon, 0, 2)  # exits above reflex vertex 1


def test_segment_inside_adjacent(t5_polygon):
    for i in range(5):
        assert segment_inside(t5_polygon, i, (i + 1) % 5)


def test_segment_inside_same_vertex_rejected(t5_polygon):
    with pytest.raises(ValueError):
        segment_inside(t5_polygon, 2, 2)


def test_visibility_graph_t5(t5_polygon):
    assert visibility_graph(t5_polygon).edges == T5_EDGES


def test_visibility_graph_pt6(pt6_polygon):
    assert visibility_graph(pt6_polygon).edges == PT6_EDGES


def test_visibility_graph_convex_quad():
    quad = Polygon(((0, 0), (4, 1), (5, 5), (-1, 4)))
    g = visibility_graph(quad)
    assert g.m == 6  # complete graph on 4 vertices


def test_boundary_cycle():
    quad = Polygon(((0, 0), (4, 1), (5, 5), (-1, 4)))
    assert boundary_cycle(quad).order == (0, 1, 2, 3)


def test_polygon_validation_errors():
    with pytest.raises(PolygonError):
        Polygon(((0, 0), (1, 0)))  # too few
    with pytest.raises(PolygonError):
        Polygon(((0, 0), (1, 0), (2, 0), (1, 1)))  # consecutive collinear
    with pytest.raises(PolygonError):
        Polygon(((0, 0), (0, 3), (3, 0)))  # clockwise
    with pytest.raises(PolygonError):
        Polygon(((0, 0), (4, 0), (0, 3), (4, 3)))  # self-intersecting
    with pytest.raises(PolygonError):
        Polygon(((0, 0), (4, 0), (4, 0), (0, 3)))  # duplicate point


def test_gen_tower_shape_properties():
    for seed in range(5):
        poly = gen_tower(9, seed)
        assert poly.n == 9
        assert len(convex_vertex_indices(poly)) == 3  # apex plus two base corners
        g = visibility_graph(poly)
        apex_like = [
            v
            for v in range(9)
            if g.degree(v) == 2 and g.has_edge(*g.neighbors(v))
        ]
        assert apex_like  # the apex always qualifies


def test_gen_tower_min_size():
    with pytest.raises(ValueError):
        gen_tower(3, 0)


def test_gen_tower_deterministic():
    a = gen_tower(12, 7)
    b = gen_tower(12, 7)
    assert write_polygon(a) == write_polygon(b)
    assert write_polygon(a) != write_polygon(gen_tower(12, 8))


def test_gen_pseudo_triangle_shapes():
    assert gen_pseudo_triangle(3, 1).n == 3
    for n, seed in [(6, 0), (11, 2), (17, 5)]:
        poly = gen_pseudo_triangle(n, seed)
        assert poly.n == n
        assert len(convex_vertex_indices(poly)) == 3


def test_gen_pseudo_triangle_degenerate_property():
    from polyvis.geometry import pseudo_triangle_chains

    poly = gen_pseudo_triangle(8, 1, degenerate=True)
    g = visibility_graph(poly)
    chains = pseudo_triangle_chains(poly)
    left = set(chains["left"][:-1])
    right = set(chains["right"][:-1])
    both = [
        w for w in chains["bottom"] if g.nbr_set(w) & left and g.nbr_set(w) & right
    ]
    assert len(both) == 1


def test_gen_pseudo_triangle_degenerate_too_small():
    with pytest.raises(ValueError):
        gen_pseudo_triangle(5, 0, degenerate=True)


def test_gen_pseudo_tower_instance():
    inst = gen_pseudo_tower(10, 4)
    assert inst.graph.n == 10
    degs = [inst.graph.degree(v) for v in range(10)]
    assert degs.count(1) == 1
    assert inst.tail
    c1, c2 = inst.chains
    assert c1[0] == c2[0]  # shared top
    assert sorted(list(c1) + list(c2[1:])) == list(range(10))


def test_gen_pseudo_tower_deterministic():
    a = gen_pseudo_tower(9, 2)
    b = gen_pseudo_tower(9, 2)
    assert a.graph == b.graph and a.kept == b.kept


def test_general_position_of_generators():
    from polyvis import kernels

    for poly in (gen_tower(10, 3), gen_pseudo_triangle(12, 3)):
        assert not kernels.has_collinear_triple(poly.coords())


def test_visibility_symmetric_on_random_polygons():
    from polyvis import kernels

    checked = 0
    for poly in (
        gen_pseudo_triangle(15, 9),
        gen_pseudo_triangle(26, 4),
        gen_tower(24, 7),
        gen_tower(30, 2),
    ):
        coords = poly.coords()
        for i in range(poly.n):
            for j in range(i + 1, poly.n):
                assert kernels.segment_visible(
                    coords, i, j
                ) == kernels.segment_visible(coords, j, i)
                checked += 1
    assert checked >= 1000


def test_polygon_file_round_trip(t5_polygon):
    text = write_polygon(t5_polygon)
    assert parse_polygon(text) == t5_polygon


def test_polygon_parse_errors():
    with pytest.raises(PolygonParseError):
        parse_polygon("")
    with pytest.raises(PolygonParseError):
        parse_polygon("2\n0 0\n1 1\n")
    with pytest.raises(PolygonParseError):
        parse_polygon("3\n0 0\nbad line\n2 2\n")
    with pytest.raises(PolygonParseError):
        parse_polygon("3\n0 0\n1 0\n")


def test_render_svg_t5(t5_polygon, t5_graph):
    svg = render_svg(t5_polygon, t5_graph)
    assert svg.count("<line") == 8  # 5 boundary edges + 3 chords
    assert 'Z"' in svg and svg.startswith("<svg")


def test_render_svg_polygon_only(t5_polygon):
    svg = render_svg(t5_polygon)
    assert "<line" not in svg
    assert svg.count("<path") == 1


def test_render_svg_empty_overlay(t5_polygon):
    from polyvis import Graph

    svg = render_svg(t5_polygon, Graph(5, frozenset()))
    assert "<line" not in svg


def test_render_svg_deterministic(pt6_polygon, pt6_graph):
    assert render_svg(pt6_polygon, pt6_graph) == render_svg(pt6_polygon, pt6_graph)


@settings(max_examples=25, deadline=None)
@given(st.integers(4, 14), st.integers(0, 10**6))
def test_generated_towers_always_valid(n, seed):
    poly = gen_tower(n, seed)
    g = visibility_graph(poly)
    assert g.n == n
    # boundary edges are always present
    for i in range(n):
        assert g.has_edge(i, (i + 1) % n)
