import pytest

from cyclehit import (
    FormatError,
    GraphError,
    Multigraph,
    parse_multigraph,
    serialize_multigraph,
    two_edge_cut_sides,
    vertex_connectivity,
)
from conftest import bowtie, c4, doubled_triangle, k4, naive_vertex_connectivity


def test_basic_accessors():
    G = Multigraph(3, [(0, 1), (0, 1), (1, 2)])
    assert G.n == 3 and G.m == 3
    assert G.endpoints(0) == (0, 1)
    assert G.other_end(0, 0) == 1
    assert G.incident(1) == (0, 1, 2)
    assert G.degrees() == [2, 3, 1]
    assert G.is_regular() is None
    assert doubled_triangle().is_regular() == 4


def test_loops_and_range_rejected():
    with pytest.raises(GraphError):
        Multigraph(2, [(0, 0)])
    with pytest.raises(GraphError):
        Multigraph(2, [(0, 2)])


def test_components_and_connectivity():
    G = Multigraph(4, [(0, 1), (2, 3)])
    assert len(G.components()) == 2
    assert not G.is_connected()
    assert vertex_connectivity(G) == 0
    assert vertex_connectivity(k4()) == 3
    assert vertex_connectivity(bowtie()) == 1
    assert vertex_connectivity(c4()) == 2


def test_connectivity_matches_naive_oracle():
    graphs = [k4(), c4(), bowtie(), doubled_triangle(),
              Multigraph(1, []), Multigraph(5, [(i, (i + 1) % 5) for i in range(5)])]
    for G in graphs:
        assert vertex_connectivity(G) == naive_vertex_connectivity(G)


def test_parallel_edges_do_not_change_connectivity():
    single = Multigraph(3, [(0, 1), (1, 2), (0, 2)])
    doubled = doubled_triangle()
    assert vertex_connectivity(single) == vertex_connectivity(doubled) == 2


def test_parse_serialize_roundtrip():
    text = "p mg 3 3\ne 0 1\ne 1 2\ne 0 2\n"
    G = parse_multigraph(text)
    assert serialize_multigraph(G) == text
    assert serialize_multigraph(parse_multigraph(serialize_multigraph(G))) == text


def test_parse_comments_and_errors():
    G = parse_multigraph("# hello\np mg 2 1\n# mid\ne 0 1\n")
    assert G.m == 1
    with pytest.raises(FormatError) as exc:
        parse_multigraph("p mg 2 1\ne 0 2\n")
    assert exc.value.line_no == 2
    with pytest.raises(FormatError):
        parse_multigraph("e 0 1\n")
    with pytest.raises(FormatError):
        parse_multigraph("p mg 3 2\ne 0 1\n")


def test_two_edge_cut_sides():
    # two triangles joined by two edges: the join is the unique 2-edge-cut
    G = Multigraph(6, [(0, 1), (1, 2), (0, 2), (3, 4), (4, 5), (3, 5), (2, 3), (0, 4)])
    cuts = two_edge_cut_sides(G)
    assert ((6, 7), (frozenset({0, 1, 2}), frozenset({3, 4, 5}))) in cuts
    with pytest.raises(GraphError):
        two_edge_cut_sides(Multigraph(2, [(0, 1)]))  # bridge


def test_two_edge_cut_on_three_connected_graph_is_empty():
    assert two_edge_cut_sides(k4()) == []
