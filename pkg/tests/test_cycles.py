import pytest

from cyclehit import (
    CycleSet,
    FormatError,
    GraphError,
    Multigraph,
    cycle_decomposition,
    cycle_vertices,
    gen_sec6_2k,
    parse_cycles,
    serialize_cycles,
)
from conftest import doubled_triangle, k4


def test_cycle_vertices_triangle():
    G = Multigraph(3, [(0, 1), (1, 2), (0, 2)])
    assert cycle_vertices(G, (0, 1, 2)) == (0, 1, 2)


def test_cycle_vertices_two_cycle():
    G = doubled_triangle()
    assert cycle_vertices(G, (0, 3)) == (0, 1)
    with pytest.raises(GraphError):
        cycle_vertices(G, (0, 1))  # not parallel


def test_cycle_vertices_rejects_non_cycles():
    G = k4()
    with pytest.raises(GraphError):
        cycle_vertices(G, (0,))
    with pytest.raises(GraphError):
        cycle_vertices(G, (0, 0, 1))
    # path, not closed
    with pytest.raises(GraphError):
        cycle_vertices(G, (0, 3, 2))


def test_cycle_set_edge_disjointness():
    G = doubled_triangle()
    CycleSet(G, [(0, 1, 2), (3, 4, 5)])  # the two copies of the triangle
    CycleSet(G, [(0, 3), (1, 4), (2, 5)])  # the three 2-cycles
    with pytest.raises(GraphError):
        CycleSet(G, [(0, 1, 2), (0, 3)])  # share edge 0


def test_cycle_decomposition_covers_all_edges():
    inst = gen_sec6_2k(2)
    Q = cycle_decomposition(inst.graph, inst.cycles)
    covered = sorted(e for c in Q.cycles for e in c)
    assert covered == list(range(inst.graph.m))
    # the prescribed cycles survive verbatim
    assert Q.cycles[: len(inst.cycles)] == inst.cycles.cycles


def test_cycle_decomposition_rejects_odd_degree():
    G = Multigraph(2, [(0, 1)])
    with pytest.raises(GraphError):
        cycle_decomposition(G, CycleSet(G, []))


def test_cycle_decomposition_deterministic():
    inst = gen_sec6_2k(3)
    a = cycle_decomposition(inst.graph, inst.cycles)
    b = cycle_decomposition(inst.graph, inst.cycles)
    assert a.cycles == b.cycles


def test_parse_serialize_roundtrip():
    G = doubled_triangle()
    text = "p cyc 2\nc 3 0 1 2\nc 2 3 4\n"
    with pytest.raises(FormatError):
        parse_cycles(text, G)  # edges 3,4 are not parallel
    text = "p cyc 2\nc 3 0 1 2\nc 3 3 4 5\n"
    O = parse_cycles(text, G)
    assert serialize_cycles(O) == text


def test_parse_errors_carry_line_numbers():
    G = k4()
    with pytest.raises(FormatError) as exc:
        parse_cycles("p cyc 1\nc 2 0 3 1\n", G)
    assert exc.value.line_no == 2
    with pytest.raises(FormatError):
        parse_cycles("c 3 0 3 1\n", G)
