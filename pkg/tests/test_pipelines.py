import pytest

from cyclehit import (
    CycleSet,
    Factor,
    GraphError,
    Multigraph,
    extend_factor,
    gen_doubled,
    gen_thm5,
    half_arbitrary_pipeline,
    half_pipeline,
    orient_even_indegree,
    pack_cycles,
    petersen,
    petersen_cycles,
    random_regular_multigraph,
    t_factor_oracle,
    third_arbitrary_pipeline,
    third_pipeline,
    verify_factor,
    verify_intersections,
    verify_orientation,
)
from conftest import circulant, doubled_triangle, k4


def test_third_pipeline_petersen_every_edge():
    G = petersen()
    O = petersen_cycles(G)
    for e in range(G.m):
        rep = third_pipeline(G, O, e, 1)
        assert e in rep.factor.edge_ids
        assert verify_factor(G, rep.factor, 1)
        assert verify_intersections(rep.factor, O, "hit-matching")


def test_third_pipeline_t2_doubled_petersen():
    # doubling Petersen gives a 6-regular 2-connected graph for t=2
    base = petersen()
    G = Multigraph(base.n, list(base.edges) * 2)
    O = CycleSet(G, petersen_cycles(base).cycles)
    rep = third_pipeline(G, O, 0, 2)
    assert verify_factor(G, rep.factor, 2)
    assert verify_intersections(rep.factor, O, "hit-matching")


def test_third_pipeline_precondition_checks():
    G = petersen()
    O = petersen_cycles(G)
    with pytest.raises(GraphError):
        third_pipeline(G, O, 0, 2)  # not 6-regular
    with pytest.raises(GraphError):
        third_pipeline(G, O, 99, 1)  # edge id out of range
    # even prescribed cycle rejected in the odd-cycle pipeline
    G4 = circulant(8, (1, 2, 3))
    O4 = pack_cycles(G4, parity="even")
    with pytest.raises(GraphError):
        third_pipeline(G4, O4, 0, 2)


def test_orient_even_indegree_doubled_triangle():
    G = doubled_triangle()
    O = CycleSet(G, [(0, 1, 2)])
    D = orient_even_indegree(G, O, 2)
    assert verify_orientation(G, D, O)
    assert all(d in (0, 2, 4) for d in D.indegrees())


def test_orient_even_indegree_requires_even_t():
    G = doubled_triangle()
    O = CycleSet(G, [(0, 1, 2)])
    with pytest.raises(GraphError):
        orient_even_indegree(G, O, 3)


def test_half_pipeline_doubled_triangle():
    G = doubled_triangle()
    O = CycleSet(G, [(0, 1, 2)])
    rep = half_pipeline(G, O, 2)
    shared = [e for e in (0, 1, 2) if e in rep.factor.edge_ids]
    assert 1 <= len(shared) <= 2
    assert verify_factor(G, rep.factor, 2)


def test_half_pipeline_random_batch():
    for seed in range(10):
        G = random_regular_multigraph(8, 4, seed)
        O = pack_cycles(G, parity="odd")
        rep = half_pipeline(G, O, 2)
        assert verify_intersections(rep.factor, O, "hit-and-cohit")
        v = t_factor_oracle(G, 2, O, "hit-and-cohit")
        assert v.status == "SAT"


def test_extend_factor():
    inst = gen_thm5(4)
    G = inst.graph
    v = t_factor_oracle(G, 2, inst.cycles, "hit")
    F = v.witness
    F4 = extend_factor(G, F, 4)
    assert verify_factor(G, F4, 4)
    assert set(F.edge_ids) <= set(F4.edge_ids)
    assert len(F4.edge_ids) == G.m  # l = r: the whole edge set
    assert verify_intersections(F4, inst.cycles, "hit")
    assert extend_factor(G, F, 2) is F


def test_extend_factor_validation():
    G = k4()
    F = Factor(G, 1, (0, 5))
    with pytest.raises(GraphError):
        extend_factor(G, F, 2)  # parity mismatch
    with pytest.raises(GraphError):
        extend_factor(G, F, 5)  # above regularity
    F3 = extend_factor(G, F, 3)
    assert verify_factor(G, F3, 3)
    assert set(F.edge_ids) <= set(F3.edge_ids)


def test_third_arbitrary_pipeline_k4():
    G = k4()
    O = CycleSet(G, [(0, 3, 1)])  # a triangle is fine here too
    rep = third_arbitrary_pipeline(G, O, 1)
    assert verify_intersections(rep.factor, O, "hit-matching")
    # and with an even cycle
    O4 = CycleSet(G, [(0, 4, 5, 1)])  # 4-cycle 0-1-3-2
    rep = third_arbitrary_pipeline(G, O4, 1)
    assert verify_intersections(rep.factor, O4, "hit-matching")


def test_third_arbitrary_pipeline_circulant():
    G = circulant(8, (1, 2, 3))  # 6-regular, 3-connected
    O = pack_cycles(G, parity="even")
    rep = third_arbitrary_pipeline(G, O, 2)
    assert verify_factor(G, rep.factor, 2)
    assert verify_intersections(rep.factor, O, "hit-matching")


def test_half_arbitrary_pipeline_circulant():
    G = circulant(8, (1, 2))  # 4-regular, 3-connected
    O = pack_cycles(G, parity="even")
    rep = half_arbitrary_pipeline(G, O, 2)
    assert verify_intersections(rep.factor, O, "hit-and-cohit")


def test_arbitrary_pipelines_reject_two_cycles():
    inst = gen_doubled(doubled_triangle())
    with pytest.raises(GraphError):
        third_arbitrary_pipeline(inst.graph, inst.cycles, 2)
    inst2 = gen_doubled(Multigraph(3, [(0, 1), (1, 2), (0, 2)]))
    with pytest.raises(GraphError):
        half_arbitrary_pipeline(inst2.graph, inst2.cycles, 2)
