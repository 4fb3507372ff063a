"""Top-level constructive pipelines.

third_pipeline: t-factor of a 2-connected 3t-regular graph through a
prescribed edge, meeting every prescribed odd cycle in a non-empty matching.
half_pipeline: t-factor (t even) of a 2-connected 2t-regular graph meeting
and co-meeting every prescribed odd cycle, via an even-indegree orientation.
The *_arbitrary variants accept cycles of any length >= 3 on 3-connected
input and solve through the 2-edge-cut recursion.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import Optional

from .cycles import CycleSet, cycle_decomposition, cycle_vertices
from .expansion import cubic_expansion, project_factor, split_expansion
from .factors import Factor, two_factorization, verify_factor, verify_intersections
from .multigraph import GraphError, Multigraph, vertex_connectivity
from .orientation import Orientation, verify_orientation
from .solver import (
    SAT,
    UNSAT,
    BudgetExceededError,
    OracleVerdict,
    SearchBudget,
    bipartite_alternating_matching,
    constrained_perfect_matching,
    two_cut_recursion,
)

__all__ = [
    "PipelineReport",
    "third_pipeline",
    "orient_even_indegree",
    "half_pipeline",
    "extend_factor",
    "third_arbitrary_pipeline",
    "half_arbitrary_pipeline",
]


@dataclass
class PipelineReport:
    factor: Factor
    expansion_stats: dict[str, int] = field(default_factory=dict)
    solver_stats: dict[str, int] = field(default_factory=dict)
    checks: dict[str, bool] = field(default_factory=dict)
    orientation: Optional[Orientation] = None

    def summary(self, mode: str) -> str:
        nodes = sum(self.solver_stats.values())
        return f"ok t={self.factor.t} hits={mode} nodes={nodes}"


def _require(condition: bool, message: str):
    if not condition:
        raise GraphError(message)


def _check_common(
    G: Multigraph,
    O: CycleSet,
    regularity: int,
    connectivity: int,
    odd_only: bool,
):
    _require(O.host == G, "cycle set does not belong to this graph")
    _require(G.is_regular() == regularity, f"graph must be {regularity}-regular")
    _require(
        vertex_connectivity(G) >= connectivity,
        f"graph must be {connectivity}-connected",
    )
    if odd_only:
        _require(O.all_odd(), "all prescribed cycles must be odd")
    else:
        _require(O.min_length() >= 3 or len(O) == 0, "2-cycles are not allowed here")


def _unwrap(verdict: OracleVerdict, what: str) -> tuple[int, ...]:
    if verdict.status == SAT:
        return verdict.witness.edge_ids
    if verdict.status == UNSAT:
        # Guaranteed SAT when the preconditions hold, so this is a breach.
        raise GraphError(f"{what} is unsolvable; the input violates a precondition")
    raise BudgetExceededError(f"{what} exceeded the search budget")


def third_pipeline(
    G: Multigraph,
    O: CycleSet,
    e: int,
    t: int,
    budget: Optional[SearchBudget] = None,
    checked: bool = True,
) -> PipelineReport:
    """t-factor through edge e whose intersection with every prescribed odd
    cycle is a non-empty matching (G 2-connected and 3t-regular)."""
    _require(0 <= e < G.m, f"edge id {e} out of range")
    if checked:
        _check_common(G, O, regularity=3 * t, connectivity=2, odd_only=True)
    xmap, induced = cubic_expansion(G, O, t, family="third")
    verdict = constrained_perfect_matching(
        xmap.expanded, induced, forced_edge=xmap.edge_map[e], budget=budget
    )
    matching = _unwrap(verdict, "expanded matching instance")
    F = project_factor(xmap, matching, t)
    checks = {
        "t_factor": verify_factor(G, F, t),
        "forced_edge": e in F.edge_ids,
        "hit_matching": verify_intersections(F, O, "hit-matching"),
    }
    if not all(checks.values()):
        raise AssertionError(f"pipeline postcondition failed: {checks}")
    return PipelineReport(
        factor=F,
        expansion_stats={"vertices": xmap.expanded.n, "edges": xmap.expanded.m},
        solver_stats={"matching_nodes": verdict.nodes_explored},
        checks=checks,
    )


def orient_even_indegree(
    G: Multigraph,
    O: CycleSet,
    t: int,
    budget: Optional[SearchBudget] = None,
    checked: bool = True,
    arbitrary: bool = False,
) -> Orientation:
    """Orientation with every indegree even and no prescribed cycle oriented
    (G 2-connected and 2t-regular, t even).

    Method: orient a full cycle decomposition cyclically, then flip the
    original edges matched in a cycle-hitting perfect matching of the cubic
    expansion.  With arbitrary=True, cycles of any length >= 3 are accepted,
    G must be 3-connected, and the matching is found by 2-cut recursion.
    """
    _require(t >= 2 and t % 2 == 0, "t must be an even integer >= 2")
    if checked:
        _check_common(
            G,
            O,
            regularity=2 * t,
            connectivity=3 if arbitrary else 2,
            odd_only=not arbitrary,
        )
    decomposition = cycle_decomposition(G, O)
    head = [-1] * G.m
    for cyc in decomposition.cycles:
        walk = cycle_vertices(G, cyc)
        k = len(cyc)
        for i, eid in enumerate(cyc):
            head[eid] = walk[(i + 1) % k]
    D = Orientation(G, tuple(head))

    xmap, induced = cubic_expansion(G, O, t, family="half")
    if arbitrary:
        verdict = two_cut_recursion(xmap.expanded, induced, budget=budget)
    else:
        verdict = constrained_perfect_matching(xmap.expanded, induced, budget=budget)
    matching = set(_unwrap(verdict, "orientation matching instance"))
    flipped = D.flipped(
        e for e, new in enumerate(xmap.edge_map) if new in matching
    )
    if not verify_orientation(G, flipped, O):
        raise AssertionError("orientation postcondition failed")
    return flipped


def half_pipeline(
    G: Multigraph,
    O: CycleSet,
    t: int,
    budget: Optional[SearchBudget] = None,
    checked: bool = True,
    arbitrary: bool = False,
) -> PipelineReport:
    """t-factor (t even) sharing at least one edge with every prescribed
    cycle and leaving at least one edge of each uncovered."""
    D = orient_even_indegree(
        G, O, t, budget=budget, checked=checked, arbitrary=arbitrary
    )
    xmap, _pairing = split_expansion(G, D, O)
    matching = bipartite_alternating_matching(xmap.expanded)
    F = project_factor(xmap, matching, t)
    checks = {
        "t_factor": verify_factor(G, F, t),
        "hit_and_cohit": verify_intersections(F, O, "hit-and-cohit"),
    }
    if not all(checks.values()):
        raise AssertionError(f"pipeline postcondition failed: {checks}")
    return PipelineReport(
        factor=F,
        expansion_stats={"split_vertices": xmap.expanded.n},
        solver_stats={},
        checks=checks,
        orientation=D,
    )


def third_arbitrary_pipeline(
    G: Multigraph,
    O: CycleSet,
    t: int,
    budget: Optional[SearchBudget] = None,
    checked: bool = True,
) -> PipelineReport:
    """Like third_pipeline for cycles of any length >= 3 on 3-connected
    input; no edge can be prescribed, and the expanded instance (which may
    contain 2-edge-cuts) is solved by the 2-cut recursion."""
    _require(O.min_length() >= 3 or len(O) == 0, "2-cycles are not allowed here")
    if checked:
        _check_common(G, O, regularity=3 * t, connectivity=3, odd_only=False)
    xmap, induced = cubic_expansion(G, O, t, family="third")
    verdict = two_cut_recursion(xmap.expanded, induced, budget=budget)
    matching = _unwrap(verdict, "expanded matching instance")
    F = project_factor(xmap, matching, t)
    checks = {
        "t_factor": verify_factor(G, F, t),
        "hit_matching": verify_intersections(F, O, "hit-matching"),
    }
    if not all(checks.values()):
        raise AssertionError(f"pipeline postcondition failed: {checks}")
    return PipelineReport(
        factor=F,
        expansion_stats={"vertices": xmap.expanded.n, "edges": xmap.expanded.m},
        solver_stats={"matching_nodes": verdict.nodes_explored},
        checks=checks,
    )


def half_arbitrary_pipeline(
    G: Multigraph,
    O: CycleSet,
    t: int,
    budget: Optional[SearchBudget] = None,
    checked: bool = True,
) -> PipelineReport:
    """half_pipeline for cycles of any length >= 3 on 3-connected input."""
    _require(O.min_length() >= 3 or len(O) == 0, "2-cycles are not allowed here")
    return half_pipeline(G, O, t, budget=budget, checked=checked, arbitrary=True)


def extend_factor(G: Multigraph, F: Factor, l: int) -> Factor:
    """Grow a t-factor to an l-factor containing it, for any l of the same
    parity with t <= l <= r, by adding 2-factors of the complement."""
    r = G.is_regular()
    _require(r is not None, "graph must be regular")
    _require(F.host == G, "factor does not belong to this graph")
    _require(verify_factor(G, F, F.t), "input is not a valid t-factor")
    _require(
        F.t <= l <= r and (l - F.t) % 2 == 0,
        f"l must lie in {{t, t+2, ..., {r}}}, got l={l}",
    )
    if l == F.t:
        return F
    fset = F.edge_set()
    rest_ids = [e for e in range(G.m) if e not in fset]
    rest = Multigraph(G.n, [G.edges[e] for e in rest_ids])
    needed = (l - F.t) // 2
    extra: list[int] = []
    for two_factor in two_factorization(rest)[:needed]:
        extra.extend(rest_ids[e] for e in two_factor.edge_ids)
    result = Factor(G, l, tuple(sorted(fset | set(extra))))
    if not verify_factor(G, result, l):
        raise AssertionError("extension postcondition failed")
    return result
