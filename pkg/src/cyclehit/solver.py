"""Exact search engines: degree-constrained subgraphs with cycle-hitting
constraints, constrained perfect matchings in cubic graphs, the 2-edge-cut
recursion, and the alternating matching of 2-regular bipartite graphs.

All searches branch on the lowest undecided edge id, include-branch first,
and propagate forced decisions (degree bounds and per-cycle feasibility), so
verdicts and witnesses are deterministic.
"""

from __future__ import annotations

import time
from dataclasses import dataclass
from typing import Iterable, Iterator, Optional

from .cycles import CycleSet
from .factors import MODES, Factor, verify_factor, verify_intersections
from .multigraph import GraphError, Multigraph, two_edge_cut_sides

__all__ = [
    "SAT",
    "UNSAT",
    "BUDGET_EXCEEDED",
    "SearchBudget",
    "OracleVerdict",
    "BudgetExceededError",
    "constrained_perfect_matching",
    "two_cut_recursion",
    "bipartite_alternating_matching",
    "t_factor_oracle",
    "enumerate_t_factors",
]

SAT = "SAT"
UNSAT = "UNSAT"
BUDGET_EXCEEDED = "BUDGET_EXCEEDED"


class BudgetExceededError(RuntimeError):
    """A search ran out of its node or wall-clock budget."""


@dataclass(frozen=True)
class SearchBudget:
    max_nodes: Optional[int] = None
    max_seconds: Optional[float] = None

    def __post_init__(self):
        if self.max_nodes is not None and self.max_nodes <= 0:
            raise ValueError("max_nodes must be positive")
        if self.max_seconds is not None and self.max_seconds <= 0:
            raise ValueError("max_seconds must be positive")


@dataclass
class OracleVerdict:
    status: str
    witness: Optional[Factor] = None
    nodes_explored: int = 0

    def summary(self) -> str:
        short = {SAT: "SAT", UNSAT: "UNSAT", BUDGET_EXCEEDED: "BUDGET"}[self.status]
        return f"{short} nodes={self.nodes_explored}"


class _Clock:
    """Shared node counter and deadline for one logical search."""

    def __init__(self, budget: Optional[SearchBudget]):
        self.nodes = 0
        self.max_nodes = budget.max_nodes if budget else None
        self.deadline = (
            time.monotonic() + budget.max_seconds
            if budget and budget.max_seconds
            else None
        )

    def tick(self):
        self.nodes += 1
        if self.max_nodes is not None and self.nodes > self.max_nodes:
            raise BudgetExceededError("node budget exhausted")
        if (
            self.deadline is not None
            and self.nodes % 256 == 0
            and time.monotonic() > self.deadline
        ):
            raise BudgetExceededError("time budget exhausted")


_UNDEC, _IN, _OUT = 0, 1, 2


class _DegreeSearch:
    """DFS over edge states with unit propagation.

    Constraints: every vertex ends with exactly `t` included edges; each
    prescribed cycle satisfies the requested intersection mode.
    """

    def __init__(
        self,
        G: Multigraph,
        t: int,
        cycles: tuple[tuple[int, ...], ...],
        mode: str,
        clock: _Clock,
    ):
        self.G = G
        self.m = G.m
        self.t = t
        self.mode = mode
        self.clock = clock
        self.state = bytearray(self.m)
        self.deg_in = [0] * G.n
        self.deg_und = G.degrees()
        self.trail: list[int] = []
        self.cycles = cycles
        self.edge_cycle = [-1] * self.m
        self.nbrs: list[tuple[int, ...]] = [()] * self.m
        for ci, cyc in enumerate(cycles):
            k = len(cyc)
            for i, e in enumerate(cyc):
                self.edge_cycle[e] = ci
                self.nbrs[e] = tuple({cyc[i - 1], cyc[(i + 1) % k]} - {e})
        self.cyc_in = [0] * len(cycles)
        self.cyc_out = [0] * len(cycles)
        self.cyc_und = [len(c) for c in cycles]

    def _undecided_cycle_edge(self, ci: int) -> int:
        for e in self.cycles[ci]:
            if self.state[e] == _UNDEC:
                return e
        raise AssertionError("no undecided edge left in cycle")

    def assign(self, e0: int, val0: int) -> bool:
        """Set an edge and propagate all consequences; False on conflict."""
        pending = [(e0, val0)]
        while pending:
            e, val = pending.pop()
            s = self.state[e]
            if s != _UNDEC:
                if s != val:
                    return False
                continue
            self.state[e] = val
            self.trail.append(e)
            # All counters must be updated before any conflict return, or
            # undo_to would rewind increments that never happened.
            ci = self.edge_cycle[e]
            for w in self.G.endpoints(e):
                self.deg_und[w] -= 1
                if val == _IN:
                    self.deg_in[w] += 1
            if ci >= 0 and self.mode != "none":
                self.cyc_und[ci] -= 1
                if val == _IN:
                    self.cyc_in[ci] += 1
                else:
                    self.cyc_out[ci] += 1
            for w in self.G.endpoints(e):
                if self.deg_in[w] > self.t:
                    return False
                if self.deg_in[w] + self.deg_und[w] < self.t:
                    return False
                if self.deg_und[w] > 0:
                    if self.deg_in[w] == self.t:
                        for f in self.G.incident(w):
                            if self.state[f] == _UNDEC:
                                pending.append((f, _OUT))
                    elif self.deg_in[w] + self.deg_und[w] == self.t:
                        for f in self.G.incident(w):
                            if self.state[f] == _UNDEC:
                                pending.append((f, _IN))
            if ci < 0 or self.mode == "none":
                continue
            if val == _IN and self.mode == "hit-matching":
                for f in self.nbrs[e]:
                    if self.state[f] == _IN:
                        return False
                    if self.state[f] == _UNDEC:
                        pending.append((f, _OUT))
            if self.cyc_in[ci] == 0:
                if self.cyc_und[ci] == 0:
                    return False
                if self.cyc_und[ci] == 1:
                    pending.append((self._undecided_cycle_edge(ci), _IN))
            if self.mode == "hit-and-cohit" and self.cyc_out[ci] == 0:
                if self.cyc_und[ci] == 0:
                    return False
                if self.cyc_und[ci] == 1:
                    pending.append((self._undecided_cycle_edge(ci), _OUT))
        return True

    def undo_to(self, mark: int):
        while len(self.trail) > mark:
            e = self.trail.pop()
            val = self.state[e]
            self.state[e] = _UNDEC
            for w in self.G.endpoints(e):
                self.deg_und[w] += 1
                if val == _IN:
                    self.deg_in[w] -= 1
            ci = self.edge_cycle[e]
            if ci >= 0 and self.mode != "none":
                self.cyc_und[ci] += 1
                if val == _IN:
                    self.cyc_in[ci] -= 1
                else:
                    self.cyc_out[ci] -= 1

    def infeasible_upfront(self) -> bool:
        return (
            any(d < self.t for d in self.deg_und)
            or (self.G.n * self.t) % 2 == 1
        )

    def witness(self) -> tuple[int, ...]:
        return tuple(e for e in range(self.m) if self.state[e] == _IN)

    def search(self, forced_in: Iterable[int] = ()) -> Optional[tuple[int, ...]]:
        if self.infeasible_upfront():
            return None
        for e in forced_in:
            if not self.assign(e, _IN):
                return None
        return self.witness() if self._dfs(0) else None

    def _dfs(self, lo: int) -> bool:
        e = lo
        while e < self.m and self.state[e] != _UNDEC:
            e += 1
        if e == self.m:
            return True
        self.clock.tick()
        for val in (_IN, _OUT):
            mark = len(self.trail)
            if self.assign(e, val) and self._dfs(e + 1):
                return True
            self.undo_to(mark)
        return False

    def enumerate(self, forced_in: Iterable[int] = ()) -> Iterator[tuple[int, ...]]:
        if self.infeasible_upfront():
            return
        for e in forced_in:
            if not self.assign(e, _IN):
                return
        yield from self._dfs_all(0)

    def _dfs_all(self, lo: int) -> Iterator[tuple[int, ...]]:
        e = lo
        while e < self.m and self.state[e] != _UNDEC:
            e += 1
        if e == self.m:
            yield self.witness()
            return
        self.clock.tick()
        for val in (_IN, _OUT):
            mark = len(self.trail)
            if self.assign(e, val):
                yield from self._dfs_all(e + 1)
            self.undo_to(mark)


def _check_witness(G: Multigraph, ids: tuple[int, ...], t: int, O: Optional[CycleSet], mode: str) -> Factor:
    F = Factor(G, t, ids)
    if not verify_factor(G, F, t):
        raise AssertionError("search returned a non-factor witness")
    if O is not None and mode != "none" and not verify_intersections(F, O, mode):
        raise AssertionError("search witness violates the intersection mode")
    return F


def t_factor_oracle(
    G: Multigraph,
    t: int,
    O: Optional[CycleSet] = None,
    mode: str = "none",
    budget: Optional[SearchBudget] = None,
) -> OracleVerdict:
    """Exact backtracking oracle for t-factors meeting a cycle set.

    SAT returns a verified witness; UNSAT is a proof of nonexistence (the
    space was exhausted); budget exhaustion is reported as its own status,
    never as UNSAT.
    """
    if mode not in MODES:
        raise ValueError(f"unknown mode {mode!r}")
    if t < 0:
        raise GraphError("t must be non-negative")
    if O is not None and O.host != G:
        raise GraphError("cycle set does not belong to this graph")
    cycles = O.cycles if O is not None else ()
    clock = _Clock(budget)
    engine = _DegreeSearch(G, t, tuple(cycles), mode, clock)
    try:
        ids = engine.search()
    except BudgetExceededError:
        return OracleVerdict(BUDGET_EXCEEDED, None, clock.nodes)
    if ids is None:
        return OracleVerdict(UNSAT, None, clock.nodes)
    return OracleVerdict(SAT, _check_witness(G, ids, t, O, mode), clock.nodes)


def enumerate_t_factors(
    G: Multigraph,
    t: int,
    O: Optional[CycleSet] = None,
    mode: str = "none",
) -> Iterator[tuple[int, ...]]:
    """All t-factors satisfying the mode, as sorted edge-id tuples, in
    lexicographic search order."""
    if mode not in MODES:
        raise ValueError(f"unknown mode {mode!r}")
    cycles = O.cycles if O is not None else ()
    engine = _DegreeSearch(G, t, tuple(cycles), mode, _Clock(None))
    return engine.enumerate()


def constrained_perfect_matching(
    G: Multigraph,
    O: Optional[CycleSet] = None,
    forced_edge: Optional[int] = None,
    budget: Optional[SearchBudget] = None,
) -> OracleVerdict:
    """Perfect matching of a cubic graph through a forced edge and hitting
    every prescribed cycle.  Exact: UNSAT only after exhausting the space."""
    if G.is_regular() != 3:
        raise GraphError("graph is not cubic")
    if O is not None and O.host != G:
        raise GraphError("cycle set does not belong to this graph")
    cycles = O.cycles if O is not None else ()
    clock = _Clock(budget)
    engine = _DegreeSearch(G, 1, tuple(cycles), "hit", clock)
    forced = (forced_edge,) if forced_edge is not None else ()
    try:
        ids = engine.search(forced_in=forced)
    except BudgetExceededError:
        return OracleVerdict(BUDGET_EXCEEDED, None, clock.nodes)
    if ids is None:
        return OracleVerdict(UNSAT, None, clock.nodes)
    if forced_edge is not None and forced_edge not in ids:
        raise AssertionError("forced edge missing from witness")
    return OracleVerdict(SAT, _check_witness(G, ids, 1, O, "hit"), clock.nodes)


def _induced(
    H: Multigraph, verts: frozenset[int], extra: Optional[tuple[int, int]]
) -> tuple[Multigraph, list[Optional[int]]]:
    """Induced subgraph plus an optional extra edge appended last.

    Returns the subgraph and the local-eid -> H-eid map (None for the extra
    edge)."""
    vmap = {v: i for i, v in enumerate(sorted(verts))}
    edges = []
    eid_map: list[Optional[int]] = []
    for eid, (u, v) in enumerate(H.edges):
        if u in vmap and v in vmap:
            edges.append((vmap[u], vmap[v]))
            eid_map.append(eid)
    if extra is not None:
        edges.append((vmap[extra[0]], vmap[extra[1]]))
        eid_map.append(None)
    return Multigraph(len(vmap), edges), eid_map


def _matching_of(H: Multigraph, clock: _Clock) -> Optional[set[int]]:
    engine = _DegreeSearch(H, 1, (), "none", clock)
    ids = engine.search()
    return set(ids) if ids is not None else None


def _two_cut_rec(
    H: Multigraph, cycles: tuple[tuple[int, ...], ...], clock: _Clock
) -> Optional[set[int]]:
    """Matching of H hitting all cycles, decomposing at 2-edge-cuts.

    Returns H-local edge ids or None (UNSAT)."""
    cuts = two_edge_cut_sides(H)
    if not cuts:
        engine = _DegreeSearch(H, 1, cycles, "hit", clock)
        ids = engine.search()
        return set(ids) if ids is not None else None
    (e1, e2), (side_a, side_b) = cuts[0]
    cycle_verts = {v for cyc in cycles for e in cyc for v in H.endpoints(e)}
    if cycle_verts and not (cycle_verts <= side_a or cycle_verts <= side_b):
        raise GraphError(
            f"2-edge-cut ({e1}, {e2}) separates members of the cycle set"
        )
    near = side_a if (not cycle_verts or cycle_verts <= side_a) else side_b
    far = side_b if near is side_a else side_a
    u1, v1 = H.endpoints(e1)
    x1, y1 = (u1, v1) if u1 in near else (v1, u1)
    u2, v2 = H.endpoints(e2)
    x2, y2 = (u2, v2) if u2 in near else (v2, u2)

    H1, map1 = _induced(H, near, extra=(x1, x2))
    inv1 = {orig: local for local, orig in enumerate(map1) if orig is not None}
    cycles1 = tuple(tuple(inv1[e] for e in cyc) for cyc in cycles)
    M1 = _two_cut_rec(H1, cycles1, clock)
    if M1 is None:
        return None
    bridge_local = len(map1) - 1
    M = {map1[e] for e in M1 if e != bridge_local}
    if bridge_local in M1:
        H2, map2 = _induced(H, far - {y1, y2}, extra=None)
        M2 = _matching_of(H2, clock) if H2.n > 0 else set()
        if M2 is None:
            return None
        return M | {map2[e] for e in M2} | {e1, e2}
    H2, map2 = _induced(H, far, extra=None)
    M2 = _matching_of(H2, clock)
    if M2 is None:
        return None
    return M | {map2[e] for e in M2}


def two_cut_recursion(
    G: Multigraph,
    O: Optional[CycleSet] = None,
    budget: Optional[SearchBudget] = None,
) -> OracleVerdict:
    """Like constrained_perfect_matching without a forced edge, but splits
    the instance at 2-edge-cuts: solve the cycle side with the cut replaced
    by one edge, then complete the far side with a matching through or
    avoiding that edge as needed.

    Every 2-edge-cut must leave all prescribed cycles on one side.
    """
    if G.is_regular() != 3:
        raise GraphError("graph is not cubic")
    if O is not None and O.host != G:
        raise GraphError("cycle set does not belong to this graph")
    cycles = tuple(O.cycles) if O is not None else ()
    clock = _Clock(budget)
    try:
        ids = _two_cut_rec(G, cycles, clock)
    except BudgetExceededError:
        return OracleVerdict(BUDGET_EXCEEDED, None, clock.nodes)
    if ids is None:
        return OracleVerdict(UNSAT, None, clock.nodes)
    return OracleVerdict(
        SAT, _check_witness(G, tuple(sorted(ids)), 1, O, "hit"), clock.nodes
    )


def bipartite_alternating_matching(G2: Multigraph) -> tuple[int, ...]:
    """Perfect matching of a 2-regular bipartite graph by alternating along
    each (even) cycle, starting from and keeping the lowest edge id."""
    if G2.is_regular() != 2:
        raise GraphError("graph is not 2-regular")
    visited = bytearray(G2.m)
    matching: list[int] = []
    for start in range(G2.m):
        if visited[start]:
            continue
        walk = [start]
        visited[start] = 1
        cur = G2.edges[start][1]
        last = start
        while True:
            nxt = next(f for f in G2.incident(cur) if f != last)
            if nxt == start:
                break
            walk.append(nxt)
            visited[nxt] = 1
            cur = G2.other_end(nxt, cur)
            last = nxt
        if len(walk) % 2 == 1:
            raise GraphError(f"odd cycle through edge {start}: graph is not bipartite")
        matching.extend(walk[0::2])
    return tuple(sorted(matching))
