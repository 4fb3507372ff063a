"""Graph surgeries: vertex replacement by tree interiors, orientation-class
vertex splitting, and projection of matchings back to the original graph.

Original edges keep their ids in the expanded graph (the edge map is the
identity on surviving ids); gadget edges are appended after them.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable, Sequence

from .cycles import CycleSet, cycle_vertices
from .factors import Factor
from .gadgets import GadgetTree, build_even_leaf_tree, build_gadget_tree
from .multigraph import GraphError, Multigraph
from .orientation import Orientation

__all__ = [
    "ExpansionMap",
    "cubic_expansion",
    "split_expansion",
    "project_factor",
    "serialize_expansion_map",
]


@dataclass(frozen=True)
class ExpansionMap:
    """Bookkeeping for an expansion: which new edge each original edge
    became, and which new vertices replace each original vertex."""

    original: Multigraph
    expanded: Multigraph
    edge_map: tuple[int, ...]
    vertex_groups: tuple[tuple[int, ...], ...]

    def __post_init__(self):
        if len(self.edge_map) != self.original.m:
            raise GraphError("edge map must cover every original edge")
        if len(set(self.edge_map)) != len(self.edge_map):
            raise GraphError("edge map must be injective")
        if len(self.vertex_groups) != self.original.n:
            raise GraphError("vertex groups must cover every original vertex")


def _cycle_pairs_at_vertices(
    G: Multigraph, O: CycleSet
) -> list[list[tuple[int, tuple[int, int]]]]:
    """For each vertex, the (cycle index, edge pair) entries of cycles
    passing through it.  Pairs are disjoint since cycles are edge-disjoint
    and visit a vertex at most once."""
    at_vertex: list[list[tuple[int, tuple[int, int]]]] = [[] for _ in range(G.n)]
    for ci, cyc in enumerate(O.cycles):
        walk = cycle_vertices(G, cyc)
        k = len(cyc)
        for i, v in enumerate(walk):
            at_vertex[v].append((ci, (cyc[i - 1], cyc[i % k])))
    return at_vertex


def _assign_slots(
    capacities: list[int], pairs: int
) -> list[int] | None:
    """Pick a distinct group with >= 2 free slots for each pair,
    lowest-index first, with backtracking."""
    chosen: list[int] = []
    free = list(capacities)

    def rec(remaining: int, start: int) -> bool:
        if remaining == 0:
            return True
        for g in range(start, len(free)):
            if free[g] >= 2:
                free[g] -= 2
                chosen.append(g)
                if rec(remaining - 1, 0):
                    return True
                chosen.pop()
                free[g] += 2
        return False

    return chosen if rec(pairs, 0) else None


def cubic_expansion(
    G: Multigraph, O: CycleSet, t: int, family: str
) -> tuple[ExpansionMap, CycleSet]:
    """Replace every vertex by the interior of a gadget tree, yielding a
    cubic graph in which consecutive edges of each cycle stay adjacent.

    family='third' uses the 3t-leaf claw-grown tree on a 3t-regular graph;
    family='half' uses the 2t-leaf even tree on a 2t-regular graph, t even.
    Returns the expansion map and the induced cycle set (same edge ids).
    """
    if family == "third":
        if t < 1:
            raise GraphError("t must be positive")
        required = 3 * t
        tree = build_gadget_tree(t)
    elif family == "half":
        if t < 2 or t % 2 == 1:
            raise GraphError("family 'half' needs an even t >= 2")
        required = 2 * t
        tree = build_even_leaf_tree(2 * t)
    else:
        raise GraphError(f"unknown expansion family {family!r}")
    if G.is_regular() != required:
        raise GraphError(f"family {family!r} with t={t} needs a {required}-regular graph")
    if O.host != G:
        raise GraphError("cycle set does not belong to this graph")

    internal = tree.internal_vertices()
    local_rank = {v: i for i, v in enumerate(internal)}
    # Each sibling group of the tree is a bundle of attachment slots on one
    # internal vertex; group order follows the tree's leaf order.
    group_vertex = [
        local_rank[tree.tree.other_end(tree.tree.incident(g[0])[0], g[0])]
        for g in tree.sibling_groups
    ]
    group_capacity = [len(g) for g in tree.sibling_groups]
    interior_edges = [
        (local_rank[u], local_rank[v])
        for u, v in tree.tree.edges
        if u in local_rank and v in local_rank
    ]
    block = len(internal)

    at_vertex = _cycle_pairs_at_vertices(G, O)
    # endpoint_vertex[(eid, v)] -> expanded vertex replacing endpoint v of eid
    endpoint_vertex: dict[tuple[int, int], int] = {}
    vertex_groups = []
    for v in range(G.n):
        offset = v * block
        vertex_groups.append(tuple(range(offset, offset + block)))
        pairs = [pair for _, pair in sorted(at_vertex[v])]
        assignment = _assign_slots(group_capacity, len(pairs))
        if assignment is None:
            raise AssertionError(
                f"vertex {v} carries {len(pairs)} cycle pairs but the gadget "
                f"tree offers only groups of sizes {group_capacity}"
            )
        free = list(group_capacity)
        paired_eids = set()
        for (e, f), g in zip(pairs, assignment):
            free[g] -= 2
            target = offset + group_vertex[g]
            endpoint_vertex[(e, v)] = target
            endpoint_vertex[(f, v)] = target
            paired_eids.update((e, f))
        singles = [e for e in G.incident(v) if e not in paired_eids]
        gi = 0
        for e in singles:
            while free[gi] == 0:
                gi += 1
            free[gi] -= 1
            endpoint_vertex[(e, v)] = offset + group_vertex[gi]

    new_edges = [
        (endpoint_vertex[(e, u)], endpoint_vertex[(e, v)])
        for e, (u, v) in enumerate(G.edges)
    ]
    for v in range(G.n):
        offset = v * block
        new_edges.extend((offset + a, offset + b) for a, b in interior_edges)
    expanded = Multigraph(G.n * block, new_edges)
    if expanded.is_regular() != 3:
        raise AssertionError("cubic expansion produced a non-cubic graph")
    xmap = ExpansionMap(
        original=G,
        expanded=expanded,
        edge_map=tuple(range(G.m)),
        vertex_groups=tuple(vertex_groups),
    )
    induced = CycleSet(expanded, O.cycles)
    return xmap, induced


def split_expansion(
    G: Multigraph, D: Orientation, O: CycleSet
) -> tuple[ExpansionMap, list[tuple[int, str, tuple[int, int]]]]:
    """Split every vertex into degree-2 vertices pairing in-edges with
    in-edges and out-edges with out-edges.

    Cycle edges meeting a vertex in the same direction share a split vertex;
    the rest are paired greedily by lowest edge id.  The result is a
    2-regular bipartite graph on the same edge ids.  Also returns the
    pairing record: (original vertex, 'in'|'out', edge pair) per new vertex.
    """
    if D.host != G or O.host != G:
        raise GraphError("orientation or cycle set does not match the graph")
    indeg = D.indegrees()
    for v in range(G.n):
        if G.degree(v) % 2 == 1:
            raise GraphError(f"odd degree at vertex {v}")
        if indeg[v] % 2 == 1:
            raise GraphError(f"odd indegree at vertex {v}")
    at_vertex = _cycle_pairs_at_vertices(G, O)

    endpoint_vertex: dict[tuple[int, int], int] = {}
    vertex_groups = []
    pairing: list[tuple[int, str, tuple[int, int]]] = []
    next_id = 0
    for v in range(G.n):
        ins = [e for e in G.incident(v) if D.head[e] == v]
        outs = [e for e in G.incident(v) if D.head[e] != v]
        forced_in: list[tuple[int, int]] = []
        forced_out: list[tuple[int, int]] = []
        for _, (e, f) in sorted(at_vertex[v]):
            e_in = D.head[e] == v
            f_in = D.head[f] == v
            if e_in and f_in:
                forced_in.append((e, f))
            elif not e_in and not f_in:
                forced_out.append((e, f))
            # mixed direction: no adjacency requirement at this vertex
        taken = {e for pair in forced_in + forced_out for e in pair}
        loose_in = [e for e in ins if e not in taken]
        loose_out = [e for e in outs if e not in taken]
        group = []
        for e, f in forced_in + [
            (loose_in[i], loose_in[i + 1]) for i in range(0, len(loose_in), 2)
        ]:
            endpoint_vertex[(e, v)] = next_id
            endpoint_vertex[(f, v)] = next_id
            pairing.append((v, "in", (e, f)))
            group.append(next_id)
            next_id += 1
        for e, f in forced_out + [
            (loose_out[i], loose_out[i + 1]) for i in range(0, len(loose_out), 2)
        ]:
            endpoint_vertex[(e, v)] = next_id
            endpoint_vertex[(f, v)] = next_id
            pairing.append((v, "out", (e, f)))
            group.append(next_id)
            next_id += 1
        vertex_groups.append(tuple(group))

    for cyc in O.cycles:
        if _is_oriented(G, D, cyc):
            raise GraphError("a prescribed cycle is an oriented cycle")

    new_edges = [
        (endpoint_vertex[(e, u)], endpoint_vertex[(e, v)])
        for e, (u, v) in enumerate(G.edges)
    ]
    expanded = Multigraph(next_id, new_edges)
    if expanded.is_regular() != 2:
        raise AssertionError("split expansion produced a non-2-regular graph")
    xmap = ExpansionMap(
        original=G,
        expanded=expanded,
        edge_map=tuple(range(G.m)),
        vertex_groups=tuple(vertex_groups),
    )
    return xmap, pairing


def _is_oriented(G: Multigraph, D: Orientation, cycle: tuple[int, ...]) -> bool:
    heads_at: dict[int, int] = {}
    for e in cycle:
        u, v = G.endpoints(e)
        heads_at.setdefault(u, 0)
        heads_at.setdefault(v, 0)
        heads_at[D.head[e]] += 1
    return all(c == 1 for c in heads_at.values())


def project_factor(xmap: ExpansionMap, M: Iterable[int], t: int) -> Factor:
    """Pull a perfect matching of the expanded graph back to the original.

    The result is the original edges whose expanded copies are matched; the
    gadget/split structure guarantees it is a t-factor.
    """
    M = set(M)
    covered = [0] * xmap.expanded.n
    for e in M:
        u, v = xmap.expanded.endpoints(e)
        covered[u] += 1
        covered[v] += 1
    if any(c != 1 for c in covered):
        raise GraphError("edge set is not a perfect matching of the expanded graph")
    ids = tuple(e for e, new in enumerate(xmap.edge_map) if new in M)
    return Factor(xmap.original, t, ids)


def serialize_expansion_map(xmap: ExpansionMap) -> str:
    """Debugging sidecar: `x <orig-eid> <new-eid>` and `g <orig-vertex>
    <new-vertices...>` lines."""
    lines = [f"x {e} {new}" for e, new in enumerate(xmap.edge_map)]
    for v, group in enumerate(xmap.vertex_groups):
        lines.append("g " + " ".join([str(v)] + [str(w) for w in group]))
    return "\n".join(lines) + "\n"
