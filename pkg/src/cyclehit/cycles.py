"""Cycle sets over a host multigraph and deterministic cycle decomposition.

Cycles are stored as ordered lists of edge ids forming a closed walk with no
repeated vertex.  Edge ids rather than vertex sequences are used because
parallel edges (and 2-cycles in particular) make vertex sequences ambiguous.
"""

from __future__ import annotations

from typing import Iterable, Sequence

from .multigraph import FormatError, GraphError, Multigraph

__all__ = [
    "CycleSet",
    "cycle_vertices",
    "cycle_decomposition",
    "parse_cycles",
    "serialize_cycles",
]


def cycle_vertices(host: Multigraph, cycle: Sequence[int]) -> tuple[int, ...]:
    """Vertex walk of a cycle given as edge ids.

    Returns vertices (v_0, ..., v_{k-1}) such that edge cycle[i] joins v_i
    and v_{i+1 mod k}.  Raises GraphError if the edges do not form a closed
    walk without repeated vertices.  A 2-cycle (two parallel edges) is a
    valid cycle here; callers that forbid it must check the length.
    """
    k = len(cycle)
    if k < 2:
        raise GraphError("a cycle needs at least 2 edges")
    if len(set(cycle)) != k:
        raise GraphError(f"repeated edge id in cycle {list(cycle)}")
    ends = [set(host.endpoints(e)) for e in cycle]
    if k == 2:
        if ends[0] != ends[1]:
            raise GraphError(f"edges {list(cycle)} are not parallel")
        u, v = host.endpoints(cycle[0])
        return (min(u, v), max(u, v))
    walk = []
    for i in range(k):
        common = ends[i - 1] & ends[i]
        if len(common) != 1:
            raise GraphError(
                f"edges {cycle[i - 1]} and {cycle[i]} do not chain into a cycle"
            )
        walk.append(common.pop())
    if len(set(walk)) != k:
        raise GraphError(f"cycle {list(cycle)} repeats a vertex")
    return tuple(walk)


class CycleSet:
    """An ordered collection of pairwise edge-disjoint cycles of one host."""

    __slots__ = ("host", "cycles")

    def __init__(self, host: Multigraph, cycles: Iterable[Sequence[int]]):
        cycles = tuple(tuple(int(e) for e in c) for c in cycles)
        seen: set[int] = set()
        for c in cycles:
            for e in c:
                if not (0 <= e < host.m):
                    raise GraphError(f"edge id {e} out of range")
                if e in seen:
                    raise GraphError(f"cycles are not edge-disjoint at edge {e}")
                seen.add(e)
            cycle_vertices(host, c)
        self.host = host
        self.cycles = cycles

    def __len__(self) -> int:
        return len(self.cycles)

    def __iter__(self):
        return iter(self.cycles)

    def edge_ids(self) -> set[int]:
        return {e for c in self.cycles for e in c}

    def min_length(self) -> int:
        return min((len(c) for c in self.cycles), default=0)

    def all_odd(self) -> bool:
        return all(len(c) % 2 == 1 for c in self.cycles)

    def __repr__(self) -> str:
        return f"CycleSet({[len(c) for c in self.cycles]})"


def cycle_decomposition(G: Multigraph, O: CycleSet) -> CycleSet:
    """Partition E(G) into cycles extending the given edge-disjoint cycles.

    Every vertex must have even degree.  The remaining edges are peeled
    deterministically: repeatedly walk from the lowest unused edge id,
    always extending along the lowest unused incident edge, and extract the
    cycle closed by the first repeated vertex.
    """
    if O.host != G:
        raise GraphError("cycle set does not belong to this graph")
    for v in range(G.n):
        if G.degree(v) % 2 == 1:
            raise GraphError(f"odd degree at vertex {v}")
    used = bytearray(G.m)
    for e in O.edge_ids():
        used[e] = 1
    result = list(O.cycles)
    start = 0
    while True:
        while start < G.m and used[start]:
            start += 1
        if start == G.m:
            break
        # Greedy walk until a vertex repeats; extract the closed part only.
        u0 = G.edges[start][0]
        pos = {u0: 0}
        walk_vertices = [u0]
        walk_edges: list[int] = []
        on_walk: set[int] = set()
        cur = u0
        e = start
        while True:
            walk_edges.append(e)
            on_walk.add(e)
            cur = G.other_end(e, cur)
            if cur in pos:
                cyc = tuple(walk_edges[pos[cur]:])
                for f in cyc:
                    used[f] = 1
                result.append(cyc)
                break
            pos[cur] = len(walk_vertices)
            walk_vertices.append(cur)
            e = min(
                f for f in G.incident(cur) if not used[f] and f not in on_walk
            )
    return CycleSet(G, result)


def parse_cycles(text: str | bytes, host: Multigraph) -> CycleSet:
    """Read a cycle set in the `.cyc` format against a host graph."""
    if isinstance(text, bytes):
        text = text.decode("utf-8")
    k = None
    cycles: list[tuple[int, ...]] = []
    last_line = 0
    for line_no, raw in enumerate(text.splitlines(), start=1):
        last_line = line_no
        line = raw.strip()
        if not line or line.startswith("#"):
            continue
        tokens = line.split()
        if k is None:
            if tokens[:2] != ["p", "cyc"] or len(tokens) != 3:
                raise FormatError(line_no, f"expected header 'p cyc <k>', got {line!r}")
            try:
                k = int(tokens[2])
            except ValueError:
                raise FormatError(line_no, "cycle count must be an integer") from None
            continue
        if tokens[0] != "c" or len(tokens) < 2:
            raise FormatError(line_no, f"expected cycle line 'c <len> <eids>', got {line!r}")
        try:
            length = int(tokens[1])
            eids = tuple(int(t) for t in tokens[2:])
        except ValueError:
            raise FormatError(line_no, "cycle entries must be integers") from None
        if len(eids) != length:
            raise FormatError(line_no, f"declared length {length} but {len(eids)} edge ids")
        if len(cycles) >= k:
            raise FormatError(line_no, f"more than the declared {k} cycles")
        cycles.append(eids)
    if k is None:
        raise FormatError(last_line or 1, "missing 'p cyc' header")
    if len(cycles) != k:
        raise FormatError(last_line or 1, f"declared {k} cycles but found {len(cycles)}")
    try:
        return CycleSet(host, cycles)
    except GraphError as exc:
        raise FormatError(last_line or 1, str(exc)) from exc


def serialize_cycles(O: CycleSet, comments: Iterable[str] = ()) -> str:
    lines = [f"# {c}" for c in comments]
    lines.append(f"p cyc {len(O.cycles)}")
    for c in O.cycles:
        lines.append("c " + " ".join([str(len(c))] + [str(e) for e in c]))
    return "\n".join(lines) + "\n"
