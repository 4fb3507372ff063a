"""Factors (degree-t spanning subgraphs) and their verification predicates.

Also houses 2-factorization of even-regular multigraphs via an Eulerian
orientation and repeated perfect-matching peeling of the resulting regular
bipartite graph.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable, Optional, Sequence, Union

from .cycles import CycleSet
from .multigraph import FormatError, GraphError, Multigraph

__all__ = [
    "Factor",
    "MODES",
    "verify_factor",
    "verify_intersections",
    "first_unbalanced_vertex",
    "two_factorization",
    "parse_factor",
    "serialize_factor",
]

MODES = ("hit", "hit-matching", "hit-and-cohit", "none")


@dataclass(frozen=True)
class Factor:
    """An edge-id subset of a host graph with a target degree t."""

    host: Multigraph
    t: int
    edge_ids: tuple[int, ...]

    def __post_init__(self):
        if self.t < 0:
            raise GraphError("target degree must be non-negative")
        ids = tuple(sorted(set(int(e) for e in self.edge_ids)))
        if len(ids) != len(self.edge_ids):
            raise GraphError("factor edge ids must be distinct")
        for e in ids:
            if not (0 <= e < self.host.m):
                raise GraphError(f"edge id {e} out of range")
        object.__setattr__(self, "edge_ids", ids)

    def edge_set(self) -> set[int]:
        return set(self.edge_ids)

    def __len__(self) -> int:
        return len(self.edge_ids)


def _edge_ids(F: Union[Factor, Iterable[int]]) -> list[int]:
    return list(F.edge_ids) if isinstance(F, Factor) else list(F)


def first_unbalanced_vertex(
    G: Multigraph, F: Union[Factor, Iterable[int]], t: int
) -> Optional[int]:
    """Lowest vertex whose degree in F differs from t, or None."""
    deg = [0] * G.n
    for e in _edge_ids(F):
        u, v = G.endpoints(e)
        deg[u] += 1
        deg[v] += 1
    for v in range(G.n):
        if deg[v] != t:
            return v
    return None


def verify_factor(G: Multigraph, F: Union[Factor, Iterable[int]], t: int) -> bool:
    """True iff every vertex of G is incident with exactly t edges of F."""
    return first_unbalanced_vertex(G, F, t) is None


def verify_intersections(
    F: Factor, O: CycleSet, mode: str
) -> bool:
    """Check how a factor meets every cycle of a set.

    hit: at least one shared edge per cycle; hit-matching: additionally the
    shared edges of each cycle are pairwise non-adjacent; hit-and-cohit: at
    least one shared and at least one unshared edge per cycle.
    """
    if mode not in MODES:
        raise ValueError(f"unknown mode {mode!r}")
    if F.host != O.host:
        raise GraphError("factor and cycle set have different hosts")
    if mode == "none":
        return True
    fset = F.edge_set()
    host = F.host
    for cyc in O.cycles:
        shared = [e for e in cyc if e in fset]
        if not shared:
            return False
        if mode == "hit-and-cohit" and len(shared) == len(cyc):
            return False
        if mode == "hit-matching":
            for i, e in enumerate(shared):
                eu, ev = host.endpoints(e)
                for f in shared[i + 1 :]:
                    fu, fv = host.endpoints(f)
                    if eu in (fu, fv) or ev in (fu, fv):
                        return False
    return True


def _eulerian_heads(G: Multigraph) -> list[int]:
    """Orient every edge along an Eulerian circuit of its component.

    Requires all degrees even.  Deterministic: circuits start at the lowest
    vertex of each component and always leave along the lowest unused edge.
    """
    heads = [-1] * G.m
    used = bytearray(G.m)
    ptr = [0] * G.n
    for s in range(G.n):
        if G.degree(s) == 0:
            continue
        if all(used[e] for e in G.incident(s)):
            continue
        stack = [s]
        while stack:
            v = stack[-1]
            inc = G.incident(v)
            while ptr[v] < len(inc) and used[inc[ptr[v]]]:
                ptr[v] += 1
            if ptr[v] == len(inc):
                stack.pop()
                continue
            e = inc[ptr[v]]
            used[e] = 1
            w = G.other_end(e, v)
            heads[e] = w
            stack.append(w)
    return heads


def _bipartite_perfect_matching(
    n: int, out_edges: list[list[tuple[int, int]]]
) -> Optional[list[int]]:
    """Kuhn's algorithm on a tail->head oriented edge multiset.

    out_edges[v] lists (eid, head) pairs still available from tail v.
    Returns for each head vertex the matched eid, or None if no perfect
    matching exists.
    """
    match_head: list[int] = [-1] * n  # head vertex -> eid
    match_tail: list[int] = [-1] * n  # tail vertex -> eid
    eid_tail: dict[int, int] = {}
    for v, lst in enumerate(out_edges):
        for eid, _ in lst:
            eid_tail[eid] = v

    def try_augment(v: int, visited: set[int]) -> bool:
        for eid, head in out_edges[v]:
            if head in visited:
                continue
            visited.add(head)
            if match_head[head] == -1 or try_augment(
                eid_tail[match_head[head]], visited
            ):
                match_head[head] = eid
                match_tail[v] = eid
                return True
        return False

    for v in range(n):
        if out_edges[v] and match_tail[v] == -1:
            if not try_augment(v, set()):
                return None
    return match_head


def two_factorization(G: Multigraph) -> list[Factor]:
    """Split a 2k-regular multigraph into k edge-disjoint 2-factors.

    Method: Eulerian orientation per component, then peel perfect matchings
    of the tail/head bipartite graph; each matching gives every vertex one
    out-edge and one in-edge, i.e. a 2-factor.
    """
    r = G.is_regular()
    if r is None:
        raise GraphError("graph is not regular")
    if r % 2 == 1:
        raise GraphError("graph has odd regularity")
    k = r // 2
    if k == 0:
        return []
    heads = _eulerian_heads(G)
    remaining: list[list[tuple[int, int]]] = [[] for _ in range(G.n)]
    for e in range(G.m):
        head = heads[e]
        tail = G.other_end(e, head)
        remaining[tail].append((e, head))
    factors = []
    for _ in range(k):
        match_head = _bipartite_perfect_matching(G.n, remaining)
        if match_head is None or any(m == -1 for m in match_head):
            raise GraphError("regular bipartite peeling failed")  # unreachable
        chosen = sorted(set(match_head))
        chosen_set = set(chosen)
        for v in range(G.n):
            remaining[v] = [(e, h) for e, h in remaining[v] if e not in chosen_set]
        F = Factor(G, 2, tuple(chosen))
        if not verify_factor(G, F, 2):
            raise GraphError("peeled edge set is not a 2-factor")  # unreachable
        factors.append(F)
    return factors


def parse_factor(text: str | bytes, host: Multigraph) -> Factor:
    """Read a factor in the `.fac` format against a host graph."""
    if isinstance(text, bytes):
        text = text.decode("utf-8")
    t = count = None
    ids: list[int] = []
    last_line = 0
    for line_no, raw in enumerate(text.splitlines(), start=1):
        last_line = line_no
        line = raw.strip()
        if not line or line.startswith("#"):
            continue
        tokens = line.split()
        if t is None:
            if tokens[:2] != ["p", "fac"] or len(tokens) != 4:
                raise FormatError(line_no, f"expected header 'p fac <t> <count>', got {line!r}")
            try:
                t, count = int(tokens[2]), int(tokens[3])
            except ValueError:
                raise FormatError(line_no, "header counts must be integers") from None
            continue
        if tokens[0] != "f" or len(tokens) != 2:
            raise FormatError(line_no, f"expected factor line 'f <eid>', got {line!r}")
        try:
            eid = int(tokens[1])
        except ValueError:
            raise FormatError(line_no, "edge id must be an integer") from None
        if ids and eid <= ids[-1]:
            raise FormatError(line_no, "edge ids must be strictly increasing")
        if not (0 <= eid < host.m):
            raise FormatError(line_no, f"edge id {eid} out of range")
        ids.append(eid)
    if t is None:
        raise FormatError(last_line or 1, "missing 'p fac' header")
    if len(ids) != count:
        raise FormatError(last_line or 1, f"declared {count} edges but found {len(ids)}")
    return Factor(host, t, tuple(ids))


def serialize_factor(F: Factor, comments: Iterable[str] = ()) -> str:
    lines = [f"# {c}" for c in comments]
    lines.append(f"p fac {F.t} {len(F.edge_ids)}")
    lines.extend(f"f {e}" for e in F.edge_ids)
    return "\n".join(lines) + "\n"
