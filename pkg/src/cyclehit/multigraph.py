"""Loopless multigraphs with dense, stable edge ids.

Vertices are the integers 0..n-1.  Edges are unordered vertex pairs kept in
input order, so the edge id of an edge is simply its index in the edge list.
Parallel edges are allowed, loops are not.
"""

from __future__ import annotations

from typing import Iterable, Optional

import networkx as nx

__all__ = [
    "FormatError",
    "GraphError",
    "Multigraph",
    "parse_multigraph",
    "serialize_multigraph",
    "vertex_connectivity",
    "two_edge_cut_sides",
]


class GraphError(ValueError):
    """A structural precondition of a graph operation was violated."""


class FormatError(ValueError):
    """Malformed file input; carries the 1-based offending line number."""

    def __init__(self, line_no: int, message: str):
        super().__init__(f"line {line_no}: {message}")
        self.line_no = line_no


class Multigraph:
    """Immutable loopless multigraph.  Treat instances as read-only."""

    __slots__ = ("n", "edges", "_incident")

    def __init__(self, n: int, edges: Iterable[tuple[int, int]]):
        if n < 0:
            raise GraphError("vertex count must be non-negative")
        edges = tuple((int(u), int(v)) for u, v in edges)
        for eid, (u, v) in enumerate(edges):
            if not (0 <= u < n and 0 <= v < n):
                raise GraphError(f"edge {eid}: endpoint out of range")
            if u == v:
                raise GraphError(f"edge {eid}: loops are forbidden")
        self.n = n
        self.edges = edges
        incident = [[] for _ in range(n)]
        for eid, (u, v) in enumerate(edges):
            incident[u].append(eid)
            incident[v].append(eid)
        self._incident = tuple(tuple(ids) for ids in incident)

    @property
    def m(self) -> int:
        return len(self.edges)

    def endpoints(self, eid: int) -> tuple[int, int]:
        return self.edges[eid]

    def other_end(self, eid: int, v: int) -> int:
        u, w = self.edges[eid]
        if v == u:
            return w
        if v == w:
            return u
        raise GraphError(f"vertex {v} is not an endpoint of edge {eid}")

    def incident(self, v: int) -> tuple[int, ...]:
        return self._incident[v]

    def degree(self, v: int) -> int:
        return len(self._incident[v])

    def degrees(self) -> list[int]:
        return [len(ids) for ids in self._incident]

    def is_regular(self) -> Optional[int]:
        """Common degree of all vertices, or None if degrees differ."""
        if self.n == 0:
            return None
        degs = self.degrees()
        r = degs[0]
        return r if all(d == r for d in degs) else None

    def components(self, excluded_edges: Iterable[int] = ()) -> list[set[int]]:
        """Connected components (vertex sets), ignoring the given edges."""
        excluded = set(excluded_edges)
        seen = [False] * self.n
        comps = []
        for s in range(self.n):
            if seen[s]:
                continue
            comp = {s}
            seen[s] = True
            stack = [s]
            while stack:
                v = stack.pop()
                for eid in self._incident[v]:
                    if eid in excluded:
                        continue
                    w = self.other_end(eid, v)
                    if not seen[w]:
                        seen[w] = True
                        comp.add(w)
                        stack.append(w)
            comps.append(comp)
        return comps

    def is_connected(self) -> bool:
        return self.n <= 1 or len(self.components()) == 1

    def __eq__(self, other) -> bool:
        return (
            isinstance(other, Multigraph)
            and self.n == other.n
            and self.edges == other.edges
        )

    def __hash__(self) -> int:
        return hash((self.n, self.edges))

    def __repr__(self) -> str:
        return f"Multigraph(n={self.n}, m={self.m})"


def parse_multigraph(text: str | bytes) -> Multigraph:
    """Read a graph in the `.mg` format.

    Format: optional '#' comment lines, a header ``p mg <n> <m>``, then
    exactly m lines ``e <u> <v>`` with 0 <= u,v < n and u != v.  Edge ids
    are assigned in line order starting at 0.
    """
    if isinstance(text, bytes):
        text = text.decode("utf-8")
    n = m = None
    edges: list[tuple[int, int]] = []
    last_line = 0
    for line_no, raw in enumerate(text.splitlines(), start=1):
        last_line = line_no
        line = raw.strip()
        if not line or line.startswith("#"):
            continue
        tokens = line.split()
        if n is None:
            if tokens[:2] != ["p", "mg"] or len(tokens) != 4:
                raise FormatError(line_no, f"expected header 'p mg <n> <m>', got {line!r}")
            try:
                n, m = int(tokens[2]), int(tokens[3])
            except ValueError:
                raise FormatError(line_no, "header counts must be integers") from None
            if n < 0 or m < 0:
                raise FormatError(line_no, "header counts must be non-negative")
            continue
        if tokens[0] != "e" or len(tokens) != 3:
            raise FormatError(line_no, f"expected edge line 'e <u> <v>', got {line!r}")
        try:
            u, v = int(tokens[1]), int(tokens[2])
        except ValueError:
            raise FormatError(line_no, "edge endpoints must be integers") from None
        if not (0 <= u < n and 0 <= v < n):
            raise FormatError(line_no, f"vertex id out of range 0..{n - 1}")
        if u == v:
            raise FormatError(line_no, f"loop edge at vertex {u} is forbidden")
        if len(edges) >= m:
            raise FormatError(line_no, f"more than the declared {m} edge lines")
        edges.append((u, v))
    if n is None:
        raise FormatError(last_line or 1, "missing 'p mg' header")
    if len(edges) != m:
        raise FormatError(last_line or 1, f"declared {m} edges but found {len(edges)}")
    return Multigraph(n, edges)


def serialize_multigraph(G: Multigraph, comments: Iterable[str] = ()) -> str:
    lines = [f"# {c}" for c in comments]
    lines.append(f"p mg {G.n} {G.m}")
    lines.extend(f"e {u} {v}" for u, v in G.edges)
    return "\n".join(lines) + "\n"


def vertex_connectivity(G: Multigraph) -> int:
    """Exact vertex connectivity of the underlying simple graph.

    Disconnected graphs give 0; graphs with no vertex cut give n-1.
    Parallel edges do not affect the result.
    """
    if G.n <= 1:
        return 0
    if not G.is_connected():
        return 0
    adj = {(min(u, v), max(u, v)) for u, v in G.edges}
    if len(adj) == G.n * (G.n - 1) // 2:
        return G.n - 1
    H = nx.Graph()
    H.add_nodes_from(range(G.n))
    H.add_edges_from(adj)
    return nx.node_connectivity(H)


def two_edge_cut_sides(
    G: Multigraph,
) -> list[tuple[tuple[int, int], tuple[frozenset[int], frozenset[int]]]]:
    """All 2-edge-cuts with the vertex bipartition each one induces.

    Requires a 2-edge-connected graph: bridges (and disconnected input) are
    rejected.  Cuts are listed in lexicographic edge-id order, and each
    bipartition lists the side containing vertex 0 first.
    """
    if not G.is_connected():
        raise GraphError("graph is disconnected")
    for eid in range(G.m):
        if len(G.components(excluded_edges=(eid,))) > 1:
            raise GraphError(f"graph has a bridge: edge {eid}")
    cuts = []
    for e in range(G.m):
        for f in range(e + 1, G.m):
            comps = G.components(excluded_edges=(e, f))
            if len(comps) == 2:
                a, b = comps
                if 0 not in a:
                    a, b = b, a
                cuts.append(((e, f), (frozenset(a), frozenset(b))))
    return cuts
