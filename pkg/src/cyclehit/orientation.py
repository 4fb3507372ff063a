"""Edge orientations of a multigraph and the even-indegree check."""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable

from .cycles import CycleSet
from .multigraph import FormatError, GraphError, Multigraph

__all__ = [
    "Orientation",
    "verify_orientation",
    "parse_orientation",
    "serialize_orientation",
]


@dataclass(frozen=True)
class Orientation:
    """A per-edge head choice: edge e points towards head[e]."""

    host: Multigraph
    head: tuple[int, ...]

    def __post_init__(self):
        if len(self.head) != self.host.m:
            raise GraphError("orientation must assign a head to every edge")
        for e, h in enumerate(self.head):
            if h not in self.host.endpoints(e):
                raise GraphError(f"head of edge {e} is not one of its endpoints")

    def tail(self, eid: int) -> int:
        return self.host.other_end(eid, self.head[eid])

    def indegrees(self) -> list[int]:
        deg = [0] * self.host.n
        for h in self.head:
            deg[h] += 1
        return deg

    def flipped(self, eids: Iterable[int]) -> "Orientation":
        head = list(self.head)
        for e in eids:
            head[e] = self.host.other_end(e, head[e])
        return Orientation(self.host, tuple(head))


def _cycle_is_oriented(D: Orientation, cycle: tuple[int, ...]) -> bool:
    # Oriented <=> every cycle vertex has exactly one inbound cycle edge.
    heads_at: dict[int, int] = {}
    for e in cycle:
        u, v = D.host.endpoints(e)
        heads_at.setdefault(u, 0)
        heads_at.setdefault(v, 0)
        heads_at[D.head[e]] += 1
    return all(c == 1 for c in heads_at.values())


def verify_orientation(G: Multigraph, D: Orientation, O: CycleSet) -> bool:
    """True iff every indegree is even and no cycle of O is oriented."""
    if D.host != G or O.host != G:
        raise GraphError("orientation or cycle set does not match the graph")
    if any(d % 2 == 1 for d in D.indegrees()):
        return False
    return not any(_cycle_is_oriented(D, c) for c in O.cycles)


def parse_orientation(text: str | bytes, host: Multigraph) -> Orientation:
    """Read an orientation in the `.ori` format against a host graph."""
    if isinstance(text, bytes):
        text = text.decode("utf-8")
    m = None
    head: dict[int, int] = {}
    last_line = 0
    for line_no, raw in enumerate(text.splitlines(), start=1):
        last_line = line_no
        line = raw.strip()
        if not line or line.startswith("#"):
            continue
        tokens = line.split()
        if m is None:
            if tokens[:2] != ["p", "ori"] or len(tokens) != 3:
                raise FormatError(line_no, f"expected header 'p ori <m>', got {line!r}")
            try:
                m = int(tokens[2])
            except ValueError:
                raise FormatError(line_no, "edge count must be an integer") from None
            if m != host.m:
                raise FormatError(line_no, f"orientation is for {m} edges, host has {host.m}")
            continue
        if tokens[0] != "o" or len(tokens) != 3:
            raise FormatError(line_no, f"expected line 'o <eid> <head>', got {line!r}")
        try:
            eid, h = int(tokens[1]), int(tokens[2])
        except ValueError:
            raise FormatError(line_no, "entries must be integers") from None
        if not (0 <= eid < host.m):
            raise FormatError(line_no, f"edge id {eid} out of range")
        if eid in head:
            raise FormatError(line_no, f"edge {eid} oriented twice")
        if h not in host.endpoints(eid):
            raise FormatError(line_no, f"vertex {h} is not an endpoint of edge {eid}")
        head[eid] = h
    if m is None:
        raise FormatError(last_line or 1, "missing 'p ori' header")
    if len(head) != host.m:
        raise FormatError(last_line or 1, f"only {len(head)} of {host.m} edges oriented")
    return Orientation(host, tuple(head[e] for e in range(host.m)))


def serialize_orientation(D: Orientation, comments: Iterable[str] = ()) -> str:
    lines = [f"# {c}" for c in comments]
    lines.append(f"p ori {D.host.m}")
    lines.extend(f"o {e} {h}" for e, h in enumerate(D.head))
    return "\n".join(lines) + "\n"
