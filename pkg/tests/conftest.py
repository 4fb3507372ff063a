"""Shared fixtures and independent brute-force oracles.

The oracles here deliberately avoid the library's search engine so that
agreement between the two is meaningful: subset enumeration runs on numpy
bit matrices, matchings are enumerated by a plain recursive matcher, and
connectivity is checked by removing every vertex subset.
"""

from __future__ import annotations

import itertools

import numpy as np
import pytest

from cyclehit import CycleSet, Multigraph


# ---------------------------------------------------------------- fixtures

def k4() -> Multigraph:
    return Multigraph(4, [(0, 1), (0, 2), (0, 3), (1, 2), (1, 3), (2, 3)])


def c4() -> Multigraph:
    return Multigraph(4, [(0, 1), (1, 2), (2, 3), (0, 3)])


def bowtie() -> Multigraph:
    return Multigraph(5, [(0, 1), (1, 2), (0, 2), (2, 3), (3, 4), (2, 4)])


def k33() -> Multigraph:
    return Multigraph(6, [(i, 3 + j) for i in range(3) for j in range(3)])


def doubled_triangle() -> Multigraph:
    tri = [(0, 1), (1, 2), (0, 2)]
    return Multigraph(3, tri + tri)


def circulant(n: int, steps: tuple[int, ...]) -> Multigraph:
    edges = []
    seen = set()
    for s in steps:
        for i in range(n):
            j = (i + s) % n
            pair = (min(i, j), max(i, j))
            if pair not in seen:
                seen.add(pair)
                edges.append(pair)
    return Multigraph(n, edges)


# ------------------------------------------------- naive subset oracle

def naive_subset_verdict(
    G: Multigraph, t: int, O: CycleSet | None, mode: str
) -> bool:
    """SAT/UNSAT for t-factors meeting a cycle set, by scanning all 2^m
    edge subsets with numpy.  Only for m <= 16."""
    m = G.m
    assert m <= 16, "naive oracle is limited to m <= 16"
    subsets = np.arange(1 << m, dtype=np.uint32)
    bits = (subsets[:, None] >> np.arange(m, dtype=np.uint32)) & 1  # (2^m, m)
    inc = np.zeros((G.n, m), dtype=np.uint8)
    for e, (u, v) in enumerate(G.edges):
        inc[u, e] = 1
        inc[v, e] = 1
    degrees = bits @ inc.T
    ok = np.all(degrees == t, axis=1)
    if O is not None and mode != "none":
        for cyc in O.cycles:
            shared = bits[:, list(cyc)].sum(axis=1)
            ok &= shared >= 1
            if mode == "hit-and-cohit":
                ok &= shared < len(cyc)
            if mode == "hit-matching":
                for e, f in itertools.combinations(cyc, 2):
                    eu, ev = G.endpoints(e)
                    fu, fv = G.endpoints(f)
                    if eu in (fu, fv) or ev in (fu, fv):
                        ok &= ~((bits[:, e] == 1) & (bits[:, f] == 1))
    return bool(ok.any())


# ------------------------------------------------- matching enumeration

def enumerate_perfect_matchings(G: Multigraph):
    """All perfect matchings as sorted edge-id tuples, by recursion on the
    lowest uncovered vertex."""
    results: list[tuple[int, ...]] = []
    covered = [False] * G.n

    def rec(chosen: list[int]):
        v = next((w for w in range(G.n) if not covered[w]), None)
        if v is None:
            results.append(tuple(sorted(chosen)))
            return
        covered[v] = True
        for e in G.incident(v):
            w = G.other_end(e, v)
            if covered[w]:
                continue
            covered[w] = True
            chosen.append(e)
            rec(chosen)
            chosen.pop()
            covered[w] = False
        covered[v] = False

    rec([])
    return results


def enumerate_internal_covering_matchings(tree: Multigraph):
    """All matchings of a tree that cover every internal (degree >= 2)
    vertex, as sorted edge-id tuples."""
    internal = [v for v in range(tree.n) if tree.degree(v) >= 2]
    results: list[tuple[int, ...]] = []
    covered = [False] * tree.n

    def rec(i: int, chosen: list[int]):
        while i < len(internal) and covered[internal[i]]:
            i += 1
        if i == len(internal):
            results.append(tuple(sorted(chosen)))
            return
        v = internal[i]
        for e in tree.incident(v):
            w = tree.other_end(e, v)
            if covered[w]:
                continue
            covered[v] = covered[w] = True
            chosen.append(e)
            rec(i + 1, chosen)
            chosen.pop()
            covered[v] = covered[w] = False

    rec(0, [])
    return results


# ------------------------------------------------- connectivity oracle

def naive_vertex_connectivity(G: Multigraph) -> int:
    """Exact connectivity by removing every vertex subset; n <= 10 only."""
    if G.n <= 1 or not G.is_connected():
        return 0
    for size in range(G.n - 1):
        for cut in itertools.combinations(range(G.n), size):
            remaining = [v for v in range(G.n) if v not in cut]
            if len(remaining) <= 1:
                continue
            vmap = {v: i for i, v in enumerate(remaining)}
            edges = [
                (vmap[u], vmap[v])
                for u, v in G.edges
                if u in vmap and v in vmap
            ]
            H = Multigraph(len(remaining), edges)
            if not H.is_connected():
                return size
    return G.n - 1
