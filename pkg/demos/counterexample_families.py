"""Tour of the counterexample families and their exact thresholds.

Each family is a regular multigraph paired with edge-disjoint cycles that no
small-degree factor can meet; the brute-force oracle certifies every claim.
"""

from cyclehit import (
    gen_doubled,
    gen_sec6_2k,
    gen_thm4,
    gen_thm5,
    Multigraph,
    t_factor_oracle,
    vertex_connectivity,
)


def show(label, inst, ts):
    G = inst.graph
    print(f"\n{label}: n={G.n} m={G.m} regular={G.is_regular()} "
          f"connectivity={vertex_connectivity(G)} cycles={len(inst.cycles)}")
    for t in ts:
        verdict = t_factor_oracle(G, t, inst.cycles, "hit")
        print(f"  t={t}: {verdict.summary()}")


# Kite-block family: 1-connected, no t-factor hits both triangles.
show("kite blocks (r=4, t=2)", gen_thm4(4, 2), ts=(2,))

# Wheel-of-kites: unique 1-factor support avoids the central triangle.
show("wheel (r=4, t=1)", gen_thm4(4, 1), ts=(1,))

# Three bipartite blocks + r triangles: hitting needs t >= ceil(r/3).
show("three blocks (r=4)", gen_thm5(4), ts=(1, 2))

# Subdivided bundle: k prescribed 4-cycles force t >= k.
show("bundle (k=2)", gen_sec6_2k(2), ts=(1, 2))
show("bundle (k=3)", gen_sec6_2k(3), ts=(1, 2, 3))

# Doubling: hitting every parallel 2-cycle with an (r+1)-factor is exactly
# perfect-matching existence in the base graph.
c4 = Multigraph(4, [(0, 1), (1, 2), (2, 3), (0, 3)])
bowtie = Multigraph(5, [(0, 1), (1, 2), (0, 2), (2, 3), (3, 4), (2, 4)])
show("doubled C4 (base has a 1-factor)", gen_doubled(c4), ts=(3,))
show("doubled bowtie (odd order base)", gen_doubled(bowtie), ts=(3,))
