"""The gadget trees behind the cubic vertex expansions.

The 3t-leaf claw-grown trees satisfy a matched-leaf invariant: every
matching covering all internal vertices matches exactly t leaves.  That is
what turns a perfect matching of the expanded cubic graph back into a
t-factor of the original.
"""

from cyclehit import (
    build_even_leaf_tree,
    build_gadget_tree,
    lonely_pendant_edges,
    matched_leaf_count,
    serialize_gadget_tree,
)


def all_internal_covering_matchings(tree):
    internal = [v for v in range(tree.n) if tree.degree(v) >= 2]
    covered = [False] * tree.n
    out = []

    def rec(i, chosen):
        while i < len(internal) and covered[internal[i]]:
            i += 1
        if i == len(internal):
            out.append(tuple(chosen))
            return
        v = internal[i]
        for e in tree.incident(v):
            w = tree.other_end(e, v)
            if not covered[w]:
                covered[v] = covered[w] = True
                chosen.append(e)
                rec(i + 1, chosen)
                chosen.pop()
                covered[v] = covered[w] = False

    rec(0, [])
    return out


for t in (1, 2, 3):
    T = build_gadget_tree(t)
    counts = sorted(
        {matched_leaf_count(T, M) for M in all_internal_covering_matchings(T.tree)}
    )
    print(f"claw-grown tree t={t}: {T.tree.n} vertices, {len(T.leaves)} leaves, "
          f"lonely pendant edges={len(lonely_pendant_edges(T))}, "
          f"matched-leaf counts={counts}")

print()
print(serialize_gadget_tree(build_gadget_tree(2), "claw-grown t=2"))

for L in (4, 6, 8):
    T = build_even_leaf_tree(L)
    counts = sorted(
        {matched_leaf_count(T, M) for M in all_internal_covering_matchings(T.tree)}
    )
    print(f"even tree L={L}: {T.tree.n} vertices, "
          f"sibling pairs={len(T.sibling_groups)}, "
          f"matched-leaf counts={counts} (always even)")
