"""
Greedy tree versus M-tree
=========================

One degree sequence, two opposite constructions.  The greedy tree packs the
large degrees together near a centre; the M-tree alternates large and small
degrees.  Distance-type invariants favour the first, matching-type
invariants the second.
"""

from extremal_trees import degree_class, greedy_tree, m_tree, parse_degrees
from extremal_trees.invariants import hosoya, independence_count, subtree_count, wiener
from extremal_trees.tree import RootedTree, canonical_code, serialize_bracket

D = parse_degrees("4,3,3,2,1,1,1,1,1,1")
G = greedy_tree(D)
M = m_tree(D)

print("G(D) =", serialize_bracket(RootedTree(G, 0)))
print("M(D) =", serialize_bracket(RootedTree(M, 0)))

# every tree with this degree sequence, up to isomorphism
trees = degree_class(D).trees
print(f"\n{len(trees)} trees share D = {D}\n")

rows = [("wiener", wiener, min), ("subtrees", subtree_count, max),
        ("hosoya", hosoya, min), ("merrifield-simmons", independence_count, max)]
print(f"{'invariant':>20} {'G(D)':>8} {'M(D)':>8} {'best':>8}  attained by")
for name, f, best in rows:
    values = [f(t) for t in trees]
    opt = best(values)
    who = [label for label, t in (("G", G), ("M", M)) if f(t) == opt]
    print(f"{name:>20} {f(G):>8} {f(M):>8} {opt:>8}  {', '.join(who)}")

# the two constructions are different trees here
print("\nG(D) isomorphic to M(D):", canonical_code(G) == canonical_code(M))
