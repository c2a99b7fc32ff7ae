"""
Growing an M-tree
=================

M(D) is built recursively: the reduced sequence is cut into a shorter one,
its M-tree is built, and a ring of small stars is hung at the first
labelled vertex that still has a leaf.  Printing every stage shows how the
alternating pattern of degrees appears.
"""

from extremal_trees import m_tree_stages
from extremal_trees.degseq import validate
from extremal_trees.tree import RootedTree, serialize_bracket

internal = (5, 4, 4, 4, 3, 3, 3, 2)
# the handshake identity fixes the number of leaves
leaves = 2 + sum(d - 2 for d in internal)
D = validate(internal + (1,) * leaves)
print("D =", D)

for seq, tree, labels in m_tree_stages(D):
    print(f"\nM{seq}: {tree.n} vertices, labelled vertices {labels}")
    print("   ", serialize_bracket(RootedTree(tree, 0)))
    # labels run in non-decreasing degree order; roots of attached rings stay unlabelled
    print("    degrees of v_1, v_2, ...:", [tree.degree(v) for v in labels])
