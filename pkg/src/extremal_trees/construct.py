"""The two extremal trees of a degree sequence: the greedy tree and the M-tree."""

from __future__ import annotations

from collections import deque
from typing import Callable, Sequence

from .degseq import DegreeSequence, reduce
from .tree import Tree, from_edges

__all__ = ["greedy_tree", "m_tree", "m_tree_stages"]


def greedy_tree(D: DegreeSequence) -> Tree:
    """Breadth-first tree assigning the largest remaining degrees first.

    Vertex i receives degree ``D[i]``.  Vertices are expanded in the order
    they were labelled, which is also non-increasing degree order, so the
    children of the largest-degree unexpanded vertex are always filled next.
    """
    degs = D.degrees
    n = len(degs)
    if n == 1:
        return from_edges(1, [])
    edges = []
    queue = deque([0])
    nxt = 1
    while queue:
        v = queue.popleft()
        slots = degs[v] - (0 if v == 0 else 1)
        for _ in range(slots):
            edges.append((v, nxt))
            queue.append(nxt)
            nxt += 1
    return from_edges(n, edges)


class _Builder:
    def __init__(self):
        self.adj: list[list[int]] = []

    def add(self, parent: int | None = None) -> int:
        v = len(self.adj)
        self.adj.append([])
        if parent is not None:
            self.adj[v].append(parent)
            self.adj[parent].append(v)
        return v

    def pseudo_leaf(self, parent: int, d: int) -> int:
        """Hang a star [d] (root plus d-1 leaves) below `parent`."""
        root = self.add(parent)
        for _ in range(d - 1):
            self.add(root)
        return root

    def leaf_neighbours(self, v: int) -> list[int]:
        return sorted(u for u in self.adj[v] if len(self.adj[u]) == 1)

    def tree(self) -> Tree:
        return from_edges(len(self.adj), [(u, v) for u in range(len(self.adj))
                                          for v in self.adj[u] if u < v])


def _pseudo_leaves_increasing(b: _Builder, parent: int, degrees: Sequence[int]) -> list[int]:
    # label in order of increasing degree: d(v_i) <= d(v_j) for i < j
    return [b.pseudo_leaf(parent, d) for d in sorted(degrees)]


def _build(b: _Builder, seq: tuple[int, ...], pick, stages) -> list[int]:
    """Grow M(seq) inside `b`; returns the labelled vertices v_1, v_2, ..."""
    t = len(seq)
    dt = seq[-1]
    if t <= dt + 1:
        root = b.add()
        labels = [root] + _pseudo_leaves_increasing(b, root, seq[:-1])
        for _ in range(dt - (t - 1)):
            b.add(root)
    else:
        labels = _build(b, seq[dt - 1 : t - 1], pick, stages)
        s = next(i for i, v in enumerate(labels) if b.leaf_neighbours(v))
        leaf = pick(b.leaf_neighbours(labels[s]))
        # the chosen leaf becomes the root of R = [[d_1], ..., [d_{dt-1}]]
        labels = labels + _pseudo_leaves_increasing(b, leaf, seq[: dt - 1])
    if stages is not None:
        stages.append((seq, b.tree(), list(labels)))
    return labels


def m_tree(D: DegreeSequence, pick: Callable[[list[int]], int] = min) -> Tree:
    """M(D), built recursively on the reduced degree sequence.

    `pick` chooses which leaf next to v_s receives the new branch; every
    choice gives an isomorphic tree, the default takes the lowest label.
    """
    return m_tree_stages(D, pick)[-1][1]


def m_tree_stages(D: DegreeSequence, pick: Callable[[list[int]], int] = min):
    """Every intermediate M-tree of the recursion as (reduced sequence, tree, labels)."""
    internal = reduce(D).internal_degrees
    if not internal:
        # single vertex or single edge
        return [((), from_edges(D.n, [(0, 1)] if D.n == 2 else []), [])]
    stages: list = []
    _build(_Builder(), internal, pick, stages)
    return stages
