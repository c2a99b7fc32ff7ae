"""Tree representation, rooted decomposition, canonical codes, file formats.

Vertices are the integers ``0 .. n-1``.  Trees are immutable.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable, Sequence, TextIO

from .degseq import DegreeSequence
from .errors import NotATree, ParseError, SameVertex

__all__ = [
    "Tree",
    "RootedTree",
    "BranchSplit",
    "from_edges",
    "single_vertex",
    "path",
    "star",
    "canonical_code",
    "rooted_code",
    "centroids",
    "branch_split",
    "reassemble",
    "subdivision",
    "serialize_bracket",
    "parse_bracket",
    "adjacency_code",
    "degree_sequence",
    "read_edge_list",
    "write_edge_list",
    "parse_tree_text",
]


@dataclass(frozen=True)
class Tree:
    adjacency: tuple[tuple[int, ...], ...]

    def __post_init__(self):
        adj = self.adjacency
        n = len(adj)
        if n == 0:
            raise NotATree("a tree needs at least one vertex")
        edges = 0
        for u, nbrs in enumerate(adj):
            if len(set(nbrs)) != len(nbrs):
                raise NotATree(f"duplicate edge at vertex {u}")
            for v in nbrs:
                if not 0 <= v < n:
                    raise NotATree(f"vertex {v} out of range")
                if v == u:
                    raise NotATree(f"self-loop at vertex {u}")
                if u not in adj[v]:
                    raise NotATree(f"adjacency not symmetric for {u}-{v}")
            edges += len(nbrs)
        if edges != 2 * (n - 1):
            raise NotATree(f"{edges // 2} edges on {n} vertices")
        seen = {0}
        stack = [0]
        while stack:
            for v in adj[stack.pop()]:
                if v not in seen:
                    seen.add(v)
                    stack.append(v)
        if len(seen) != n:
            raise NotATree("graph is disconnected (so it contains a cycle)")

    @property
    def n(self) -> int:
        return len(self.adjacency)

    def degree(self, v: int) -> int:
        return len(self.adjacency[v])

    def edges(self) -> list[tuple[int, int]]:
        return [(u, v) for u, nbrs in enumerate(self.adjacency) for v in nbrs if u < v]

    def leaves(self) -> list[int]:
        if self.n == 1:
            return [0]
        return [v for v, nbrs in enumerate(self.adjacency) if len(nbrs) == 1]

    def is_leaf(self, v: int) -> bool:
        return self.n == 1 or len(self.adjacency[v]) == 1

    def rooted(self, root: int = 0) -> "RootedTree":
        return RootedTree(self, root)

    def relabel(self, perm: Sequence[int]) -> "Tree":
        """Tree with vertex v renamed perm[v]."""
        return from_edges(self.n, [(perm[u], perm[v]) for u, v in self.edges()])

    def __repr__(self) -> str:
        return f"Tree(n={self.n}, edges={self.edges()})"


def from_edges(n: int, edges: Iterable[Sequence[int]]) -> Tree:
    if n < 1:
        raise NotATree("n must be >= 1")
    adj: list[list[int]] = [[] for _ in range(n)]
    count = 0
    for e in edges:
        u, v = int(e[0]), int(e[1])
        if not (0 <= u < n and 0 <= v < n):
            raise NotATree(f"edge ({u}, {v}) leaves the vertex range [0, {n})")
        if u == v:
            raise NotATree(f"self-loop at vertex {u}")
        if v in adj[u]:
            raise NotATree(f"duplicate edge ({u}, {v})")
        adj[u].append(v)
        adj[v].append(u)
        count += 1
    if count != n - 1:
        raise NotATree(f"{count} edges given, a tree on {n} vertices has {n - 1}")
    return Tree(tuple(tuple(sorted(a)) for a in adj))


def single_vertex() -> Tree:
    return Tree(((),))


def path(n: int) -> Tree:
    return from_edges(n, [(i, i + 1) for i in range(n - 1)])


def star(n: int) -> Tree:
    return from_edges(n, [(0, i) for i in range(1, n)])


@dataclass(frozen=True)
class RootedTree:
    tree: Tree
    root: int = 0

    def __post_init__(self):
        if not 0 <= self.root < self.tree.n:
            raise NotATree(f"root {self.root} not in [0, {self.tree.n})")

    @property
    def n(self) -> int:
        return self.tree.n

    def parents(self) -> list[int]:
        """Parent of every vertex (-1 for the root)."""
        return _bfs(self.tree, self.root)[1]

    def order(self) -> list[int]:
        """Vertices in BFS order from the root; reversed it is a post-order."""
        return _bfs(self.tree, self.root)[0]

    def children(self) -> list[list[int]]:
        order, parent = _bfs(self.tree, self.root)
        kids: list[list[int]] = [[] for _ in range(self.n)]
        for v in order[1:]:
            kids[parent[v]].append(v)
        return kids

    def branches(self) -> list["RootedTree"]:
        """The rooted components of T - root, as separate trees."""
        return [extract_branch(self.tree, self.root, c) for c in self.tree.adjacency[self.root]]

    def height(self) -> int:
        order, parent = _bfs(self.tree, self.root)
        depth = [0] * self.n
        for v in order[1:]:
            depth[v] = depth[parent[v]] + 1
        return max(depth)

    def root_degree(self) -> int:
        return self.tree.degree(self.root)


def _bfs(tree: Tree, root: int) -> tuple[list[int], list[int]]:
    parent = [-1] * tree.n
    parent[root] = root
    order = [root]
    i = 0
    adj = tree.adjacency
    while i < len(order):
        u = order[i]
        i += 1
        for v in adj[u]:
            if parent[v] == -1:
                parent[v] = u
                order.append(v)
    parent[root] = -1
    return order, parent


def _component(tree: Tree, start: int, blocked: int) -> list[int]:
    """Vertices reachable from `start` without passing through `blocked`, BFS order."""
    order = [start]
    seen = {start, blocked}
    i = 0
    while i < len(order):
        for v in tree.adjacency[order[i]]:
            if v not in seen:
                seen.add(v)
                order.append(v)
        i += 1
    return order


def _induced(tree: Tree, vertices: Sequence[int]) -> tuple[Tree, dict[int, int]]:
    index = {v: i for i, v in enumerate(vertices)}
    edges = [(index[u], index[v]) for u in vertices for v in tree.adjacency[u]
             if v in index and u < v]
    return from_edges(len(vertices), edges), index


def extract_branch(tree: Tree, parent: int, child: int) -> RootedTree:
    """Component of T - {parent, child} edge containing `child`, rooted there."""
    sub, _ = _induced(tree, _component(tree, child, parent))
    return RootedTree(sub, 0)


# -- canonical codes ---------------------------------------------------------

def rooted_code(tree: Tree, root: int, blocked: int | None = None) -> bytes:
    """AHU code of the tree rooted at `root`; `blocked` cuts one neighbour off."""
    return _ahu(tree.adjacency, root, -1 if blocked is None else blocked)


def centroids(tree: Tree) -> list[int]:
    n = tree.n
    order, parent = _bfs(tree, 0)
    size = [1] * n
    for v in reversed(order[1:]):
        size[parent[v]] += size[v]
    best = []
    for v in range(n):
        heaviest = n - size[v]
        for c in tree.adjacency[v]:
            if c != parent[v]:
                heaviest = max(heaviest, size[c])
        if 2 * heaviest <= n:
            best.append(v)
    return best


def canonical_code(tree: Tree) -> bytes:
    """Complete isomorphism invariant: equal codes iff the trees are isomorphic.

    Unicentroidal trees get the AHU code rooted at the centroid.  For a
    bicentroidal tree the central edge is cut and the two halves' codes are
    concatenated in sorted order behind an ``E`` marker.
    """
    return adjacency_code(tree.adjacency)


def adjacency_code(adj: Sequence[Sequence[int]]) -> bytes:
    """`canonical_code` on raw adjacency lists, skipping Tree validation."""
    n = len(adj)
    order = [0]
    parent = [-1] * n
    parent[0] = 0
    for u in order:
        for v in adj[u]:
            if parent[v] == -1:
                parent[v] = u
                order.append(v)
    parent[0] = -1
    size = [1] * n
    for v in reversed(order[1:]):
        size[parent[v]] += size[v]
    cs = []
    for v in range(n):
        heaviest = n - size[v]
        for c in adj[v]:
            if c != parent[v] and size[c] > heaviest:
                heaviest = size[c]
        if 2 * heaviest <= n:
            cs.append(v)
    if len(cs) == 1:
        return _ahu(adj, cs[0], -1)
    a, b = cs
    halves = sorted([_ahu(adj, a, b), _ahu(adj, b, a)])
    return b"E" + halves[0] + halves[1]


def _ahu(adj, root: int, blocked: int) -> bytes:
    order = [root]
    parent = {root: blocked}
    for u in order:
        for v in adj[u]:
            if v != parent[u]:
                parent[v] = u
                order.append(v)
    codes: dict[int, list[bytes]] = {v: [] for v in order}
    result = b"()"
    for v in reversed(order):
        result = b"(" + b"".join(sorted(codes[v])) + b")"
        if v != root:
            codes[parent[v]].append(result)
    return result


# -- branch decomposition ------------------------------------------------------

@dataclass(frozen=True)
class BranchSplit:
    """``T = [L_1..L_k] v H w [R_1..R_l]``; `v` and `w` index into `host`."""

    left_branches: tuple[RootedTree, ...]
    host: Tree
    v: int
    w: int
    right_branches: tuple[RootedTree, ...]

    @property
    def k(self) -> int:
        return len(self.left_branches)

    @property
    def l(self) -> int:  # noqa: E743
        return len(self.right_branches)


def toward(tree: Tree, v: int, w: int) -> int:
    """Neighbour of v on the path from v to w."""
    parent = _bfs(tree, w)[1]
    return parent[v]


def branch_split(tree: Tree, v: int, w: int) -> BranchSplit:
    if v == w:
        raise SameVertex(f"v and w are both {v}")
    if not (0 <= v < tree.n and 0 <= w < tree.n):
        raise NotATree("vertex out of range")
    parent_w = _bfs(tree, w)[1]
    parent_v = _bfs(tree, v)[1]
    hop_v = parent_w[v]   # v's neighbour toward w
    hop_w = parent_v[w]
    left = [c for c in tree.adjacency[v] if c != hop_v]
    right = [c for c in tree.adjacency[w] if c != hop_w]
    removed: set[int] = set()
    for c in left:
        removed.update(_component(tree, c, v))
    for c in right:
        removed.update(_component(tree, c, w))
    host_vertices = [u for u in range(tree.n) if u not in removed]
    host, index = _induced(tree, host_vertices)
    return BranchSplit(
        tuple(extract_branch(tree, v, c) for c in left),
        host,
        index[v],
        index[w],
        tuple(extract_branch(tree, w, c) for c in right),
    )


def _attach(edges: list[tuple[int, int]], offset: int, at: int, branch: RootedTree) -> int:
    """Append `branch` as new vertices starting at `offset`, hanging from `at`."""
    sub = branch.tree
    edges.extend((offset + a, offset + b) for a, b in sub.edges())
    edges.append((at, offset + branch.root))
    return offset + sub.n


def reassemble(split: BranchSplit) -> Tree:
    """Inverse of `branch_split` up to isomorphism."""
    edges = list(split.host.edges())
    offset = split.host.n
    for b in split.left_branches:
        offset = _attach(edges, offset, split.v, b)
    for b in split.right_branches:
        offset = _attach(edges, offset, split.w, b)
    return from_edges(offset, edges)


def subdivision(tree: Tree) -> Tree:
    """Insert a new degree-2 vertex on every edge."""
    n = tree.n
    edges = []
    for i, (u, v) in enumerate(tree.edges()):
        mid = n + i
        edges += [(u, mid), (mid, v)]
    return from_edges(n + len(edges) // 2, edges)


def degree_sequence(tree: Tree) -> DegreeSequence:
    return DegreeSequence(tuple(sorted((tree.degree(v) for v in range(tree.n)), reverse=True)))


# -- bracket format ----------------------------------------------------------

def serialize_bracket(rt: RootedTree) -> str:
    """``[]`` for a vertex, ``[B_1,...,B_k]`` otherwise; children in code order."""
    tree = rt.tree
    order, parent = _bfs(tree, rt.root)
    kids: dict[int, list[tuple[bytes, str]]] = {v: [] for v in order}
    code: dict[int, bytes] = {}
    text = "[]"
    for v in reversed(order):
        parts = sorted(kids[v])
        code[v] = b"(" + b"".join(c for c, _ in parts) + b")"
        text = "[" + ",".join(s for _, s in parts) + "]"
        if v != rt.root:
            kids[parent[v]].append((code[v], text))
    return text


def parse_bracket(text: str) -> RootedTree:
    """Inverse of `serialize_bracket`; whitespace is ignored."""
    # token grammar: '[' may follow '[' or ','; ']' may follow '[' or ']';
    # ',' may follow ']' inside an open bracket
    edges: list[tuple[int, int]] = []
    stack: list[int] = []
    count = 0
    prev = None
    for pos, ch in enumerate(text):
        if ch.isspace():
            continue
        if prev == "]" and not stack:
            raise ParseError(f"trailing character {ch!r}", pos)
        if ch == "[":
            if prev == "]":
                raise ParseError("missing ',' between branches", pos)
            if stack:
                edges.append((stack[-1], count))
            stack.append(count)
            count += 1
        elif ch == "]":
            if prev == ",":
                raise ParseError("dangling ','", pos)
            if not stack:
                raise ParseError("unbalanced ']'", pos)
            stack.pop()
        elif ch == ",":
            if prev != "]" or not stack:
                raise ParseError("unexpected ','", pos)
        else:
            raise ParseError(f"unexpected character {ch!r}", pos)
        prev = ch
    if prev is None or stack:
        raise ParseError("unterminated bracket expression", len(text))
    return RootedTree(from_edges(count, edges), 0)


# -- edge-list format --------------------------------------------------------

def read_edge_list(stream: TextIO | str) -> Tree:
    """First line ``n``, then n-1 lines ``u v`` (0-indexed)."""
    text = stream if isinstance(stream, str) else stream.read()
    lines = [ln.strip() for ln in text.splitlines()]
    lines = [ln for ln in lines if ln and not ln.startswith("#")]
    if not lines:
        raise ParseError("empty edge list", 0)
    try:
        n = int(lines[0])
    except ValueError:
        raise ParseError(f"first line must be the vertex count, got {lines[0]!r}", 0) from None
    edges = []
    for i, ln in enumerate(lines[1:], start=2):
        parts = ln.split()
        if len(parts) != 2:
            raise ParseError(f"line {i}: expected 'u v', got {ln!r}", i)
        try:
            edges.append((int(parts[0]), int(parts[1])))
        except ValueError:
            raise ParseError(f"line {i}: non-integer vertex in {ln!r}", i) from None
    return from_edges(n, edges)


def write_edge_list(tree: Tree) -> str:
    lines = [str(tree.n)] + [f"{u} {v}" for u, v in tree.edges()]
    return "\n".join(lines) + "\n"


def parse_tree_text(text: str) -> Tree:
    """Accept either the bracket or the edge-list format."""
    if text.lstrip().startswith("["):
        return parse_bracket(text).tree
    return read_edge_list(text)
