"""Slow, independent computations used to cross-check the fast recursions.

Each oracle works from a definition (determinants, subset enumeration,
deletion recurrences, GF(2) elimination) rather than the rooted recursions.
"""

from __future__ import annotations

from functools import lru_cache
from itertools import combinations
from math import comb

from ..errors import OracleSizeExceeded
from ..tree import Tree
from .counting import distance_distribution
from .polynomial import IntPolynomial

__all__ = [
    "ORACLE_BOUND",
    "laplacian_charpoly_oracle",
    "rsf_from_charpoly",
    "kelmans_forest_sum",
    "gf2_rank",
    "solvability_bruteforce",
    "steiner_wiener_bruteforce",
    "steiner_wiener_sw1",
    "wiener_bfs",
    "matching_poly_deletion",
    "independence_deletion",
]

ORACLE_BOUND = 12

X = IntPolynomial.x()


def _check_bound(tree: Tree, bound: int | None) -> None:
    limit = ORACLE_BOUND if bound is None else bound
    if tree.n > limit:
        raise OracleSizeExceeded(f"n = {tree.n} exceeds the oracle bound {limit}")


def laplacian_charpoly_oracle(tree: Tree, bound: int | None = None) -> IntPolynomial:
    """det(x I - L(T)) by fraction-free (Bareiss) elimination over Z[x].

    The pivots are leading principal minors of ``xI - L``, i.e. monic
    characteristic polynomials, so every Bareiss division is exact in Z[x]
    and no pivoting is needed.
    """
    _check_bound(tree, bound)
    n = tree.n
    m = [[IntPolynomial() for _ in range(n)] for _ in range(n)]
    for u in range(n):
        m[u][u] = X - tree.degree(u)
        for v in tree.adjacency[u]:
            m[u][v] = IntPolynomial.constant(1)  # -L has +1 off the diagonal
    prev = IntPolynomial.constant(1)
    for k in range(n - 1):
        pivot = m[k][k]
        for i in range(k + 1, n):
            for j in range(k + 1, n):
                m[i][j] = (pivot * m[i][j] - m[i][k] * m[k][j]).exact_div(prev)
        prev = pivot
    return m[n - 1][n - 1]


def rsf_from_charpoly(charpoly: IntPolynomial, n: int) -> IntPolynomial:
    """det(L + x I) = (-1)^n det(-x I - L)."""
    p = charpoly.substitute_neg()
    return p if n % 2 == 0 else -p


def _components(n: int, edges) -> list[int]:
    parent = list(range(n))

    def find(a):
        while parent[a] != a:
            parent[a] = parent[parent[a]]
            a = parent[a]
        return a

    for u, v in edges:
        parent[find(u)] = find(v)
    sizes: dict[int, int] = {}
    for a in range(n):
        r = find(a)
        sizes[r] = sizes.get(r, 0) + 1
    return list(sizes.values())


def kelmans_forest_sum(tree: Tree, bound: int | None = None) -> IntPolynomial:
    """sum_k x^k * sum over k-component spanning forests F of prod |component|."""
    _check_bound(tree, bound)
    n = tree.n
    edges = tree.edges()
    coeffs = [0] * (n + 1)
    for deleted in range(n):
        for cut in combinations(range(len(edges)), deleted):
            cutset = set(cut)
            kept = [e for i, e in enumerate(edges) if i not in cutset]
            gamma = 1
            for s in _components(n, kept):
                gamma *= s
            coeffs[deleted + 1] += gamma
    return IntPolynomial(coeffs)


def gf2_rank(rows: list[int], n_cols: int) -> int:
    """Rank over GF(2) of rows given as int bitsets."""
    work = list(rows)
    rank = 0
    for col in range(n_cols):
        bit = 1 << col
        pivot = next((r for r in range(rank, len(work)) if work[r] & bit), None)
        if pivot is None:
            continue
        work[rank], work[pivot] = work[pivot], work[rank]
        for r in range(len(work)):
            if r != rank and work[r] & bit:
                work[r] ^= work[rank]
        rank += 1
    return rank


def solvability_bruteforce(tree: Tree, bound: int | None = None) -> int:
    """Number of pairs (a, b) over F_2 with (A + diag(a)) x = b solvable.

    For fixed `a` the solvable `b` form the column space, of size 2^rank.
    """
    _check_bound(tree, bound)
    n = tree.n
    adj_rows = [sum(1 << v for v in tree.adjacency[u]) for u in range(n)]
    total = 0
    for a in range(1 << n):
        rows = [adj_rows[u] ^ (((a >> u) & 1) << u) for u in range(n)]
        total += 1 << gf2_rank(rows, n)
    return total


def _steiner_distance(tree: Tree, subset: frozenset[int]) -> int:
    """Edges of the smallest subtree containing `subset` (prune foreign leaves)."""
    alive = set(range(tree.n))
    deg = {v: tree.degree(v) for v in alive}
    stack = [v for v in alive if deg[v] <= 1 and v not in subset]
    while stack:
        v = stack.pop()
        if v not in alive:
            continue
        alive.discard(v)
        for u in tree.adjacency[v]:
            if u in alive:
                deg[u] -= 1
                if deg[u] <= 1 and u not in subset:
                    stack.append(u)
    return len(alive) - 1


def steiner_wiener_bruteforce(tree: Tree, r: int) -> int:
    """Sum over all r-subsets of the Steiner distance."""
    return sum(_steiner_distance(tree, frozenset(s)) for s in combinations(range(tree.n), r))


def steiner_wiener_sw1(tree: Tree, r: int) -> int:
    """Edge formula sum_e sum_{i=1}^{r-1} C(|T_u|, i) C(|T_v|, r-i)."""
    n = tree.n
    total = 0
    for u, v in tree.edges():
        a = _side_size(tree, u, v)
        b = n - a
        total += sum(comb(a, i) * comb(b, r - i) for i in range(1, r))
    return total


def _side_size(tree: Tree, u: int, v: int) -> int:
    seen = {u, v}
    stack = [u]
    count = 1
    while stack:
        for w in tree.adjacency[stack.pop()]:
            if w not in seen:
                seen.add(w)
                stack.append(w)
                count += 1
    return count


def wiener_bfs(tree: Tree) -> int:
    """Sum of all pairwise distances from breadth-first searches."""
    return sum(d * c for d, c in distance_distribution(tree).items())


def matching_poly_deletion(tree: Tree) -> IntPolynomial:
    """M(G) = M(G - e) + x M(G - u - v), on the edge set directly."""

    @lru_cache(maxsize=None)
    def rec(edges: frozenset) -> IntPolynomial:
        if not edges:
            return IntPolynomial.constant(1)
        e = min(edges)
        u, v = e
        rest = edges - {e}
        without_uv = frozenset(f for f in rest if u not in f and v not in f)
        return rec(rest) + X * rec(without_uv)

    return rec(frozenset(tree.edges()))


def independence_deletion(tree: Tree) -> int:
    """sigma(G) = sigma(G - v) + sigma(G - N[v]) on vertex subsets."""
    adj = tree.adjacency

    @lru_cache(maxsize=None)
    def rec(vertices: frozenset) -> int:
        if not vertices:
            return 1
        v = min(vertices)
        closed = {v, *adj[v]}
        return rec(vertices - {v}) + rec(vertices - closed)

    return rec(frozenset(range(tree.n)))
