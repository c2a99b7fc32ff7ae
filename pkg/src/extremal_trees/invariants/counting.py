"""Exact tree invariants computed by the standard edge and rooted recursions."""

from __future__ import annotations

from collections import Counter
from fractions import Fraction
from math import comb
from typing import Callable, Mapping, NamedTuple

from ..errors import MissingDistanceValue, NonPositiveParameter, ROutOfRange
from ..tree import RootedTree, Tree
from .polynomial import IntPolynomial, product

__all__ = [
    "wiener",
    "distance_distribution",
    "wiener_like",
    "harary",
    "w_ab",
    "steiner_wiener",
    "eta_root",
    "subtree_count",
    "matching_poly",
    "m0_poly",
    "hosoya",
    "independence_count",
    "sigma0",
    "rsf_poly",
    "rsf_pair",
    "SolvabilityPair",
    "solvability",
]

X = IntPolynomial.x()
ONE = IntPolynomial.constant(1)


def _rooted_order(tree: Tree, root: int = 0) -> tuple[list[int], list[int]]:
    rt = RootedTree(tree, root)
    return rt.order(), rt.parents()


def _split_sizes(tree: Tree, weight=None) -> list[tuple[object, object]]:
    """For every edge, the total weight on each side of it."""
    order, parent = _rooted_order(tree)
    w = [1] * tree.n if weight is None else list(weight)
    total = sum(w)
    below = list(w)
    for v in reversed(order[1:]):
        below[parent[v]] += below[v]
    return [(below[v], total - below[v]) for v in order[1:]]


def wiener(tree: Tree) -> int:
    """Sum over edges of the product of the two component sizes."""
    return sum(a * b for a, b in _split_sizes(tree))


def distance_distribution(tree: Tree) -> Counter:
    """Number of unordered vertex pairs at each distance >= 1."""
    counts: Counter = Counter()
    adj = tree.adjacency
    for s in range(tree.n):
        dist = {s: 0}
        frontier = [s]
        while frontier:
            nxt = []
            for u in frontier:
                for v in adj[u]:
                    if v not in dist:
                        dist[v] = dist[u] + 1
                        nxt.append(v)
            frontier = nxt
        for t, d in dist.items():
            if t > s:
                counts[d] += 1
    return counts


def wiener_like(tree: Tree, f: Mapping[int, Fraction] | Callable[[int], Fraction]) -> Fraction:
    """Sum of f(dis(u, v)) over unordered pairs.

    `f` may be a mapping (distance -> value) or a callable.
    """
    total = Fraction(0)
    for d, count in sorted(distance_distribution(tree).items()):
        if callable(f):
            value = f(d)
        else:
            if d not in f:
                raise MissingDistanceValue(f"no value for distance {d}")
            value = f[d]
        total += count * Fraction(value)
    return total


def harary(tree: Tree) -> Fraction:
    return wiener_like(tree, lambda d: Fraction(1, d))


def w_ab(tree: Tree, a, b) -> Fraction:
    """Wiener index with leaves weighted `a` and internal vertices `b`."""
    a, b = Fraction(a), Fraction(b)
    if a < 0 or b < 0:
        raise NonPositiveParameter("weights a, b must be >= 0")
    weight = [a if tree.is_leaf(v) else b for v in range(tree.n)]
    return sum((p * q for p, q in _split_sizes(tree, weight)), Fraction(0))


def steiner_wiener(tree: Tree, r: int) -> int:
    """Steiner r-Wiener index via C(n,r) - C(|T_u|,r) - C(|T_v|,r) per edge."""
    n = tree.n
    if not 1 <= r <= n:
        raise ROutOfRange(f"r = {r} outside [1, {n}]")
    cnr = comb(n, r)
    return sum(cnr - comb(a, r) - comb(b, r) for a, b in _split_sizes(tree))


def _down(rt: RootedTree, leaf, combine) -> list:
    """Evaluate a rooted recursion bottom-up; returns the value at every vertex."""
    kids = rt.children()
    values: list = [None] * rt.n
    for v in reversed(rt.order()):
        values[v] = combine([values[c] for c in kids[v]]) if kids[v] else leaf
    return values


def _eta_down(rt: RootedTree) -> list[int]:
    def combine(vals):
        out = 1
        for e in vals:
            out *= 1 + e
        return out
    return _down(rt, 1, combine)


def eta_root(rt: RootedTree) -> int:
    """Number of subtrees containing the root."""
    return _eta_down(rt)[rt.root]


def subtree_count(tree: Tree) -> int:
    # every subtree has a unique vertex closest to the root
    return sum(_eta_down(RootedTree(tree, 0)))


def _matching_pair(rt: RootedTree) -> tuple[IntPolynomial, IntPolynomial]:
    """(M, M0) at the root: all matchings and those avoiding the root."""

    def combine(vals):
        m0 = product([m for m, _ in vals])
        m = m0
        for i, (_, c0) in enumerate(vals):
            others = product([mm for j, (mm, _) in enumerate(vals) if j != i])
            m = m + X * c0 * others
        return (m, m0)

    return _down(rt, (ONE, ONE), combine)[rt.root]


def matching_poly(tree: Tree) -> IntPolynomial:
    return _matching_pair(RootedTree(tree, 0))[0]


def m0_poly(rt: RootedTree) -> IntPolynomial:
    return _matching_pair(rt)[1]


def hosoya(tree: Tree) -> int:
    return matching_poly(tree)(1)


def _independence_pair(rt: RootedTree) -> tuple[int, int]:
    """(sigma, sigma0) at the root."""

    def combine(vals):
        s0 = 1
        s1 = 1
        for s, c0 in vals:
            s0 *= s
            s1 *= c0
        return (s0 + s1, s0)

    return _down(rt, (2, 1), combine)[rt.root]


def independence_count(tree: Tree) -> int:
    """Merrifield-Simmons index (the empty set included)."""
    return _independence_pair(RootedTree(tree, 0))[0]


def sigma0(rt: RootedTree) -> int:
    return _independence_pair(rt)[1]


def rsf_pair(rt: RootedTree) -> tuple[IntPolynomial, IntPolynomial]:
    """(rf, f) at the root.

    rf weights marked spanning forests by x^(components); f counts forests
    whose root component is unmarked, weighted by x^(marked components).
    """

    def combine(vals):
        sums = [rf + f for rf, f in vals]
        f = product(sums)
        rf = X * f
        for i, (rfi, _) in enumerate(vals):
            rf = rf + rfi * product([s for j, s in enumerate(sums) if j != i])
        return (rf, f)

    return _down(rt, (X, ONE), combine)[rt.root]


def rsf_poly(tree: Tree) -> IntPolynomial:
    """sum_k c_k x^k where c_k counts k-component marked spanning forests."""
    return rsf_pair(RootedTree(tree, 0))[0]


class SolvabilityPair(NamedTuple):
    s: int
    t: int


def solvability(rt: RootedTree) -> SolvabilityPair:
    """(s, t) by s = 8 prod s_i - 5 prod t_i, t = 8 prod s_i - 6 prod t_i."""

    def combine(vals):
        ps = pt = 1
        for s, t in vals:
            ps *= s
            pt *= t
        return (8 * ps - 5 * pt, 8 * ps - 6 * pt)

    s, t = _down(rt, (3, 2), combine)[rt.root]
    return SolvabilityPair(s, t)
