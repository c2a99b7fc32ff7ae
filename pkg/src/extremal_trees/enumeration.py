"""Isomorph-free enumeration of trees with a given or majorised degree sequence.

Labelled trees in which vertex i has degree d_i correspond one-to-one with
Prüfer sequences containing i exactly d_i - 1 times.  Each distinct
arrangement of that multiset is decoded and the trees are deduplicated by
canonical code.
"""

from __future__ import annotations

import heapq
import os
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass
from functools import lru_cache
from math import factorial, prod
from typing import Iterator, Sequence

from .degseq import DegreeSequence, enumerate_majorised
from .errors import SizeBoundExceeded
from .tree import Tree, adjacency_code, canonical_code, from_edges, single_vertex

__all__ = [
    "DEFAULT_BOUND",
    "BOUND_ENV",
    "TreeClass",
    "resolve_bound",
    "count_labelled",
    "multiset_permutations",
    "prufer_decode",
    "degree_class",
    "trees_with_degrees",
    "trees_majorised_by",
]

DEFAULT_BOUND = 16
BOUND_ENV = "EXTREMAL_TREES_BOUND"


def resolve_bound(bound: int | None = None) -> int:
    """Explicit bound, else the environment variable, else 16."""
    if bound is not None:
        return int(bound)
    return int(os.environ.get(BOUND_ENV, DEFAULT_BOUND))


def _check(D: DegreeSequence, bound: int | None) -> None:
    limit = resolve_bound(bound)
    if D.n > limit:
        raise SizeBoundExceeded(f"n = {D.n} exceeds the enumeration bound {limit}")


def count_labelled(D: DegreeSequence) -> int:
    """(n-2)! / prod (d_i - 1)!: labelled trees where vertex i has degree d_i."""
    if D.n <= 2:
        return 1
    return factorial(D.n - 2) // prod(factorial(d - 1) for d in D)


def multiset_permutations(items: Sequence[int]) -> Iterator[tuple[int, ...]]:
    """Distinct orderings of `items` in lexicographic order (next-permutation)."""
    a = sorted(items)
    n = len(a)
    while True:
        yield tuple(a)
        i = n - 2
        while i >= 0 and a[i] >= a[i + 1]:
            i -= 1
        if i < 0:
            return
        j = n - 1
        while a[j] <= a[i]:
            j -= 1
        a[i], a[j] = a[j], a[i]
        a[i + 1:] = reversed(a[i + 1:])


def prufer_decode(seq: Sequence[int], n: int) -> list[tuple[int, int]]:
    """Edge list of the labelled tree on range(n) with Prüfer sequence `seq`."""
    remaining = [1] * n
    for s in seq:
        remaining[s] += 1
    leaves = [v for v in range(n) if remaining[v] == 1]
    heapq.heapify(leaves)
    edges = []
    for s in seq:
        leaf = heapq.heappop(leaves)
        edges.append((leaf, s))
        remaining[s] -= 1
        if remaining[s] == 1:
            heapq.heappush(leaves, s)
    edges.append((heapq.heappop(leaves), heapq.heappop(leaves)))
    return edges


@dataclass(frozen=True)
class TreeClass:
    """All isomorphism classes with one degree sequence, sorted by canonical code."""

    degrees: DegreeSequence
    trees: tuple[Tree, ...]
    codes: tuple[bytes, ...]
    labelled: int

    def __len__(self) -> int:
        return len(self.trees)

    def __iter__(self) -> Iterator[Tree]:
        return iter(self.trees)


def _symbols(D: DegreeSequence) -> list[int]:
    return [v for v, d in enumerate(D) if d > 1 for _ in range(d - 1)]


def _scan(n: int, prefix: tuple[int, ...], rest: tuple[int, ...]) -> tuple[dict[bytes, list], int]:
    """Decode every sequence ``prefix + perm(rest)``; returns (code -> edges, count)."""
    found: dict[bytes, list] = {}
    count = 0
    for tail in multiset_permutations(rest):
        edges = prufer_decode(prefix + tail, n)
        count += 1
        adj: list[list[int]] = [[] for _ in range(n)]
        for u, v in edges:
            adj[u].append(v)
            adj[v].append(u)
        code = adjacency_code(adj)
        if code not in found:
            found[code] = edges
    return found, count


def _scan_parts(D: DegreeSequence, jobs: int) -> tuple[dict[bytes, list], int]:
    symbols = _symbols(D)
    if jobs <= 1 or len(symbols) < 2:
        return _scan(D.n, (), tuple(symbols))
    tasks = []
    for first in sorted(set(symbols)):
        rest = list(symbols)
        rest.remove(first)
        tasks.append(((first,), tuple(rest)))
    merged: dict[bytes, list] = {}
    total = 0
    with ProcessPoolExecutor(max_workers=jobs) as pool:
        futures = [pool.submit(_scan, D.n, p, r) for p, r in tasks]
        for fut in futures:
            found, count = fut.result()
            total += count
            for code, edges in found.items():
                merged.setdefault(code, edges)
    return merged, total


@lru_cache(maxsize=512)
def _degree_class(D: DegreeSequence) -> TreeClass:
    return _build_class(D, 1)


def _build_class(D: DegreeSequence, jobs: int) -> TreeClass:
    if D.n == 1:
        t = single_vertex()
        return TreeClass(D, (t,), (canonical_code(t),), 1)
    found, labelled = _scan_parts(D, jobs)
    expected = count_labelled(D)
    if labelled != expected:
        raise RuntimeError(f"Prüfer scan of {D} visited {labelled} sequences, expected {expected}")
    codes = tuple(sorted(found))
    trees = tuple(from_edges(D.n, found[c]) for c in codes)
    return TreeClass(D, trees, codes, labelled)


def degree_class(D: DegreeSequence, bound: int | None = None, jobs: int = 1) -> TreeClass:
    """Every tree with degree sequence D, once per isomorphism class.

    The result is the same for any `jobs`; sequential results are cached.
    """
    _check(D, bound)
    if jobs > 1:
        return _build_class(D, jobs)
    return _degree_class(D)


def trees_with_degrees(D: DegreeSequence, bound: int | None = None, jobs: int = 1) -> Iterator[Tree]:
    yield from degree_class(D, bound, jobs).trees


def trees_majorised_by(B: DegreeSequence, bound: int | None = None, jobs: int = 1) -> Iterator[Tree]:
    """Trees whose degree sequence is majorised by B, ordered by canonical code."""
    _check(B, bound)
    pairs = []
    for D in enumerate_majorised(B):
        cls = degree_class(D, bound, jobs)
        pairs.extend(zip(cls.codes, cls.trees))
    pairs.sort(key=lambda p: p[0])
    for _, t in pairs:
        yield t
