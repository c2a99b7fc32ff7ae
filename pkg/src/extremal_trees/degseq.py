"""Tree degree sequences: validation, reduced form and majorisation.

A degree sequence is stored sorted non-increasing.  The single-vertex tree
has the special sequence ``(0,)``.
"""

from __future__ import annotations

from dataclasses import dataclass
from itertools import accumulate
from typing import Iterable, Iterator

from .errors import LengthMismatch, ParseError, RejectsEmpty, RejectsNonTree

__all__ = [
    "DegreeSequence",
    "ReducedDegreeSequence",
    "validate",
    "parse_degrees",
    "reduce",
    "expand",
    "majorises",
    "enumerate_majorised",
    "all_degree_sequences",
    "star_bound",
    "volkmann_bound",
    "leaves_bound",
    "branching_bound",
]


@dataclass(frozen=True, order=True)
class DegreeSequence:
    degrees: tuple[int, ...]

    def __post_init__(self):
        d = self.degrees
        if not d:
            raise RejectsEmpty("degree sequence is empty")
        if any(a < b for a, b in zip(d, d[1:])):
            raise RejectsNonTree(f"{d} is not sorted non-increasing")
        n = len(d)
        if n == 1:
            if d[0] != 0:
                raise RejectsNonTree(f"single vertex must have degree 0, got {d[0]}")
            return
        if d[-1] < 1:
            raise RejectsNonTree(f"entry {d[-1]} < 1 in {d}")
        if sum(d) != 2 * (n - 1):
            raise RejectsNonTree(
                f"degree sum {sum(d)} != 2(n-1) = {2 * (n - 1)} for n = {n}"
            )

    @property
    def n(self) -> int:
        return len(self.degrees)

    def __iter__(self) -> Iterator[int]:
        return iter(self.degrees)

    def __len__(self) -> int:
        return len(self.degrees)

    def __getitem__(self, i):
        return self.degrees[i]

    def __str__(self) -> str:
        return ",".join(map(str, self.degrees))


@dataclass(frozen=True)
class ReducedDegreeSequence:
    """Entries >= 2 of a degree sequence together with the number of leaves."""

    internal_degrees: tuple[int, ...]
    leaf_count: int

    def __post_init__(self):
        t = len(self.internal_degrees)
        if any(d < 2 for d in self.internal_degrees):
            raise RejectsNonTree("internal degrees must be >= 2")
        # the single vertex reduces to ((), 0) and is the one exception
        if not (t == 0 and self.leaf_count == 0):
            if self.leaf_count != 2 - 2 * t + sum(self.internal_degrees):
                raise RejectsNonTree("leaf count violates the handshake identity")

    @property
    def t(self) -> int:
        return len(self.internal_degrees)


def validate(raw: Iterable[int]) -> DegreeSequence:
    """Sort `raw` non-increasing and check that some tree realises it."""
    values = [int(v) for v in raw]
    if not values:
        raise RejectsEmpty("degree sequence is empty")
    return DegreeSequence(tuple(sorted(values, reverse=True)))


def parse_degrees(text: str) -> DegreeSequence:
    """Parse comma-separated degrees such as ``"4,4,3,3,1,1"`` (any order)."""
    parts = [p.strip() for p in text.split(",")]
    if not text.strip() or any(p == "" for p in parts):
        raise RejectsEmpty(f"no degrees in {text!r}")
    values = []
    pos = 0
    for p in parts:
        try:
            values.append(int(p))
        except ValueError:
            raise ParseError(f"not an integer: {p!r}", text.find(p, pos)) from None
        pos += len(p) + 1
    return validate(values)


def reduce(D: DegreeSequence) -> ReducedDegreeSequence:
    internal = tuple(d for d in D.degrees if d >= 2)
    leaves = sum(1 for d in D.degrees if d == 1)
    return ReducedDegreeSequence(internal, leaves)


def expand(R: ReducedDegreeSequence) -> DegreeSequence:
    if R.t == 0 and R.leaf_count == 0:
        return DegreeSequence((0,))
    return DegreeSequence(tuple(sorted(R.internal_degrees, reverse=True)) + (1,) * R.leaf_count)


def majorises(A: DegreeSequence, B: DegreeSequence) -> bool:
    """True iff A majorises B: equal sums and every prefix sum of A >= B's."""
    if len(A) != len(B):
        raise LengthMismatch(f"lengths differ: {len(A)} vs {len(B)}")
    pa = list(accumulate(A.degrees))
    pb = list(accumulate(B.degrees))
    return pa[-1] == pb[-1] and all(x >= y for x, y in zip(pa, pb))


def _partitions(total: int, parts: int, cap: int) -> Iterator[tuple[int, ...]]:
    """Non-increasing tuples of `parts` integers >= 1, each <= cap, summing to total."""
    if parts == 0:
        if total == 0:
            yield ()
        return
    lo = -(-total // parts)  # the largest part is at least the average
    for first in range(min(cap, total - (parts - 1)), lo - 1, -1):
        for rest in _partitions(total - first, parts - 1, first):
            yield (first,) + rest


def all_degree_sequences(n: int) -> list[DegreeSequence]:
    """Every tree degree sequence on n vertices, in reverse lexicographic order."""
    if n < 1:
        raise RejectsEmpty("n must be >= 1")
    if n == 1:
        return [DegreeSequence((0,))]
    return [DegreeSequence(p) for p in _partitions(2 * (n - 1), n, n - 1)]


def enumerate_majorised(B: DegreeSequence) -> list[DegreeSequence]:
    """All tree degree sequences D of the same length with B majorising D."""
    return [D for D in all_degree_sequences(B.n) if majorises(B, D)]


# Bound sequences whose majorised classes are natural tree families.

def star_bound(n: int) -> DegreeSequence:
    """(n-1, 1, ..., 1): majorises every tree degree sequence on n vertices."""
    if n == 1:
        return DegreeSequence((0,))
    return DegreeSequence((n - 1,) + (1,) * (n - 1))


def volkmann_bound(n: int, d: int) -> DegreeSequence:
    """(d, ..., d, r, 1, ..., 1) with 1 <= r < d: trees of maximum degree <= d."""
    if n <= 2:
        return star_bound(n)
    if d < 2:
        raise RejectsNonTree("maximum degree must be >= 2 for n >= 3")
    full, rem = divmod(n - 2, d - 1)
    degrees = (d,) * full
    if rem:
        degrees += (rem + 1,)
    return validate(degrees + (1,) * (n - len(degrees)))


def leaves_bound(n: int, leaves: int) -> DegreeSequence:
    """(l, 2, ..., 2, 1, ..., 1): majorises every tree with exactly `leaves` leaves."""
    if not 2 <= leaves <= n - 1:
        raise RejectsNonTree(f"an {n}-vertex tree cannot have {leaves} leaves")
    return validate((leaves,) + (2,) * (n - leaves - 1) + (1,) * leaves)


def branching_bound(n: int, r: int) -> DegreeSequence:
    """(n-2r+1, 3, ..., 3, 1, ..., 1): majorises every tree with r branching vertices."""
    if r < 1 or n - 2 * r + 1 < 3:
        raise RejectsNonTree(f"an {n}-vertex tree cannot have {r} branching vertices")
    return validate((n - 2 * r + 1,) + (3,) * (r - 1) + (1,) * (n - r))
