from __future__ import annotations

from collections import Counter
from itertools import product as cartesian
from math import factorial

import networkx as nx
import pytest
from hypothesis import given, strategies as st

from conftest import with_leaves
from extremal_trees.degseq import all_degree_sequences, star_bound, validate
from extremal_trees.enumeration import (
    BOUND_ENV,
    count_labelled,
    degree_class,
    multiset_permutations,
    prufer_decode,
    trees_majorised_by,
)
from extremal_trees.errors import SizeBoundExceeded
from extremal_trees.tree import canonical_code, from_edges, path

FREE_TREES = (1, 1, 1, 2, 3, 6, 11, 23, 47, 106)


def test_multiset_permutations():
    assert list(multiset_permutations([1, 0, 1])) == [(0, 1, 1), (1, 0, 1), (1, 1, 0)]
    assert list(multiset_permutations([])) == [()]
    assert len(list(multiset_permutations([0, 0, 1, 1, 2]))) == factorial(5) // 4


def test_prufer_decode_examples():
    assert sorted(map(sorted, prufer_decode([], 2))) == [[0, 1]]
    star_edges = prufer_decode([0, 0, 0], 5)
    assert sorted(u + v for u, v in star_edges) == [1, 2, 3, 4]


@given(st.integers(2, 10).flatmap(lambda n: st.tuples(st.just(n), st.lists(st.integers(0, n - 1), min_size=n - 2, max_size=n - 2))))
def test_prufer_degrees(case):
    n, seq = case
    t = from_edges(n, prufer_decode(seq, n))
    counts = Counter(seq)
    assert [t.degree(v) for v in range(n)] == [counts[v] + 1 for v in range(n)]


@pytest.mark.parametrize("n", range(2, 8))
def test_labelled_counts_against_full_prufer_tally(n):
    tally: Counter = Counter()
    for seq in cartesian(range(n), repeat=n - 2):
        c = Counter(seq)
        tally[tuple(sorted((c[v] + 1 for v in range(n)), reverse=True))] += 1
    for D in all_degree_sequences(n):
        assert count_labelled(D) == degree_class(D).labelled
        # the tally runs over every way of assigning the degrees to labels
        assignments = factorial(n)
        for m in Counter(D.degrees).values():
            assignments //= factorial(m)
        assert tally[D.degrees] == count_labelled(D) * assignments
    assert sum(tally.values()) == n ** (n - 2)


def test_small_classes():
    assert len(degree_class(validate([4, 1, 1, 1, 1]))) == 1
    assert len(degree_class(validate([3, 2, 2, 1, 1, 1]))) == 2
    assert len(degree_class(validate([1, 1]))) == 1
    assert len(degree_class(validate([0]))) == 1
    cls = degree_class(with_leaves((3, 3, 2)))
    assert cls.labelled == count_labelled(cls.degrees)


@pytest.mark.parametrize("n", range(1, 11))
def test_free_tree_counts(n):
    assert sum(len(degree_class(D)) for D in all_degree_sequences(n)) == FREE_TREES[n - 1]
    assert len(list(trees_majorised_by(star_bound(n)))) == FREE_TREES[n - 1]


@pytest.mark.parametrize("n", range(3, 11))
def test_matches_networkx(n):
    ours = {canonical_code(t) for t in trees_majorised_by(star_bound(n))}
    theirs = {canonical_code(from_edges(n, list(g.edges()))) for g in nx.nonisomorphic_trees(n)}
    assert ours == theirs


@pytest.mark.parametrize("n", range(1, 10))
def test_class_members(n):
    for D in all_degree_sequences(n):
        cls = degree_class(D)
        assert len(set(cls.codes)) == len(cls)
        assert list(cls.codes) == sorted(cls.codes)
        for t, code in zip(cls, cls.codes):
            assert sorted((t.degree(v) for v in range(t.n)), reverse=True) == list(D.degrees)
            assert canonical_code(t) == code


def test_majorised_examples():
    assert [canonical_code(t) for t in trees_majorised_by(validate([1, 1]))] == [canonical_code(path(2))]
    assert [canonical_code(t) for t in trees_majorised_by(validate([2, 2, 1, 1]))] == [canonical_code(path(4))]
    got = list(trees_majorised_by(validate([3, 2, 1, 1, 1])))
    assert len(got) == 2
    codes = [canonical_code(t) for t in got]
    assert codes == sorted(codes)


def test_parallel_matches_sequential():
    D = with_leaves((3, 3, 2, 2))
    assert degree_class(D, jobs=2).codes == degree_class(D).codes
    B = validate([3, 3, 2, 1, 1, 1, 1])
    seq = [canonical_code(t) for t in trees_majorised_by(B)]
    assert [canonical_code(t) for t in trees_majorised_by(B, jobs=2)] == seq


def test_bound_explicit_and_environment(monkeypatch):
    D = validate([2] * 6 + [1, 1])
    with pytest.raises(SizeBoundExceeded):
        degree_class(D, bound=7)
    monkeypatch.setenv(BOUND_ENV, "5")
    with pytest.raises(SizeBoundExceeded):
        degree_class(D)
    with pytest.raises(SizeBoundExceeded):
        list(trees_majorised_by(D))
    assert len(degree_class(D, bound=8)) == 1
