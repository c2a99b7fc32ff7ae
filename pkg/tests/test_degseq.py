from __future__ import annotations

import pytest
from hypothesis import given, strategies as st

from extremal_trees.degseq import (
    DegreeSequence,
    ReducedDegreeSequence,
    _partitions,
    all_degree_sequences,
    branching_bound,
    enumerate_majorised,
    expand,
    leaves_bound,
    majorises,
    parse_degrees,
    reduce,
    star_bound,
    validate,
    volkmann_bound,
)
from extremal_trees.errors import LengthMismatch, ParseError, RejectsEmpty, RejectsNonTree


def test_validate_examples():
    assert validate([1, 1]).n == 2
    D = validate([1, 2, 1, 3, 1, 2])
    assert D.degrees == (3, 2, 2, 1, 1, 1) and D.n == 6
    with pytest.raises(RejectsNonTree):
        validate([3, 3, 1, 1])
    with pytest.raises(RejectsEmpty):
        validate([])
    with pytest.raises(RejectsNonTree):
        validate([2, 1, 1, 0])


def test_single_vertex_sequence():
    assert validate([0]).n == 1
    with pytest.raises(RejectsNonTree):
        validate([1])


def test_constructor_rejects_unsorted():
    with pytest.raises(RejectsNonTree):
        DegreeSequence((1, 2, 1))


def test_parse_degrees():
    assert parse_degrees("1, 3,1,1").degrees == (3, 1, 1, 1)
    with pytest.raises(ParseError) as info:
        parse_degrees("3,x,1,1")
    assert info.value.position == 2
    with pytest.raises(RejectsEmpty):
        parse_degrees("")
    with pytest.raises(RejectsEmpty):
        parse_degrees("3,,1")


def test_reduce_examples():
    r = reduce(validate([1, 1]))
    assert r.internal_degrees == () and r.leaf_count == 2
    r = reduce(validate([4, 3, 3] + [1] * 6))
    assert r.internal_degrees == (4, 3, 3) and r.leaf_count == 6
    r = reduce(validate([2, 2, 2, 1, 1]))
    assert r.internal_degrees == (2, 2, 2) and r.leaf_count == 2


def test_reduced_handshake_enforced():
    with pytest.raises(RejectsNonTree):
        ReducedDegreeSequence((3, 3), 3)


def test_majorises_examples():
    D = validate([3, 2, 2, 1, 1, 1])
    assert majorises(D, D)
    assert not majorises(D, validate([4, 2, 1, 1, 1, 1]))
    for E in all_degree_sequences(7):
        assert majorises(star_bound(7), E)
    with pytest.raises(LengthMismatch):
        majorises(validate([1, 1]), validate([2, 1, 1]))


def test_enumerate_majorised_examples():
    assert enumerate_majorised(validate([1, 1])) == [validate([1, 1])]
    assert set(enumerate_majorised(validate([3, 1, 1, 1]))) == {validate([3, 1, 1, 1]), validate([2, 2, 1, 1])}
    for n in range(1, 10):
        assert enumerate_majorised(star_bound(n)) == all_degree_sequences(n)


def _brute_sequences(n):
    """Every non-increasing n-tuple of entries in [1, n-1] with the tree sum."""
    from itertools import combinations_with_replacement

    if n == 1:
        return {(0,)}
    out = set()
    for c in combinations_with_replacement(range(1, n), n):
        if sum(c) == 2 * (n - 1):
            out.add(tuple(sorted(c, reverse=True)))
    return out


@pytest.mark.parametrize("n", range(1, 11))
def test_all_sequences_match_brute_force(n):
    seqs = all_degree_sequences(n)
    assert len(seqs) == len(set(seqs))
    assert {D.degrees for D in seqs} == _brute_sequences(n)


@pytest.mark.parametrize("n", range(2, 11))
def test_majorised_closed_downward(n):
    everything = all_degree_sequences(n)
    for B in everything:
        got = set(enumerate_majorised(B))
        assert B in got
        assert got == {D for D in everything if majorises(B, D)}


def test_bounds():
    assert star_bound(5).degrees == (4, 1, 1, 1, 1)
    assert volkmann_bound(9, 3).degrees == (3, 3, 3, 2, 1, 1, 1, 1, 1)
    assert volkmann_bound(8, 3).degrees == (3, 3, 3, 1, 1, 1, 1, 1)
    assert leaves_bound(7, 3).degrees == (3, 2, 2, 2, 1, 1, 1)
    assert branching_bound(9, 2).degrees == (6, 3, 1, 1, 1, 1, 1, 1, 1)
    with pytest.raises(RejectsNonTree):
        leaves_bound(5, 5)


@pytest.mark.parametrize("n", range(3, 12))
def test_volkmann_bound_is_the_top_of_bounded_degree(n):
    for d in range(2, n):
        B = volkmann_bound(n, d)
        assert max(B) <= d
        bounded = [D for D in all_degree_sequences(n) if max(D) <= d]
        assert all(majorises(B, D) for D in bounded)


@given(st.integers(2, 12).flatmap(lambda n: st.sampled_from(all_degree_sequences(n))))
def test_reduce_expand_round_trip(D):
    R = reduce(D)
    assert expand(R) == D
    assert R.leaf_count == 2 - 2 * len(R.internal_degrees) + sum(R.internal_degrees)


@given(st.integers(2, 10).flatmap(
    lambda n: st.tuples(*[st.sampled_from(all_degree_sequences(n))] * 3)))
def test_majorisation_is_a_partial_order(triple):
    A, B, C = triple
    assert majorises(A, A)
    if majorises(A, B) and majorises(B, A):
        assert A == B
    if majorises(A, B) and majorises(B, C):
        assert majorises(A, C)


def test_partitions_respect_cap():
    assert list(_partitions(4, 2, 2)) == [(2, 2)]
    assert list(_partitions(0, 0, 5)) == [()]
    assert list(_partitions(3, 0, 5)) == []
