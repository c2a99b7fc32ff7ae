"""Randomised agreement between fast recursions and independent computations."""

from __future__ import annotations

from fractions import Fraction

from hypothesis import given, settings, strategies as st

from conftest import random_tree_strategy
from extremal_trees.construct import greedy_tree, m_tree
from extremal_trees.degseq import validate
from extremal_trees.invariants import (
    hosoya,
    independence_count,
    independence_deletion,
    laplacian_charpoly_oracle,
    matching_poly,
    matching_poly_deletion,
    rsf_from_charpoly,
    rsf_poly,
    subtree_count,
    wiener,
    wiener_bfs,
)
from extremal_trees.invariants.rho import get_rule, rho_values
from extremal_trees.tree import RootedTree, canonical_code

trees = random_tree_strategy(1, 12)


@given(trees)
def test_rsf_matches_charpoly(tree):
    assert rsf_poly(tree) == rsf_from_charpoly(laplacian_charpoly_oracle(tree), tree.n)


@given(trees)
def test_deletion_recurrences(tree):
    assert matching_poly(tree) == matching_poly_deletion(tree)
    assert independence_count(tree) == independence_deletion(tree)


@given(random_tree_strategy(1, 30))
def test_wiener_matches_bfs(tree):
    assert wiener(tree) == wiener_bfs(tree)


@given(trees, st.randoms(use_true_random=False))
def test_invariants_ignore_labels(tree, rnd):
    perm = list(range(tree.n))
    rnd.shuffle(perm)
    other = tree.relabel(perm)
    assert rsf_poly(other) == rsf_poly(tree)
    assert subtree_count(other) == subtree_count(tree)
    assert hosoya(other) == hosoya(tree)


@given(random_tree_strategy(2, 12), st.sampled_from([Fraction(1, 4), Fraction(1), Fraction(4)]))
def test_rho_bounds_on_random_roots(tree, x):
    for r in range(tree.n):
        rt = RootedTree(tree, r)
        assert rho_values(rt, get_rule("rho3"))[r] < 1
        assert rho_values(rt, get_rule("rho4"))[r] < 2
        assert 1 < rho_values(rt, get_rule("rho5"))[r] < Fraction(3, 2)
        assert rho_values(rt, get_rule("rho1", x))[r] > x / (1 + x)


@settings(max_examples=50)
@given(random_tree_strategy(1, 14))
def test_constructions_beat_a_random_tree_with_the_same_degrees(tree):
    D = validate([tree.degree(v) for v in range(tree.n)])
    g, m = greedy_tree(D), m_tree(D)
    assert wiener(g) <= wiener(tree)
    assert subtree_count(g) >= subtree_count(tree)
    assert hosoya(m) <= hosoya(tree)
    assert independence_count(m) >= independence_count(tree)
    if wiener(tree) == wiener(g):
        assert canonical_code(tree) == canonical_code(g)
