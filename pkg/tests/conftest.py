from __future__ import annotations

import pytest

from extremal_trees.degseq import DegreeSequence, validate
from extremal_trees.tree import Tree, canonical_code, parse_bracket
from extremal_trees.verify import all_trees

# Reference trees encoded by hand in bracket notation.
GREEDY23 = "[[[[],[]],[[],[]],[[],[]]],[[[]],[[]]],[[[]],[]],[[],[]]]"
M_433 = "[[[],[],[]],[[],[]],[]]"
M_444333 = "[[[],[],[]],[[],[]],[[[],[],[]],[[],[],[]]]]"
M_54443332 = "[[[],[],[]],[[],[[[],[],[],[]]]],[[[],[],[]],[[],[],[]]]]"
TERMINAL_TIE_GREEDY = "[[[[]]],[[[]]],[[]]]"
TERMINAL_TIE_OTHER = "[[[[[]]]],[[]],[[]]]"
STEINER_TIE_GREEDY = "[[[]],[[]],[]]"
STEINER_TIE_OTHER = "[[[[]]],[],[]]"


def bracket_tree(text: str) -> Tree:
    return parse_bracket(text).tree


def bracket_code(text: str) -> bytes:
    return canonical_code(bracket_tree(text))


def with_leaves(internal) -> DegreeSequence:
    """Full degree sequence from its entries >= 2."""
    leaves = 2 - 2 * len(internal) + sum(internal)
    return validate(list(internal) + [1] * leaves)


_TREES: dict[int, list[Tree]] = {}


def trees_on(n: int) -> list[Tree]:
    if n not in _TREES:
        _TREES[n] = all_trees(n)
    return _TREES[n]


@pytest.fixture(scope="session")
def small_trees():
    """All trees with 1..8 vertices."""
    return [t for n in range(1, 9) for t in trees_on(n)]


def random_tree_strategy(min_n: int = 1, max_n: int = 12):
    """Hypothesis strategy: uniformly labelled trees via random Prüfer sequences."""
    from hypothesis import strategies as st

    from extremal_trees.enumeration import prufer_decode
    from extremal_trees.tree import from_edges

    @st.composite
    def build(draw):
        n = draw(st.integers(min_n, max_n))
        if n == 1:
            return from_edges(1, [])
        seq = draw(st.lists(st.integers(0, n - 1), min_size=n - 2, max_size=n - 2))
        return from_edges(n, prufer_decode(seq, n))

    return build()
