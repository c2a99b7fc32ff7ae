"""Greedy trees, M-trees and exact tree invariants."""

from .construct import greedy_tree, m_tree, m_tree_stages
from .degseq import DegreeSequence, parse_degrees, validate
from .enumeration import degree_class, trees_majorised_by
from .tree import RootedTree, Tree, canonical_code, from_edges
from .verify import cross_check_identities, is_exchange_extremal, verify_extremality, verify_majorised

__all__ = [
    "DegreeSequence",
    "RootedTree",
    "Tree",
    "canonical_code",
    "cross_check_identities",
    "degree_class",
    "from_edges",
    "greedy_tree",
    "is_exchange_extremal",
    "m_tree",
    "m_tree_stages",
    "parse_degrees",
    "trees_majorised_by",
    "validate",
    "verify_extremality",
    "verify_majorised",
]
