"""Branch functionals rho given by symmetric recurrence rules.

Each rule maps the values on the branches ``T_1..T_k`` of a rooted tree to the
value on ``[T_1, ..., T_k]``; the single vertex gets the rule's leaf value.
Increasing rules pair with greedy trees, decreasing rules with M-trees.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction
from math import prod
from typing import Callable, Sequence

from ..errors import NonPositiveParameter, UnknownSelector
from ..tree import RootedTree, Tree

__all__ = ["RhoRule", "SELECTORS", "get_rule", "rho", "rho_values", "branch_values", "parse_selector"]


@dataclass(frozen=True)
class RhoRule:
    name: str
    leaf: Fraction
    combine: Callable[[Sequence[Fraction]], Fraction] = field(compare=False)
    increasing: bool
    params: tuple = ()

    def __call__(self, values: Sequence[Fraction]) -> Fraction:
        return self.combine(values) if values else self.leaf


def _positive(name: str, value) -> Fraction:
    q = Fraction(value)
    if q <= 0:
        raise NonPositiveParameter(f"{name} must be > 0, got {q}")
    return q


def _nonnegative(name: str, value) -> Fraction:
    q = Fraction(value)
    if q < 0:
        raise NonPositiveParameter(f"{name} must be >= 0, got {q}")
    return q


def _rho0() -> RhoRule:
    return RhoRule("rho0", Fraction(1), lambda v: 1 + sum(v), True)


def _rho1(x) -> RhoRule:
    x = _positive("x", x)

    def combine(v):
        s = x + sum(v)
        return s / (1 + s)

    return RhoRule("rho1", x / (1 + x), combine, True, (x,))


def _rho2(a, b) -> RhoRule:
    a, b = _nonnegative("a", a), _nonnegative("b", b)
    return RhoRule("rho2", a, lambda v: b + sum(v), True, (a, b))


def _rho3() -> RhoRule:
    return RhoRule("rho3", Fraction(1), lambda v: 1 / (1 + sum(v)), False)


def _tau(x) -> RhoRule:
    x = _positive("x", x)
    return RhoRule("tau", Fraction(1), lambda v: 1 / (1 + x * sum(v)), False, (x,))


def _rho4() -> RhoRule:
    return RhoRule("rho4", Fraction(2), lambda v: 1 + 1 / prod(v), False)


def _rho5() -> RhoRule:
    def combine(v):
        p = 8 * prod(v)
        return (p - 5) / (p - 6)

    return RhoRule("rho5", Fraction(3, 2), combine, False)


def _eta() -> RhoRule:
    return RhoRule("eta", Fraction(1), lambda v: prod(1 + e for e in v), True)


SELECTORS: dict[str, tuple[Callable[..., RhoRule], tuple[str, ...]]] = {
    "rho0": (_rho0, ()),
    "rho1": (_rho1, ("x",)),
    "rho2": (_rho2, ("a", "b")),
    "rho3": (_rho3, ()),
    "tau": (_tau, ("x",)),
    "rho4": (_rho4, ()),
    "rho5": (_rho5, ()),
    "eta": (_eta, ()),
}


def get_rule(which: str | RhoRule, *params) -> RhoRule:
    if isinstance(which, RhoRule):
        return which
    try:
        factory, names = SELECTORS[which]
    except KeyError:
        raise UnknownSelector(f"unknown rho selector {which!r}; "
                              f"choose from {', '.join(SELECTORS)}") from None
    if len(params) != len(names):
        raise UnknownSelector(f"{which} takes parameters ({', '.join(names)}), got {len(params)}")
    return factory(*params)


def parse_selector(text: str) -> RhoRule:
    """``rho1:1/2``, ``rho2:1,0``, ``rho3`` ..."""
    name, _, rest = text.partition(":")
    params = [Fraction(p) for p in rest.split(",")] if rest else []
    return get_rule(name, *params)


def rho_values(rt: RootedTree, rule: RhoRule) -> list[Fraction]:
    """Value of rho for the branch hanging below every vertex."""
    kids = rt.children()
    values: list = [None] * rt.n
    for v in reversed(rt.order()):
        values[v] = rule([values[c] for c in kids[v]])
    return values


def rho(rt: RootedTree, which: str | RhoRule, *params) -> Fraction:
    rule = get_rule(which, *params)
    return rho_values(rt, rule)[rt.root]


def branch_values(tree: Tree, rule: RhoRule) -> dict[tuple[int, int], Fraction]:
    """rho of every complete branch.

    Key ``(u, v)`` is the component of ``T - uv`` containing `v`, rooted at `v`.
    Computed for all 2(n-1) orientations by one downward and one upward pass.
    """
    adj = tree.adjacency
    rt = RootedTree(tree, 0)
    order, parent = rt.order(), rt.parents()
    down = rho_values(rt, rule)
    out: dict[tuple[int, int], Fraction] = {}
    for v in order[1:]:
        out[(parent[v], v)] = down[v]
    for u in order:
        # branches (u, c) done; now the branches (c, u) looking back up through u
        for c in adj[u]:
            if c == parent[u]:
                continue
            vals = [out[(u, w)] for w in adj[u] if w != c and w != parent[u]]
            if parent[u] != -1:
                vals.append(out[(u, parent[u])])
            out[(c, u)] = rule(vals)
    return out
