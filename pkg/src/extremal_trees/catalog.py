"""Named invariants as used on the command line and in verification claims.

A name is a key with optional parameters after a colon: ``wiener``,
``wab:1,0``, ``steiner:5``, ``rho:rho1:1/2``.  Every claim fixes the
optimisation direction, the extremal construction (greedy tree or M-tree),
whether the optimum is asserted to be unique, and the companion branch
functional whose exchange-extremality the optimum must satisfy.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Callable

from . import invariants as inv
from .errors import UnknownInvariant
from .invariants.polynomial import IntPolynomial, fraction_str
from .invariants.rho import RhoRule, get_rule, parse_selector
from .tree import RootedTree, Tree

__all__ = ["GRID", "Claim", "Invariant", "parse_invariant", "format_value", "json_value", "CLAIMS"]

GRID = (Fraction(1, 4), Fraction(1, 2), Fraction(1), Fraction(2), Fraction(4))


@dataclass(frozen=True)
class Claim:
    direction: str  # "min" or "max"
    construction: str  # "greedy" or "mtree"
    unique: bool
    companion: Callable[["Invariant", Fraction | None], RhoRule] | None = None


def _solvability_s(tree: Tree) -> int:
    return inv.solvability(RootedTree(tree, 0)).s


CLAIMS: dict[str, Claim] = {
    "wiener": Claim("min", "greedy", True, lambda i, x: get_rule("rho0")),
    "wab": Claim("min", "greedy", True, lambda i, x: get_rule("rho2", *i.params)),
    "steiner": Claim("min", "greedy", False, lambda i, x: get_rule("rho0")),
    "harary": Claim("max", "greedy", False),
    "subtrees": Claim("max", "greedy", True, lambda i, x: get_rule("eta")),
    "rsf-poly": Claim("min", "greedy", True, lambda i, x: get_rule("rho1", x)),
    "lel": Claim("min", "greedy", False),
    "ie": Claim("min", "greedy", False),
    "hosoya": Claim("min", "mtree", True, lambda i, x: get_rule("rho3")),
    "matching-poly": Claim("min", "mtree", True, lambda i, x: get_rule("tau", x)),
    "ms": Claim("max", "mtree", True, lambda i, x: get_rule("rho4")),
    "solvability": Claim("min", "mtree", True, lambda i, x: get_rule("rho5")),
    "energy": Claim("min", "mtree", False),
}

# key -> (kind, parameter count or None for free-form, evaluator(tree, params))
_EVALUATORS: dict[str, tuple[str, int | None, Callable]] = {
    "wiener": ("exact", 0, lambda t, p: inv.wiener(t)),
    "harary": ("exact", 0, lambda t, p: inv.harary(t)),
    "wab": ("exact", 2, lambda t, p: inv.w_ab(t, *p)),
    "steiner": ("exact", 1, lambda t, p: inv.steiner_wiener(t, p[0])),
    "subtrees": ("exact", 0, lambda t, p: inv.subtree_count(t)),
    "hosoya": ("exact", 0, lambda t, p: inv.hosoya(t)),
    "ms": ("exact", 0, lambda t, p: inv.independence_count(t)),
    "matching-poly": ("poly", 0, lambda t, p: inv.matching_poly(t)),
    "rsf-poly": ("poly", 0, lambda t, p: inv.rsf_poly(t)),
    "solvability": ("exact", 0, lambda t, p: _solvability_s(t)),
    "energy": ("float", 0, lambda t, p: inv.energy(t)),
    "lel": ("float", 0, lambda t, p: inv.lel(t)),
    "ie": ("float", 0, lambda t, p: inv.incidence_energy(t)),
}


@dataclass(frozen=True)
class Invariant:
    """A parsed invariant name, e.g. ``wab:2,3`` -> key ``wab``, params (2, 3)."""

    label: str
    key: str
    params: tuple
    kind: str  # exact | poly | float | rho

    def __call__(self, tree: Tree):
        if self.key == "rho":
            return inv.rho_values(RootedTree(tree, 0), self.params[0])[0]
        return _EVALUATORS[self.key][2](tree, self.params)

    @property
    def unique_required(self) -> bool:
        """Uniqueness is asserted by the claim; W_{a,b} loses it in the limits a=0 or b=0."""
        if self.key == "wab" and 0 in self.params:
            return False
        return self.claim.unique

    @property
    def claim(self) -> Claim:
        try:
            return CLAIMS[self.key]
        except KeyError:
            raise UnknownInvariant(f"no extremality claim is recorded for {self.label!r}") from None


def parse_invariant(label: str) -> Invariant:
    key, _, rest = label.strip().partition(":")
    if key == "rho":
        if not rest:
            raise UnknownInvariant("rho needs a selector, e.g. rho:rho3 or rho:rho1:1/2")
        return Invariant(label, "rho", (parse_selector(rest),), "rho")
    if key not in _EVALUATORS:
        names = ", ".join(list(_EVALUATORS) + ["rho:<selector>"])
        raise UnknownInvariant(f"unknown invariant {key!r}; choose from {names}")
    kind, nparams, _ = _EVALUATORS[key]
    raw = [p for p in rest.split(",")] if rest else []
    if len(raw) != nparams:
        raise UnknownInvariant(f"{key} takes {nparams} parameter(s), got {len(raw)}")
    try:
        if key == "steiner":
            params: tuple = (int(raw[0]),)
        else:
            params = tuple(Fraction(p.strip()) for p in raw)
    except ValueError:
        raise UnknownInvariant(f"bad parameters in {label!r}") from None
    if key == "wab" and any(p < 0 for p in params):
        raise UnknownInvariant("wab weights must be >= 0")
    return Invariant(label, key, params, kind)


def format_value(value) -> str:
    """Human/CLI text: integers, ``p/q`` rationals, polynomial JSON, 12-digit floats."""
    if isinstance(value, IntPolynomial):
        return value.to_json()
    if isinstance(value, float):
        return f"{value:.12g}"
    if isinstance(value, Fraction):
        return fraction_str(value)
    return str(value)


def json_value(value):
    """JSON-safe form: ints stay ints, rationals become ``p/q`` strings."""
    if isinstance(value, IntPolynomial):
        return [str(a) for a in value.coefficients]
    if isinstance(value, Fraction):
        return fraction_str(value)
    if isinstance(value, dict):
        return {str(k): json_value(v) for k, v in value.items()}
    return value
