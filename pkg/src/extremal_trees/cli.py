"""extremal-trees: build greedy trees and M-trees, compute invariants, verify claims.

Exit codes: 0 success, 1 claim refuted / tree not exchange-extremal,
2 parse or validation error, 3 enumeration or oracle bound exceeded.
Results go to standard output, diagnostics to standard error.
"""

from __future__ import annotations

import argparse
import csv
import json
import sys
from pathlib import Path

from .catalog import format_value, parse_invariant
from .construct import greedy_tree, m_tree, m_tree_stages
from .degseq import all_degree_sequences, parse_degrees
from .enumeration import degree_class, trees_majorised_by
from .errors import BoundExceeded, ExtremalTreesError
from .invariants.counting import solvability
from .invariants.polynomial import fraction_str
from .invariants.rho import parse_selector, rho_values
from .tree import RootedTree, Tree, canonical_code, parse_tree_text, serialize_bracket, write_edge_list
from .verify import cross_check_identities, is_exchange_extremal, report_rows, verify_extremality, verify_majorised

EXIT_OK, EXIT_REFUTED, EXIT_INPUT, EXIT_BOUND = 0, 1, 2, 3

# built-in defaults, applied after the config file so that flags > config > these
DEFAULTS = {"format": "bracket", "kind": "greedy", "jobs": 1, "bound": None, "root": 0}


def _render(tree: Tree, fmt: str, root: int = 0) -> str:
    if fmt == "edges":
        return write_edge_list(tree).rstrip("\n")
    if fmt == "code":
        return canonical_code(tree).decode("ascii")
    return serialize_bracket(RootedTree(tree, root))


def _read_tree(source: str) -> Tree:
    text = sys.stdin.read() if source == "-" else Path(source).read_text(encoding="utf-8")
    return parse_tree_text(text)


def _parse_n_range(text: str) -> range:
    lo, sep, hi = text.partition("-")
    try:
        return range(int(lo), int(hi if sep else lo) + 1)
    except ValueError:
        raise ExtremalTreesError(f"bad vertex-count range {text!r}; use e.g. 4-9") from None


def cmd_construct(args) -> int:
    D = parse_degrees(args.degrees)
    if args.stages and args.kind == "mtree":
        for seq, tree, _labels in m_tree_stages(D):
            print(f"# M({','.join(map(str, seq))})")
            print(_render(tree, args.format))
        return EXIT_OK
    tree = greedy_tree(D) if args.kind == "greedy" else m_tree(D)
    print(_render(tree, args.format))
    return EXIT_OK


def cmd_invariant(args) -> int:
    tree = _read_tree(args.tree)
    name = args.name
    if name == "solvability":
        s, t = solvability(RootedTree(tree, args.root))
        print(f"s={s} t={t}")
        return EXIT_OK
    if name.startswith("rho:"):
        rule = parse_selector(name[4:])
        print(fraction_str(rho_values(RootedTree(tree, args.root), rule)[args.root]))
        return EXIT_OK
    print(format_value(parse_invariant(name)(tree)))
    return EXIT_OK


def cmd_enumerate(args) -> int:
    D = parse_degrees(args.degrees)
    if args.majorised:
        trees = list(trees_majorised_by(D, args.bound, args.jobs))
        labelled = None
    else:
        cls = degree_class(D, args.bound, args.jobs)
        trees, labelled = list(cls.trees), cls.labelled
    if args.count_only:
        print(len(trees))
        return EXIT_OK
    for t in trees:
        print(_render(t, args.format))
        if args.format == "edges":
            print()
    if labelled is not None:
        print(f"{len(trees)} trees ({labelled} labelled)", file=sys.stderr)
    return EXIT_OK


def cmd_exchange(args) -> int:
    tree = _read_tree(args.tree)
    check = is_exchange_extremal(tree, parse_selector(args.rho))
    if check.extremal:
        print("exchange-extremal")
        return EXIT_OK
    w = check.witness
    left = ",".join(fraction_str(q) for q in w.left)
    right = ",".join(fraction_str(q) for q in w.right)
    print(f"not exchange-extremal: v={w.v} w={w.w} left=[{left}] right=[{right}]")
    return EXIT_REFUTED


def cmd_verify(args) -> int:
    D = parse_degrees(args.degrees)
    run = verify_majorised if args.majorised else verify_extremality
    report = run(D, args.invariant, bound=args.bound, jobs=args.jobs)
    text = report.to_json()
    print(text)
    if args.report:
        Path(args.report).write_text(text + "\n", encoding="utf-8")
    return EXIT_OK if report.holds else EXIT_REFUTED


def cmd_identities(args) -> int:
    report = cross_check_identities(args.n_max)
    print(report.to_json())
    return EXIT_OK if report.holds else EXIT_REFUTED


def cmd_sweep(args) -> int:
    reports = []
    for n in _parse_n_range(args.n):
        for D in all_degree_sequences(n):
            for name in args.invariant:
                inv = parse_invariant(name)
                if inv.key == "steiner" and inv.params[0] > n:
                    continue
                run = verify_majorised if args.majorised else verify_extremality
                reports.append(run(D, inv, bound=args.bound, jobs=args.jobs))
    rows = report_rows(reports)
    out = open(args.csv, "w", newline="", encoding="utf-8") if args.csv else sys.stdout
    try:
        writer = csv.DictWriter(out, fieldnames=list(rows[0]) if rows else ["claim"])
        writer.writeheader()
        writer.writerows(rows)
    finally:
        if args.csv:
            out.close()
    failed = sum(not r.holds for r in reports)
    print(f"{len(reports)} checks, {failed} refuted", file=sys.stderr)
    return EXIT_OK if failed == 0 else EXIT_REFUTED


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="extremal-trees", description=__doc__.splitlines()[0])
    parser.add_argument("--config", help="JSON file of option defaults (flags take precedence)")
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("construct", help="build G(D) or M(D)")
    p.add_argument("--degrees", required=True, help="comma-separated degrees, any order")
    p.add_argument("--kind", choices=["greedy", "mtree"])
    p.add_argument("--format", choices=["bracket", "edges", "code"])
    p.add_argument("--stages", action="store_true", help="print every M-tree recursion stage")
    p.set_defaults(func=cmd_construct)

    p = sub.add_parser("invariant", help="evaluate one invariant of a tree")
    p.add_argument("--tree", required=True, help="edge-list or bracket file, '-' for stdin")
    p.add_argument("--name", required=True,
                   help="wiener|harary|wab:a,b|steiner:r|subtrees|hosoya|matching-poly|ms|"
                        "rsf-poly|solvability|energy|lel|ie|rho:<selector>[:params]")
    p.add_argument("--root", type=int, help="root for rooted quantities (default 0)")
    p.set_defaults(func=cmd_invariant)

    p = sub.add_parser("enumerate", help="all trees with a degree sequence, up to isomorphism")
    p.add_argument("--degrees", required=True)
    p.add_argument("--majorised", action="store_true", help="all trees whose sequence is majorised")
    p.add_argument("--count-only", action="store_true")
    p.add_argument("--format", choices=["bracket", "edges", "code"])
    p.add_argument("--bound", type=int)
    p.add_argument("--jobs", type=int)
    p.set_defaults(func=cmd_enumerate)

    p = sub.add_parser("exchange", help="test exchange-extremality for a branch functional")
    p.add_argument("--tree", required=True)
    p.add_argument("--rho", required=True, help="rho0|rho1:x|rho2:a,b|rho3|tau:x|rho4|rho5|eta")
    p.set_defaults(func=cmd_exchange)

    p = sub.add_parser("verify", help="exhaustively check an extremality claim")
    p.add_argument("--degrees", required=True)
    p.add_argument("--invariant", required=True)
    p.add_argument("--majorised", action="store_true")
    p.add_argument("--report", help="also write the JSON report here")
    p.add_argument("--bound", type=int)
    p.add_argument("--jobs", type=int)
    p.set_defaults(func=cmd_verify)

    p = sub.add_parser("identities", help="cross-check fast recursions against oracles")
    p.add_argument("--n-max", type=int, default=8)
    p.set_defaults(func=cmd_identities)

    p = sub.add_parser("sweep", help="verify claims for every degree sequence in a size range; CSV out")
    p.add_argument("--n", required=True, help="vertex counts, e.g. 4-9")
    p.add_argument("--invariant", action="append", required=True)
    p.add_argument("--majorised", action="store_true", help="treat each sequence as a bound B")
    p.add_argument("--csv", help="write the table here instead of stdout")
    p.add_argument("--bound", type=int)
    p.add_argument("--jobs", type=int)
    p.set_defaults(func=cmd_sweep)
    return parser


def _load_config(path: str | None) -> dict:
    if not path:
        return {}
    data = json.loads(Path(path).read_text(encoding="utf-8"))
    if not isinstance(data, dict):
        raise ExtremalTreesError(f"config {path} must hold a JSON object")
    return {k.replace("-", "_"): v for k, v in data.items()}


def main(argv: list[str] | None = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        config = _load_config(args.config)
        for key, value in {**DEFAULTS, **config}.items():
            if getattr(args, key, "absent") is None:
                setattr(args, key, config.get(key, value))
        return args.func(args)
    except BoundExceeded as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_BOUND
    except (ExtremalTreesError, OSError, json.JSONDecodeError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_INPUT


if __name__ == "__main__":
    sys.exit(main())
