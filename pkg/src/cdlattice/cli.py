"""``cdtool``: command-line entry point."""

from __future__ import annotations

import argparse
import json
import sys
from pathlib import Path

from .catalog import (
    CatalogError,
    bundled_catalog_path,
    classify_orders,
    emit_entry,
    find_entry,
    parse_catalog,
    parse_order_range,
)
from .constructions import BUILTIN_NAMES, construct_primitive_group, parse_builtin
from .group import Group, GroupTooLarge
from .lattice import cd_lattice, is_cd_simple, verify_lattice_identities
from .normal_structure import has_property_a
from .numtheory import lemma210_enumerate, wagstaff_primes
from .verify import CLAIM_TAGS, verify_paper


def _load_catalog(path: str | None):
    return parse_catalog(path or bundled_catalog_path())


def _describe_lattice(G: Group, label: str) -> str:
    L = cd_lattice(G)
    lines = [f"{label}: |G| = {G.order}, m* = {L.max_measure}, |CD(G)| = {len(L)}"]
    for H in L.members:
        lines.append(f"  member of order {H.order:>5}, centralizer order {L.dual(H).order}")
    report = verify_lattice_identities(G, L)
    lines.append(f"CD-simple: {'yes' if is_cd_simple(G) else 'no'}")
    lines.append(f"Property A: {'yes' if has_property_a(G).holds else 'no'}")
    lines.append("lattice identities: " + ("ok" if report.ok else "; ".join(report.failures)))
    return "\n".join(lines)


def cmd_lattice(args: argparse.Namespace) -> int:
    if args.builtin:
        G = parse_builtin(args.builtin)
        label = args.builtin
    else:
        entries = parse_catalog(args.file) if args.file else _load_catalog(args.catalog)
        if args.id:
            entry = find_entry(entries, args.id)
        elif len(entries) == 1:
            entry = entries[0]
        else:
            raise SystemExit("--id is required when the catalog holds more than one group")
        G = entry.group()
        label = entry.id
    print(_describe_lattice(G, label))
    return 0 if verify_lattice_identities(G).ok else 1


def cmd_classify(args: argparse.Namespace) -> int:
    report = classify_orders(_load_catalog(args.catalog), parse_order_range(args.orders))
    print(report.to_json() if args.json else report.to_text())
    return 1 if report.errors else 0


def cmd_construct(args: argparse.Namespace) -> int:
    A = construct_primitive_group(args.p, args.q, args.n, args.r)
    G = A.group
    print(f"[GF({args.p}^{args.n})]K with |K| = {args.q}*{args.p}^{args.r}: |G| = {G.order}, "
          f"degree {G.degree}, family {A.metadata['family']}")
    print(f"CD-simple: {'yes' if is_cd_simple(G) else 'no'}")
    if args.emit:
        text = emit_entry(G.order, 1, G, f"construction p={args.p} q={args.q} n={args.n} r={args.r}")
        Path(args.emit).write_text(text, encoding="utf-8")
        print(f"wrote {args.emit}")
    return 0


def cmd_lemma210(args: argparse.Namespace) -> int:
    for t in lemma210_enumerate(args.pmax):
        q = str(t.q) if t.q < 10**12 else f"{t.q} ({len(str(t.q))} digits)"
        print(f"p={t.p} q={q} n={t.n} r={t.r} family={t.family}")
    return 0


def cmd_wagstaff(args: argparse.Namespace) -> int:
    print(" ".join(str(p) for p in wagstaff_primes(args.limit)))
    return 0


def cmd_verify(args: argparse.Namespace) -> int:
    ledger = verify_paper(_load_catalog(args.catalog), skip=args.skip or ())
    print(ledger.to_text())
    for r in ledger.failures:
        print(f"FAILED: {r.claim}", file=sys.stderr)
    return 0 if ledger.ok else 1


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="cdtool", description="Chermak-Delgado lattice toolkit")
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("lattice", help="compute the CD lattice of one group")
    src = p.add_mutually_exclusive_group(required=True)
    src.add_argument("--builtin", help=f"name[:params], names: {', '.join(BUILTIN_NAMES)}")
    src.add_argument("--catalog", help="catalog file (use with --id)")
    src.add_argument("--file", help="catalog-format file")
    p.add_argument("--id", help="group id order.index")
    p.set_defaults(func=cmd_lattice)

    p = sub.add_parser("classify", help="classify catalog groups in an order range")
    p.add_argument("--catalog", help="catalog file (default: bundled orders 1..50)")
    p.add_argument("--orders", required=True, help="range A..B")
    p.add_argument("--json", action="store_true")
    p.set_defaults(func=cmd_classify)

    p = sub.add_parser("construct", help="build the affine group [GF(p^n)]K")
    for name in ("p", "q", "n", "r"):
        p.add_argument(f"--{name}", type=int, required=True)
    p.add_argument("--emit", help="write the group in catalog format")
    p.set_defaults(func=cmd_construct)

    p = sub.add_parser("lemma210", help="enumerate admissible parameter tuples")
    p.add_argument("--pmax", type=int, required=True)
    p.set_defaults(func=cmd_lemma210)

    p = sub.add_parser("wagstaff", help="primes p with (p^p-1)/(p-1) prime")
    p.add_argument("--limit", type=int, required=True)
    p.set_defaults(func=cmd_wagstaff)

    p = sub.add_parser("verify-paper", help="rerun every machine-checkable claim")
    p.add_argument("--catalog", help="catalog file (default: bundled)")
    p.add_argument("--skip", action="append", help=f"tag or claim name to skip ({', '.join(CLAIM_TAGS)})")
    p.set_defaults(func=cmd_verify)
    return parser


def main(argv: list[str] | None = None) -> int:
    args = build_parser().parse_args(argv)
    try:
        return args.func(args)
    except (CatalogError, GroupTooLarge, KeyError, ValueError, OSError) as exc:
        print(f"cdtool: error: {exc}", file=sys.stderr)
        return 2


if __name__ == "__main__":
    sys.exit(main())
