"""Command-line front end.

    gqbreak analyze --group Q16 --poset cyclic
    gqbreak build --presentation "< a, b | a^4 = b^2, a^8 = 1, b^-1*a*b = a^-1 >"
    gqbreak verify --max-order 32 --report report.json
    gqbreak search-cbar --max-order 64
    gqbreak hasse --group S4 --poset classes --out s4.dot

Group specs are catalog names (``Z12``, ``D_8``, ``Q16``, ``Q_2^5``, ``SD16``,
``M16``, ``Dic_3``, ``S4``, ``A5``, ``Z4 x Z2``) or inline presentations with
the ``pres:`` prefix.
"""

from __future__ import annotations

import argparse
import json
import sys
from pathlib import Path

from .catalog import MAX_CORPUS_ORDER, fingerprint, make_from_spec
from .errors import GroupError
from .posets import POSET_KINDS, analyze, hasse_edges, to_dot
from .presentation import DEFAULT_MAX_COSETS, parse_presentation, todd_coxeter
from .verify import run_corpus, search_cbar


def _dump(obj) -> str:
    return json.dumps(obj, indent=2, sort_keys=True, ensure_ascii=False)


def _max_order(text: str) -> int:
    n = int(text)
    if not 1 <= n <= MAX_CORPUS_ORDER:
        raise argparse.ArgumentTypeError(f"must be between 1 and {MAX_CORPUS_ORDER}")
    return n


def _positive(text: str) -> int:
    n = int(text)
    if n < 1:
        raise argparse.ArgumentTypeError("must be at least 1")
    return n


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="gqbreak",
        description="Breaking points in posets of subgroups of small finite groups.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    def add_format(p):
        p.add_argument("--format", choices=("text", "json"), default="text")

    def add_group(p):
        p.add_argument("--group", required=True, help="catalog name or 'pres:<presentation>'")
        p.add_argument("--poset", choices=POSET_KINDS, default="cyclic")
        p.add_argument("--max-cosets", type=_positive, default=DEFAULT_MAX_COSETS)

    p = sub.add_parser("analyze", help="poset summary and breaking points of one group")
    add_group(p)
    add_format(p)

    p = sub.add_parser("build", help="enumerate a presentation and print its fingerprint")
    p.add_argument("--presentation", required=True)
    p.add_argument("--max-cosets", type=_positive, default=DEFAULT_MAX_COSETS)
    add_format(p)

    p = sub.add_parser("verify", help="check the classification over the corpus")
    p.add_argument("--max-order", type=_max_order, default=MAX_CORPUS_ORDER)
    p.add_argument("--report", type=Path, help="write the JSON report here")
    add_format(p)

    p = sub.add_parser("search-cbar", help="report non-p-groups whose class poset has breaking points")
    p.add_argument("--max-order", type=_max_order, default=MAX_CORPUS_ORDER)
    add_format(p)

    p = sub.add_parser("hasse", help="write the Hasse diagram of a poset as DOT")
    add_group(p)
    p.add_argument("--out", type=Path, required=True)
    return parser


def _analyze(args, out) -> int:
    G = make_from_spec(args.group, args.max_cosets)
    result = analyze(G, args.poset)
    P, report = result.poset, result.report
    edges = hasse_edges(P)
    if args.format == "json":
        out.write(_dump({
            "group": G.name,
            "order": G.order,
            "poset_kind": args.poset,
            "nodes": [{"id": i, "label": lab} for i, lab in enumerate(P.labels)],
            "hasse_edges": [list(e) for e in edges],
            "breaking": report.as_dict(),
        }) + "\n")
        return 0
    out.write(f"group: {G.name} (order {G.order})\n")
    out.write(f"poset: {args.poset}, {len(P)} nodes, {len(edges)} covering pairs\n")
    for i, lab in enumerate(P.labels):
        out.write(f"  n{i}: {lab}\n")
    out.write(f"breaking points: {report.count}\n")
    for i, lab in zip(report.breaking_nodes, report.labels):
        out.write(f"  n{i}: {lab}\n")
    return 0


def _build(args, out) -> int:
    P = parse_presentation(args.presentation)
    G = todd_coxeter(P, args.max_cosets)
    fp = fingerprint(G)
    if args.format == "json":
        out.write(_dump({"presentation": str(P), "fingerprint": fp.as_dict()}) + "\n")
        return 0
    out.write(f"presentation: {P}\n")
    out.write(f"order: {G.order}\n")
    hist = ", ".join(f"{k}:{v}" for k, v in fp.order_histogram)
    out.write(f"element orders: {{{hist}}}\n")
    out.write(f"class sizes: {list(fp.class_sizes)}\n")
    out.write(f"abelian: {fp.abelian}\n")
    return 0


def _verify(args, out) -> int:
    report = run_corpus(args.max_order)
    doc = report.as_dict()
    if args.report:
        args.report.write_text(_dump(doc) + "\n", encoding="utf-8")
    if args.format == "json":
        out.write(_dump(doc) + "\n")
    else:
        for r in report.records:
            status = "FAIL" if r.failed else "ok"
            out.write(
                f"{status:4} {r.name:24} order={r.order:<3} predicted={r.predicted_exists!s:5} "
                f"computed={r.computed_count}\n"
            )
        out.write(f"total: {len(report.records)}, failed: {len(report.failed)}\n")
        for f in report.findings:
            out.write(f"FINDING {f.name}: class-poset breaking points {list(f.breaking_classes)}\n")
    return 1 if report.failed else 0


def _search(args, out) -> int:
    found = search_cbar(args.max_order)
    if args.format == "json":
        out.write(_dump(found.as_dict()) + "\n")
        return 0
    out.write(f"scanned {found.scanned} non-p-groups of order <= {found.max_order}\n")
    out.write(f"findings: {len(found.findings)}\n")
    for f in found.findings:
        out.write(f"  {f.name} (order {f.order}): {list(f.breaking_classes)}\n")
    return 0


def _hasse(args, out) -> int:
    G = make_from_spec(args.group, args.max_cosets)
    result = analyze(G, args.poset)
    args.out.write_text(to_dot(result.poset, result.report, f"{G.name} {args.poset}"),
                        encoding="utf-8")
    out.write(f"wrote {args.out}\n")
    return 0


COMMANDS = {
    "analyze": _analyze,
    "build": _build,
    "verify": _verify,
    "search-cbar": _search,
    "hasse": _hasse,
}


def dispatch(argv=None, out=None, err=None) -> int:
    """Run one command; returns the exit status (0 ok, 1 failed check, 2 usage)."""
    out = out or sys.stdout
    err = err or sys.stderr
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return int(exc.code or 0)
    try:
        return COMMANDS[args.command](args, out)
    except (GroupError, ValueError) as exc:
        err.write(f"gqbreak {args.command}: error: {exc}\n")
        return 2


def main() -> None:
    sys.exit(dispatch())
