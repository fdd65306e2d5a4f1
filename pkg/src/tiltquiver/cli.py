"""Command line interface: enumerate, graph, counts, verify, reflect-scan.

All outputs are byte-deterministic for fixed inputs: nodes, arrows and JSON
fields are emitted in fixed order.  Exit codes: 0 success, 1 verification
failure, 2 usage error.
"""

from __future__ import annotations

import argparse
import json
import sys

from .quiver import all_orientations, d_quiver, path_quiver
from .tilting import (
    closed_form_counts,
    enumerate_tilting,
    ext_table,
    tilting_quiver,
    tilting_quiver_dot,
    tilting_quiver_json,
)
from .verify import run_suite


def _parse_bits(text, needed, parser):
    if len(text) != needed or any(c not in "01" for c in text):
        parser.error(f"orientation must be {needed} bits of 0/1, got {text!r}")
    return [c == "1" for c in text]


def _build_quiver(kind, rank, orientation, parser):
    if kind == "A":
        if rank < 1:
            parser.error("type A needs rank >= 1")
        make = lambda bits: path_quiver(rank, bits)
    else:
        if rank < 3:
            parser.error("type D needs rank >= 3")
        make = lambda bits: d_quiver(rank - 1, bits)
    if orientation == "reference":
        return make(None)
    bits = _parse_bits(orientation, rank - 1, parser)
    return make(bits)


def _print_json(data, out):
    out.write(json.dumps(data) + "\n")


def _cmd_enumerate(args, parser, out):
    q = _build_quiver(args.type, args.rank, args.orientation, parser)
    table = ext_table(q)
    mods = enumerate_tilting(q)
    payload = {
        "type": args.type,
        "rank": args.rank,
        "orientation": args.orientation,
        "count": len(mods),
        "modules": [
            {"ids": list(t.summands), "labels": [table.label(s) for s in t.summands]}
            for t in mods
        ],
    }
    if args.format == "csv":
        out.write("index,ids,labels\n")
        for i, m in enumerate(payload["modules"]):
            ids = "|".join(str(s) for s in m["ids"])
            labels = "|".join(m["labels"])
            out.write(f"{i},{ids},{labels}\n")
    else:
        _print_json(payload, out)
    return 0


def _cmd_graph(args, parser, out):
    q = _build_quiver(args.type, args.rank, args.orientation, parser)
    tq = tilting_quiver(q)
    if args.format == "json":
        _print_json(tilting_quiver_json(tq), out)
    else:
        out.write(tilting_quiver_dot(tq))
    return 0


def _counts_rows(args, parser):
    rows = []
    if args.source in ("closed-form", "both"):
        v, a = closed_form_counts(args.type, args.rank)
        rows.append((v, a, "closed-form"))
    if args.source in ("enumeration", "both"):
        q = _build_quiver(args.type, args.rank, "reference", parser)
        tq = tilting_quiver(q)
        rows.append((len(tq.nodes), len(tq.arrows), "enumeration"))
    return rows


def _cmd_counts(args, parser, out):
    try:
        rows = _counts_rows(args, parser)
    except ValueError as exc:
        parser.error(str(exc))
    if args.type == "D" and args.rank == 3:
        sys.stderr.write("note: rank 3 of type D coincides with type A rank 3\n")
    if args.format == "csv":
        out.write("type,rank,vertices,arrows,source\n")
        for v, a, src in rows:
            out.write(f"{args.type},{args.rank},{v},{a},{src}\n")
    elif args.format == "json":
        _print_json(
            [
                {"type": args.type, "rank": args.rank, "vertices": v, "arrows": a, "source": src}
                for v, a, src in rows
            ],
            out,
        )
    else:
        for v, a, src in rows:
            suffix = "" if len(rows) == 1 else f" source={src}"
            out.write(f"vertices={v} arrows={a}{suffix}\n")
    return 0


def _cmd_verify(args, parser, out):
    try:
        results = run_suite(args.suite, args.max_rank)
    except ValueError as exc:
        parser.error(str(exc))
    payload = {
        "suite": args.suite,
        "max_rank": args.max_rank,
        "checks": [
            {"check": r.check, "instance": r.instance, "status": r.status}
            | ({"counterexample": r.detail} if r.detail else {})
            for r in results
        ],
        "failures": sum(1 for r in results if r.status != "pass"),
    }
    _print_json(payload, out)
    if payload["failures"]:
        failing = [c for c in payload["checks"] if c["status"] != "pass"]
        sys.stderr.write(json.dumps({"failures": failing}) + "\n")
        return 1
    return 0


def _cmd_reflect_scan(args, parser, out):
    if args.orientation != "all":
        parser.error("reflect-scan only supports --orientation all")
    if args.type == "A":
        if args.rank < 1:
            parser.error("type A needs rank >= 1")
        oriented = all_orientations("A", args.rank)
    else:
        if args.rank < 3:
            parser.error("type D needs rank >= 3")
        oriented = all_orientations("D", args.rank - 1)
    pairs = {}
    lines = []
    for bits, q in oriented:
        tq = tilting_quiver(q)
        key = (len(tq.nodes), len(tq.arrows))
        pairs.setdefault(key, 0)
        pairs[key] += 1
        text = "".join("1" if b else "0" for b in bits)
        lines.append((text, key))
    if args.format == "csv":
        out.write("orientation,vertices,arrows\n")
        for text, (v, a) in sorted(lines):
            out.write(f"{text},{v},{a}\n")
    else:
        for text, (v, a) in sorted(lines):
            out.write(f"orientation={text} vertices={v} arrows={a}\n")
        out.write(f"distinct={len(pairs)}\n")
    return 0


def build_parser():
    parser = argparse.ArgumentParser(
        prog="tiltquiver",
        description="Exact tilting-module enumeration over type A/D path algebras",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    def add_common(p, orientation_default="reference"):
        p.add_argument("--type", choices=("A", "D"), required=True)
        p.add_argument("--rank", type=int, required=True)
        p.add_argument("--orientation", default=orientation_default)

    p_enum = sub.add_parser("enumerate", help="list all basic tilting modules")
    add_common(p_enum)
    p_enum.add_argument("--format", choices=("json", "csv"), default="json")

    p_graph = sub.add_parser("graph", help="export the tilting quiver")
    add_common(p_graph)
    p_graph.add_argument("--format", choices=("dot", "json"), default="dot")

    p_counts = sub.add_parser("counts", help="closed-form vertex/arrow counts")
    p_counts.add_argument("--type", choices=("A", "D"), required=True)
    p_counts.add_argument("--rank", type=int, required=True)
    p_counts.add_argument(
        "--source", choices=("closed-form", "enumeration", "both"), default="closed-form"
    )
    p_counts.add_argument("--format", choices=("text", "csv", "json"), default="text")

    p_verify = sub.add_parser("verify", help="run the verification suites")
    p_verify.add_argument("--suite", default="all")
    p_verify.add_argument("--max-rank", type=int, default=5, dest="max_rank")

    p_scan = sub.add_parser("reflect-scan", help="counts across all orientations")
    p_scan.add_argument("--type", choices=("A", "D"), required=True)
    p_scan.add_argument("--rank", type=int, required=True)
    p_scan.add_argument("--orientation", default="all")
    p_scan.add_argument("--format", choices=("text", "csv"), default="text")

    return parser


_COMMANDS = {
    "enumerate": _cmd_enumerate,
    "graph": _cmd_graph,
    "counts": _cmd_counts,
    "verify": _cmd_verify,
    "reflect-scan": _cmd_reflect_scan,
}


def main(argv=None):
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return _COMMANDS[args.command](args, parser, sys.stdout)
    except ValueError as exc:
        sys.stderr.write(f"error: {exc}\n")
        return 2


if __name__ == "__main__":
    sys.exit(main())
