"""Command-line interface.

Verbs map one-to-one onto the library surface: ``build`` (group to graph
JSON/DOT), ``analyze`` (overfull and core report), ``classify`` (theorem
prediction), ``color`` (witness generation), ``verify`` (graph + coloring to
verification report), and ``survey`` (catalog sweep). The exit code is
nonzero exactly when a verification or consistency check fails.
"""

from __future__ import annotations

import argparse
import json
import os
import sys
from pathlib import Path

from .coloring import (
    coloring_to_csv,
    coloring_to_json,
    parse_coloring_csv,
    parse_coloring_json,
    verify_assignment,
    verify_proper,
)
from .exchange import STRATEGIES, color_power_graph
from .groups import GroupSpecError, GroupTableError, construct_group
from .overfull import core_class1_check, deficiency_report, predict_class
from .powergraph import build_power_graph, graph_from_json, graph_to_dot, graph_to_json
from .toolkit import generate_catalog, run_survey

SEED_ENV = "POWERCHROMA_SEED"


def _default_seed() -> int:
    try:
        return int(os.environ.get(SEED_ENV, "0"))
    except ValueError:
        return 0


def _emit(text: str, out: str | None) -> None:
    if out:
        Path(out).write_text(text, encoding="utf-8")
    else:
        sys.stdout.write(text if text.endswith("\n") else text + "\n")


def _cmd_build(args) -> int:
    graph = build_power_graph(construct_group(args.spec))
    if args.dot:
        _emit(graph_to_dot(graph, display_labels=args.display_labels), args.dot)
    text = graph_to_json(graph)
    _emit(text, args.out)
    return 0


def _cmd_analyze(args) -> int:
    group = construct_group(args.spec)
    graph = build_power_graph(group)
    report = deficiency_report(graph)
    core = core_class1_check(graph)
    payload = {
        "spec": group.label,
        "order": group.order,
        "n": report.n,
        "edge_count": report.edge_count,
        "max_degree": report.max_degree,
        "deficiency": report.deficiency,
        "budget": report.budget,
        "overfull": report.overfull,
        "core_condition": core.condition if core else None,
        "core_description": core.description if core else None,
    }
    _emit(json.dumps(payload, indent=2, sort_keys=True), args.out)
    return 0


def _cmd_classify(args) -> int:
    group = construct_group(args.spec)
    prediction = predict_class(group)
    payload = {
        "spec": group.label,
        "order": group.order,
        "class": prediction.class_label,
        "reason": prediction.reason,
        "is_cyclic": prediction.facts.is_cyclic,
        "odd": prediction.facts.odd,
        "prime_power": prediction.facts.prime_power,
    }
    _emit(json.dumps(payload, indent=2, sort_keys=True), args.out)
    return 0


def _cmd_color(args) -> int:
    group = construct_group(args.spec)
    result = color_power_graph(group, strategy=args.strategy, seed=args.seed)
    check = verify_proper(result.graph, result.coloring)
    payload = {
        "spec": group.label,
        "order": group.order,
        "class": result.class_label,
        "strategy": result.strategy,
        "colors_used": result.colors_used,
        "max_degree": deficiency_report(result.graph).max_degree,
        "verified": check.valid,
        "overfull_certificate": (
            {
                "edge_count": result.certificate.edge_count,
                "max_degree": result.certificate.max_degree,
                "capacity": result.certificate.max_degree * (result.certificate.n // 2),
            }
            if result.certificate
            else None
        ),
    }
    if args.csv:
        _emit(coloring_to_csv(result.coloring), args.csv)
    if args.json:
        _emit(coloring_to_json(result.coloring), args.json)
    _emit(json.dumps(payload, indent=2, sort_keys=True), args.out)
    if not check.valid or result.class_label == "indeterminate":
        return 1
    return 0


def _cmd_verify(args) -> int:
    graph = graph_from_json(Path(args.graph).read_text(encoding="utf-8"))
    text = Path(args.coloring).read_text(encoding="utf-8")
    if args.coloring.endswith(".json"):
        _, palette, mapping = parse_coloring_json(text)
    else:
        palette, mapping = parse_coloring_csv(text, graph.n)
    report = verify_assignment(graph, mapping, palette)
    payload = {
        "n": report.n,
        "palette": report.palette_size,
        "colored": report.colored_count,
        "distinct_colors": report.distinct_colors,
        "valid": report.valid,
        "detail": report.describe(),
    }
    _emit(json.dumps(payload, indent=2, sort_keys=True), args.out)
    return 0 if report.valid else 1


def _cmd_survey(args) -> int:
    catalog = generate_catalog(args.max_order)
    result = run_survey(
        catalog,
        witness=args.witness,
        oracle_max_order=args.oracle_max_order,
        seed=args.seed,
        jobs=args.jobs,
        extra_specs=tuple(args.extra or ()),
    )
    _emit(result.to_json(include_timing=args.timing), args.out)
    return 0 if result.consistent else 1


def main(argv=None) -> int:
    parser = argparse.ArgumentParser(
        prog="powerchroma",
        description="Power graphs of finite groups: overfullness, edge-chromatic "
        "class, and verified edge colorings.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    spec_help = "group spec: cyclic:n | dihedral:n | quaternion:m | product:... | table:file"

    p = sub.add_parser("build", help="construct a power graph and emit JSON (and DOT)")
    p.add_argument("spec", help=spec_help)
    p.add_argument("--out", help="write graph JSON here instead of stdout")
    p.add_argument("--dot", help="also write a DOT rendering to this path")
    p.add_argument("--display-labels", action="store_true", help="label vertices 1..n in DOT")
    p.set_defaults(func=_cmd_build)

    p = sub.add_parser("analyze", help="overfullness, deficiency, and core report")
    p.add_argument("spec", help=spec_help)
    p.add_argument("--out")
    p.set_defaults(func=_cmd_analyze)

    p = sub.add_parser("classify", help="predict class 1 or class 2")
    p.add_argument("spec", help=spec_help)
    p.add_argument("--out")
    p.set_defaults(func=_cmd_classify)

    p = sub.add_parser("color", help="produce and verify a coloring witness")
    p.add_argument("spec", help=spec_help)
    p.add_argument("--strategy", choices=STRATEGIES, default="auto")
    p.add_argument("--seed", type=int, default=_default_seed())
    p.add_argument("--csv", help="write the coloring table here")
    p.add_argument("--json", help="write the flat coloring JSON here")
    p.add_argument("--out", help="write the summary JSON here instead of stdout")
    p.set_defaults(func=_cmd_color)

    p = sub.add_parser("verify", help="check a coloring file against a graph file")
    p.add_argument("--graph", required=True, help="graph JSON path")
    p.add_argument("--coloring", required=True, help="coloring CSV or JSON path")
    p.add_argument("--out")
    p.set_defaults(func=_cmd_verify)

    p = sub.add_parser("survey", help="classify a whole catalog of groups")
    p.add_argument("--max-order", type=int, required=True)
    p.add_argument("--oracle-max-order", type=int, default=0)
    p.add_argument("--witness", action="store_true", help="generate and verify colorings")
    p.add_argument("--seed", type=int, default=_default_seed())
    p.add_argument("--jobs", type=int, default=1)
    p.add_argument("--timing", action="store_true", help="include per-group timings")
    p.add_argument("--extra", action="append", metavar="SPEC",
                   help="extra group spec to include (repeatable), e.g. table:file")
    p.add_argument("--out")
    p.set_defaults(func=_cmd_survey)

    args = parser.parse_args(argv)
    try:
        return args.func(args)
    except (GroupSpecError, GroupTableError, ValueError, OSError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 1


if __name__ == "__main__":
    raise SystemExit(main())
