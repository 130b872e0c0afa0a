"""Command-line front end: parse JSON inputs, run the engines, report.

Exit codes: 0 on success, 1 on parse or IO failure, 2 on a domain error
(violated precondition) with the error's code on stderr.  JSON output is
printed with sorted keys and canonical id order, so identical inputs produce
byte-identical bytes.
"""

from __future__ import annotations

import argparse
import json
import sys
from typing import Any, Sequence

from .dot import graph_dot
from .errors import DomainError, SchemaError
from .graphs import components, graph_pushout_with_origins, spanning_forest
from .jsonio import (
    dump_certificate,
    dump_instance,
    dump_report,
    dump_word,
    parse_decomposition,
    parse_gword,
    parse_graph,
    parse_instance,
    parse_scenario,
)
from .retract import build_retract, rho, theorem_rank, witness
from .vankampen import (
    certificate_basepoints_for,
    decomposition_to_instance,
    detect_z_retract,
    pbi_fails,
    pbp_to_decomposition,
)

COMMANDS = (
    "components",
    "forest",
    "pushout-rank",
    "retract",
    "rho",
    "witness",
    "vk-instance",
    "certify",
    "pbp-check",
)


def _build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="freeloop",
        description="free-groupoid retracts of graph pushouts, and their loops",
    )
    sub = parser.add_subparsers(dest="command", required=True)
    commands = {
        "components": "connected components of a graph",
        "forest": "deterministic spanning forest of a graph",
        "pushout-rank": "rank of the free retract of a pushout instance",
        "retract": "full retract report for a pushout instance",
        "rho": "retract a tagged word to the free groupoid on W",
        "witness": "nontrivial witness loop for a pair of objects",
        "vk-instance": "pushout instance derived from a decomposition",
        "certify": "search a decomposition for a Z-retract certificate",
        "pbp-check": "test a separation scenario and certify its failure",
    }
    for name, help_text in commands.items():
        p = sub.add_parser(name, help=help_text)
        p.add_argument("input", help="path to the input JSON document")
        p.add_argument(
            "--tie-break",
            default="lex",
            help='"lex" (default) or a comma-separated edge-id priority list',
        )
        p.add_argument("--output", choices=("text", "json"), default="text")
        p.add_argument("--emit-dot", metavar="PATH", help="also write a DOT rendering")
        if name == "witness":
            p.add_argument("--a", required=True, help="first object")
            p.add_argument("--b", required=True, help="second object")
        if name == "rho":
            p.add_argument("--word", required=True, help="path to the tagged-word JSON")
    return parser


def _load(path: str) -> Any:
    with open(path, "r", encoding="utf-8") as fh:
        return json.load(fh)


def _tie_break(flag: str) -> list[str] | None:
    if flag == "lex":
        return None
    return [part for part in flag.split(",") if part]


def _instance_roles(inst, report):
    """Union graph of both sides plus role sets for DOT styling."""
    union, origins = graph_pushout_with_origins(inst.graph_a, inst.graph_b, inst.objects)
    rev = {orig: wid for wid, orig in origins.items()}
    red = {rev[("A", e)] for e in report.forest_x.tree_edge_ids}
    blue = {rev[("B", e)] for e in report.forest_y.tree_edge_ids}
    return union, rev, red, blue


def _w_letters_on_union(report, rev, word) -> set[str]:
    return {rev[report.origin_of(l.edge)] for l in word.letters}


def _decomposition_roles(dec):
    u_only = set(dec.piece_u.edge_ids) - set(dec.piece_v.edge_ids)
    v_only = set(dec.piece_v.edge_ids) - set(dec.piece_u.edge_ids)
    return u_only, v_only


def _fmt_block(block) -> str:
    return "{" + ", ".join(block) + "}"


def _run(args) -> tuple[Any, str, str | None]:
    """Dispatch one command; returns (json payload, text report, DOT or None)."""
    tie = _tie_break(args.tie_break)
    doc = _load(args.input)
    if args.command == "components":
        g = parse_graph(doc)
        parts = components(g)
        text = [f"{len(parts)} component(s)"]
        text += [f"  {_fmt_block(block)}" for block in parts.blocks]
        return (
            {"components": [list(block) for block in parts.blocks]},
            "\n".join(text),
            graph_dot(g),
        )
    if args.command == "forest":
        g = parse_graph(doc)
        forest = spanning_forest(g, tie)
        ids = list(forest.tree_edge_ids)
        text = [f"spanning forest: {len(ids)} tree edge(s) of {g.e_count}"]
        text += [f"  {e}" for e in ids]
        return ({"tree_edges": ids}, "\n".join(text), graph_dot(g, red_edges=ids))
    if args.command == "pushout-rank":
        inst = parse_instance(doc)
        k = theorem_rank(inst)
        report = build_retract(inst, tie)
        union, _, red, blue = _instance_roles(inst, report)
        text = f"k = {k}\nn_a = {report.n_a}, n_b = {report.n_b}, n_c = {report.n_c}"
        return (
            {"k": k, "n_a": report.n_a, "n_b": report.n_b, "n_c": report.n_c},
            text,
            graph_dot(union, red_edges=red, blue_edges=blue),
        )
    if args.command == "retract":
        inst = parse_instance(doc)
        report = build_retract(inst, tie)
        union, _, red, blue = _instance_roles(inst, report)
        text = [
            "k = n/a (disconnected)" if report.k is None else f"k = {report.k}",
            f"n_a = {report.n_a}, n_b = {report.n_b}, n_c = {report.n_c}",
            f"forest X: {', '.join(report.forest_x.tree_edge_ids) or '(empty)'}",
            f"forest Y: {', '.join(report.forest_y.tree_edge_ids) or '(empty)'}",
            f"W: {report.w.v_count} vertices, {report.w.e_count} edges",
        ]
        text += [
            f"  component {_fmt_block(block)}: rank {rank}"
            for block, rank in report.per_component_ranks
        ]
        return (dump_report(report), "\n".join(text), graph_dot(union, red, blue))
    if args.command == "rho":
        inst = parse_instance(doc)
        gword = parse_gword(_load(args.word), inst)
        report = build_retract(inst, tie)
        image = rho(report, gword)
        union, rev, red, blue = _instance_roles(inst, report)
        bold = _w_letters_on_union(report, rev, image)
        text = f"rho: {image.source} -> {image.target}: {image}"
        return (dump_word(image), text, graph_dot(union, red, blue, bold))
    if args.command == "witness":
        inst = parse_instance(doc)
        report = build_retract(inst, tie)
        loop = witness(report, args.a, args.b)
        union, rev, red, blue = _instance_roles(inst, report)
        bold = _w_letters_on_union(report, rev, loop)
        text = f"witness loop at {loop.source}: {loop} (length {len(loop)})"
        return (dump_word(loop), text, graph_dot(union, red, blue, bold))
    if args.command == "vk-instance":
        dec = parse_decomposition(doc)
        inst, translations = decomposition_to_instance(dec, tie)
        u_only, v_only = _decomposition_roles(dec)
        n_loops = sum(len(ids) for _, ids in inst.c_loops)
        text = [
            f"objects: {', '.join(inst.objects)}",
            f"side A: {inst.graph_a.e_count} generator(s); "
            f"side B: {inst.graph_b.e_count} generator(s); "
            f"C loops: {n_loops}",
        ]
        payload = {
            "instance": dump_instance(inst),
            "translations": {
                side: {gen: dump_word(w) for gen, w in sorted(table.items())}
                for side, table in translations.items()
            },
        }
        return (payload, "\n".join(text), graph_dot(dec.space, u_only, v_only))
    if args.command == "certify":
        dec = parse_decomposition(doc)
        cert = detect_z_retract(dec, tie)
        u_only, v_only = _decomposition_roles(dec)
        if cert is None:
            return (
                {"certificate": None},
                "no certificate: no basepoint pair is joined inside both pieces",
                graph_dot(dec.space, u_only, v_only),
            )
        loop = cert.loop_in_space
        text = (
            f"Z-retract certificate at {loop.source}: "
            f"{loop} (length {len(loop)}); k = {cert.report.k}"
        )
        bold = {l.edge for l in loop.letters}
        return (
            {"certificate": dump_certificate(cert)},
            text,
            graph_dot(dec.space, u_only, v_only, bold),
        )
    if args.command == "pbp-check":
        sc = parse_scenario(doc)
        if not pbi_fails(sc):
            return (
                {"pbi_fails": False, "certificate": None},
                "PBI holds; no certificate.",
                graph_dot(sc.space),
            )
        dec = pbp_to_decomposition(sc)
        prefer = certificate_basepoints_for(dec, sc.a, sc.b)
        cert = detect_z_retract(dec, tie, prefer=prefer)
        assert cert is not None, "separation failure must yield a certificate"
        loop = cert.loop_in_space
        u_only, v_only = _decomposition_roles(dec)
        bold = {l.edge for l in loop.letters}
        text = (
            "PBI fails; Z-retract certificate emitted\n"
            f"loop at {loop.source}: {loop} (length {len(loop)}); k = {cert.report.k}"
        )
        return (
            {"pbi_fails": True, "certificate": dump_certificate(cert)},
            text,
            graph_dot(sc.space, u_only, v_only, bold),
        )
    raise AssertionError(f"unhandled command {args.command!r}")


def main(argv: Sequence[str] | None = None) -> int:
    args = _build_parser().parse_args(argv)
    try:
        payload, text, dot = _run(args)
        if args.emit_dot and dot is not None:
            with open(args.emit_dot, "w", encoding="utf-8") as fh:
                fh.write(dot)
    except SchemaError as exc:
        print(f"SchemaError: {exc}", file=sys.stderr)
        return 1
    except json.JSONDecodeError as exc:
        print(f"ParseError: {exc}", file=sys.stderr)
        return 1
    except OSError as exc:
        print(f"IOError: {exc}", file=sys.stderr)
        return 1
    except DomainError as exc:
        print(f"{exc.code}: {exc}", file=sys.stderr)
        return 2
    if args.output == "json":
        sys.stdout.write(json.dumps(payload, sort_keys=True, indent=2, ensure_ascii=False) + "\n")
    else:
        print(text)
    return 0


if __name__ == "__main__":
    raise SystemExit(main())
