"""JSON parsing and serialization for every document the CLI exchanges.

Field names are part of the cross-tool contract and are matched exactly.
Shape problems (wrong type, missing key, stray letter sign) raise
:class:`SchemaError`; semantically invalid but well-shaped input raises the
relevant domain error from the engine that rejects it.
"""

from __future__ import annotations

from typing import Any, Mapping

from .errors import DomainError, SchemaError
from .graphs import DirectedGraph
from .retract import GLetter, GWord, PushoutInstance, RetractReport
from .vankampen import Decomposition, PbpScenario, ZRetractCertificate
from .words import Letter, Word


def _require(obj: Any, key: str, where: str) -> Any:
    if not isinstance(obj, Mapping):
        raise SchemaError(f"{where} must be a JSON object, got {type(obj).__name__}")
    if key not in obj:
        raise SchemaError(f"{where} is missing required field {key!r}")
    return obj[key]


def _id_list(value: Any, where: str) -> list:
    if not isinstance(value, list):
        raise SchemaError(f"{where} must be a JSON array")
    for x in value:
        if not isinstance(x, (str, int)) or isinstance(x, bool):
            raise SchemaError(f"{where} entries must be strings or integers")
    return value


def _id_value(value: Any, where: str) -> str:
    if not isinstance(value, (str, int)) or isinstance(value, bool):
        raise SchemaError(f"{where} must be a string or integer id")
    return str(value)


def parse_graph(obj: Any) -> DirectedGraph:
    vertices = _id_list(_require(obj, "vertices", "graph"), 'graph "vertices"')
    raw_edges = _require(obj, "edges", "graph")
    if not isinstance(raw_edges, list):
        raise SchemaError('graph "edges" must be a JSON array')
    edges = []
    for i, entry in enumerate(raw_edges):
        where = f"edge #{i}"
        edges.append(
            (
                _id_value(_require(entry, "id", where), f'{where} "id"'),
                _id_value(_require(entry, "src", where), f'{where} "src"'),
                _id_value(_require(entry, "tgt", where), f'{where} "tgt"'),
            )
        )
    return DirectedGraph(vertices, edges)


def dump_graph(g: DirectedGraph) -> dict:
    return {
        "vertices": list(g.vertices),
        "edges": [
            {"id": e, "src": g.edge_ends[e][0], "tgt": g.edge_ends[e][1]}
            for e in g.edge_ids
        ],
    }


def _parse_sign(value: Any, where: str) -> int:
    if value not in (1, -1) or isinstance(value, bool):
        raise SchemaError(f'{where} "sign" must be 1 or -1')
    return value


def parse_word(obj: Any, host: DirectedGraph) -> Word:
    source = _id_value(_require(obj, "source", "word"), 'word "source"')
    target = _id_value(_require(obj, "target", "word"), 'word "target"')
    raw = _require(obj, "letters", "word")
    if not isinstance(raw, list):
        raise SchemaError('word "letters" must be a JSON array')
    letters = []
    for i, entry in enumerate(raw):
        where = f"letter #{i}"
        letters.append(
            Letter(
                _id_value(_require(entry, "edge", where), f'{where} "edge"'),
                _parse_sign(_require(entry, "sign", where), where),
            )
        )
    try:
        return Word(host, source, target, letters)
    except DomainError:
        raise
    except ValueError as exc:
        raise SchemaError(str(exc)) from exc


def dump_word(w: Word) -> dict:
    return {
        "source": w.source,
        "target": w.target,
        "letters": [{"edge": l.edge, "sign": l.sign} for l in w.letters],
    }


def parse_instance(obj: Any) -> PushoutInstance:
    objects = _id_list(_require(obj, "objects", "instance"), 'instance "objects"')
    graph_a = parse_graph(_require(obj, "graph_a", "instance"))
    graph_b = parse_graph(_require(obj, "graph_b", "instance"))
    raw_loops = obj.get("c_loops", {})
    if not isinstance(raw_loops, Mapping):
        raise SchemaError('instance "c_loops" must be a JSON object')
    c_loops = {
        _id_value(v, 'c_loops key'): _id_list(ids, f"c_loops[{v!r}]")
        for v, ids in raw_loops.items()
    }
    return PushoutInstance(objects, graph_a, graph_b, c_loops)


def dump_instance(inst: PushoutInstance) -> dict:
    return {
        "objects": list(inst.objects),
        "graph_a": dump_graph(inst.graph_a),
        "graph_b": dump_graph(inst.graph_b),
        "c_loops": {v: list(ids) for v, ids in inst.c_loops},
    }


def parse_gword(obj: Any, instance: PushoutInstance) -> GWord:
    source = _id_value(_require(obj, "source", "gword"), 'gword "source"')
    target = _id_value(_require(obj, "target", "gword"), 'gword "target"')
    raw = _require(obj, "letters", "gword")
    if not isinstance(raw, list):
        raise SchemaError('gword "letters" must be a JSON array')
    letters = []
    for i, entry in enumerate(raw):
        where = f"letter #{i}"
        side = _require(entry, "side", where)
        if side not in ("A", "B", "C"):
            raise SchemaError(f'{where} "side" must be "A", "B", or "C"')
        letters.append(
            GLetter(
                side,
                _id_value(_require(entry, "edge", where), f'{where} "edge"'),
                _parse_sign(_require(entry, "sign", where), where),
            )
        )
    return GWord(instance, source, target, letters)


def dump_gword(g: GWord) -> dict:
    return {
        "source": g.source,
        "target": g.target,
        "letters": [
            {"side": l.side, "edge": l.edge, "sign": l.sign} for l in g.letters
        ],
    }


def parse_decomposition(obj: Any) -> Decomposition:
    space = parse_graph(_require(obj, "space", "decomposition"))
    u = _id_list(_require(obj, "u", "decomposition"), 'decomposition "u"')
    v = _id_list(_require(obj, "v", "decomposition"), 'decomposition "v"')
    return Decomposition(space, u, v)


def parse_scenario(obj: Any) -> PbpScenario:
    space = parse_graph(_require(obj, "space", "scenario"))
    return PbpScenario(
        space,
        _id_list(_require(obj, "d", "scenario"), 'scenario "d"'),
        _id_list(_require(obj, "e", "scenario"), 'scenario "e"'),
        _id_value(_require(obj, "a", "scenario"), 'scenario "a"'),
        _id_value(_require(obj, "b", "scenario"), 'scenario "b"'),
    )


def dump_report(report: RetractReport) -> dict:
    return {
        "n_a": report.n_a,
        "n_b": report.n_b,
        "n_c": report.n_c,
        "k": report.k,
        "forest_x": list(report.forest_x.tree_edge_ids),
        "forest_y": list(report.forest_y.tree_edge_ids),
        "w": dump_graph(report.w),
        "edge_origins": {
            wid: {"side": side, "edge": orig}
            for wid, (side, orig) in sorted(report.edge_origins.items())
        },
        "per_component_ranks": [
            {"component": list(block), "rank": rank}
            for block, rank in report.per_component_ranks
        ],
    }


def dump_certificate(cert: ZRetractCertificate) -> dict:
    return {
        "basepoints": [
            {"component": list(block), "basepoint": point}
            for block, point in cert.basepoints
        ],
        "k": cert.report.k,
        "loop_in_space": dump_word(cert.loop_in_space),
        "retract_image": dump_word(cert.retract_image),
    }
