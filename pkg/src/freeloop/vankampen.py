"""Finite 1-complex models: decompositions, separation predicates, and
Z-retract certificates.

A space is a finite graph.  A two-piece decomposition (induced subgraphs U, V
covering all vertices and edges) yields a pushout instance over basepoints,
one per component of U intersect V.  When the instance's free retract has a
witness loop, it translates back to an explicit reduced loop in the space,
certifying that the space's fundamental group retracts onto Z.

The Phragmen-Brouwer predicates feed this pipeline: when disjoint vertex sets
D, E each fail to separate a from b but their union separates, the
complements U = X - D, V = X - E form such a decomposition and the
certificate is guaranteed to exist.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import Iterable, Mapping, Sequence

from .errors import (
    ComponentWithoutBasepoint,
    DeletedSetsAdjacent,
    Disconnected,
    EdgeAcrossPieces,
    EmptyIntersection,
    NotACover,
    NotDistinct,
    PbiHolds,
    PieceMissesIntersection,
    PointInDeletedSet,
    SetsNotDisjoint,
    UnknownVertex,
)
from .graphs import DirectedGraph, as_id, components, spanning_forest
from .retract import PushoutInstance, RetractReport, build_retract, include_f, witness
from .words import Letter, Word, invert, reduce, rehost, tree_path

# A space is just its 1-skeleton; DirectedGraph already enforces every
# invariant a finite 1-complex model needs.
SpaceGraph = DirectedGraph


def _vertex_subset(g: DirectedGraph, vs: Iterable[str]) -> tuple[str, ...]:
    out = sorted({as_id(v) for v in vs})
    for v in out:
        if not g.has_vertex(v):
            raise UnknownVertex(v)
    return tuple(out)


def induced_subgraph(space: SpaceGraph, vertex_set: Iterable[str]) -> DirectedGraph:
    """The full subgraph on ``vertex_set``: every edge with both ends inside."""
    vs = _vertex_subset(space, vertex_set)
    keep = set(vs)
    edges = [
        (e, s, t)
        for e in space.edge_ids
        for s, t in (space.edge_ends[e],)
        if s in keep and t in keep
    ]
    return DirectedGraph(vs, edges)


class Decomposition:
    """Two vertex subsets covering the space, with no edge straddling them.

    The pieces are the induced subgraphs on ``u_vertices`` and ``v_vertices``;
    the straddle rule makes them cover every edge, so the space is their
    union as a graph.
    """

    def __init__(self, space: SpaceGraph, u_vertices: Iterable[str], v_vertices: Iterable[str]):
        u = _vertex_subset(space, u_vertices)
        v = _vertex_subset(space, v_vertices)
        u_set, v_set = set(u), set(v)
        for vertex in space.vertices:
            if vertex not in u_set and vertex not in v_set:
                raise NotACover(f"vertex {vertex!r} is in neither piece")
        for e in space.edge_ids:
            s, t = space.edge_ends[e]
            if not ((s in u_set and t in u_set) or (s in v_set and t in v_set)):
                raise EdgeAcrossPieces(e)
        self.space = space
        self.u_vertices = u
        self.v_vertices = v
        self.piece_u = induced_subgraph(space, u)
        self.piece_v = induced_subgraph(space, v)
        self.intersection = induced_subgraph(space, u_set & v_set)

    def __eq__(self, other) -> bool:
        if not isinstance(other, Decomposition):
            return NotImplemented
        return (
            self.space == other.space
            and self.u_vertices == other.u_vertices
            and self.v_vertices == other.v_vertices
        )

    def __hash__(self) -> int:
        return hash((self.space, self.u_vertices, self.v_vertices))

    def __repr__(self) -> str:
        return (
            f"Decomposition(space={self.space.v_count}v/{self.space.e_count}e, "
            f"|u|={len(self.u_vertices)}, |v|={len(self.v_vertices)})"
        )


class PbpScenario:
    """Disjoint deleted vertex sets D, E and two marked points outside them.

    An edge joining D to E is rejected: subdividing that edge (inserting a
    midpoint vertex) produces an equivalent space where the sets have
    disjoint neighborhoods, which is what the complement construction needs.
    """

    def __init__(
        self,
        space: SpaceGraph,
        d_set: Iterable[str],
        e_set: Iterable[str],
        a: str,
        b: str,
    ):
        d = _vertex_subset(space, d_set)
        e = _vertex_subset(space, e_set)
        overlap = set(d) & set(e)
        if overlap:
            raise SetsNotDisjoint(f"sets share vertices {sorted(overlap)!r}")
        d_idx, e_idx = set(d), set(e)
        for eid in space.edge_ids:
            s, t = space.edge_ends[eid]
            if (s in d_idx and t in e_idx) or (s in e_idx and t in d_idx):
                raise DeletedSetsAdjacent(eid)
        a, b = as_id(a), as_id(b)
        for point in (a, b):
            if not space.has_vertex(point):
                raise UnknownVertex(point)
            if point in d_idx or point in e_idx:
                raise PointInDeletedSet(point)
        if a == b:
            raise NotDistinct(f"marked points must be distinct, got {a!r} twice")
        self.space = space
        self.d_set = d
        self.e_set = e
        self.a = a
        self.b = b

    def __repr__(self) -> str:
        return (
            f"PbpScenario(|d|={len(self.d_set)}, |e|={len(self.e_set)}, "
            f"a={self.a!r}, b={self.b!r})"
        )


def separates(space: SpaceGraph, d_set: Iterable[str], a: str, b: str) -> bool:
    """Whether a and b land in distinct components once ``d_set`` is deleted."""
    d = _vertex_subset(space, d_set)
    deleted = set(d)
    a, b = as_id(a), as_id(b)
    for point in (a, b):
        if not space.has_vertex(point):
            raise UnknownVertex(point)
        if point in deleted:
            raise PointInDeletedSet(point)
    rest = [v for v in space.vertices if v not in deleted]
    return not components(induced_subgraph(space, rest)).same_block(a, b)


def pbi_fails(sc: PbpScenario) -> bool:
    """True when neither deleted set separates the marked points but their
    union does: the conjunction whose truth refutes the separation property."""
    if separates(sc.space, sc.d_set, sc.a, sc.b):
        return False
    if separates(sc.space, sc.e_set, sc.a, sc.b):
        return False
    return separates(sc.space, sc.d_set + sc.e_set, sc.a, sc.b)


@dataclass(frozen=True)
class GeneratorPresentation:
    """Generating graph over the basepoints plus the expansion of each
    generator as a Word in the piece it came from."""

    graph: DirectedGraph
    expansions: Mapping[str, Word] = field(compare=False)


def groupoid_generators(
    piece: DirectedGraph,
    basepoints: Iterable[str],
    tie_break: Sequence[str] | None = None,
) -> GeneratorPresentation:
    """Generators for the path classes of ``piece`` between the basepoints.

    Per component, the smallest basepoint is the root; each other basepoint s
    gets a tree-path generator ``t:s`` (root to s), and each non-forest edge e
    gets a loop generator ``g:e`` at the root (tree path out, e, tree path
    back).  These generate every basepoint-to-basepoint path class, and the
    output graph has exactly as many components as the piece.
    """
    points = _vertex_subset(piece, basepoints)
    point_set = set(points)
    parts = components(piece)
    roots: dict[tuple[str, ...], str] = {}
    for block in parts.blocks:
        inside = [v for v in block if v in point_set]
        if not inside:
            raise ComponentWithoutBasepoint(
                f"component {block!r} of the piece contains no basepoint"
            )
        roots[block] = inside[0]
    forest = spanning_forest(piece, tie_break)
    tree = forest.tree_edges
    edges: list[tuple[str, str, str]] = []
    expansions: dict[str, Word] = {}
    for s in points:
        root = roots[parts.blocks[parts.block_of(s)]]
        if s == root:
            continue
        gen = f"t:{s}"
        edges.append((gen, root, s))
        expansions[gen] = tree_path(forest, root, s)
    for e in piece.edge_ids:
        if e in tree:
            continue
        src, tgt = piece.edge_ends[e]
        root = roots[parts.blocks[parts.block_of(src)]]
        gen = f"g:{e}"
        edges.append((gen, root, root))
        out = tree_path(forest, root, src)
        back = tree_path(forest, tgt, root)
        expansions[gen] = reduce(
            piece, root, list(out.letters) + [Letter(e, 1)] + list(back.letters)
        )
    graph = DirectedGraph(points, edges)
    assert len(components(graph)) == len(parts)
    return GeneratorPresentation(graph, expansions)


def decomposition_to_instance(
    dec: Decomposition, tie_break: Sequence[str] | None = None
) -> tuple[PushoutInstance, dict[str, dict[str, Word]]]:
    """Build the pushout instance of a decomposition over canonical basepoints.

    Basepoints: the smallest vertex of each component of the intersection.
    Side A presents the U piece, side B the V piece, and the C loops are the
    intersection's own non-forest edges (its vertex-group generators).  The
    returned tables translate every instance generator, by side, to its
    expansion as a Word over the space.
    """
    inter = dec.intersection
    if inter.v_count == 0:
        raise EmptyIntersection("the pieces share no vertex")
    inter_parts = components(inter)
    points = tuple(block[0] for block in inter_parts.blocks)
    point_set = set(inter.vertices)
    for name, piece in (("U", dec.piece_u), ("V", dec.piece_v)):
        for block in components(piece).blocks:
            if not any(v in point_set for v in block):
                raise PieceMissesIntersection(
                    f"component {block!r} of piece {name} misses the intersection"
                )
    pres_a = groupoid_generators(dec.piece_u, points, tie_break)
    pres_b = groupoid_generators(dec.piece_v, points, tie_break)
    forest_i = spanning_forest(inter, tie_break)
    c_loops: dict[str, list[str]] = {}
    c_words: dict[str, Word] = {}
    for e in inter.edge_ids:
        if e in forest_i.tree_edges:
            continue
        src, tgt = inter.edge_ends[e]
        block = inter_parts.blocks[inter_parts.block_of(src)]
        s = block[0]
        c_loops.setdefault(s, []).append(e)
        out = tree_path(forest_i, s, src)
        back = tree_path(forest_i, tgt, s)
        c_words[e] = reduce(
            inter, s, list(out.letters) + [Letter(e, 1)] + list(back.letters)
        )
    instance = PushoutInstance(points, pres_a.graph, pres_b.graph, c_loops)
    translations = {
        "A": {g: rehost(w, dec.space) for g, w in pres_a.expansions.items()},
        "B": {g: rehost(w, dec.space) for g, w in pres_b.expansions.items()},
        "C": {g: rehost(w, dec.space) for g, w in c_words.items()},
    }
    return instance, translations


@dataclass(frozen=True, eq=False)
class ZRetractCertificate:
    """An explicit noncontractible loop in the space plus its free image.

    ``loop_in_space`` is a reduced closed edge-path at a basepoint;
    ``retract_image`` is the corresponding nonempty reduced word over the
    retract graph W.  Either one alone certifies nontriviality, so a checker
    needs only free reduction to validate the claim.
    """

    report: RetractReport
    basepoints: tuple[tuple[tuple[str, ...], str], ...]
    loop_in_space: Word
    retract_image: Word


def _expand_to_space(
    translations: dict[str, dict[str, Word]], space: SpaceGraph, gword
) -> Word:
    raw: list[Letter] = []
    for letter in gword.letters:
        expansion = translations[letter.side][letter.edge]
        if letter.sign == -1:
            expansion = invert(expansion)
        raw.extend(expansion.letters)
    return reduce(space, gword.source, raw)


def detect_z_retract(
    dec: Decomposition,
    tie_break: Sequence[str] | None = None,
    prefer: tuple[str, str] | None = None,
) -> ZRetractCertificate | None:
    """Search the decomposition for a witness pair and certify it in the space.

    Scans basepoint pairs in canonical order (after ``prefer``, when given)
    for one joined inside both pieces; absent such a pair there is nothing to
    certify and the result is None.
    """
    if len(components(dec.space)) != 1:
        raise Disconnected("the space is not connected")
    instance, translations = decomposition_to_instance(dec, tie_break)
    report = build_retract(instance, tie_break)
    parts_a = components(instance.graph_a)
    parts_b = components(instance.graph_b)
    objs = instance.objects
    pairs: list[tuple[str, str]] = []
    if prefer is not None:
        pairs.append((as_id(prefer[0]), as_id(prefer[1])))
    pairs.extend(
        (objs[i], objs[j]) for i in range(len(objs)) for j in range(i + 1, len(objs))
    )
    for a, b in pairs:
        if a == b or a not in objs or b not in objs:
            continue
        if not (parts_a.same_block(a, b) and parts_b.same_block(a, b)):
            continue
        loop = witness(report, a, b)
        gword = include_f(report, loop)
        loop_in_space = _expand_to_space(translations, dec.space, gword)
        assert len(loop_in_space) > 0, "witness expansion collapsed in the space"
        inter_blocks = components(dec.intersection).blocks
        basepoints = tuple((block, block[0]) for block in inter_blocks)
        return ZRetractCertificate(
            report=report,
            basepoints=basepoints,
            loop_in_space=loop_in_space,
            retract_image=loop,
        )
    return None


def pbp_to_decomposition(sc: PbpScenario) -> Decomposition:
    """Turn a separation-property failure into the decomposition it induces.

    U is the complement of D and V the complement of E.  Failure of the
    conjunction gives exactly the witness preconditions at the marked
    points' intersection components, so a certificate always follows.
    """
    if not pbi_fails(sc):
        raise PbiHolds(
            "neither-separates-but-union-does fails; no decomposition is induced"
        )
    d, e = set(sc.d_set), set(sc.e_set)
    u = [v for v in sc.space.vertices if v not in d]
    v = [w for w in sc.space.vertices if w not in e]
    dec = Decomposition(sc.space, u, v)
    assert not components(dec.intersection).same_block(sc.a, sc.b)
    assert components(dec.piece_u).same_block(sc.a, sc.b)
    assert components(dec.piece_v).same_block(sc.a, sc.b)
    return dec


def certificate_basepoints_for(dec: Decomposition, a: str, b: str) -> tuple[str, str]:
    """Basepoints of the intersection components containing a and b."""
    parts = components(dec.intersection)
    a, b = as_id(a), as_id(b)
    return (
        parts.blocks[parts.block_of(a)][0],
        parts.blocks[parts.block_of(b)][0],
    )
