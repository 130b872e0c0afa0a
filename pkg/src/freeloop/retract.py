"""Free-groupoid retracts of groupoid pushouts presented over a common object set.

Given a span A <- C -> B in generating-graph form (C totally disconnected,
both maps bijective on objects), the pushout G retracts onto the free
groupoid on W, where W is the graph pushout of spanning forests of the two
sides.  When G is connected the vertex groups of that retract are free of
rank ``k = n_C - n_A - n_B + 1``, and a pair of objects joined on both sides
yields an explicit nontrivial witness loop, certifying rank >= 1.

Equality in G itself is never decided: nontriviality is always certified on
the retract side, where free reduction solves the word problem, and carried
back along the retraction.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import Iterable, Mapping, Sequence

from .errors import (
    Disconnected,
    DuplicateId,
    HostMismatch,
    NoArrowInA,
    NoArrowInB,
    NotComposable,
    NotDistinct,
    UnknownLetter,
    UnknownVertex,
    VertexSetMismatch,
)
from .graphs import (
    DirectedGraph,
    Forest,
    as_id,
    components,
    euler_ranks,
    graph_pushout_with_origins,
    spanning_forest,
    spanning_forest_containing,
)
from .words import FreeGroupElement, Letter, Word, compose, loop_coordinates, reduce

SIDES = ("A", "B", "C")


class PushoutInstance:
    """A span A <- C -> B over a common object set, in generating-graph form.

    ``graph_a`` and ``graph_b`` generate the groupoids A and B; their vertex
    sets must equal ``objects``.  ``c_loops`` lists loop generators of C's
    vertex groups, keyed by object; C has no other arrows (it is totally
    disconnected), so this is all of C's presentation data.
    """

    def __init__(
        self,
        objects: Iterable[str],
        graph_a: DirectedGraph,
        graph_b: DirectedGraph,
        c_loops: Mapping[str, Iterable[str]] | None = None,
    ):
        objs = sorted({as_id(v) for v in objects})
        if not objs:
            raise ValueError("instance needs at least one object")
        if list(graph_a.vertices) != objs:
            raise VertexSetMismatch("graph_a's vertex set is not the object set")
        if list(graph_b.vertices) != objs:
            raise VertexSetMismatch("graph_b's vertex set is not the object set")
        loops: list[tuple[str, tuple[str, ...]]] = []
        owner: dict[str, str] = {}
        for v in sorted((c_loops or {}), key=as_id):
            ids = sorted(as_id(x) for x in (c_loops or {})[v])
            v = as_id(v)
            if v not in graph_a._vindex:
                raise UnknownVertex(v)
            for x in ids:
                if x in owner:
                    raise DuplicateId("C loop", x)
                owner[x] = v
            if ids:
                loops.append((v, tuple(ids)))
        self.objects: tuple[str, ...] = tuple(objs)
        self.graph_a = graph_a
        self.graph_b = graph_b
        self.c_loops: tuple[tuple[str, tuple[str, ...]], ...] = tuple(loops)
        self._c_owner = owner

    def c_loop_owner(self, loop_id: str) -> str:
        try:
            return self._c_owner[loop_id]
        except KeyError:
            raise UnknownLetter(loop_id, side="C") from None

    def c_loops_map(self) -> dict[str, tuple[str, ...]]:
        return dict(self.c_loops)

    def side_graph(self, side: str) -> DirectedGraph:
        if side == "A":
            return self.graph_a
        if side == "B":
            return self.graph_b
        raise ValueError(f"no generating graph for side {side!r}")

    def union_graph(self) -> DirectedGraph:
        """Pushout of the two full generating graphs over the objects."""
        w, _ = graph_pushout_with_origins(self.graph_a, self.graph_b, self.objects)
        return w

    def __eq__(self, other) -> bool:
        if not isinstance(other, PushoutInstance):
            return NotImplemented
        return (
            self.objects == other.objects
            and self.graph_a == other.graph_a
            and self.graph_b == other.graph_b
            and self.c_loops == other.c_loops
        )

    def __hash__(self) -> int:
        return hash((self.objects, self.graph_a, self.graph_b, self.c_loops))

    def __repr__(self) -> str:
        return (
            f"PushoutInstance(objects={self.objects!r}, "
            f"e_a={self.graph_a.e_count}, e_b={self.graph_b.e_count}, "
            f"c_loops={sum(len(ids) for _, ids in self.c_loops)})"
        )


@dataclass(frozen=True)
class GLetter:
    """A signed generator of the pushout G, tagged with its side of origin."""

    side: str
    edge: str
    sign: int

    def __post_init__(self):
        if self.side not in SIDES:
            raise ValueError(f"side must be one of {SIDES}, got {self.side!r}")
        if self.sign not in (1, -1):
            raise ValueError(f"sign must be +1 or -1, got {self.sign!r}")

    def inverse(self) -> GLetter:
        return GLetter(self.side, self.edge, -self.sign)

    def __str__(self) -> str:
        body = f"{self.side}:{self.edge}"
        return body if self.sign == 1 else f"{body}^-1"


def _gletter_ends(inst: PushoutInstance, letter: GLetter) -> tuple[str, str]:
    if letter.side == "C":
        v = inst.c_loop_owner(letter.edge)
        return v, v
    g = inst.side_graph(letter.side)
    try:
        s, t = g.edge_ends[letter.edge]
    except KeyError:
        raise UnknownLetter(letter.edge, side=letter.side) from None
    return (s, t) if letter.sign == 1 else (t, s)


class GWord:
    """A composable (not necessarily reduced) word of tagged generators of G.

    Equality of GWords is syntactic; equality in the pushout groupoid G is
    deliberately left undecided.
    """

    __slots__ = ("instance", "source", "target", "letters")

    def __init__(self, instance: PushoutInstance, source: str, target: str, letters: Sequence[GLetter] = ()):
        if source not in instance.graph_a._vindex:
            raise UnknownVertex(source)
        if target not in instance.graph_a._vindex:
            raise UnknownVertex(target)
        letters = tuple(letters)
        cur = source
        for i, letter in enumerate(letters):
            s, t = _gletter_ends(instance, letter)
            if s != cur:
                raise NotComposable(i, f"letter starts at {s!r}, chain is at {cur!r}")
            cur = t
        if cur != target:
            raise NotComposable(len(letters), f"target {target!r} does not match chain end {cur!r}")
        self.instance = instance
        self.source = source
        self.target = target
        self.letters = letters

    def compose(self, other: GWord) -> GWord:
        if self.instance != other.instance:
            raise HostMismatch("words live over different instances")
        if self.target != other.source:
            raise NotComposable(None, f"target {self.target!r} != source {other.source!r}")
        return GWord(self.instance, self.source, other.target, self.letters + other.letters)

    def invert(self) -> GWord:
        return GWord(
            self.instance, self.target, self.source, [l.inverse() for l in reversed(self.letters)]
        )

    def __len__(self) -> int:
        return len(self.letters)

    def __eq__(self, other) -> bool:
        if not isinstance(other, GWord):
            return NotImplemented
        return (
            self.source == other.source
            and self.target == other.target
            and self.letters == other.letters
            and self.instance == other.instance
        )

    def __hash__(self) -> int:
        return hash((self.source, self.target, self.letters))

    def __str__(self) -> str:
        return " ".join(str(l) for l in self.letters) if self.letters else "1"

    def __repr__(self) -> str:
        return f"GWord({self.source!r} -> {self.target!r}: {self})"


@dataclass(eq=True)
class RetractReport:
    """Everything the retraction needs: chosen forests, the pushout graph W,
    component counts, the rank, and the origin of every W edge."""

    instance: PushoutInstance
    forest_x: Forest
    forest_y: Forest
    w: DirectedGraph
    n_a: int
    n_b: int
    n_c: int
    k: int | None
    per_component_ranks: tuple[tuple[tuple[str, ...], int], ...]
    edge_origins: dict[str, tuple[str, str]] = field(repr=False)

    @property
    def connected(self) -> bool:
        return self.k is not None

    def origin_of(self, w_edge: str) -> tuple[str, str]:
        try:
            return self.edge_origins[w_edge]
        except KeyError:
            raise UnknownLetter(w_edge) from None

    def w_edge_for(self, side: str, edge: str) -> str:
        try:
            return self._reverse[(side, edge)]
        except AttributeError:
            self._reverse = {v: k for k, v in self.edge_origins.items()}
            return self.w_edge_for(side, edge)
        except KeyError:
            raise UnknownLetter(edge, side=side) from None


def component_counts(inst: PushoutInstance) -> tuple[int, int, int]:
    """(n_A, n_B, n_C): component counts of the three groupoids.

    C is totally disconnected, so every object is its own C-component.
    """
    n_a = len(components(inst.graph_a))
    n_b = len(components(inst.graph_b))
    return n_a, n_b, len(inst.objects)


def check_connected(inst: PushoutInstance) -> bool:
    """Whether the pushout groupoid G is connected.

    G's generators are the images of both edge sets plus C's loops, so this
    is exactly connectivity of the union graph over the objects.
    """
    return len(components(inst.union_graph())) == 1


def theorem_rank(inst: PushoutInstance) -> int:
    """Vertex-group rank of the free retract: ``n_C - n_A - n_B + 1``."""
    if not check_connected(inst):
        raise Disconnected(
            "the pushout is not connected; build_retract reports per-component ranks"
        )
    n_a, n_b, n_c = component_counts(inst)
    k = n_c - n_a - n_b + 1
    assert k >= 0
    return k


def build_retract(
    inst: PushoutInstance,
    tie_break: Sequence[str] | None = None,
    required_a: Iterable[str] = (),
    required_b: Iterable[str] = (),
) -> RetractReport:
    """Choose spanning forests X, Y, push them out to W, and report ranks.

    ``required_a`` / ``required_b`` force particular generator edges into the
    forests (they must be acyclic), which is how a caller pins chosen arrows
    into the retract.  On a disconnected instance ``k`` is None and the
    per-component ranks stand in for it.
    """
    forest_x = spanning_forest_containing(inst.graph_a, required_a, tie_break)
    forest_y = spanning_forest_containing(inst.graph_b, required_b, tie_break)
    w, origins = graph_pushout_with_origins(forest_x, forest_y, inst.objects)
    n_a, n_b, n_c = component_counts(inst)
    ranks = tuple(euler_ranks(w))
    assert w.v_count == n_c
    assert w.e_count == len(forest_x.tree_edges) + len(forest_y.tree_edges)
    if check_connected(inst):
        k = n_c - n_a - n_b + 1
        assert len(ranks) == 1 and ranks[0][1] == k, "rank formula disagrees with W"
    else:
        k = None
    return RetractReport(
        instance=inst,
        forest_x=forest_x,
        forest_y=forest_y,
        w=w,
        n_a=n_a,
        n_b=n_b,
        n_c=n_c,
        k=k,
        per_component_ranks=ranks,
        edge_origins=origins,
    )


def _side_path_on_w(report: RetractReport, side: str, u: str, v: str) -> list[Letter]:
    """Tree path u -> v in the side's forest, relabelled to W edge ids."""
    forest = report.forest_x if side == "A" else report.forest_y
    return [Letter(report.w_edge_for(side, e), sign) for e, sign in forest.path_steps(u, v)]


def rho(report: RetractReport, g: GWord) -> Word:
    """The retraction G -> Fr(W) evaluated on a word of generators.

    A-letters map to the X-tree path between their endpoints (forest edges map
    to themselves), B-letters likewise through Y, and C-letters die (the
    forest Z has no edges).  The result is reduced, and the map respects
    composition and inversion.
    """
    if g.instance != report.instance:
        raise HostMismatch("word does not belong to this report's instance")
    raw: list[Letter] = []
    for letter in g.letters:
        if letter.side == "C":
            continue
        s, t = _gletter_ends(report.instance, letter)
        raw.extend(_side_path_on_w(report, letter.side, s, t))
    return reduce(report.w, g.source, raw)


def include_f(report: RetractReport, w: Word) -> GWord:
    """The inclusion Fr(W) -> G: relabel each W letter to its tagged origin."""
    if w.host != report.w:
        raise HostMismatch("word is not hosted on this report's pushout graph W")
    letters = []
    for letter in w.letters:
        side, orig = report.origin_of(letter.edge)
        letters.append(GLetter(side, orig, letter.sign))
    return GWord(report.instance, w.source, w.target, letters)


def witness(report: RetractReport, a: str, b: str) -> Word:
    """The loop (X-tree path a -> b) * (Y-tree path b -> a), reduced, in Fr(W).

    Nontrivial whenever defined: the two halves are nonempty words over
    disjoint edge alphabets, so nothing cancels at the junction.  Its
    nontriviality in Fr(W) certifies, through the retraction, that the
    corresponding loop class in G is nontrivial.
    """
    a, b = as_id(a), as_id(b)
    if a not in report.instance.graph_a._vindex:
        raise UnknownVertex(a)
    if b not in report.instance.graph_a._vindex:
        raise UnknownVertex(b)
    if a == b:
        raise NotDistinct(f"objects must be distinct, got {a!r} twice")
    if not components(report.instance.graph_a).same_block(a, b):
        raise NoArrowInA(f"no arrow {a!r} -> {b!r} in A: different components")
    if not components(report.instance.graph_b).same_block(a, b):
        raise NoArrowInB(f"no arrow {a!r} -> {b!r} in B: different components")
    first = Word(report.w, a, b, _side_path_on_w(report, "A", a, b))
    second = Word(report.w, b, a, _side_path_on_w(report, "B", b, a))
    loop = compose(first, second)
    assert len(loop) >= 2 and len(loop) == len(first) + len(second)
    return loop


def certify_rank_at_least_one(report: RetractReport, a: str, b: str) -> FreeGroupElement:
    """Coordinates of the witness loop in the vertex group of Fr(W) at ``a``.

    Nonempty coordinates exhibit an infinite cyclic retract inside that
    vertex group.
    """
    loop = witness(report, a, b)
    forest_w = spanning_forest(report.w)
    element = loop_coordinates(report.w, forest_w, as_id(a), loop)
    assert not element.is_identity
    return element
