"""Finite directed multigraphs: weak components, spanning forests, Euler
ranks, and pushouts over a shared vertex set.

Vertex and edge ids are opaque strings compared in code-point order (which
for UTF-8 encoded ids coincides with bytewise order).  That single total
order drives every deterministic choice in the library: component numbering,
default edge scan order, canonical output order.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import cached_property
from typing import Iterable, Mapping, Sequence, Union

from ._kernels import greedy_forest, union_find_labels
from .errors import (
    DanglingEndpoint,
    DifferentTrees,
    DuplicateId,
    RequiredEdgesContainCycle,
    UnknownEdge,
    UnknownVertex,
    VertexSetMismatch,
)


def as_id(value) -> str:
    """Coerce a vertex/edge label to its canonical string form."""
    if isinstance(value, str):
        return value
    if isinstance(value, int) and not isinstance(value, bool):
        return str(value)
    raise TypeError(f"id must be a string or integer label, got {type(value).__name__}")


class DirectedGraph:
    """Immutable finite directed multigraph.

    Parallel edges and self-loops are permitted.  Vertices and edges are
    stored in canonical id order, so two graphs built from the same data in
    any input order compare (and print) identically.
    """

    def __init__(
        self,
        vertices: Iterable[str],
        edges: Union[Mapping[str, tuple], Iterable[tuple]] = (),
    ):
        vs = sorted(as_id(v) for v in vertices)
        for left, right in zip(vs, vs[1:]):
            if left == right:
                raise DuplicateId("vertex", left)
        self.vertices: tuple[str, ...] = tuple(vs)
        self._vindex = {v: i for i, v in enumerate(self.vertices)}

        if isinstance(edges, Mapping):
            items = [(as_id(e), as_id(s), as_id(t)) for e, (s, t) in edges.items()]
        else:
            items = [(as_id(e), as_id(s), as_id(t)) for e, s, t in edges]
        items.sort(key=lambda it: it[0])
        for (left, _, _), (right, _, _) in zip(items, items[1:]):
            if left == right:
                raise DuplicateId("edge", left)
        ends = {}
        for e, s, t in items:
            if s not in self._vindex:
                raise DanglingEndpoint(e, s)
            if t not in self._vindex:
                raise DanglingEndpoint(e, t)
            ends[e] = (s, t)
        self.edge_ids: tuple[str, ...] = tuple(e for e, _, _ in items)
        self.edge_ends: dict[str, tuple[str, str]] = ends
        self._eindex = {e: i for i, e in enumerate(self.edge_ids)}
        self._src_idx = [self._vindex[ends[e][0]] for e in self.edge_ids]
        self._tgt_idx = [self._vindex[ends[e][1]] for e in self.edge_ids]
        self._components: VertexPartition | None = None

    @property
    def v_count(self) -> int:
        return len(self.vertices)

    @property
    def e_count(self) -> int:
        return len(self.edge_ids)

    def has_vertex(self, v: str) -> bool:
        return v in self._vindex

    def has_edge(self, e: str) -> bool:
        return e in self.edge_ends

    def ends(self, edge: str) -> tuple[str, str]:
        try:
            return self.edge_ends[edge]
        except KeyError:
            raise UnknownEdge(edge) from None

    def src(self, edge: str) -> str:
        return self.ends(edge)[0]

    def tgt(self, edge: str) -> str:
        return self.ends(edge)[1]

    def vertex_index(self, v: str) -> int:
        try:
            return self._vindex[v]
        except KeyError:
            raise UnknownVertex(v) from None

    def edge_index(self, e: str) -> int:
        try:
            return self._eindex[e]
        except KeyError:
            raise UnknownEdge(e) from None

    def __eq__(self, other) -> bool:
        if not isinstance(other, DirectedGraph):
            return NotImplemented
        return self.vertices == other.vertices and self.edge_ends == other.edge_ends

    def __hash__(self) -> int:
        return hash((self.vertices, tuple(sorted(self.edge_ends.items()))))

    def __repr__(self) -> str:
        return f"DirectedGraph(vertices={self.vertices!r}, edges={self.edge_ends!r})"


def validate_graph(g: DirectedGraph) -> None:
    """Re-check the type invariants of an already built graph.

    Construction performs the same checks, so this only fires if an instance
    was tampered with after the fact.
    """
    seen = set()
    for v in g.vertices:
        if v in seen:
            raise DuplicateId("vertex", v)
        seen.add(v)
    seen = set()
    for e in g.edge_ids:
        if e in seen:
            raise DuplicateId("edge", e)
        seen.add(e)
        s, t = g.edge_ends[e]
        if not g.has_vertex(s):
            raise DanglingEndpoint(e, s)
        if not g.has_vertex(t):
            raise DanglingEndpoint(e, t)


@dataclass(frozen=True)
class VertexPartition:
    """Partition of a graph's vertices into weak-connectivity blocks.

    Blocks are numbered by their smallest vertex id; block contents are
    sorted.
    """

    blocks: tuple[tuple[str, ...], ...]

    @cached_property
    def index(self) -> dict[str, int]:
        return {v: i for i, block in enumerate(self.blocks) for v in block}

    def block_of(self, v: str) -> int:
        try:
            return self.index[v]
        except KeyError:
            raise UnknownVertex(v) from None

    def same_block(self, u: str, v: str) -> bool:
        return self.block_of(u) == self.block_of(v)

    def __len__(self) -> int:
        return len(self.blocks)


def components(g: DirectedGraph) -> VertexPartition:
    """Weak-connectivity partition of ``g`` (edge direction ignored)."""
    if g._components is None:
        labels = union_find_labels(g.v_count, g._src_idx, g._tgt_idx)
        grouped: dict[int, list[str]] = {}
        for i, v in enumerate(g.vertices):
            grouped.setdefault(labels[i], []).append(v)
        blocks = tuple(tuple(grouped[lbl]) for lbl in sorted(grouped))
        g._components = VertexPartition(blocks)
    return g._components


class Forest:
    """A spanning forest of a host graph.

    The subgraph (all host vertices, ``tree_edges``) is acyclic as an
    undirected graph and has the same components as the host, equivalently
    ``|tree_edges| = v - #components``.
    """

    def __init__(self, host: DirectedGraph, tree_edges: Iterable[str]):
        edge_ids = sorted({as_id(e) for e in tree_edges})
        for e in edge_ids:
            if not host.has_edge(e):
                raise UnknownEdge(e)
        order = [host.edge_index(e) for e in edge_ids]
        accepted = greedy_forest(host.v_count, host._src_idx, host._tgt_idx, order)
        if len(accepted) != len(order):
            raise ValueError("tree edges contain an undirected cycle")
        if len(order) != host.v_count - len(components(host)):
            raise ValueError("tree edges do not span the host's components")
        self.host = host
        self.tree_edges: frozenset[str] = frozenset(edge_ids)
        self.tree_edge_ids: tuple[str, ...] = tuple(edge_ids)

    def as_graph(self) -> DirectedGraph:
        """The forest as a graph: all host vertices, tree edges only."""
        return DirectedGraph(
            self.host.vertices,
            {e: self.host.edge_ends[e] for e in self.tree_edge_ids},
        )

    @cached_property
    def _nav(self):
        # Per-vertex navigation: root of tree, depth, and the step
        # (edge, sign, parent) that moves one hop towards the root.
        adj: dict[str, list[tuple[str, int, str]]] = {v: [] for v in self.host.vertices}
        for e in self.tree_edge_ids:
            s, t = self.host.edge_ends[e]
            adj[s].append((e, 1, t))
            adj[t].append((e, -1, s))
        root: dict[str, str] = {}
        depth: dict[str, int] = {}
        up: dict[str, tuple[str, int, str]] = {}
        for start in self.host.vertices:
            if start in root:
                continue
            root[start] = start
            depth[start] = 0
            frontier = [start]
            while frontier:
                nxt = []
                for u in frontier:
                    for e, sign, w in adj[u]:
                        if w in root:
                            continue
                        root[w] = start
                        depth[w] = depth[u] + 1
                        up[w] = (e, -sign, u)  # traversing w -> u inverts the step
                        nxt.append(w)
                frontier = nxt
        return root, depth, up

    def tree_of(self, v: str) -> str:
        """Root vertex identifying the tree containing ``v``."""
        root, _, _ = self._nav
        try:
            return root[v]
        except KeyError:
            raise UnknownVertex(v) from None

    def path_steps(self, u: str, v: str) -> list[tuple[str, int]]:
        """Signed edges of the unique tree path from ``u`` to ``v``."""
        root, depth, up = self._nav
        if u not in root:
            raise UnknownVertex(u)
        if v not in root:
            raise UnknownVertex(v)
        if root[u] != root[v]:
            raise DifferentTrees(u, v)
        ascent: list[tuple[str, int]] = []
        descent: list[tuple[str, int]] = []
        while depth[u] > depth[v]:
            e, sign, u = up[u][0], up[u][1], up[u][2]
            ascent.append((e, sign))
        while depth[v] > depth[u]:
            e, sign, v = up[v][0], up[v][1], up[v][2]
            descent.append((e, -sign))
        while u != v:
            e, sign, u = up[u][0], up[u][1], up[u][2]
            ascent.append((e, sign))
            e, sign, v = up[v][0], up[v][1], up[v][2]
            descent.append((e, -sign))
        return ascent + descent[::-1]

    def __eq__(self, other) -> bool:
        if not isinstance(other, Forest):
            return NotImplemented
        return self.host == other.host and self.tree_edges == other.tree_edges

    def __hash__(self) -> int:
        return hash((self.host, self.tree_edges))

    def __repr__(self) -> str:
        return f"Forest(tree_edges={self.tree_edge_ids!r})"


def edge_scan_order(g: DirectedGraph, tie_break: Sequence[str] | None) -> list[int]:
    """Edge indexes in scan order: listed ids first, the rest lexicographic.

    ``tie_break`` entries naming edges absent from ``g`` are skipped, so one
    priority list can serve several graphs.
    """
    if tie_break is None:
        return list(range(g.e_count))
    head = []
    seen = set()
    for e in tie_break:
        e = as_id(e)
        if e in seen or not g.has_edge(e):
            continue
        seen.add(e)
        head.append(g.edge_index(e))
    tail = [i for i, e in enumerate(g.edge_ids) if e not in seen]
    return head + tail


def spanning_forest(g: DirectedGraph, tie_break: Sequence[str] | None = None) -> Forest:
    """Greedy spanning forest, scanning edges in tie-break order."""
    return spanning_forest_containing(g, (), tie_break)


def spanning_forest_containing(
    g: DirectedGraph,
    required: Iterable[str],
    tie_break: Sequence[str] | None = None,
) -> Forest:
    """Spanning forest forced to include ``required``, completed greedily."""
    req_ids = sorted({as_id(e) for e in required})
    for e in req_ids:
        if not g.has_edge(e):
            raise UnknownEdge(e)
    req_set = set(req_ids)
    scan = [g.edge_index(e) for e in req_ids]
    scan += [i for i in edge_scan_order(g, tie_break) if g.edge_ids[i] not in req_set]
    accepted = greedy_forest(g.v_count, g._src_idx, g._tgt_idx, scan)
    chosen = {g.edge_ids[i] for i in accepted}
    if not req_set <= chosen:
        raise RequiredEdgesContainCycle("required edges contain an undirected cycle")
    return Forest(g, chosen)


GraphLike = Union[DirectedGraph, Forest]


def _as_pushout_graph(x: GraphLike) -> DirectedGraph:
    return x.as_graph() if isinstance(x, Forest) else x


def graph_pushout_with_origins(
    x: GraphLike,
    y: GraphLike,
    shared_vertices: Iterable[str],
) -> tuple[DirectedGraph, dict[str, tuple[str, str]]]:
    """Pushout of ``x <- Z -> y`` over the discrete graph on ``shared_vertices``,
    together with the origin of every output edge as ``(side, original id)``.

    Both inputs must have vertex set exactly ``shared_vertices``; edges are
    disjointly unioned.  An id occurring on both sides is prefixed with its
    side tag ("A:" / "B:") to keep the union disjoint.
    """
    shared = sorted({as_id(v) for v in shared_vertices})
    gx = _as_pushout_graph(x)
    gy = _as_pushout_graph(y)
    if list(gx.vertices) != shared:
        raise VertexSetMismatch("first input's vertex set is not the shared vertex set")
    if list(gy.vertices) != shared:
        raise VertexSetMismatch("second input's vertex set is not the shared vertex set")
    colliding = set(gx.edge_ids) & set(gy.edge_ids)
    edges: dict[str, tuple[str, str]] = {}
    origins: dict[str, tuple[str, str]] = {}
    for side, tag, g in (("A", "A:", gx), ("B", "B:", gy)):
        for e in g.edge_ids:
            out = tag + e if e in colliding else e
            if out in edges:
                raise DuplicateId("edge", out)
            edges[out] = g.edge_ends[e]
            origins[out] = (side, e)
    return DirectedGraph(shared, edges), origins


def graph_pushout(x: GraphLike, y: GraphLike, shared_vertices: Iterable[str]) -> DirectedGraph:
    """Pushout of graphs (or forests) over a shared discrete vertex set."""
    w, _ = graph_pushout_with_origins(x, y, shared_vertices)
    return w


def euler_ranks(g: DirectedGraph) -> list[tuple[tuple[str, ...], int]]:
    """Per-component cycle rank ``e - v + 1``, paired with the block's vertices."""
    part = components(g)
    edge_counts = [0] * len(part)
    for e in g.edge_ids:
        edge_counts[part.block_of(g.edge_ends[e][0])] += 1
    out = []
    for i, block in enumerate(part.blocks):
        rank = edge_counts[i] - len(block) + 1
        assert rank >= 0, "weakly connected block cannot have fewer than v-1 edges"
        out.append((block, rank))
    return out
