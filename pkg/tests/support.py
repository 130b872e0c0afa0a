"""Shared generators and independent oracles for the test suite.

The oracles deliberately avoid the code paths they check: connectivity by
plain BFS instead of union-find, acyclicity by edge counting, free reduction
by repeated single-pair deletion, and coordinate expansion by literal
substitution.
"""

from __future__ import annotations

import random

from freeloop.errors import EmptyIntersection, PieceMissesIntersection
from freeloop.graphs import DirectedGraph
from freeloop.retract import GLetter, GWord, PushoutInstance
from freeloop.vankampen import Decomposition, decomposition_to_instance
from freeloop.words import Letter, Word, tree_path
from freeloop.words import reduce as reduce_word


def naive_reduce(codes):
    """Delete one adjacent inverse pair per pass until a fixpoint."""
    out = list(codes)
    changed = True
    while changed:
        changed = False
        for i in range(len(out) - 1):
            if out[i] == -out[i + 1]:
                del out[i : i + 2]
                changed = True
                break
    return out


def brute_components(g: DirectedGraph):
    """Weak-connectivity blocks by repeated BFS over an adjacency map."""
    adj = {v: set() for v in g.vertices}
    for e in g.edge_ids:
        s, t = g.edge_ends[e]
        adj[s].add(t)
        adj[t].add(s)
    blocks = []
    seen = set()
    for start in g.vertices:
        if start in seen:
            continue
        block = {start}
        frontier = [start]
        while frontier:
            nxt = []
            for u in frontier:
                for w in adj[u]:
                    if w not in block:
                        block.add(w)
                        nxt.append(w)
            frontier = nxt
        seen |= block
        blocks.append(tuple(sorted(block)))
    return tuple(sorted(blocks))


def is_forest_graph(g: DirectedGraph) -> bool:
    """Acyclicity by counting: e = v - #components holds exactly for forests."""
    return g.e_count == g.v_count - len(brute_components(g))


def signed_adjacency(g: DirectedGraph):
    adj = {v: [] for v in g.vertices}
    for e in g.edge_ids:
        s, t = g.edge_ends[e]
        adj[s].append((Letter(e, 1), t))
        adj[t].append((Letter(e, -1), s))
    return adj


def enumerate_reduced_words(g: DirectedGraph):
    """Every reduced word of ``g``, grouped by (source, target).

    Terminates only when ``g`` is a forest, where non-backtracking walks
    cannot revisit a vertex.
    """
    adj = signed_adjacency(g)
    out: dict[tuple[str, str], list[list[Letter]]] = {}
    for source in g.vertices:
        stack: list[tuple[str, list[Letter]]] = [(source, [])]
        while stack:
            cur, word = stack.pop()
            out.setdefault((source, cur), []).append(word)
            for letter, nxt in adj[cur]:
                if word and letter == word[-1].inverse():
                    continue
                stack.append((nxt, word + [letter]))
    return out


def random_graph(rng: random.Random, max_v=8, max_e=14, prefix="") -> DirectedGraph:
    n = rng.randint(1, max_v)
    vs = [f"{prefix}v{i:02d}" for i in range(n)]
    m = rng.randint(0, max_e)
    edges = [(f"{prefix}e{j:02d}", rng.choice(vs), rng.choice(vs)) for j in range(m)]
    return DirectedGraph(vs, edges)


def random_connected_instance(
    rng: random.Random, max_objects=20, max_side_edges=40
) -> PushoutInstance:
    """Instance whose union graph is connected by construction: a random
    spanning tree split across the two sides, then random extras per side."""
    n = rng.randint(1, max_objects)
    objs = [f"o{i:02d}" for i in range(n)]
    a_edges: list[tuple[str, str, str]] = []
    b_edges: list[tuple[str, str, str]] = []
    order = objs[:]
    rng.shuffle(order)
    for i in range(1, n):
        attach = order[rng.randrange(i)]
        side = a_edges if rng.random() < 0.5 else b_edges
        side.append((f"t{i:02d}", attach, order[i]))
    for tag, side in (("a", a_edges), ("b", b_edges)):
        extra = rng.randint(0, max_side_edges - len(side))
        for j in range(extra):
            side.append((f"{tag}{j:02d}", rng.choice(objs), rng.choice(objs)))
    c_loops: dict[str, list[str]] = {}
    for j in range(rng.randint(0, 3)):
        c_loops.setdefault(rng.choice(objs), []).append(f"c{j}")
    return PushoutInstance(
        objs, DirectedGraph(objs, a_edges), DirectedGraph(objs, b_edges), c_loops
    )


def random_reduced_word(rng: random.Random, g: DirectedGraph, source=None, max_len=12) -> Word:
    """Non-backtracking random walk, so the word is reduced by construction."""
    adj = signed_adjacency(g)
    if source is None:
        source = rng.choice(g.vertices)
    cur = source
    letters: list[Letter] = []
    for _ in range(rng.randint(0, max_len)):
        options = [
            (l, nxt)
            for l, nxt in adj[cur]
            if not (letters and l == letters[-1].inverse())
        ]
        if not options:
            break
        letter, cur = rng.choice(options)
        letters.append(letter)
    return Word(g, source, cur, letters)


def random_gword(rng: random.Random, inst: PushoutInstance, source=None, max_len=10) -> GWord:
    """Random composable walk over tagged generators; backtracking allowed."""
    moves: dict[str, list[tuple[GLetter, str]]] = {v: [] for v in inst.objects}
    for side in ("A", "B"):
        g = inst.side_graph(side)
        for e in g.edge_ids:
            s, t = g.edge_ends[e]
            moves[s].append((GLetter(side, e, 1), t))
            moves[t].append((GLetter(side, e, -1), s))
    for v, ids in inst.c_loops:
        for e in ids:
            moves[v].append((GLetter("C", e, 1), v))
            moves[v].append((GLetter("C", e, -1), v))
    if source is None:
        source = rng.choice(inst.objects)
    cur = source
    letters: list[GLetter] = []
    for _ in range(rng.randint(0, max_len)):
        if not moves[cur]:
            break
        letter, cur = rng.choice(moves[cur])
        letters.append(letter)
    return GWord(inst, source, cur, letters)


def random_connected_space(rng: random.Random, max_v=10, max_extra=8) -> DirectedGraph:
    n = rng.randint(2, max_v)
    vs = [f"s{i:02d}" for i in range(n)]
    order = vs[:]
    rng.shuffle(order)
    edges = [
        (f"e{i:02d}", order[rng.randrange(i)], order[i]) for i in range(1, n)
    ]
    for j in range(rng.randint(0, max_extra)):
        edges.append((f"x{j:02d}", rng.choice(vs), rng.choice(vs)))
    return DirectedGraph(vs, edges)


def random_decomposition(rng: random.Random, max_v=10, max_extra=8) -> Decomposition:
    """Valid decomposition of a connected space that also yields an instance.

    Each edge is tossed to one piece (both endpoints follow it), stray
    vertices are tossed randomly; samples whose intersection is empty or
    missed by a piece component are rejected and redrawn.
    """
    while True:
        space = random_connected_space(rng, max_v, max_extra)
        u_set: set[str] = set()
        v_set: set[str] = set()
        for e in space.edge_ids:
            s, t = space.edge_ends[e]
            side = u_set if rng.random() < 0.5 else v_set
            side.add(s)
            side.add(t)
        for v in space.vertices:
            if v not in u_set and v not in v_set:
                (u_set if rng.random() < 0.5 else v_set).add(v)
        if not u_set or not v_set:
            continue
        dec = Decomposition(space, sorted(u_set), sorted(v_set))
        try:
            decomposition_to_instance(dec)
        except (EmptyIntersection, PieceMissesIntersection):
            continue
        return dec


def random_cycle_split(rng: random.Random, max_inner=5) -> Decomposition:
    """Cycle split at two cut vertices into complementary arcs.

    The intersection is exactly the two cut points, each its own component,
    and both pieces join them, so a certificate always exists.  Sometimes a
    second arc is doubled inside the U piece, giving it positive rank.
    """
    u_inner = [f"u{i:02d}" for i in range(rng.randint(1, max_inner))]
    w_inner = [f"w{i:02d}" for i in range(rng.randint(1, max_inner))]
    verts = ["k0", "k1"] + u_inner + w_inner
    edges: list[tuple[str, str, str]] = []

    def chain(tag, inner):
        seq = ["k0"] + inner + ["k1"]
        edges.extend(
            (f"{tag}{i:02d}", seq[i], seq[i + 1]) for i in range(len(seq) - 1)
        )

    chain("p", u_inner)
    chain("q", w_inner)
    extra_u: list[str] = []
    if rng.random() < 0.4:
        extra_u = [f"x{i:02d}" for i in range(rng.randint(1, 3))]
        verts += extra_u
        chain("r", extra_u)
    space = DirectedGraph(verts, edges)
    return Decomposition(
        space, ["k0", "k1"] + u_inner + extra_u, ["k0", "k1"] + w_inner
    )


def expand_coordinates(g, f, base, element) -> Word:
    """Substitute each coordinate letter by its defining loop and reduce.

    Inverse of loop coordinates by construction, with no shared code: the
    basis element for edge e is (tree path to src e) e (tree path from tgt e).
    """
    raw: list[Letter] = []
    for idx, sign in element.letters:
        e = element.basis[idx]
        s, t = g.edge_ends[e]
        loop = (
            list(tree_path(f, base, s).letters)
            + [Letter(e, 1)]
            + list(tree_path(f, t, base).letters)
        )
        if sign == -1:
            loop = [l.inverse() for l in reversed(loop)]
        raw.extend(loop)
    return reduce_word(g, base, raw)


def circle_instance() -> PushoutInstance:
    g = DirectedGraph(["a", "b"], [("alpha", "a", "b")])
    h = DirectedGraph(["a", "b"], [("beta", "a", "b")])
    return PushoutInstance(["a", "b"], g, h)


def circle_decomposition() -> Decomposition:
    space = DirectedGraph(
        ["a", "b", "p", "q"],
        [("e1", "a", "p"), ("e2", "p", "b"), ("e3", "b", "q"), ("e4", "q", "a")],
    )
    return Decomposition(space, ["a", "p", "b"], ["a", "q", "b"])


def c8_space() -> DirectedGraph:
    return DirectedGraph(
        [f"v{i}" for i in range(8)],
        [(f"c{i}", f"v{i}", f"v{(i + 1) % 8}") for i in range(8)],
    )
