"""Arrows of free groupoids as reduced words of signed edges.

A word over a graph ``g`` is a composable chain of letters, where a letter
traverses an edge forwards (sign +1) or backwards (sign -1), with no adjacent
cancelling pair.  Reduced words are normal forms: two words are equal in the
free groupoid exactly when they are identical, which is what makes every
nontriviality claim in this library decidable.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Sequence

from ._kernels import reduce_signed
from .errors import HostMismatch, NotALoop, NotComposable, UnknownLetter, UnknownVertex
from .graphs import DirectedGraph, Forest, components


@dataclass(frozen=True)
class Letter:
    """A signed edge: ``sign`` +1 traverses src -> tgt, -1 the reverse."""

    edge: str
    sign: int

    def __post_init__(self):
        if self.sign not in (1, -1):
            raise ValueError(f"sign must be +1 or -1, got {self.sign!r}")

    def inverse(self) -> Letter:
        return Letter(self.edge, -self.sign)

    def __str__(self) -> str:
        return self.edge if self.sign == 1 else f"{self.edge}^-1"


def letter_ends(g: DirectedGraph, letter: Letter) -> tuple[str, str]:
    """Signed (source, target) of a letter on ``g``."""
    try:
        s, t = g.edge_ends[letter.edge]
    except KeyError:
        raise UnknownLetter(letter.edge) from None
    return (s, t) if letter.sign == 1 else (t, s)


class Word:
    """A reduced composable word: an arrow of the free groupoid on its host.

    Words carry explicit source and target even when empty; the empty word at
    ``a`` is the identity arrow at ``a`` and differs from the one at ``b``.
    Construct words through :func:`reduce`, :func:`identity`, or the word
    operations; the constructor rejects unreduced input.
    """

    __slots__ = ("host", "source", "target", "letters", "_codes")

    def __init__(self, host: DirectedGraph, source: str, target: str, letters: Sequence[Letter] = ()):
        if not host.has_vertex(source):
            raise UnknownVertex(source)
        if not host.has_vertex(target):
            raise UnknownVertex(target)
        letters = tuple(letters)
        cur = source
        for i, letter in enumerate(letters):
            s, t = letter_ends(host, letter)
            if s != cur:
                raise NotComposable(i, f"letter starts at {s!r}, chain is at {cur!r}")
            if i and letters[i - 1].edge == letter.edge and letters[i - 1].sign == -letter.sign:
                raise ValueError(f"word is not reduced at position {i}")
            cur = t
        if cur != target:
            raise ValueError(f"target {target!r} does not match chain end {cur!r}")
        self.host = host
        self.source = source
        self.target = target
        self.letters = letters
        self._codes: tuple[int, ...] | None = None

    def codes(self) -> tuple[int, ...]:
        """Letters encoded as nonzero ints: ``sign * (edge index + 1)``."""
        if self._codes is None:
            eindex = self.host._eindex
            self._codes = tuple(l.sign * (eindex[l.edge] + 1) for l in self.letters)
        return self._codes

    @property
    def is_identity(self) -> bool:
        return not self.letters

    def __len__(self) -> int:
        return len(self.letters)

    def __eq__(self, other) -> bool:
        if not isinstance(other, Word):
            return NotImplemented
        return (
            self.source == other.source
            and self.target == other.target
            and self.letters == other.letters
            and self.host == other.host
        )

    def __hash__(self) -> int:
        return hash((self.source, self.target, self.letters))

    def __str__(self) -> str:
        return " ".join(str(l) for l in self.letters) if self.letters else "1"

    def __repr__(self) -> str:
        return f"Word({self.source!r} -> {self.target!r}: {self})"


def identity(g: DirectedGraph, v: str) -> Word:
    """The identity arrow at ``v``: the empty word from ``v`` to ``v``."""
    if not g.has_vertex(v):
        raise UnknownVertex(v)
    return Word(g, v, v)


def _decode(g: DirectedGraph, codes) -> list[Letter]:
    ids = g.edge_ids
    return [Letter(ids[abs(c) - 1], 1 if c > 0 else -1) for c in codes]


def reduce(g: DirectedGraph, source: str, raw_letters: Sequence[Letter]) -> Word:
    """The unique reduced word equal to ``raw_letters`` in the free groupoid.

    The input must be a composable chain starting at ``source``; it need not
    be reduced.  Reduction is a single left-to-right stack pass (free
    reduction is confluent, so the strategy does not affect the result).
    """
    source = _checked_vertex(g, source)
    cur = source
    for i, letter in enumerate(raw_letters):
        s, t = letter_ends(g, letter)
        if s != cur:
            raise NotComposable(i, f"letter starts at {s!r}, chain is at {cur!r}")
        cur = t
    eindex = g._eindex
    codes = [l.sign * (eindex[l.edge] + 1) for l in raw_letters]
    return Word(g, source, cur, _decode(g, reduce_signed(codes)))


def _checked_vertex(g: DirectedGraph, v: str) -> str:
    if not g.has_vertex(v):
        raise UnknownVertex(v)
    return v


def compose(w1: Word, w2: Word) -> Word:
    """Composite arrow ``w1`` then ``w2`` (reduced concatenation)."""
    if w1.host != w2.host:
        raise HostMismatch("words live on different graphs")
    if w1.target != w2.source:
        raise NotComposable(None, f"target {w1.target!r} != source {w2.source!r}")
    codes = reduce_signed(list(w1.codes()) + list(w2.codes()))
    return Word(w1.host, w1.source, w2.target, _decode(w1.host, codes))


def invert(w: Word) -> Word:
    """Inverse arrow: letters reversed with signs flipped."""
    return Word(w.host, w.target, w.source, [l.inverse() for l in reversed(w.letters)])


def rehost(w: Word, new_host: DirectedGraph) -> Word:
    """The same word viewed on a larger host sharing the edge ids."""
    return Word(new_host, w.source, w.target, w.letters)


def tree_path(f: Forest, u: str, v: str) -> Word:
    """The unique reduced word from ``u`` to ``v`` through tree edges only."""
    steps = f.path_steps(u, v)
    return Word(f.host, u, v, [Letter(e, sign) for e, sign in steps])


@dataclass(frozen=True)
class FreeGroupElement:
    """An element of a free group on the listed basis.

    ``letters`` is a reduced sequence of ``(basis index, sign)`` pairs.  Used
    for coordinates of loops in the vertex group at a basepoint, where the
    basis is the non-forest edges of the basepoint's component.
    """

    basis: tuple[str, ...]
    letters: tuple[tuple[int, int], ...]

    def __post_init__(self):
        for i, (idx, sign) in enumerate(self.letters):
            if not 0 <= idx < len(self.basis):
                raise ValueError(f"basis index {idx} out of range")
            if sign not in (1, -1):
                raise ValueError(f"sign must be +1 or -1, got {sign!r}")
            if i and self.letters[i - 1] == (idx, -sign):
                raise ValueError(f"element is not reduced at position {i}")

    @property
    def is_identity(self) -> bool:
        return not self.letters

    def __len__(self) -> int:
        return len(self.letters)

    def __str__(self) -> str:
        if not self.letters:
            return "1"
        return " ".join(
            self.basis[i] if s == 1 else f"{self.basis[i]}^-1" for i, s in self.letters
        )


def loop_coordinates(g: DirectedGraph, f: Forest, base: str, w: Word) -> FreeGroupElement:
    """Coordinates of a loop at ``base`` in the free group on non-forest edges.

    The basis element for a non-forest edge ``e`` is the loop
    ``base -> src(e) -(e)-> tgt(e) -> base`` (tree paths on the outside), so a
    loop's coordinates are read off by keeping its non-forest letters and
    dropping the rest; the result is freely reduced.  This realises the vertex
    group of the free groupoid at ``base`` as a free group of rank
    ``e - v + 1`` over the basepoint's component.
    """
    if f.host != g:
        raise HostMismatch("forest does not belong to the given graph")
    if w.host != g:
        raise HostMismatch("word does not live on the given graph")
    if not g.has_vertex(base):
        raise UnknownVertex(base)
    if w.source != base or w.target != base:
        raise NotALoop(f"word runs {w.source!r} -> {w.target!r}, expected a loop at {base!r}")
    block = components(g).block_of(base)
    basis = tuple(
        e
        for e in g.edge_ids
        if e not in f.tree_edges and components(g).block_of(g.edge_ends[e][0]) == block
    )
    bindex = {e: i for i, e in enumerate(basis)}
    codes = [
        l.sign * (bindex[l.edge] + 1) for l in w.letters if l.edge in bindex
    ]
    reduced = reduce_signed(codes)
    return FreeGroupElement(basis, tuple((abs(c) - 1, 1 if c > 0 else -1) for c in reduced))
