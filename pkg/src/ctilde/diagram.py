"""
Decorated pseudo-diagrams in the standard k-box.

Nodes are integers: north node ``i`` (1-based) is ``i - 1`` and south node
``i'`` is ``k + i - 1``.  Every chord is identified by its smaller endpoint,
which is also where its decoration word starts: left to right for caps and
cups, north to south for propagating edges.

Around the boundary the nodes run N1, ..., Nk, Sk, ..., S1.  The left wall sits
between S1 and N1 and the right wall between Nk and Sk.

A canonical :class:`Diagram` stores one reduced word per decorated chord, except
when the a-value is 1: then propagating decorations live in ``seq``, an
ordered top-to-bottom list of ``(edge, block)`` items where no two consecutive
items share an edge.  Loops are stored as a sorted tuple of canonical cyclic
words; which face a loop floats in is not recorded.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from enum import Enum
from functools import cached_property
from typing import Iterable, Iterator

from . import decor


class DiagramError(ValueError):
    """Structurally invalid diagram input."""


class Side(Enum):
    LEFT = "L"
    RIGHT = "R"


@dataclass(frozen=True)
class Matching:
    """A planar perfect matching of the 2k nodes of the standard k-box."""

    k: int
    mate: tuple[int, ...]

    def __post_init__(self) -> None:
        k, mate = self.k, self.mate
        if k < 1:
            raise DiagramError("k must be positive")
        if len(mate) != 2 * k:
            raise DiagramError(f"matching needs {2 * k} entries, got {len(mate)}")
        for v, u in enumerate(mate):
            if not 0 <= u < 2 * k or u == v or mate[u] != v:
                raise DiagramError(f"not a perfect matching at node {node_label(k, v)}")
        if not _non_crossing(k, mate):
            raise DiagramError("chords cross")

    @classmethod
    def from_chords(cls, k: int, chords: Iterable[tuple[int, int]]) -> Matching:
        mate = [-1] * (2 * k)
        for a, b in chords:
            for v in (a, b):
                if not 0 <= v < 2 * k:
                    raise DiagramError(f"node {v} out of range for k={k}")
                if mate[v] != -1:
                    raise DiagramError(f"node {node_label(k, v)} used twice")
            mate[a], mate[b] = b, a
        if -1 in mate:
            missing = [node_label(k, v) for v, u in enumerate(mate) if u == -1]
            raise DiagramError(f"unmatched nodes {missing}")
        return cls(k, tuple(mate))

    @classmethod
    def identity(cls, k: int) -> Matching:
        return cls.from_chords(k, [(i, k + i) for i in range(k)])

    def chords(self) -> list[tuple[int, int]]:
        return [(v, u) for v, u in enumerate(self.mate) if v < u]

    def is_propagating(self, v: int) -> bool:
        return (v < self.k) != (self.mate[v] < self.k)

    def propagating(self) -> list[tuple[int, int]]:
        """Propagating chords ordered left to right."""
        return [(v, self.mate[v]) for v in range(self.k) if self.mate[v] >= self.k]

    def north_caps(self) -> list[tuple[int, int]]:
        return [(v, u) for v, u in self.chords() if u < self.k]

    def south_cups(self) -> list[tuple[int, int]]:
        return [(v, u) for v, u in self.chords() if v >= self.k]

    @property
    def a_value(self) -> int:
        return len(self.north_caps())


def north(k: int, i: int) -> int:
    return i - 1


def south(k: int, i: int) -> int:
    return k + i - 1


def node_label(k: int, v: int) -> str:
    return f"{v + 1}" if v < k else f"{v - k + 1}'"


def boundary_position(k: int, v: int) -> int:
    """Position of a node in the cyclic order N1..Nk, Sk..S1."""
    return v if v < k else 3 * k - 1 - v


def _non_crossing(k: int, mate: tuple[int, ...]) -> bool:
    order = sorted(range(2 * k), key=lambda v: boundary_position(k, v))
    stack: list[int] = []
    for v in order:
        if stack and stack[-1] == mate[v]:
            stack.pop()
        else:
            stack.append(v)
    return not stack


def chords_cross(k: int, c1: tuple[int, int], c2: tuple[int, int]) -> bool:
    a, b = sorted(boundary_position(k, v) for v in c1)
    c, d = sorted(boundary_position(k, v) for v in c2)
    return (a < c < b < d) or (c < a < d < b)


@dataclass(frozen=True)
class Diagram:
    """A canonical decorated diagram (see the module docstring)."""

    matching: Matching
    words: tuple[tuple[int, str], ...] = ()
    seq: tuple[tuple[int, str], ...] = ()
    loops: tuple[str, ...] = ()

    @property
    def k(self) -> int:
        return self.matching.k

    @property
    def mate(self) -> tuple[int, ...]:
        return self.matching.mate

    @cached_property
    def a_value(self) -> int:
        return self.matching.a_value

    @cached_property
    def _word_map(self) -> dict[int, str]:
        out = dict(self.words)
        for e, block in self.seq:
            out[e] = out.get(e, "") + block
        return out

    def word(self, edge: int | tuple[int, int]) -> str:
        """Full decoration word of a chord, in its reading orientation."""
        if isinstance(edge, tuple):
            edge = min(edge)
        return self._word_map.get(edge, "")

    def edge_blocks(self, edge: int) -> list[str]:
        """Blocks on an edge: the interleave items for a-value 1 propagating edges."""
        if self.a_value == 1 and self.matching.is_propagating(edge):
            return [b for e, b in self.seq if e == edge]
        w = self.word(edge)
        return [w] if w else []

    def chords(self) -> list[tuple[int, int]]:
        return self.matching.chords()

    def decorations(self) -> Iterator[tuple[int, str]]:
        """(edge, symbol) pairs for every decoration on a non-loop edge."""
        for e, w in self._word_map.items():
            for c in w:
                yield e, c

    @property
    def is_dammed(self) -> bool:
        return bool(self.matching.propagating())

    def with_loops(self, loops: Iterable[str]) -> Diagram:
        return Diagram(self.matching, self.words, self.seq, tuple(sorted(loops)))

    def strip_loops(self) -> Diagram:
        return Diagram(self.matching, self.words, self.seq, ())

    def __str__(self) -> str:
        from .textio import serialize

        return serialize(self)


def make_diagram(
    k: int,
    chords: Iterable[tuple[int, int]],
    words: dict[int, str] | None = None,
    seq: Iterable[tuple[int, str]] = (),
    loops: Iterable[str] = (),
) -> Diagram:
    """Build a diagram from already-reduced data, checking canonical form.

    ``words`` maps an edge (its smaller endpoint) to its decoration word.
    """
    matching = Matching.from_chords(k, chords)
    d = Diagram(
        matching,
        tuple(
            sorted(
                (min(e, matching.mate[e]), decor.check_word(w))
                for e, w in (words or {}).items()
                if w
            )
        ),
        tuple((min(e, matching.mate[e]), decor.check_word(b)) for e, b in seq),
        tuple(sorted(decor.check_word(w) for w in loops)),
    )
    check_canonical(d)
    return d


def check_canonical(d: Diagram) -> None:
    m = d.matching
    for e, w in d.words:
        if m.mate[e] < e:
            raise DiagramError(f"edge key {e} is not the smaller endpoint")
        if d.a_value == 1 and m.is_propagating(e):
            raise DiagramError("a-value 1 propagating decorations belong in seq")
        if not decor.is_basis_word(w):
            raise DiagramError(f"edge word {w!r} is not reduced")
    if d.seq and d.a_value != 1:
        raise DiagramError("an interleave sequence is only used when the a-value is 1")
    prev = None
    for e, b in d.seq:
        if not m.is_propagating(e):
            raise DiagramError(f"seq item on non-propagating edge {node_label(d.k, e)}")
        if not b or not decor.is_basis_word(b):
            raise DiagramError(f"seq block {b!r} is empty or not reduced")
        if e == prev:
            raise DiagramError("consecutive seq items on one edge must be conjoined")
        prev = e
    if d.a_value == 0 and (d.words or d.seq):
        raise DiagramError("a diagram with a-value 0 must be undecorated")
    for w in d.loops:
        r = decor.reduce_cyclic(w)
        if not isinstance(r, decor.IrreducibleLoop) or r.two_exp or r.word != w:
            raise DiagramError(f"loop word {w!r} is not canonical and irreducible")


def identity_diagram(k: int) -> Diagram:
    return Diagram(Matching.identity(k))


# statistics ---------------------------------------------------------------


def a_value(d: Diagram) -> int:
    return d.a_value


def shape(d: Diagram) -> Matching:
    return d.matching


def height(d: Diagram) -> int:
    decorations = sum(len(w) for _, w in d.words) + sum(len(b) for _, b in d.seq)
    return decorations + sum(len(w) + 1 for w in d.loops)


def order_lt(d: Diagram, d2: Diagram) -> bool:
    """Strict order: same shape, strictly smaller height."""
    return d.matching == d2.matching and height(d) < height(d2)


def equals(d: Diagram, d2: Diagram) -> bool:
    return d == d2


# exposure and LR-validity ---------------------------------------------------


def _wall_position(k: int, side: Side) -> float:
    return -0.5 if side is Side.LEFT else k - 0.5


def is_exposed(d: Diagram | Matching, edge: int | tuple[int, int], side: Side) -> bool:
    """Whether a chord can be pushed to touch the given wall without crossings."""
    m = d.matching if isinstance(d, Diagram) else d
    k = m.k
    e = (edge, m.mate[edge]) if isinstance(edge, int) else edge
    wall = _wall_position(k, side)
    probe = boundary_position(k, e[0])
    for c in m.chords():
        if set(c) == set(e):
            continue
        lo, hi = sorted(boundary_position(k, v) for v in c)
        # the arc (lo, hi) never contains the wall point -0.5 on the left side
        if (lo < wall < hi) != (lo < probe < hi):
            return False
    return True


def _right_of(a: tuple[int, int], b: tuple[int, int]) -> bool:
    """Same-face chord ``a`` lies entirely to the right of chord ``b``."""
    return min(a) > max(b)


def lr_violations(d: Diagram) -> list[str]:
    """Reasons ``d`` fails to be LR-decorated (empty when it is)."""
    m = d.matching
    out: list[str] = []
    props = m.propagating()
    for e, sym in d.decorations():
        if decor.is_closed(sym) and not is_exposed(m, e, Side.LEFT):
            out.append(f"closed decoration on non-L-exposed edge at {node_label(d.k, e)}")
        if decor.is_open(sym) and not is_exposed(m, e, Side.RIGHT):
            out.append(f"open decoration on non-R-exposed edge at {node_label(d.k, e)}")
    for face in (m.north_caps(), m.south_cups()):
        for e in face:
            w = d.word(e)
            if "".join(sorted(w, key=decor.is_open)) != w:
                out.append(f"open before closed on edge at {node_label(d.k, e[0])}")
        for e in face:
            if not any(decor.is_open(c) for c in d.word(e)):
                continue
            for f in face:
                if _right_of(f, e) and any(decor.is_closed(c) for c in d.word(f)):
                    out.append(
                        f"closed decoration right of an open one "
                        f"({node_label(d.k, f[0])} vs {node_label(d.k, e[0])})"
                    )
    if props:
        left_n, left_s = props[0]
        right_n, right_s = props[-1]
        for e, sym in d.decorations():
            c = (e, m.mate[e])
            if decor.is_closed(sym) and not _weakly_left_of(d.k, c, props[0]):
                out.append("closed decoration right of the leftmost propagating edge")
            if decor.is_open(sym) and not _weakly_right_of(d.k, c, props[-1]):
                out.append("open decoration left of the rightmost propagating edge")
        if len(props) > 1:
            for p in props:
                w = d.word(p)
                if any(map(decor.is_closed, w)) and any(map(decor.is_open, w)):
                    out.append("propagating edge with both types but not unique")
        for w in d.loops:
            if any(map(decor.is_closed, w)) and any(map(decor.is_open, w)):
                out.append(f"loop {w!r} carries both types in a dammed diagram")
    return sorted(set(out))


def _weakly_left_of(k: int, c: tuple[int, int], p: tuple[int, int]) -> bool:
    """Chord ``c`` lies on or to the left of propagating chord ``p``."""
    if set(c) == set(p):
        return True
    # positions strictly inside the arc of the boundary from p's north node
    # clockwise back around the left wall to p's south node
    pn, ps = sorted(boundary_position(k, v) for v in p)
    return all(not (pn < boundary_position(k, v) < ps) for v in c)


def _weakly_right_of(k: int, c: tuple[int, int], p: tuple[int, int]) -> bool:
    pn, ps = sorted(boundary_position(k, v) for v in p)
    return all(pn <= boundary_position(k, v) <= ps for v in c)


def is_lr_decorated(d: Diagram) -> bool:
    return not lr_violations(d)


is_LR_decorated = is_lr_decorated


# raw diagrams and canonical form -------------------------------------------


@dataclass
class RawDiagram:
    """A decorated diagram before conjoining and reduction.

    ``blocks`` maps each edge to its blocks in reading order.  When the
    a-value is 1, propagating decorations are given only through ``seq`` (top
    to bottom, consecutive items on one edge not yet conjoined).  Each loop is
    a cyclic list of blocks.
    """

    matching: Matching
    blocks: dict[int, list[str]] = field(default_factory=dict)
    seq: list[tuple[int, str]] = field(default_factory=list)
    loops: list[list[str]] = field(default_factory=list)

    @property
    def k(self) -> int:
        return self.matching.k

    def height(self) -> int:
        total = sum(len(b) for bs in self.blocks.values() for b in bs)
        total += sum(len(b) for _, b in self.seq)
        return total + sum(1 + sum(map(len, loop)) for loop in self.loops)


def validate_raw(raw: RawDiagram) -> None:
    m = raw.matching
    a = m.a_value
    for e, bs in raw.blocks.items():
        if m.mate[e] < e:
            raise DiagramError(f"edge key {e} is not the smaller endpoint")
        if not any(bs):
            continue
        if a == 0:
            raise DiagramError("a diagram with a-value 0 must be undecorated")
        if a == 1 and m.is_propagating(e):
            raise DiagramError(
                "D2: with a-value 1, propagating decorations need an interleave order"
            )
    for e, b in raw.seq:
        if a != 1:
            raise DiagramError("an interleave sequence is only used when the a-value is 1")
        if not m.is_propagating(e):
            raise DiagramError(f"seq item on non-propagating edge {node_label(m.k, e)}")


def canonicalize(raw: RawDiagram) -> tuple[int, int, Diagram]:
    """Conjoin maximal blocks, reduce every word and loop, drop δ-loops.

    Returns ``(two_exp, delta_exp, diagram)`` with
    ``raw = 2**two_exp * δ**delta_exp * diagram``.
    """
    validate_raw(raw)
    two = delta = 0
    words = []
    for e, bs in raw.blocks.items():
        if not any(bs):
            continue
        exp, w = decor.reduce_word("".join(bs))
        two += exp
        words.append((min(e, raw.matching.mate[e]), w))
    seq: list[tuple[int, str]] = []
    for e, b in raw.seq:
        if not b:
            continue
        if seq and seq[-1][0] == e:
            seq[-1] = (e, seq[-1][1] + b)
        else:
            seq.append((e, b))
    reduced_seq = []
    for e, b in seq:
        exp, w = decor.reduce_word(b)
        two += exp
        reduced_seq.append((e, w))
    loops = []
    for loop in raw.loops:
        r = decor.reduce_cyclic("".join(loop))
        two += r.two_exp
        if isinstance(r, decor.RemovableLoop):
            delta += 1
        else:
            loops.append(r.word)
    d = Diagram(raw.matching, tuple(sorted(words)), tuple(reduced_seq), tuple(sorted(loops)))
    return two, delta, d


def to_raw(d: Diagram) -> RawDiagram:
    m = d.matching
    blocks = {e: [w] for e, w in d.words}
    return RawDiagram(m, blocks, list(d.seq), [[w] for w in d.loops])


def simple_diagram(i: int, n: int) -> Diagram:
    """The generator d_i of the algebra on n+2 strands.

    The cap {i, i+1} and cup {i', (i+1)'} carry a single closed dot when
    ``i == 1`` and a single open dot when ``i == n + 1``.
    """
    if n < 2:
        raise DiagramError("n must be at least 2")
    if not 1 <= i <= n + 1:
        raise DiagramError(f"generator index {i} out of range 1..{n + 1}")
    k = n + 2
    top, bot = north(k, i), south(k, i)
    chords = [(top, top + 1), (bot, bot + 1)]
    chords += [(j, k + j) for j in range(k) if j not in (top, top + 1)]
    sym = "b" if i == 1 else "o" if i == n + 1 else ""
    words = {top: sym, bot: sym} if sym else {}
    return make_diagram(k, chords, words)
