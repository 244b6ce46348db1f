"""
Concatenation of decorated diagrams and the algebra of their linear
combinations with coefficients in Z[δ].

The product ``concat(top, bottom)`` places ``top`` above ``bottom`` and glues
the south face of ``top`` to the north face of ``bottom``.  Paths through the
glued interface become the chords of the product and closed circuits become
loops.  Words are collected along each path and reversed whenever an edge is
walked against its reading orientation.

When the product has a-value 1 its propagating decorations need a vertical
order.  Everything from ``top`` lies above everything from ``bottom``, and in
each factor the propagating decorations lie below its north cap and above its
south cup.  So the product order is: top's interleave items, then the glued
interface words, then bottom's interleave items.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache
from typing import Iterable, Iterator, Mapping

from . import decor
from .diagram import (
    Diagram,
    DiagramError,
    Matching,
    RawDiagram,
    canonicalize,
    identity_diagram,
    simple_diagram,
)

# coefficients ---------------------------------------------------------------


@dataclass(frozen=True)
class Poly:
    """Integer polynomial in δ; ``coeffs[i]`` multiplies δ^i (no trailing zeros)."""

    coeffs: tuple[int, ...] = ()

    def __post_init__(self) -> None:
        c = list(self.coeffs)
        while c and c[-1] == 0:
            c.pop()
        object.__setattr__(self, "coeffs", tuple(c))

    @classmethod
    def const(cls, c: int) -> Poly:
        return cls((c,))

    @classmethod
    def monomial(cls, c: int, power: int) -> Poly:
        return cls((0,) * power + (c,))

    def __bool__(self) -> bool:
        return bool(self.coeffs)

    @property
    def degree(self) -> int:
        return len(self.coeffs) - 1

    def __add__(self, other: Poly) -> Poly:
        a, b = self.coeffs, other.coeffs
        if len(a) < len(b):
            a, b = b, a
        return Poly(tuple(x + (b[i] if i < len(b) else 0) for i, x in enumerate(a)))

    def __neg__(self) -> Poly:
        return Poly(tuple(-x for x in self.coeffs))

    def __sub__(self, other: Poly) -> Poly:
        return self + (-other)

    def __mul__(self, other: Poly | int) -> Poly:
        if isinstance(other, int):
            return Poly(tuple(x * other for x in self.coeffs))
        if not self.coeffs or not other.coeffs:
            return Poly()
        out = [0] * (len(self.coeffs) + len(other.coeffs) - 1)
        for i, x in enumerate(self.coeffs):
            if x:
                for j, y in enumerate(other.coeffs):
                    out[i + j] += x * y
        return Poly(tuple(out))

    __rmul__ = __mul__

    def __call__(self, x: int) -> int:
        return sum(c * x**i for i, c in enumerate(self.coeffs))

    def __str__(self) -> str:
        if not self.coeffs:
            return "0"
        parts = []
        for p in range(len(self.coeffs) - 1, -1, -1):
            c = self.coeffs[p]
            if not c:
                continue
            if p == 0:
                body = str(abs(c))
            else:
                mono = "δ" if p == 1 else f"δ^{p}"
                body = mono if abs(c) == 1 else f"{abs(c)}*{mono}"
            if not parts:
                parts.append(body if c > 0 else f"-{body}")
            else:
                parts.append(("+ " if c > 0 else "- ") + body)
        return " ".join(parts)


Coefficient = Poly
ONE = Poly.const(1)


def scalar(two_exp: int, delta_exp: int) -> Poly:
    return Poly.monomial(2**two_exp, delta_exp)


# elements -------------------------------------------------------------------


class Element:
    """A finite formal sum of canonical diagrams with coefficients in Z[δ]."""

    __slots__ = ("k", "terms")

    def __init__(self, k: int, terms: Mapping[Diagram, Poly] | None = None) -> None:
        self.k = k
        self.terms: dict[Diagram, Poly] = {}
        for d, c in (terms or {}).items():
            if d.k != k:
                raise DiagramError(f"diagram has k={d.k}, element has k={k}")
            if c:
                self.terms[d] = c

    @classmethod
    def of(cls, d: Diagram, coeff: Poly | int = 1) -> Element:
        if isinstance(coeff, int):
            coeff = Poly.const(coeff)
        return cls(d.k, {d: coeff})

    @classmethod
    def zero(cls, k: int) -> Element:
        return cls(k)

    @classmethod
    def one(cls, k: int) -> Element:
        return cls.of(identity_diagram(k))

    def __bool__(self) -> bool:
        return bool(self.terms)

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, Element):
            return NotImplemented
        return self.k == other.k and self.terms == other.terms

    def __hash__(self) -> int:
        return hash((self.k, frozenset(self.terms.items())))

    def __add__(self, other: Element) -> Element:
        _check_k(self.k, other.k)
        out = dict(self.terms)
        for d, c in other.terms.items():
            out[d] = out.get(d, Poly()) + c
        return Element(self.k, out)

    def __neg__(self) -> Element:
        return Element(self.k, {d: -c for d, c in self.terms.items()})

    def __sub__(self, other: Element) -> Element:
        return self + (-other)

    def scale(self, c: Poly | int) -> Element:
        if isinstance(c, int):
            c = Poly.const(c)
        return Element(self.k, {d: x * c for d, x in self.terms.items()})

    def __mul__(self, other: Element) -> Element:
        return multiply(self, other)

    def single(self) -> tuple[Poly, Diagram]:
        """The unique term of a one-term element."""
        if len(self.terms) != 1:
            raise ValueError(f"element has {len(self.terms)} terms, expected 1")
        ((d, c),) = self.terms.items()
        return c, d

    def sorted_terms(self) -> list[tuple[Diagram, Poly]]:
        from .textio import serialize

        return sorted(self.terms.items(), key=lambda t: serialize(t[0]))

    def __repr__(self) -> str:
        if not self.terms:
            return "Element(0)"
        return " + ".join(f"({c})*[{_short(d)}]" for d, c in self.sorted_terms())


def _short(d: Diagram) -> str:
    from .textio import serialize

    return "; ".join(serialize(d).splitlines())


def _check_k(a: int, b: int) -> None:
    if a != b:
        raise DiagramError(f"mismatched box sizes k={a} and k={b}")


# stacking -------------------------------------------------------------------

# Vertical levels used to order a-value 1 interleave items in the product:
# the top factor's propagating blocks, then the glued interface, then the
# bottom factor's propagating blocks.
_TOP, _BOTTOM = 0, 1


def _edge_items(d: Diagram, edge: int, layer: int) -> list[tuple[tuple[int, int], str]]:
    """Blocks of an edge in reading order, each keyed by its vertical level."""
    m = d.matching
    level = 0 if layer == _TOP else 2
    if m.is_propagating(edge):
        if d.a_value == 1:
            return [((level, i), b) for i, (e, b) in enumerate(d.seq) if e == edge]
        w = d.word(edge)
        return [((level, 0), w)] if w else []
    w = d.word(edge)
    # a top south cup or bottom north cap sits at the interface; the two can
    # meet on one product edge in either traversal order
    return [((1, 0), w)] if w else []


def _walk(d: Diagram, v: int, layer: int):
    """Traverse the edge of ``d`` starting at ``v``; returns (end, items)."""
    u = d.mate[v]
    lo = min(u, v)
    items = _edge_items(d, lo, layer)
    if v != lo:
        items = [(key, w[::-1]) for key, w in reversed(items)]
    return u, items


def stack(top: Diagram, bottom: Diagram) -> RawDiagram:
    """The unreduced product with ``top`` placed above ``bottom``."""
    _check_k(top.k, bottom.k)
    k = top.k
    mate = [-1] * (2 * k)
    paths: dict[int, list] = {}
    seen_interface = [False] * k

    def trace(start: int) -> tuple[int, list]:
        items: list = []
        if start < k:
            layer, v = _TOP, start
        else:
            layer, v = _BOTTOM, start
        while True:
            d = top if layer == _TOP else bottom
            u, got = _walk(d, v, layer)
            items += got
            if layer == _TOP:
                if u < k:
                    return u, items
                seen_interface[u - k] = True
                layer, v = _BOTTOM, u - k
            else:
                if u >= k:
                    return u, items
                seen_interface[u] = True
                layer, v = _TOP, u + k

    for start in range(2 * k):
        if mate[start] != -1:
            continue
        end, items = trace(start)
        mate[start], mate[end] = end, start
        paths[start] = items

    loops: list[list[str]] = [[w] for w in top.loops] + [[w] for w in bottom.loops]
    for j in range(k):
        if seen_interface[j]:
            continue
        blocks: list[str] = []
        layer, v = _TOP, j + k
        while True:
            d = top if layer == _TOP else bottom
            u, got = _walk(d, v, layer)
            blocks += [w for _, w in got]
            if layer == _TOP:
                seen_interface[u - k] = True
                layer, v = _BOTTOM, u - k
            else:
                seen_interface[u] = True
                layer, v = _TOP, u + k
            if layer == _TOP and v == j + k:
                break
        loops.append(blocks)

    matching = Matching(k, tuple(mate))
    raw = RawDiagram(matching, loops=loops)
    if matching.a_value == 1:
        ranked = []
        for e, items in paths.items():
            if matching.is_propagating(e):
                keys = [key for key, _ in items]
                if keys != sorted(keys):
                    raise DiagramError("vertical order of stacked blocks is inconsistent")
                ranked += [(key, pos, e, w) for pos, (key, w) in enumerate(items)]
            else:
                raw.blocks[e] = [w for _, w in items]
        by_key: dict = {}
        for key, _, e, _ in ranked:
            by_key.setdefault(key, set()).add(e)
        if any(len(edges) > 1 for edges in by_key.values()):
            raise DiagramError("blocks on two edges share a vertical position")
        raw.seq = [(e, w) for _, _, e, w in sorted(ranked)]
    else:
        raw.blocks = {e: [w for _, w in items] for e, items in paths.items()}
    return raw


def concat(top: Diagram, bottom: Diagram) -> tuple[int, int, Diagram]:
    """``top * bottom`` as ``(two_exp, delta_exp, diagram)``."""
    return _concat_cached(top, bottom)


@lru_cache(maxsize=1 << 18)
def _concat_cached(top: Diagram, bottom: Diagram) -> tuple[int, int, Diagram]:
    return canonicalize(stack(top, bottom))


def multiply(x: Element, y: Element) -> Element:
    _check_k(x.k, y.k)
    out: dict[Diagram, Poly] = {}
    for d1, c1 in x.terms.items():
        for d2, c2 in y.terms.items():
            two, delta, d = concat(d1, d2)
            c = c1 * c2 * scalar(two, delta)
            out[d] = out.get(d, Poly()) + c
    return Element(x.k, out)


def eval_scaled(word: Iterable[int], n: int) -> tuple[int, int, Diagram]:
    """The product of simple diagrams as ``(two_exp, delta_exp, diagram)``."""
    d = identity_diagram(n + 2)
    two = delta = 0
    for i in word:
        a, b, d = concat(d, simple_diagram(i, n))
        two += a
        delta += b
    return two, delta, d


def eval_word(word: Iterable[int], n: int) -> Element:
    two, delta, d = eval_scaled(word, n)
    return Element.of(d, scalar(two, delta))


# exhaustive confluence -------------------------------------------------------


def _freeze(raw: RawDiagram):
    blocks = tuple(sorted((e, tuple(b for b in bs if b)) for e, bs in raw.blocks.items()))
    blocks = tuple((e, bs) for e, bs in blocks if bs)
    seq = tuple((e, b) for e, b in raw.seq if b)
    loops = tuple(sorted(tuple(b for b in loop if b) for loop in raw.loops))
    return blocks, seq, loops


def _moves(state) -> Iterator[tuple[int, int, tuple]]:
    """Every single reduction step: (two_exp, delta_exp, next state)."""
    blocks, seq, loops = state

    def with_blocks(i, bs):
        nb = list(blocks)
        nb[i] = (nb[i][0], bs)
        return (tuple(nb), seq, loops)

    for i, (e, bs) in enumerate(blocks):
        for j in range(len(bs) - 1):
            yield 0, 0, with_blocks(i, bs[:j] + (bs[j] + bs[j + 1],) + bs[j + 2 :])
        for j, b in enumerate(bs):
            for two, w in decor.rewrite_steps(b):
                yield two, 0, with_blocks(i, bs[:j] + (w,) + bs[j + 1 :])
    for j in range(len(seq) - 1):
        if seq[j][0] == seq[j + 1][0]:
            ns = seq[:j] + ((seq[j][0], seq[j][1] + seq[j + 1][1]),) + seq[j + 2 :]
            yield 0, 0, (blocks, ns, loops)
    for j, (e, b) in enumerate(seq):
        for two, w in decor.rewrite_steps(b):
            yield two, 0, (blocks, seq[:j] + ((e, w),) + seq[j + 1 :], loops)

    def with_loop(i, loop):
        rest = loops[:i] + loops[i + 1 :]
        if loop is None:
            return (blocks, seq, rest)
        return (blocks, seq, tuple(sorted(rest + (loop,))))

    for i, loop in enumerate(loops):
        m = len(loop)
        if m > 1:
            for j in range(m):
                if j + 1 < m:
                    nl = loop[:j] + (loop[j] + loop[j + 1],) + loop[j + 2 :]
                else:
                    nl = (loop[-1] + loop[0],) + loop[1:-1]
                yield 0, 0, with_loop(i, nl)
            for j, b in enumerate(loop):
                for two, w in decor.rewrite_steps(b):
                    yield two, 0, with_loop(i, loop[:j] + (w,) + loop[j + 1 :])
        else:
            w = loop[0] if loop else ""
            if w in ("", "B", "O"):
                yield 0, 1, with_loop(i, None)
            for two, nw in decor.cyclic_rewrite_steps(w):
                yield two, 0, with_loop(i, (nw,))


def _terminal(matching: Matching, state) -> Diagram:
    blocks, seq, loops = state
    words = tuple(sorted((e, bs[0]) for e, bs in blocks))
    return Diagram(
        matching,
        words,
        seq,
        tuple(sorted(decor.canonical_cyclic(loop[0]) for loop in loops)),
    )


def normal_forms(raw: RawDiagram) -> set[tuple[int, int, Diagram]]:
    """All end results of every maximal reduction sequence applied to ``raw``."""
    memo: dict = {}

    def explore(state) -> frozenset:
        if state in memo:
            return memo[state]
        out: set = set()
        any_move = False
        for two, delta, nxt in _moves(state):
            any_move = True
            for a, b, d in explore(nxt):
                out.add((a + two, b + delta, d))
        if not any_move:
            out.add((0, 0, _terminal(raw.matching, state)))
        memo[state] = frozenset(out)
        return memo[state]

    return set(explore(_freeze(raw)))


def check_confluence(sample: Iterable[RawDiagram]) -> bool:
    """True iff every sample has one normal form, and it agrees with canonicalize."""
    for raw in sample:
        forms = normal_forms(raw)
        if forms != {canonicalize(raw)}:
            return False
    return True
