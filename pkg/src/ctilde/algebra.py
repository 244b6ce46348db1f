"""
The type affine C layer: generators, admissibility, factorization and the
type A and B sub-structures.

Nodes follow :mod:`ctilde.diagram`: north ``i`` is ``i - 1`` and south ``i'``
is ``k + i - 1`` with ``k = n + 2``.
"""

from __future__ import annotations

import heapq

from dataclasses import dataclass
from typing import Iterable, Optional

from . import decor
from .diagram import (
    Diagram,
    DiagramError,
    Matching,
    identity_diagram,
    lr_violations,
    node_label,
    simple_diagram,
)
from .engine import Element, concat, eval_scaled, eval_word, multiply, scalar

__all__ = [
    "AdmissibilityReport",
    "NotAdmissible",
    "simple_diagram",
    "is_admissible",
    "factorize",
    "check_generator_relations",
    "subalgebra_B",
    "type_A_product",
    "reachable",
    "admissible_universe",
    "snake_word",
    "unique_edge_word",
    "pump_word",
    "odd_word",
    "even_word",
    "loop_free_count",
]


class NotAdmissible(DiagramError):
    pass


@dataclass(frozen=True)
class AdmissibilityReport:
    verdict: bool
    axiom: Optional[str] = None
    detail: str = ""

    def __bool__(self) -> bool:
        return self.verdict


_OK = AdmissibilityReport(True)


def _fail(axiom: str, detail: str) -> AdmissibilityReport:
    return AdmissibilityReport(False, axiom, detail)


# admissibility ----------------------------------------------------------------


class _Walls:
    """Edges at the four wall nodes 1, 1', n+2, (n+2)' of a diagram."""

    def __init__(self, d: Diagram) -> None:
        k = d.k
        self.d = d
        self.n1, self.s1, self.nk, self.sk = 0, k, k - 1, 2 * k - 1

    def edge(self, v: int) -> int:
        return min(v, self.d.mate[v])


def _dots(d: Diagram) -> list[tuple[int, int, str]]:
    """Every single • or ∘ on a non-loop edge as (edge, index in word, symbol)."""
    out = []
    for e, w in d._word_map.items():
        for j, c in enumerate(w):
            if c in "bo":
                out.append((e, j, c))
    return out


def _check_dots(d: Diagram, allowed: set[tuple[int, int, str]], axiom: str) -> AdmissibilityReport:
    for e, j, c in _dots(d):
        if (e, j, c) not in allowed:
            return _fail(
                axiom,
                f"{decor.pretty(c)} at position {j + 1} of the edge at {node_label(d.k, e)}"
                " is not permitted",
            )
    return _OK


def _only_single(d: Diagram, edge: int, sym: str, axiom: str) -> AdmissibilityReport:
    w = d.word(edge)
    if w != sym:
        return _fail(
            axiom,
            f"wall edge at {node_label(d.k, edge)} must carry exactly {decor.pretty(sym)},"
            f" found {decor.pretty(w) or 'nothing'}",
        )
    return _OK


def is_admissible(d: Diagram) -> AdmissibilityReport:
    """Check the axioms C1 to C5 (see the README for the exact reading used)."""
    bad = lr_violations(d)
    if bad:
        return _fail("LR", "; ".join(bad))
    for w in d.loops:
        if w != "BO":
            return _fail("C1", f"loop {decor.pretty(w)} is not the ▲▽ loop")
    props = d.matching.propagating()
    if d.a_value == 0:
        return _OK
    if not props:
        return _check_undammed(d)
    if len(props) == 1:
        return _check_unique_propagating(d, props[0])
    if d.a_value > 1:
        return _check_dammed(d, props)
    return _check_a_value_one(d, props)


def _check_undammed(d: Diagram) -> AdmissibilityReport:
    w = _Walls(d)
    allowed = set()
    for v in (w.n1, w.s1):
        e = w.edge(v)
        if not d.word(e).startswith("b"):
            return _fail("C2", f"edge at {node_label(d.k, v)} must begin with •")
        allowed.add((e, 0, "b"))
    for v in (w.nk, w.sk):
        e = w.edge(v)
        word = d.word(e)
        if not word.endswith("o"):
            return _fail("C2", f"edge at {node_label(d.k, v)} must end with ∘")
        allowed.add((e, len(word) - 1, "o"))
    return _check_dots(d, allowed, "C2")


def _check_unique_propagating(d: Diagram, p: tuple[int, int]) -> AdmissibilityReport:
    k = d.k
    w = _Walls(d)
    top, bot = p
    word = d.word(top)
    head = "b" if top == w.n1 else "o" if top == w.nk else ""
    tail = "b" if bot == w.s1 else "o" if bot == w.sk else ""
    allowed = set()
    same_wall = head and head == tail
    if same_wall and len(word) <= 1:
        # an edge from a wall node straight down to the same wall is either bare
        # or carries the single triangle formed by its two merged dots
        if word not in ("", head.upper()):
            return _fail("C3", f"single decoration on the wall edge must be {decor.pretty(head.upper())}")
    else:
        core = word
        if head:
            if not core.startswith(head):
                return _fail("C3", f"propagating edge from {node_label(k, top)} must begin with {decor.pretty(head)}")
            allowed.add((top, 0, head))
            core = core[1:]
        if tail:
            if not core.endswith(tail):
                return _fail("C3", f"propagating edge to {node_label(k, bot)} must end with {decor.pretty(tail)}")
            allowed.add((top, len(word) - 1, tail))
            core = core[:-1]
        if any(c not in "BO" for c in core):
            return _fail("C3", "the propagating edge may only carry ▲ and ▽ away from its ends")
    for v, sym in ((w.n1, "b"), (w.s1, "b"), (w.nk, "o"), (w.sk, "o")):
        if d.matching.is_propagating(v):
            continue
        e = w.edge(v)
        r = _only_single(d, e, sym, "C3")
        if not r:
            return r
        allowed.add((e, 0, sym))
    return _check_dots(d, allowed, "C3")


def _check_dammed(d: Diagram, props: list[tuple[int, int]]) -> AdmissibilityReport:
    w = _Walls(d)
    allowed = set()
    for (a, b), sym in (((w.n1, w.s1), "b"), ((w.nk, w.sk), "o")):
        if d.mate[a] == b:
            if d.word(a) not in ("", sym.upper()):
                return _fail(
                    "C4",
                    f"vertical wall edge at {node_label(d.k, a)} may only carry a single"
                    f" {decor.pretty(sym.upper())}",
                )
            continue
        for v in (a, b):
            e = w.edge(v)
            r = _only_single(d, e, sym, "C4")
            if not r:
                return r
            allowed.add((e, 0, sym))
    return _check_dots(d, allowed, "C4")


def _end_pattern(
    d: Diagram, edge: int, dot: str, tri: str, at_top: bool, at_bottom: bool
) -> Optional[str]:
    """Check the blocks on an outer propagating edge of an a-value 1 diagram.

    ``at_top``/``at_bottom`` say whether the edge's end meets a cap or cup at the
    wall, which forces a dot block at that extreme.  Returns an error message or
    None.
    """
    seq = d.seq
    idx = [j for j, (e, _) in enumerate(seq) if e == edge]
    blocks = [seq[j][1] for j in idx]
    inner = blocks
    if at_top:
        if not blocks or blocks[0] != dot:
            return f"expected a {decor.pretty(dot)} block at the top of the edge"
        if idx[0] != 0:
            return f"the top {decor.pretty(dot)} must be the highest propagating decoration"
        inner = inner[1:]
    if at_bottom:
        if not inner or inner[-1] != dot:
            return f"expected a {decor.pretty(dot)} block at the bottom of the edge"
        if idx[-1] != len(seq) - 1:
            return f"the bottom {decor.pretty(dot)} must be the lowest propagating decoration"
        inner = inner[:-1]
    if any(b != tri for b in inner):
        return f"inner blocks must each be a single {decor.pretty(tri)}"
    return None


def _check_a_value_one(d: Diagram, props: list[tuple[int, int]]) -> AdmissibilityReport:
    k = d.k
    w = _Walls(d)
    left, right = props[0], props[-1]
    allowed = set()
    for v, sym in ((w.n1, "b"), (w.s1, "b"), (w.nk, "o"), (w.sk, "o")):
        if d.matching.is_propagating(v):
            continue
        e = w.edge(v)
        r = _only_single(d, e, sym, "C5")
        if not r:
            return r
        allowed.add((e, 0, sym))
    ends = (
        (left, "b", "B", w.n1, w.s1, "western"),
        (right, "o", "O", w.nk, w.sk, "eastern"),
    )
    has_open = any(decor.is_open(c) for _, c in d.decorations())
    has_closed = any(decor.is_closed(c) for _, c in d.decorations())
    for (top, bot), dot, tri, wn, ws, name in ends:
        at_top, at_bottom = top != wn, bot != ws
        blocks = d.edge_blocks(top)
        if at_top and at_bottom and blocks in ([], [tri]):
            # the bare generator shape, or its two dots merged into one
            # triangle; both need the other decoration type to be absent
            if (dot == "b" and has_open) or (dot == "o" and has_closed):
                return _fail("C5", f"{name} end has no dots to bracket the other type")
            continue
        msg = _end_pattern(d, top, dot, tri, at_top, at_bottom)
        if msg:
            return _fail("C5", f"{name} end: {msg}")
        pos = [j for j, (e, b) in enumerate(d.seq) if e == top]
        for j in pos:
            if d.seq[j][1] == dot:
                allowed.add((top, sum(len(d.seq[i][1]) for i in pos if i < j), dot))
    counts = [len(d.edge_blocks(left[0])), len(d.edge_blocks(right[0]))]
    if abs(counts[0] - counts[1]) > 1:
        return _fail("C5", "closed and open block counts on the outer edges differ by more than 1")
    for e, _ in d.seq:
        if e not in (left[0], right[0]):
            return _fail("C5", f"inner propagating edge at {node_label(k, e)} is decorated")
    return _check_dots(d, allowed, "C5")


# bounded universes -------------------------------------------------------------


def planar_matchings(k: int) -> list[Matching]:
    """All non-crossing perfect matchings of the 2k nodes of the k-box."""
    order = list(range(k)) + list(range(2 * k - 1, k - 1, -1))

    def build(lo: int, hi: int) -> list[list[tuple[int, int]]]:
        if lo > hi:
            return [[]]
        out = []
        for j in range(lo + 1, hi + 1, 2):
            for inner in build(lo + 1, j - 1):
                for outer in build(j + 1, hi):
                    out.append([(order[lo], order[j])] + inner + outer)
        return out

    return [Matching.from_chords(k, chords) for chords in build(0, 2 * k - 1)]


def _alternating_words(max_len: int, closed: bool, opened: bool) -> list[str]:
    """Reduced words using the permitted symbol types, up to ``max_len``."""
    out = [""]
    frontier = [""]
    for _ in range(max_len):
        nxt = []
        for w in frontier:
            for c in "bBoO":
                if (c in "bB" and not closed) or (c in "oO" and not opened):
                    continue
                if w and decor.same_type(w[-1], c):
                    continue
                nxt.append(w + c)
        out += nxt
        frontier = nxt
    return out


def _loop_words(max_len: int, mixed: bool) -> list[str]:
    words = {"b", "o"} if max_len >= 1 else set()
    if mixed:
        for w in _alternating_words(max_len, True, True):
            if len(w) >= 2 and len(w) % 2 == 0:
                words.add(decor.canonical_cyclic(w))
    return sorted(words)


def _multisets(items: list[str], budget: int, start: int = 0):
    """Multisets of loop words whose total cost (length + 1 each) fits the budget."""
    yield ()
    for j in range(start, len(items)):
        cost = len(items[j]) + 1
        if cost <= budget:
            for rest in _multisets(items, budget - cost, j):
                yield (items[j],) + rest


def lr_diagrams(n: int, max_height: int) -> list[Diagram]:
    """Every canonical LR-decorated diagram on n+2 strands with height <= max_height."""
    from itertools import product

    from .diagram import Side, _weakly_left_of, _weakly_right_of, check_canonical, is_exposed

    k = n + 2
    out = []
    for m in planar_matchings(k):
        props = m.propagating()
        chords = m.chords()
        allowed = {}
        for c in chords:
            closed = is_exposed(m, c, Side.LEFT) and (
                not props or _weakly_left_of(k, c, props[0])
            )
            opened = is_exposed(m, c, Side.RIGHT) and (
                not props or _weakly_right_of(k, c, props[-1])
            )
            if m.a_value == 0:
                closed = opened = False
            if m.is_propagating(c[0]) and len(props) == 1:
                words = _alternating_words(max_height, closed, opened)
            else:
                words = [a + b for a in ("", "b", "B") if closed or not a
                         for b in ("", "o", "O") if opened or not b]
                if m.is_propagating(c[0]):
                    words = [w for w in words if len(w) <= 1]
            allowed[c[0]] = [w for w in words if len(w) <= max_height]
        loop_words = _loop_words(max_height - 1, not props)
        a1 = m.a_value == 1
        fixed = [c[0] for c in chords if not (a1 and m.is_propagating(c[0]))]
        for choice in product(*(allowed[e] for e in fixed)):
            used = sum(map(len, choice))
            if used > max_height:
                continue
            words = tuple((e, w) for e, w in zip(fixed, choice) if w)
            seqs = [()]
            if a1:
                seqs = list(_interleaves(
                    [(p[0], [w for w in allowed[p[0]] if w]) for p in props],
                    max_height - used,
                ))
            for seq in seqs:
                rest = max_height - used - sum(len(b) for _, b in seq)
                for loops in _multisets(loop_words, rest):
                    d = Diagram(m, tuple(sorted(words)), seq, tuple(sorted(loops)))
                    check_canonical(d)
                    if not lr_violations(d):
                        out.append(d)
    return out


def _interleaves(options: list[tuple[int, list[str]]], budget: int):
    """Sequences of (edge, block) with no two consecutive items on one edge."""
    yield ()
    for e, blocks in options:
        for b in blocks:
            if len(b) <= budget:
                for rest in _interleaves(options, budget - len(b)):
                    if not rest or rest[0][0] != e:
                        yield ((e, b),) + rest


# factorization ------------------------------------------------------------------
#
# If d = d_i d' then the north face of d contains the cap {i, i+1} of d_i, and
# d is d' with its north nodes i and i+1 joined through the decorated cup of
# d_i.  Undoing that join means cutting one edge (or loop) of d where it passes
# under the cap and reattaching the two halves to nodes i and i+1.  Every
# candidate d' is confirmed by multiplying it back, so the peeling never relies
# on the case analysis being complete; it only has to propose the right cut.


def _cup_symbol(i: int, n: int) -> str:
    return "b" if i == 1 else "o" if i == n + 1 else ""


def _splits(word: str, sym: str) -> Iterable[tuple[str, str]]:
    """Pairs (A, B) of reduced words with A + sym + B reducing to ``word`` exactly."""
    if not sym:
        for p in range(len(word) + 1):
            yield word[:p], word[p:]
        for p, c in enumerate(word):
            if c in "BO":
                # ▲ = •• and ▽ = ∘∘ with no scalar
                yield word[:p] + c.lower(), c.lower() + word[p + 1 :]
        return
    for p, c in enumerate(word):
        if c == sym:
            yield word[:p], word[p + 1 :]
        elif c == sym.upper():
            yield word[:p] + sym, word[p + 1 :]
            yield word[:p], sym + word[p + 1 :]


def _cyclic_splits(loop: str, sym: str) -> set[str]:
    """Cap words x whose loop with the cup symbol reduces exactly to ``loop``."""
    out = set()
    variants = set()
    for w in (loop, loop[::-1]):
        for r in range(len(w)):
            variants.add(w[r:] + w[:r])
    for v in variants:
        for a, b in _splits(v, sym) if sym else [(v, "")]:
            x = b + a
            if decor.is_basis_word(x):
                red = decor.reduce_cyclic(x + sym)
                if isinstance(red, decor.IrreducibleLoop) and red == decor.IrreducibleLoop(0, loop):
                    out.add(x)
    return out


def _block_options(word: str) -> list[list[str]]:
    """Ways to write a reduced word as interleave blocks that conjoin back to it exactly."""
    if not word:
        return [[]]
    out = [[word]]
    if len(word) == 1 and word in "BO":
        out.append([word.lower(), word.lower()])
    if len(word) > 1:
        # split between symbols of different types (never merges)
        for p in range(1, len(word)):
            for rest in _block_options(word[p:]):
                out.append([word[:p]] + rest)
    return out


def _seq_candidates(m: Matching, words: dict[int, str], fixed_top: list[tuple[int, str]] | None = None):
    """Interleave sequences for an a-value 1 matching realizing the given edge words."""
    props = [p[0] for p in m.propagating()]
    options = {e: _block_options(words.get(e, "")) for e in props}

    def rec(remaining: dict[int, list[str]], last: int | None):
        if all(not v for v in remaining.values()):
            yield ()
            return
        for e, blocks in remaining.items():
            if blocks and e != last:
                nxt = dict(remaining)
                nxt[e] = blocks[1:]
                for rest in rec(nxt, e):
                    yield ((e, blocks[0]),) + rest

    from itertools import product

    for choice in product(*(options[e] for e in props)):
        yield from rec(dict(zip(props, choice)), None)


def _measure(d: Diagram) -> tuple[int, int]:
    disp = 0
    k = d.k
    for a, b in d.chords():
        pa = a if a < k else a - k
        pb = b if b < k else b - k
        disp += abs(pa - pb)
    return (2 * _height(d) + disp, len(d.loops))


def _height(d: Diagram) -> int:
    from .diagram import height

    return height(d)


def peel_candidates(d: Diagram, i: int, n: int) -> list[Diagram]:
    """Diagrams d' with d_i d' = d exactly (unit coefficient)."""
    k = n + 2
    a = i - 1
    m = d.matching
    if m.mate[a] != a + 1:
        return []
    sym = _cup_symbol(i, n)
    if d.word(a) != sym:
        return []
    base_words = {e: w for e, w in d._word_map.items() if e != a}
    if d.a_value == 1:
        # propagating words live in seq; keep only non-propagating ones here
        base_words = {e: w for e, w in d.words if e != a}
    raw: list[tuple[Matching, dict[int, str], tuple, tuple[str, ...]]] = []
    raw_seq: list[Diagram] = []
    # a loop that passed under the cap came from a cap {i, i+1} of d'
    for loop in sorted(set(d.loops)):
        rest = list(d.loops)
        rest.remove(loop)
        for x in _cyclic_splits(loop, sym):
            words = dict(base_words)
            if x:
                words[a] = x
            raw.append((m, words, d.seq, tuple(rest)))
    # otherwise an edge passed under the cap; cut it and reattach both halves
    for f in d.chords():
        if f[0] == a:
            continue
        if d.a_value == 1 and m.is_propagating(f[0]):
            raw_seq.extend(_peel_through_seq(d, f, a, sym))
            continue
        full = d.word(f[0])
        for x_end, y_end in (f, f[::-1]):
            chords = [c for c in d.chords() if c != f and c[0] != a]
            chords += [tuple(sorted((x_end, a))), tuple(sorted((a + 1, y_end)))]
            try:
                mt = Matching.from_chords(k, chords)
            except DiagramError:
                continue
            oriented = full if x_end < y_end else full[::-1]
            for wa, wb in _splits(oriented, sym):
                words = {e: w for e, w in base_words.items() if e != f[0]}
                g1, g2 = min(x_end, a), min(a + 1, y_end)
                words[g1] = wa if x_end < a else wa[::-1]
                words[g2] = wb if a + 1 < y_end else wb[::-1]
                words = {e: w for e, w in words.items() if w}
                raw.append((mt, words, None, d.loops))
    out = []
    seen = set()
    realized = [c for mt, words, seq, loops in raw for c in _realize(mt, words, seq, loops, d)]
    for cand in realized + raw_seq:
        if cand in seen:
            continue
        seen.add(cand)
        two, delta, prod = concat(simple_diagram(i, n), cand)
        if (two, delta, prod) == (0, 0, d):
            out.append(cand)
    return out


def _peel_through_seq(d: Diagram, f: tuple[int, int], a: int, sym: str) -> list[Diagram]:
    """Peels of an a-value 1 diagram where the cup of d_i lies on propagating edge f.

    Reading f downward from its north end t: the cap word c of d', the cup
    symbol, then the propagating part of d'.  The product ranks interface items
    above every item of the lower factor, so c·sym opens the interleave.
    """
    k = d.k
    t, s = f
    out = []
    for near, far in ((a, a + 1), (a + 1, a)):
        chords = [c for c in d.chords() if c != f and c[0] != a]
        cap = tuple(sorted((t, near)))
        prop = tuple(sorted((far, s)))
        try:
            mt = Matching.from_chords(k, chords + [cap, prop])
        except DiagramError:
            continue
        if mt.a_value != 1:
            continue
        flat = {e: w for e, w in d.words if e != a}
        options: list[tuple[str, tuple]] = []
        rest_seq = [(prop[0] if e == f[0] else e, b) for e, b in d.seq]
        if not sym:
            options.append(("", tuple(rest_seq)))
        if rest_seq and rest_seq[0][0] == prop[0]:
            b0 = rest_seq[0][1]
            for c, r in _splits(b0, sym):
                if not c and not sym:
                    continue
                if not (decor.is_basis_word(c) and decor.is_basis_word(r)):
                    continue
                tail = rest_seq[1:]
                options.append((c, tuple(([(prop[0], r)] if r else []) + tail)))
        for c, seq in options:
            words = dict(flat)
            if c:
                words[cap[0]] = c if t == cap[0] else c[::-1]
            out.append(Diagram(mt, tuple(sorted(words.items())), seq, tuple(sorted(d.loops))))
    return out


def _realize(mt: Matching, words: dict[int, str], seq, loops, d: Diagram):
    """Canonical diagrams for a candidate matching and edge words."""
    loops = tuple(sorted(loops))
    for w in words.values():
        if not decor.is_basis_word(w):
            return
    if mt.a_value == 0:
        if not words:
            yield Diagram(mt, (), (), loops)
        return
    if mt.a_value != 1:
        yield Diagram(mt, tuple(sorted(words.items())), (), loops)
        return
    flat = {e: w for e, w in words.items() if not mt.is_propagating(e)}
    prop_words = {e: w for e, w in words.items() if mt.is_propagating(e)}
    if seq is not None and d.a_value == 1 and mt == d.matching:
        yield Diagram(mt, tuple(sorted(flat.items())), seq, loops)
        return
    if d.a_value == 1:
        # propagating items of d' are those of d with the junction removed
        yield from _realize_from_seq(mt, flat, prop_words, d, loops)
        return
    for s in _seq_candidates(mt, prop_words):
        yield Diagram(mt, tuple(sorted(flat.items())), s, loops)


def _realize_from_seq(mt, flat, prop_words, d: Diagram, loops):
    """Interleaves of d' compatible with the a-value 1 interleave of d."""
    # d's items keep their order; only the edge carrying the junction changes.
    # Try every interleave of d' whose edge words match and keep the ones that
    # multiply back correctly (checked by the caller).
    yield from (
        Diagram(mt, tuple(sorted(flat.items())), s, loops)
        for s in _seq_candidates(mt, prop_words)
    )


def factorize(d: Diagram, n: int | None = None) -> list[int]:
    """A generator word w with eval_word(w) = 1·d exactly."""
    if n is None:
        n = d.k - 2
    if d.k != n + 2:
        raise DiagramError(f"diagram has k={d.k}, expected {n + 2}")
    report = is_admissible(d)
    if not report:
        raise NotAdmissible(f"{report.axiom}: {report.detail}")
    word = _peel(d, n)
    if word is None:
        raise NotAdmissible("no factorization found")
    return word


def _peel(d: Diagram, n: int, budget: int = 200000) -> Optional[list[int]]:
    """Best-first search over verified peels d = d_i·d', smallest measure first.

    A peel can leave the measure unchanged (d_1d_2d_1 peels to d_2d_1), and
    rarely a verified peel is longer than d, so a strictly decreasing measure
    is not enough; the visited set keeps the search finite.
    """
    start = d
    parent: dict[Diagram, tuple[Optional[Diagram], int]] = {start: (None, 0)}
    heap = [(_measure(start), 0, start)]
    tick = 0
    while heap and tick < budget:
        _, _, cur = heapq.heappop(heap)
        if cur.a_value == 0 and not cur.loops:
            word = []
            while parent[cur][0] is not None:
                prev, i = parent[cur]
                word.append(i)
                cur = prev
            return word[::-1]
        for i in range(1, n + 2):
            for cand in peel_candidates(cur, i, n):
                if cand in parent or not is_admissible(cand):
                    continue
                parent[cand] = (cur, i)
                tick += 1
                heapq.heappush(heap, (_measure(cand), tick, cand))
    return None


# word families ------------------------------------------------------------------


def odd_word(n: int) -> list[int]:
    """d_1 d_3 ⋯, the product of the odd-indexed generators."""
    return list(range(1, n + 2, 2))


def even_word(n: int) -> list[int]:
    """d_2 d_4 ⋯, the product of the even-indexed generators."""
    return list(range(2, n + 2, 2))


def snake_word(n: int, k: int) -> list[int]:
    """(d_z1 d_z2)^k d_z1 d_{n+1} with z1 = 1..n and z2 = n+1..2.

    Gives an a-value 1 diagram whose outer propagating edges carry k ▲ and
    k ▽ blocks between their end dots.
    """
    z1 = list(range(1, n + 1))
    z2 = list(range(n + 1, 1, -1))
    return (z1 + z2) * k + z1 + [n + 1]


def unique_edge_word(n: int, k: int) -> list[int]:
    """(d_E d_O)^k d_E for odd n: one propagating edge with an alternating word."""
    if n % 2 == 0:
        raise ValueError("a single propagating edge needs n odd")
    return (even_word(n) + odd_word(n)) * k + even_word(n)


def pump_word(n: int, k: int) -> list[int]:
    """(d_{n+1} d_1 d_3 ⋯ d_{n-1} d_2 d_4 ⋯ d_n)^k d_O for even n: k ▲▽ loops."""
    if n % 2:
        raise ValueError("loop pumping needs n even")
    cycle = [n + 1] + odd_word(n)[:-1] + even_word(n)
    return cycle * k + odd_word(n)


# relations and sub-structures ---------------------------------------------------


def _relation_pairs(n: int):
    """(i, j, m) for every unordered generator pair of the affine C graph."""
    for i in range(1, n + 2):
        for j in range(i + 1, n + 2):
            if j - i > 1:
                m = 2
            elif (i, j) in ((1, 2), (n, n + 1)):
                m = 4
            else:
                m = 3
            yield i, j, m


def check_generator_relations(n: int, generators: Optional[dict[int, Diagram]] = None) -> bool:
    """Verify the four relation families by direct multiplication.

    ``generators`` may override the simple diagrams, which is how mutation
    tests feed in a corrupted d_i.
    """
    gens = {i: simple_diagram(i, n) for i in range(1, n + 2)}
    if generators:
        gens.update(generators)

    def prod(*idx: int) -> Element:
        out = Element.one(n + 2)
        for i in idx:
            out = multiply(out, Element.of(gens[i]))
        return out

    for i in range(1, n + 2):
        if prod(i, i) != Element.of(gens[i]).scale(scalar(0, 1)):
            return False
    for i, j, m in _relation_pairs(n):
        if m == 2:
            ok = prod(i, j) == prod(j, i)
        elif m == 3:
            ok = prod(i, j, i) == prod(i) and prod(j, i, j) == prod(j)
        else:
            ok = prod(i, j, i, j) == prod(i, j).scale(scalar(1, 0)) and (
                prod(j, i, j, i) == prod(j, i).scale(scalar(1, 0))
            )
        if not ok:
            return False
    return True


def subalgebra_B(n: int, side: str = "B") -> list[int]:
    """Generator indices of the type B subalgebra (``B``) or its mirror (``B'``)."""
    if n < 2:
        raise ValueError("n must be at least 2")
    if side == "B":
        return list(range(1, n + 1))
    if side in ("B'", "B′"):
        return list(range(2, n + 2))
    raise ValueError(f"unknown side {side!r}")


def type_A_product(d: Diagram, d2: Diagram) -> tuple[int, Diagram]:
    """Undecorated concatenation where every closed loop becomes a factor δ."""
    for x in (d, d2):
        if x.words or x.seq or x.loops:
            raise ValueError("type A products take undecorated, loop-free diagrams")
    two, delta, out = concat(d, d2)
    assert two == 0
    return delta, out


def loop_free_count(k: int) -> int:
    """Number of undecorated loop-free diagrams on k strands, by enumeration."""
    return len(planar_matchings(k))


def reachable(n: int, max_len: int) -> dict[Diagram, tuple[int, ...]]:
    """Scalar-stripped diagrams of all words of length <= max_len, each with a shortest word.

    Scalars are central, so the stripped product d·d_i depends only on the
    stripped d and a breadth-first search over diagrams covers every word.
    """
    gens = [simple_diagram(i, n) for i in range(1, n + 2)]
    start = identity_diagram(n + 2)
    seen = {start: ()}
    frontier = [start]
    for _ in range(max_len):
        nxt = []
        for d in frontier:
            for i, g in enumerate(gens, 1):
                p = concat(d, g)[2]
                if p not in seen:
                    seen[p] = seen[d] + (i,)
                    nxt.append(p)
        frontier = nxt
    return seen


def admissible_universe(n: int, max_height: int) -> set[Diagram]:
    """Every canonical LR diagram with height <= max_height that passes is_admissible."""
    return {d for d in lr_diagrams(n, max_height) if is_admissible(d)}
