"""
Plain-text diagram records.

Example (the product d1 d2 d1 on four strands)::

    k=4
    N 1-2 : b
    S 1-2 : b
    P 3-3' : [B]
    P 4-4'
    seq : (3:B)

Lines: ``N i-j`` and ``S i-j`` for caps and cups, ``P i-j'`` for propagating
edges, each optionally followed by ``: word`` (or ``: [b1|b2|...]`` listing
blocks).  With a-value 1 the ``seq`` line gives the top-to-bottom interleave,
each item naming a propagating edge by its north node.  ``loop : word`` may be
repeated.  Blank lines and ``#`` comments are ignored.
"""

from __future__ import annotations

import html
import re

from . import decor
from .diagram import (
    Diagram,
    DiagramError,
    Matching,
    RawDiagram,
    canonicalize,
    lr_violations,
    node_label,
)


class ParseError(DiagramError):
    def __init__(self, msg: str, line: int = 0, col: int = 0) -> None:
        self.line, self.col = line, col
        where = f"line {line}, column {col}: " if line else ""
        super().__init__(where + msg)


def _fmt_word(w: str) -> str:
    return f" : {w}" if w else ""


def serialize(d: Diagram) -> str:
    k = d.k
    m = d.matching
    lines = [f"k={k}"]
    for a, b in m.north_caps():
        lines.append(f"N {a + 1}-{b + 1}{_fmt_word(d.word(a))}")
    for a, b in m.south_cups():
        lines.append(f"S {a - k + 1}-{b - k + 1}{_fmt_word(d.word(a))}")
    for a, b in m.propagating():
        blocks = d.edge_blocks(a)
        if d.a_value == 1 and blocks:
            tail = " : [" + "|".join(blocks) + "]"
        else:
            tail = _fmt_word(d.word(a))
        lines.append(f"P {a + 1}-{b - k + 1}'{tail}")
    if d.seq:
        lines.append("seq : " + "".join(f"({e + 1}:{b})" for e, b in d.seq))
    for w in d.loops:
        lines.append(f"loop : {w}")
    return "\n".join(lines) + "\n"


_CHORD = re.compile(r"^([NSP])\s+(\d+)'?\s*-\s*(\d+)('?)\s*(?::\s*(.*))?$")
_SEQ_ITEM = re.compile(r"\((\d+)\s*:\s*([^)]*)\)")


def _parse_word(text: str, line: int, col: int) -> list[str]:
    text = text.strip()
    if text.startswith("["):
        if not text.endswith("]"):
            raise ParseError("unterminated block list", line, col)
        parts = text[1:-1].split("|")
    else:
        parts = [text]
    try:
        return [decor.check_word(p.strip()) for p in parts]
    except ValueError as exc:
        raise ParseError(str(exc), line, col) from None


def parse_raw(text: str) -> RawDiagram:
    k = None
    chords: list[tuple[int, int]] = []
    words: dict[int, list[str]] = {}
    seq_text: tuple[str, int] | None = None
    loops: list[list[str]] = []
    for ln, raw_line in enumerate(text.splitlines(), 1):
        line = raw_line.split("#", 1)[0].strip()
        if not line:
            continue
        col = raw_line.index(line[0]) + 1
        if line.startswith("k="):
            if k is not None:
                raise ParseError("duplicate k= header", ln, col)
            try:
                k = int(line[2:])
            except ValueError:
                raise ParseError(f"bad k value {line[2:]!r}", ln, col + 2) from None
            if k < 1:
                raise ParseError("k must be positive", ln, col + 2)
            continue
        if k is None:
            raise ParseError("missing k= header before diagram data", ln, col)
        if line.startswith("seq"):
            rest = line[3:].lstrip()
            if not rest.startswith(":"):
                raise ParseError("expected ':' after seq", ln, col + 3)
            seq_text = (rest[1:], ln)
            continue
        if line.startswith("loop"):
            rest = line[4:].lstrip()
            if not rest.startswith(":"):
                raise ParseError("expected ':' after loop", ln, col + 4)
            loops.append(_parse_word(rest[1:], ln, col + 5))
            continue
        mt = _CHORD.match(line)
        if not mt:
            raise ParseError(f"unrecognised line {line!r}", ln, col)
        face, i, j, prime, word = mt.groups()
        i, j = int(i), int(j)
        for x in (i, j):
            if not 1 <= x <= k:
                raise ParseError(f"node {x} out of range 1..{k}", ln, col)
        if face == "N":
            a, b = i - 1, j - 1
        elif face == "S":
            a, b = k + i - 1, k + j - 1
        else:
            if not prime:
                raise ParseError("propagating edge must end at a south node like 3'", ln, col)
            a, b = i - 1, k + j - 1
        if a == b:
            raise ParseError("an edge needs two distinct nodes", ln, col)
        a, b = min(a, b), max(a, b)
        chords.append((a, b))
        if word is not None:
            words[a] = _parse_word(word, ln, col + mt.start(5))
    if k is None:
        raise ParseError("missing k= header")
    try:
        matching = Matching.from_chords(k, chords)
    except DiagramError as exc:
        raise ParseError(str(exc)) from None
    raw = RawDiagram(matching, loops=loops)
    if seq_text is not None:
        body, ln = seq_text
        if _SEQ_ITEM.sub("", body).strip():
            raise ParseError("malformed seq items", ln, 1)
        for mt in _SEQ_ITEM.finditer(body):
            e = int(mt.group(1)) - 1
            if not 0 <= e < k:
                raise ParseError(f"seq edge {e + 1} out of range", ln, mt.start() + 1)
            raw.seq.append((e, _parse_word(mt.group(2), ln, mt.start(2) + 1)[0]))
    if matching.a_value == 1:
        prop_words = {e: ws for e, ws in words.items() if matching.is_propagating(e) and any(ws)}
        if seq_text is None:
            if len(prop_words) > 1:
                raise ParseError("a-value 1 with several decorated propagating edges needs a seq line")
            raw.seq = [(e, w) for e, ws in prop_words.items() for w in ws]
        else:
            for e, ws in prop_words.items():
                listed = [b for f, b in raw.seq if f == e]
                if "".join(ws) != "".join(listed):
                    raise ParseError(
                        f"blocks of edge {node_label(k, e)} disagree with the seq line"
                    )
        raw.blocks = {e: ws for e, ws in words.items() if e not in prop_words}
    else:
        raw.blocks = words
    return raw


def parse_diagram(text: str, check_lr: bool = True) -> Diagram:
    """Parse one diagram record into canonical form.

    Unreduced input is accepted only when reducing it needs no scalar.
    """
    raw = parse_raw(text)
    try:
        two, delta, d = canonicalize(raw)
    except DiagramError as exc:
        raise ParseError(str(exc)) from None
    if two or delta:
        raise ParseError(
            f"input is 2^{two}·δ^{delta} times a canonical diagram; write the reduced form"
        )
    if check_lr:
        bad = lr_violations(d)
        if bad:
            raise ParseError("not LR-decorated: " + "; ".join(bad))
    return d


# rendering ------------------------------------------------------------------


def render(d: Diagram, mode: str = "ascii") -> str:
    if mode == "ascii":
        return render_ascii(d)
    if mode == "svg":
        return render_svg(d)
    raise ValueError(f"unknown render mode {mode!r}")


def _header(d: Diagram, prefix: str) -> list[str]:
    return [prefix + line for line in serialize(d).splitlines()]


def render_ascii(d: Diagram) -> str:
    """Text drawing: caps above, cups below, one column per propagating edge."""
    k, m = d.k, d.matching
    width = 4 * k
    out = _header(d, "# ")
    out.append(" ".join(f"{i + 1:<3}" for i in range(k)).rstrip())
    caps = sorted(m.north_caps(), key=lambda c: c[1] - c[0])
    for a, b in caps:
        row = [" "] * width
        for x in range(4 * a, 4 * b + 1):
            row[x] = "-"
        row[4 * a] = row[4 * b] = "+"
        w = decor.pretty(d.word(a))
        mid = (4 * a + 4 * b) // 2 - len(w) // 2
        for i, c in enumerate(w):
            row[mid + i] = c
        out.append("".join(row).rstrip())
    props = m.propagating()
    if props:
        out.append("  ".join(f"{node_label(k, a)}->{node_label(k, b)}" for a, b in props))
        if d.a_value == 1:
            for e, b in d.seq:
                col = 4 * [p[0] for p in props].index(e)
                out.append(" " * col + "|" + decor.pretty(b))
        else:
            for a, b in props:
                if d.word(a):
                    out.append(f"{node_label(k, a)}->{node_label(k, b)}: {decor.pretty(d.word(a))}")
    for w in d.loops:
        out.append(f"( {decor.pretty(w)} )")
    cups = sorted(m.south_cups(), key=lambda c: c[1] - c[0], reverse=True)
    for a, b in cups:
        ia, ib = a - k, b - k
        row = [" "] * width
        for x in range(4 * ia, 4 * ib + 1):
            row[x] = "_"
        row[4 * ia] = row[4 * ib] = "+"
        w = decor.pretty(d.word(a))
        mid = (4 * ia + 4 * ib) // 2 - len(w) // 2
        for i, c in enumerate(w):
            row[mid + i] = c
        out.append("".join(row).rstrip())
    out.append(" ".join(f"{i + 1}'{'':<2}" for i in range(k)).rstrip())
    return "\n".join(out) + "\n"


def render_svg(d: Diagram) -> str:
    k, m = d.k, d.matching
    step, top, bottom = 60, 40, 280
    width = step * (k + 1)
    bottom += 20 * k
    height = bottom + 40
    parts = [f'<svg xmlns="http://www.w3.org/2000/svg" width="{width}" height="{height}">']
    parts += [f"<!-- {html.escape(line)} -->" for line in serialize(d).splitlines()]
    parts.append(f'<rect x="10" y="{top}" width="{width - 20}" height="{bottom - top}" '
                 'fill="none" stroke="#888"/>')

    def x(i: int) -> int:
        return step * (i + 1)

    def label(px: float, py: float, w: str) -> None:
        if w:
            parts.append(f'<text x="{px:.1f}" y="{py:.1f}" text-anchor="middle" '
                         f'font-size="14">{html.escape(decor.pretty(w))}</text>')

    for a, b in m.north_caps():
        depth = 20 * (b - a)
        parts.append(f'<path d="M {x(a)} {top} C {x(a)} {top + depth}, {x(b)} {top + depth}, '
                     f'{x(b)} {top}" fill="none" stroke="black"/>')
        label((x(a) + x(b)) / 2, top + 0.75 * depth + 14, d.word(a))
    for a, b in m.south_cups():
        ia, ib = a - k, b - k
        depth = 20 * (ib - ia)
        parts.append(f'<path d="M {x(ia)} {bottom} C {x(ia)} {bottom - depth}, {x(ib)} '
                     f'{bottom - depth}, {x(ib)} {bottom}" fill="none" stroke="black"/>')
        label((x(ia) + x(ib)) / 2, bottom - 0.75 * depth - 4, d.word(a))
    props = m.propagating()
    for a, b in props:
        parts.append(f'<line x1="{x(a)}" y1="{top}" x2="{x(b - k)}" y2="{bottom}" stroke="black"/>')
    mid_top, mid_bot = top + 20 * k // 2 + 20, bottom - 20 * k // 2 - 20
    if d.a_value == 1 and d.seq:
        gap = (mid_bot - mid_top) / (len(d.seq) + 1)
        for idx, (e, blk) in enumerate(d.seq):
            f = m.mate[e]
            y = mid_top + gap * (idx + 1)
            t = (y - top) / (bottom - top)
            px = x(e) + (x(f - k) - x(e)) * t
            label(px + 12, y, blk)
    else:
        for a, b in props:
            px = (x(a) + x(b - k)) / 2
            label(px + 12, (top + bottom) / 2, d.word(a))
    # loops sit in a row in the middle band, between the caps and the cups
    if d.loops:
        slot = (width - 40) / len(d.loops)
        rx = min(40.0, slot / 2 - 4)
        cy = (top + bottom) / 2
        for idx, w in enumerate(d.loops):
            cx = 20 + slot * (idx + 0.5)
            parts.append(f'<ellipse cx="{cx:.1f}" cy="{cy:.1f}" rx="{rx:.1f}" ry="14" '
                         'fill="none" stroke="black"/>')
            label(cx, cy + 5, w)
    for i in range(k):
        parts.append(f'<text x="{x(i)}" y="{top - 8}" text-anchor="middle" font-size="11">{i + 1}</text>')
        parts.append(f'<text x="{x(i)}" y="{bottom + 16}" text-anchor="middle" '
                     f'font-size="11">{i + 1}\'</text>')
    parts.append("</svg>")
    return "\n".join(parts) + "\n"


def header_from_render(text: str) -> str:
    """Recover the diagram record embedded in a rendering's comments."""
    lines = []
    for line in text.splitlines():
        if line.startswith("# "):
            lines.append(line[2:])
        elif line.startswith("<!-- ") and line.endswith(" -->"):
            lines.append(html.unescape(line[5:-4]))
    return "\n".join(lines) + "\n"
