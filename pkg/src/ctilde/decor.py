"""
The decoration algebra: words over {•, ▲, ∘, ▽} modulo

    •• = ▲,   ••• = 2•,   ∘∘ = ▽,   ∘∘∘ = 2∘.

Words are plain strings in the ASCII encoding ``b`` = •, ``B`` = ▲, ``o`` = ∘,
``O`` = ▽.  Closed symbols (``b``, ``B``) never interact with open ones
(``o``, ``O``), so each maximal same-type run collapses independently.  Writing
``•`` as x and ``▲`` as x², a closed run of total degree d equals x^d, and
x^d = 2^((d-1)//2) · (x if d is odd else x²).  The same holds for open runs.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterator, NamedTuple, Union

CLOSED = frozenset("bB")
OPEN = frozenset("oO")
ALPHABET = "bBoO"

GLYPHS = {"b": "•", "B": "▲", "o": "∘", "O": "▽"}
_FROM_GLYPH = {v: k for k, v in GLYPHS.items()}
_DEGREE = {"b": 1, "B": 2, "o": 1, "O": 2}
# symbol order • < ▲ < ∘ < ▽ used for canonical cyclic representatives
_ORDER = str.maketrans("bBoO", "0123")


class ScaledWord(NamedTuple):
    """``2**two_exp`` times ``word``."""

    two_exp: int
    word: str


@dataclass(frozen=True)
class RemovableLoop:
    """A loop that is deleted, contributing ``δ · 2**two_exp``."""

    two_exp: int = 0


@dataclass(frozen=True)
class IrreducibleLoop:
    two_exp: int
    word: str


LoopReduction = Union[RemovableLoop, IrreducibleLoop]


def is_closed(symbol: str) -> bool:
    return symbol in CLOSED


def is_open(symbol: str) -> bool:
    return symbol in OPEN


def same_type(a: str, b: str) -> bool:
    return (a in CLOSED) == (b in CLOSED)


def check_word(word: str) -> str:
    """Validate a word, accepting either ASCII letters or the Unicode glyphs."""
    out = "".join(_FROM_GLYPH.get(c, c) for c in word)
    bad = set(out) - set(ALPHABET)
    if bad:
        raise ValueError(f"invalid decoration symbol(s) {sorted(bad)!r} in {word!r}")
    return out


def pretty(word: str) -> str:
    return "".join(GLYPHS[c] for c in word)


def _collapse_run(run: str) -> tuple[int, str]:
    degree = sum(_DEGREE[c] for c in run)
    closed = run[0] in CLOSED
    if degree % 2:
        return (degree - 1) // 2, "b" if closed else "o"
    return (degree - 1) // 2, "B" if closed else "O"


def _runs(word: str) -> Iterator[str]:
    start = 0
    for i in range(1, len(word) + 1):
        if i == len(word) or not same_type(word[i], word[start]):
            yield word[start:i]
            start = i


def reduce_word(word: str) -> ScaledWord:
    """Normal form of a linear word: ``2**k`` times an alternating basis word."""
    exp = 0
    out = []
    for run in _runs(word):
        e, sym = _collapse_run(run)
        exp += e
        out.append(sym)
    return ScaledWord(exp, "".join(out))


def is_basis_word(word: str) -> bool:
    return reduce_word(word) == ScaledWord(0, word)


def is_alternating(word: str) -> bool:
    return all(not same_type(a, b) for a, b in zip(word, word[1:]))


def reverse(word: str) -> str:
    return word[::-1]


def canonical_cyclic(word: str) -> str:
    """Least rotation-or-reversal of ``word`` under the order • < ▲ < ∘ < ▽."""
    if not word:
        return word
    candidates = []
    for w in (word, word[::-1]):
        for i in range(len(w)):
            candidates.append(w[i:] + w[:i])
    return min(candidates, key=lambda w: w.translate(_ORDER))


def reduce_cyclic(word: str) -> LoopReduction:
    """Reduce the decoration word carried by a closed loop.

    Loops whose reduced word is empty, ▲ or ▽ are removable (each becomes a
    factor δ); every other loop survives with its canonical cyclic word.
    """
    if not word:
        return RemovableLoop(0)
    if all(c in CLOSED for c in word) or all(c in OPEN for c in word):
        exp, sym = _collapse_run(word)
        if sym in "BO":
            return RemovableLoop(exp)
        return IrreducibleLoop(exp, sym)
    # rotate so that the word starts at a type boundary; then the first and
    # last runs have different types and linear reduction is cyclically exact
    i = next(i for i in range(len(word)) if not same_type(word[i - 1], word[i]))
    exp, reduced = reduce_word(word[i:] + word[:i])
    return IrreducibleLoop(exp, canonical_cyclic(reduced))


# Single-step rewriting, used by the exhaustive confluence checks.

_RULES = {
    "bb": (0, "B"),
    "bB": (1, "b"),
    "Bb": (1, "b"),
    "BB": (1, "B"),
    "oo": (0, "O"),
    "oO": (1, "o"),
    "Oo": (1, "o"),
    "OO": (1, "O"),
}


def rewrite_steps(word: str) -> Iterator[ScaledWord]:
    """Every result of applying one rule at one position of a linear word."""
    for i in range(len(word) - 1):
        rule = _RULES.get(word[i : i + 2])
        if rule is not None:
            yield ScaledWord(rule[0], word[:i] + rule[1] + word[i + 2 :])


def cyclic_rewrite_steps(word: str) -> Iterator[ScaledWord]:
    """Single rule applications on a cyclic word, including the wrap-around pair."""
    m = len(word)
    if m < 2:
        return
    for i in range(m):
        pair = word[i] + word[(i + 1) % m]
        rule = _RULES.get(pair)
        if rule is None:
            continue
        if i + 1 < m:
            yield ScaledWord(rule[0], word[:i] + rule[1] + word[i + 2 :])
        else:
            yield ScaledWord(rule[0], rule[1] + word[1:-1])
