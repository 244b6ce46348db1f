"""
Coxeter side: the graphs A_n, B_n, B'_n and affine C_n, fully commutative
words, Chebyshev polynomials and the map θ from monomials to diagrams.

Letters are 1-based generator indices.  For affine C_n they run over 1..n+1;
B_n uses 1..n and B'_n uses 2..n+1 with the bonds inherited from affine C_n;
A_n uses 1..n with all consecutive bonds equal to 3.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable, Sequence

from .engine import Element, eval_word, scalar

KINDS = ("A", "B", "B'", "Ct")


@dataclass(frozen=True)
class CoxeterGraph:
    kind: str
    n: int

    def __post_init__(self) -> None:
        if self.kind not in KINDS:
            raise ValueError(f"unknown graph type {self.kind!r}; expected one of {KINDS}")
        lo = 1 if self.kind == "A" else 2
        if self.n < lo:
            raise ValueError(f"{self.kind}_{self.n}: n must be at least {lo}")

    @property
    def generators(self) -> range:
        if self.kind in ("A", "B"):
            return range(1, self.n + 1)
        if self.kind == "B'":
            return range(2, self.n + 2)
        return range(1, self.n + 2)

    def m(self, s: int, t: int) -> int:
        """Bond order m(s, t); 1 on the diagonal."""
        if s == t:
            return 1
        if abs(s - t) > 1:
            return 2
        lo = min(s, t)
        if self.kind != "A" and (lo == 1 or lo == self.n):
            return 4
        return 3

    def edges(self) -> list[tuple[int, int, int]]:
        """(s, t, m) for every pair s < t of generators, m = 2 included."""
        gens = list(self.generators)
        return [(s, t, self.m(s, t)) for i, s in enumerate(gens) for t in gens[i + 1 :]]

    def check(self, word: Iterable[int]) -> list[int]:
        w = list(word)
        for x in w:
            if x not in self.generators:
                raise ValueError(f"letter {x} is out of range for {self}")
        return w

    def __str__(self) -> str:
        return f"{self.kind}_{self.n}"


def affine_c(n: int) -> CoxeterGraph:
    return CoxeterGraph("Ct", n)


# commutation classes --------------------------------------------------------


def canonical(word: Sequence[int], g: CoxeterGraph) -> tuple[int, ...]:
    """Lexicographically least word in the commutation class of ``word``.

    Greedy: the next letter is the smallest one that commutes past everything
    still in front of it.
    """
    rest = list(word)
    out = []
    while rest:
        best = None
        for p, x in enumerate(rest):
            if all(g.m(x, y) == 2 for y in rest[:p]):
                if best is None or x < rest[best]:
                    best = p
        out.append(rest.pop(best))
    return tuple(out)


def commutation_class(word: Sequence[int], g: CoxeterGraph) -> set[tuple[int, ...]]:
    """Every word reachable by swapping adjacent commuting letters."""
    start = tuple(word)
    seen = {start}
    todo = [start]
    while todo:
        w = todo.pop()
        for p in range(len(w) - 1):
            if g.m(w[p], w[p + 1]) == 2:
                v = w[:p] + (w[p + 1], w[p]) + w[p + 2 :]
                if v not in seen:
                    seen.add(v)
                    todo.append(v)
    return seen


def _heap_order(word: Sequence[int], g: CoxeterGraph) -> list[set[int]]:
    """below[j] = positions strictly below position j in the heap of ``word``."""
    below: list[set[int]] = []
    for j, x in enumerate(word):
        b: set[int] = set()
        for i in range(j):
            if g.m(word[i], x) != 2:
                b.add(i)
                b |= below[i]
        below.append(b)
    return below


def is_fully_commutative(word: Sequence[int], g: CoxeterGraph) -> bool:
    """True iff ``word`` is reduced and fully commutative.

    Uses the heap criterion: no convex chain s, s and no convex alternating
    chain s, t, s, ... of length m(s, t) >= 3.  A chain is convex when the
    heap interval between its ends contains nothing else.
    """
    w = g.check(word)
    below = _heap_order(w, g)

    def convex(chain: list[int]) -> bool:
        lo, hi = chain[0], chain[-1]
        interval = {z for z in below[hi] if z == lo or lo in below[z]}
        return interval | {hi} == set(chain)

    gens = sorted(set(w))
    for s in gens:
        pos = [p for p, x in enumerate(w) if x == s]
        for a, b in zip(pos, pos[1:]):
            if convex([a, b]):
                return False
        for t in gens:
            m = g.m(s, t)
            if t <= s or m < 3:
                continue
            pos = [p for p, x in enumerate(w) if x in (s, t)]
            for i in range(len(pos) - m + 1):
                chain = pos[i : i + m]
                if all(w[a] != w[b] for a, b in zip(chain, chain[1:])) and convex(chain):
                    return False
    return True


def is_fully_commutative_bruteforce(word: Sequence[int], g: CoxeterGraph) -> bool:
    """Scan the whole commutation class for ss and the forbidden braid factors."""
    w = g.check(word)
    for v in commutation_class(w, g):
        for p in range(len(v)):
            if p + 1 < len(v) and v[p] == v[p + 1]:
                return False
            s = v[p]
            if p + 1 < len(v):
                t = v[p + 1]
                m = g.m(s, t)
                if m >= 3 and p + m <= len(v):
                    if all(v[p + j] == (s if j % 2 == 0 else t) for j in range(m)):
                        return False
    return True


def enumerate_fc(g: CoxeterGraph, max_len: int | None = None) -> set[tuple[int, ...]]:
    """Canonical words of all FC elements of length <= max_len.

    Removing a maximal element of an FC heap leaves an FC heap, so extending
    level by level reaches every FC element.  With ``max_len=None`` the
    search runs until a level is empty, which terminates only for graphs
    with finitely many FC elements.
    """
    level = {()}
    found = {()}
    length = 0
    while level and (max_len is None or length < max_len):
        nxt = set()
        for w in level:
            for s in g.generators:
                v = w + (s,)
                if is_fully_commutative(v, g):
                    c = canonical(v, g)
                    if c not in found:
                        nxt.add(c)
        found |= nxt
        level = nxt
        length += 1
    return found


# Chebyshev polynomials and the presentation -------------------------------------


def chebyshev(k: int) -> list[int]:
    """Coefficients [c_0, c_1, ...] of P_k with P_0 = 1, P_1 = x."""
    if k < 0:
        raise ValueError("k must be non-negative")
    prev, cur = [1], [0, 1]
    if k == 0:
        return prev
    for _ in range(k - 1):
        nxt = [0] + cur
        for i, c in enumerate(prev):
            nxt[i] -= c
        prev, cur = cur, nxt
    return cur


def alternating(s: int, t: int, length: int) -> list[int]:
    return [s if j % 2 == 0 else t for j in range(length)]


def theta(word: Iterable[int], n: int) -> Element:
    """Image of the monomial b_w: the product of simple diagrams."""
    w = affine_c(n).check(word)
    return eval_word(w, n)


def relation_element(n: int, s: int, t: int, m: int) -> Element:
    """θ of (x P_{m-1})(x) with x^j read as the alternating product s t s ⋯ of length j."""
    k = n + 2
    out = Element.zero(k)
    if m == 2:
        return theta([s, t], n) - theta([t, s], n)
    poly = [0] + chebyshev(m - 1)
    for j, c in enumerate(poly):
        if c:
            out = out + theta(alternating(s, t, j), n).scale(c)
    return out


def check_tl_presentation(n: int, m: int) -> bool:
    """θ kills the bond-m relation of every affine C_n edge, from both ends.

    Graphs without a bond of order m pass vacuously.
    """
    g = affine_c(n)
    for s, t, bond in g.edges():
        if bond != m:
            continue
        for a, b in ((s, t), (t, s)):
            if relation_element(n, a, b, m):
                return False
    return True


def check_quadratic(n: int) -> bool:
    """b_s² = δ b_s under θ for every generator."""
    for s in affine_c(n).generators:
        if theta([s, s], n) != theta([s], n).scale(scalar(0, 1)):
            return False
    return True


__all__ = [
    "CoxeterGraph",
    "affine_c",
    "canonical",
    "commutation_class",
    "is_fully_commutative",
    "enumerate_fc",
    "chebyshev",
    "theta",
    "check_tl_presentation",
    "check_quadratic",
]
