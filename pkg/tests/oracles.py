"""
Independent reference implementations used only by the tests.

None of these import the package's reduction tables or composition code; they
work from the generating relations and from first principles.
"""

from __future__ import annotations

import itertools
import math
from functools import lru_cache

# decoration words --------------------------------------------------------------

_EXPAND = {"B": "bb", "O": "oo"}


def expand(word: str) -> str:
    return "".join(_EXPAND.get(c, c) for c in word)


def reduce_by_relations(word: str) -> tuple[int, str]:
    """Reduce with only ••• = 2• (and ∘∘∘ = 2∘), then fold •• back into ▲."""
    w = expand(word)
    two = 0
    changed = True
    while changed:
        changed = False
        for trip, single in (("bbb", "b"), ("ooo", "o")):
            if trip in w:
                w = w.replace(trip, single, 1)
                two += 1
                changed = True
    return two, w.replace("bb", "B").replace("oo", "O")


def all_rewrite_results(word: str) -> set[tuple[int, str]]:
    """Every terminal result of exhaustive rewriting with the four relations."""
    rules = [("bb", "B", 0), ("bbb", "b", 1), ("oo", "O", 0), ("ooo", "o", 1)]
    rules += [("bB", "b", 1), ("Bb", "b", 1), ("BB", "B", 1)]
    rules += [("oO", "o", 1), ("Oo", "o", 1), ("OO", "O", 1)]
    out: set[tuple[int, str]] = set()

    @lru_cache(maxsize=None)
    def go(w: str) -> frozenset:
        res = set()
        moved = False
        for lhs, rhs, two in rules:
            start = w.find(lhs)
            while start != -1:
                moved = True
                for t, r in go(w[:start] + rhs + w[start + len(lhs):]):
                    res.add((t + two, r))
                start = w.find(lhs, start + 1)
        if not moved:
            res.add((0, w))
        return frozenset(res)

    out |= go(word)
    return out


def reduce_loop(word: str) -> tuple[str, int, str]:
    """("delta", two, "") or ("loop", two, canonical word) from cyclic expansion.

    Works on the fully expanded dot word: every maximal same-type run of
    degree d collapses to 2^((d-1)//2) times a dot or a triangle.
    """
    w = expand(word)
    if not w:
        return ("delta", 0, "")
    kinds = {c for c in w}
    if len(kinds) == 1:
        d = len(w)
        two = (d - 1) // 2
        return ("delta", two, "") if d % 2 == 0 else ("loop", two, w[0])
    # rotate so a run starts at position 0
    i = next(i for i in range(len(w)) if w[i] != w[i - 1])
    w = w[i:] + w[:i]
    runs = [list(g) for _, g in itertools.groupby(w)]
    two = 0
    out = []
    for r in runs:
        d = len(r)
        two += (d - 1) // 2
        out.append(r[0] if d % 2 else r[0].upper())
    s = "".join(out)
    order = str.maketrans("bBoO", "0123")
    cands = [v[j:] + v[:j] for v in (s, s[::-1]) for j in range(len(v))]
    return ("loop", two, min(cands, key=lambda x: x.translate(order)))


# matchings -----------------------------------------------------------------


def catalan(m: int) -> int:
    return math.comb(2 * m, m) // (m + 1)


def boundary_index(k: int, v: int) -> int:
    """Position around the box: N1..Nk then Sk..S1."""
    return v if v < k else 2 * k - 1 - (v - k)


def crossing(k: int, c1, c2) -> bool:
    a, b = sorted(boundary_index(k, v) for v in c1)
    c, d = sorted(boundary_index(k, v) for v in c2)
    return (a < c < b < d) or (c < a < d < b)


def all_perfect_matchings(points: list[int]):
    if not points:
        yield []
        return
    a = points[0]
    for j in range(1, len(points)):
        rest = points[1:j] + points[j + 1:]
        for m in all_perfect_matchings(rest):
            yield [(a, points[j])] + m


def planar_by_brute_force(k: int) -> list[list[tuple[int, int]]]:
    out = []
    for m in all_perfect_matchings(list(range(2 * k))):
        if not any(crossing(k, x, y) for x, y in itertools.combinations(m, 2)):
            out.append(sorted(tuple(sorted(c)) for c in m))
    return out


def compose_type_a(k: int, top: list[tuple[int, int]], bottom: list[tuple[int, int]]):
    """Stack two undecorated matchings; returns (loops, chords) via union-find."""
    # vertices: ("t", v) for the top diagram, ("b", v) for the bottom one;
    # top south i' is glued to bottom north i
    parent: dict = {}

    def find(x):
        parent.setdefault(x, x)
        while parent[x] != x:
            parent[x] = parent[parent[x]]
            x = parent[x]
        return x

    def union(x, y):
        parent[find(x)] = find(y)

    for a, b in top:
        union(("t", a), ("t", b))
    for a, b in bottom:
        union(("b", a), ("b", b))
    for i in range(k):
        union(("t", k + i), ("b", i))
    ends = [("t", i) for i in range(k)] + [("b", k + i) for i in range(k)]
    groups: dict = {}
    for e in ends:
        groups.setdefault(find(e), []).append(e)
    chords = []
    for g in groups.values():
        (s1, v1), (s2, v2) = g
        chords.append(tuple(sorted((v1, v2))))
    internal = {find(("t", k + i)) for i in range(k)}
    loops = len(internal - set(groups))
    return loops, sorted(chords)


# Coxeter groups ------------------------------------------------------------


def count_321_avoiding(size: int) -> int:
    """Fully commutative elements of the symmetric group are the 321-avoiding permutations."""
    total = 0
    for p in itertools.permutations(range(size)):
        if not any(p[i] > p[j] > p[l] for i, j, l in itertools.combinations(range(size), 3)):
            total += 1
    return total


def fc_count_type_b(n: int) -> int:
    """Known closed form (n+2)·C_n - 1 for the fully commutative elements of B_n."""
    return (n + 2) * catalan(n) - 1


def chebyshev_value(k: int, t: float) -> float:
    """P_k(2 cos t) = sin((k+1) t) / sin t."""
    return math.sin((k + 1) * t) / math.sin(t)
