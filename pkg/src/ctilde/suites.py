"""
Bounded verification suites shared by the CLI and the acceptance tests.

Each suite returns a :class:`Report` with a verdict, a count of checked items
and up to a handful of counterexamples rendered as text.
"""

from __future__ import annotations

import json
import time
from dataclasses import asdict, dataclass, field
from typing import Callable

from .algebra import (
    admissible_universe,
    check_generator_relations,
    factorize,
    is_admissible,
    reachable,
)
from .coxeter import affine_c, enumerate_fc
from .diagram import canonicalize, height, simple_diagram
from .engine import concat, eval_scaled, normal_forms, stack
from .textio import serialize

MAX_EXAMPLES = 5

# Heights up to which words of length <= 10 reach every admissible diagram;
# found by comparing against longer searches (see the README).
COMPLETE_HEIGHT = {2: 4, 3: 2}


@dataclass
class Report:
    name: str
    passed: bool
    checked: int
    params: dict
    counterexamples: list[str] = field(default_factory=list)
    seconds: float = 0.0

    def to_json(self) -> str:
        return json.dumps(asdict(self), indent=2, ensure_ascii=False)

    def summary(self) -> str:
        verdict = "PASS" if self.passed else "FAIL"
        args = " ".join(f"{k}={v}" for k, v in self.params.items())
        return f"{verdict} {self.name} ({args}): {self.checked} checked in {self.seconds:.2f}s"


def _one_line(d) -> str:
    return "; ".join(serialize(d).splitlines())


def _finish(name: str, params: dict, checked: int, bad: list[str], t0: float) -> Report:
    return Report(name, not bad, checked, params, bad[:MAX_EXAMPLES], time.perf_counter() - t0)


def relations(ns: tuple[int, ...] = (2, 3, 4, 5)) -> Report:
    t0 = time.perf_counter()
    bad = [f"relations fail for n={n}" for n in ns if not check_generator_relations(n)]
    return _finish("relations", {"n": list(ns)}, len(ns), bad, t0)


def closure(ns: tuple[int, ...] = (2, 3, 4), max_len: int = 8) -> Report:
    """d_i·d is 2^k δ^m times one admissible diagram for every reachable d.

    Outside the step from a-value 1 to a larger a-value the power of 2 is at
    most 1; that step may conjoin several triangle blocks at once.
    """
    t0 = time.perf_counter()
    bad: list[str] = []
    checked = 0
    for n in ns:
        gens = [simple_diagram(i, n) for i in range(1, n + 2)]
        for d in reachable(n, max_len):
            for i, g in enumerate(gens, 1):
                checked += 1
                two, _, p = concat(g, d)
                report = is_admissible(p)
                if not report:
                    bad.append(f"n={n} d_{i}·[{_one_line(d)}] -> {report.axiom}: {report.detail}")
                elif two > 1 and not (d.a_value == 1 and p.a_value > 1):
                    bad.append(f"n={n} d_{i}·[{_one_line(d)}] has factor 2^{two}")
    return _finish("closure", {"n": list(ns), "L": max_len}, checked, bad, t0)


def basis_equivalence(ns: tuple[int, ...] = (2, 3), max_len: int = 10,
                      heights: dict[int, int] | None = None) -> Report:
    """Reachable diagrams are admissible, and up to the height bound they are all of them."""
    t0 = time.perf_counter()
    heights = {**COMPLETE_HEIGHT, **(heights or {})}
    bad: list[str] = []
    checked = 0
    for n in ns:
        h = heights.get(n, 2)
        reach = set(reachable(n, max_len))
        for d in sorted(reach, key=_one_line):
            checked += 1
            report = is_admissible(d)
            if not report:
                bad.append(f"n={n} reachable but rejected ({report.axiom}): {_one_line(d)}")
        universe = admissible_universe(n, h)
        low = {d for d in reach if height(d) <= h}
        checked += len(universe)
        for d in sorted(universe - low, key=_one_line):
            bad.append(f"n={n} admissible but unreached: {_one_line(d)}")
        for d in sorted(low - universe, key=_one_line):
            bad.append(f"n={n} reached but missing from the universe: {_one_line(d)}")
    return _finish("basis-equivalence", {"n": list(ns), "L": max_len, "H": heights}, checked, bad, t0)


def confluence_corpus(ns: tuple[int, ...] = (2, 3), max_height: int = 8, max_len: int = 6):
    """Raw stacks x·y of reachable diagrams whose raw height is at most max_height."""
    out = []
    for n in ns:
        pool = sorted(reachable(n, max_len), key=_one_line)
        for x in pool:
            for y in pool:
                if height(x) + height(y) > max_height:
                    continue
                raw = stack(x, y)
                if raw.height() <= max_height:
                    out.append(raw)
    return out


def confluence(ns: tuple[int, ...] = (2, 3), max_height: int = 8, max_len: int = 6) -> Report:
    t0 = time.perf_counter()
    bad: list[str] = []
    corpus = confluence_corpus(ns, max_height, max_len)
    for raw in corpus:
        forms = normal_forms(raw)
        if forms != {canonicalize(raw)}:
            bad.append(f"{len(forms)} normal forms for a raw stack on {raw.matching}")
    params = {"n": list(ns), "h": max_height, "L": max_len}
    return _finish("confluence", params, len(corpus), bad, t0)


def round_trip(ns: tuple[int, ...] = (2, 3), max_len: int = 10) -> Report:
    t0 = time.perf_counter()
    bad: list[str] = []
    checked = 0
    for n in ns:
        for d in sorted(reachable(n, max_len), key=_one_line):
            checked += 1
            w = factorize(d, n)
            if eval_scaled(w, n) != (0, 0, d):
                bad.append(f"n={n} {w} does not give {_one_line(d)}")
    return _finish("round-trip", {"n": list(ns), "L": max_len}, checked, bad, t0)


def fc_injectivity(ns: tuple[int, ...] = (2, 3), max_len: int = 10) -> Report:
    """Distinct FC elements have distinct scalar-free images under θ."""
    t0 = time.perf_counter()
    bad: list[str] = []
    checked = 0
    for n in ns:
        seen: dict = {}
        for w in sorted(enumerate_fc(affine_c(n), max_len)):
            checked += 1
            two, delta, d = eval_scaled(w, n)
            if (two, delta) != (0, 0):
                bad.append(f"n={n} FC word {list(w)} picked up 2^{two} δ^{delta}")
            if d in seen:
                bad.append(f"n={n} FC words {list(seen[d])} and {list(w)} collide")
            seen[d] = w
    return _finish("fc-injectivity", {"n": list(ns), "L": max_len}, checked, bad, t0)


SUITES: dict[str, Callable[..., Report]] = {
    "relations": relations,
    "closure": closure,
    "basis-equivalence": basis_equivalence,
    "confluence": confluence,
    "fc-injectivity": fc_injectivity,
    "round-trip": round_trip,
}


def run_suite(name: str, **kwargs) -> Report:
    try:
        fn = SUITES[name]
    except KeyError:
        raise ValueError(f"unknown suite {name!r}; expected one of {sorted(SUITES)}") from None
    return fn(**kwargs)
