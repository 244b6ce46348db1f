"""
Command-line front end.

Exit codes: 0 success, 1 a check failed (details on stdout), 2 bad input.
"""

from __future__ import annotations

import argparse
import sys
from pathlib import Path

from . import suites
from .algebra import NotAdmissible, factorize, is_admissible
from .coxeter import CoxeterGraph, enumerate_fc, theta
from .diagram import DiagramError
from .engine import Element, multiply
from .textio import parse_diagram, render, serialize

OK, FAILED, BAD_INPUT = 0, 1, 2


class InputError(Exception):
    pass


def _read(path: str):
    try:
        text = Path(path).read_text(encoding="utf-8")
    except OSError as exc:
        raise InputError(f"{path}: {exc.strerror}") from None
    try:
        return parse_diagram(text)
    except DiagramError as exc:
        raise InputError(f"{path}: {exc}") from None


def _word(text: str) -> list[int]:
    text = text.strip()
    if not text:
        return []
    try:
        return [int(x) for x in text.split(",")]
    except ValueError:
        raise InputError(f"bad generator word {text!r}; expected e.g. 1,2,1") from None


def _print_element(x: Element) -> None:
    if not x:
        print("0")
        return
    for j, (d, c) in enumerate(x.sorted_terms()):
        if j:
            print()
        print(f"coefficient: {c}")
        print(serialize(d), end="")


def cmd_mul(args) -> int:
    x, y = _read(args.left), _read(args.right)
    if x.k != y.k:
        raise InputError(f"diagrams have k={x.k} and k={y.k}")
    _print_element(multiply(Element.of(x), Element.of(y)))
    return OK


def cmd_eval(args) -> int:
    _print_element(theta(_word(args.word), args.n))
    return OK


def cmd_theta(args) -> int:
    return cmd_eval(args)


def cmd_admissible(args) -> int:
    report = is_admissible(_read(args.file))
    if report:
        print("admissible")
        return OK
    print(f"not admissible: {report.axiom}: {report.detail}")
    return FAILED


def cmd_factorize(args) -> int:
    d = _read(args.file)
    try:
        word = factorize(d)
    except NotAdmissible as exc:
        print(f"not admissible: {exc}")
        return FAILED
    print(",".join(map(str, word)))
    return OK


def cmd_fc(args) -> int:
    kind = {"A": "A", "B": "B", "B'": "B'", "Ct": "Ct", "C": "Ct"}.get(args.g)
    if kind is None:
        raise InputError(f"unknown graph {args.g!r}; expected A, B, B' or Ct")
    g = CoxeterGraph(kind, args.n)
    if kind == "Ct" and args.max_len is None:
        raise InputError("affine C has infinitely many FC elements; give --max-len")
    words = sorted(enumerate_fc(g, args.max_len), key=lambda w: (len(w), w))
    print(f"{len(words)} fully commutative elements of {g}")
    if not args.count:
        for w in words:
            print(",".join(map(str, w)) or "(empty)")
    return OK


def cmd_verify(args) -> int:
    kwargs = {}
    if args.n:
        kwargs["ns"] = tuple(args.n)
    if args.L is not None:
        kwargs["max_len"] = args.L
    if args.H is not None:
        if args.suite == "confluence":
            kwargs["max_height"] = args.H
        elif args.suite == "basis-equivalence":
            kwargs["heights"] = {n: args.H for n in kwargs.get("ns", (2, 3))}
        else:
            raise InputError(f"-H does not apply to suite {args.suite}")
    if args.suite == "relations" and "max_len" in kwargs:
        raise InputError("-L does not apply to suite relations")
    report = suites.run_suite(args.suite, **kwargs)
    print(report.to_json() if args.json else report.summary())
    if not args.json:
        for line in report.counterexamples:
            print("  " + line)
    return OK if report.passed else FAILED


def cmd_render(args) -> int:
    sys.stdout.write(render(_read(args.file), "svg" if args.svg else "ascii"))
    return OK


def _n_list(text: str) -> list[int]:
    return [int(x) for x in text.split(",")]


def build_parser() -> argparse.ArgumentParser:
    p = argparse.ArgumentParser(prog="ctilde", description=__doc__.strip().splitlines()[0])
    sub = p.add_subparsers(dest="verb", required=True)

    s = sub.add_parser("mul", help="product of two diagram files")
    s.add_argument("left")
    s.add_argument("right")
    s.set_defaults(fn=cmd_mul)

    for verb, fn in (("eval", cmd_eval), ("theta", cmd_theta)):
        s = sub.add_parser(verb, help="product of simple diagrams for a word like 1,2,1")
        s.add_argument("-n", type=int, required=True)
        s.add_argument("word", nargs="?", default="")
        s.set_defaults(fn=fn)

    s = sub.add_parser("admissible", help="check the admissibility axioms")
    s.add_argument("file")
    s.set_defaults(fn=cmd_admissible)

    s = sub.add_parser("factorize", help="write a diagram as a product of generators")
    s.add_argument("file")
    s.set_defaults(fn=cmd_factorize)

    s = sub.add_parser("fc", help="list fully commutative elements")
    s.add_argument("-g", required=True, help="A, B, B' or Ct")
    s.add_argument("-n", type=int, required=True)
    s.add_argument("--max-len", type=int, default=None)
    s.add_argument("--count", action="store_true", help="print only the count")
    s.set_defaults(fn=cmd_fc)

    s = sub.add_parser("verify", help="run a bounded verification suite")
    s.add_argument("suite", choices=sorted(suites.SUITES))
    s.add_argument("-n", type=_n_list, default=None, help="comma-separated values of n")
    s.add_argument("-L", type=int, default=None, help="maximum word length")
    s.add_argument("-H", type=int, default=None, help="height bound")
    s.add_argument("--json", action="store_true")
    s.set_defaults(fn=cmd_verify)

    s = sub.add_parser("render", help="draw a diagram")
    s.add_argument("file")
    mode = s.add_mutually_exclusive_group(required=True)
    mode.add_argument("--svg", action="store_true")
    mode.add_argument("--ascii", action="store_true")
    s.set_defaults(fn=cmd_render)
    return p


def main(argv: list[str] | None = None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return BAD_INPUT if exc.code else OK
    try:
        return args.fn(args)
    except (InputError, ValueError, DiagramError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return BAD_INPUT


if __name__ == "__main__":
    sys.exit(main())
