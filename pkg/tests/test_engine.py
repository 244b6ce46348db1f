from __future__ import annotations

import random

import pytest
from hypothesis import given, settings, strategies as st

from ctilde.algebra import reachable, snake_word
from ctilde.diagram import (
    DiagramError,
    RawDiagram,
    canonicalize,
    identity_diagram,
    make_diagram,
    simple_diagram,
)
from ctilde.engine import (
    Element,
    Poly,
    check_confluence,
    concat,
    eval_scaled,
    eval_word,
    multiply,
    normal_forms,
    scalar,
    stack,
)
from ctilde.textio import parse_diagram

import oracles


def d(i, n=2):
    return simple_diagram(i, n)


def test_concat_examples():
    assert concat(d(1), d(1)) == (0, 1, d(1))
    two, delta, x = eval_scaled([1, 2, 1, 2], 2)
    assert (two, delta, x) == (1, 0, eval_scaled([1, 2], 2)[2])
    assert concat(d(2, 3), concat(d(3, 3), d(2, 3))[2]) == (0, 0, d(2, 3))


def test_d1_d2_d1_by_hand():
    expected = make_diagram(
        4,
        [(0, 1), (4, 5), (2, 6), (3, 7)],
        {0: "b", 4: "b"},
        seq=[(2, "B")],
    )
    assert eval_scaled([1, 2, 1], 2) == (0, 0, expected)


def test_multiply_examples():
    x = Element.of(d(1)) + Element.of(d(3))
    got = multiply(x, Element.of(d(1)))
    want = Element.of(d(1), scalar(0, 1)) + Element.of(concat(d(3), d(1))[2])
    assert got == want
    e = Element.one(4)
    assert multiply(e, x) == x
    assert multiply(Element.zero(4), x) == Element.zero(4)


def test_mismatched_k():
    with pytest.raises(DiagramError):
        concat(d(1, 2), d(1, 3))


def test_eval_word_examples():
    assert eval_word([], 2) == Element.one(4)
    assert eval_word([1, 2, 1, 2], 2) == eval_word([1, 2], 2).scale(2)
    with pytest.raises(DiagramError):
        eval_word([5], 2)


def test_snake_word_gives_case_one_diagram():
    two, delta, x = eval_scaled(snake_word(2, 1), 2)
    assert (two, delta) == (0, 0)
    assert x == parse_diagram("""k=4
N 1-2 : b
S 3-4 : o
P 3-1' : [b|B]
P 4-2' : [O|o]
seq : (3:b)(4:O)(3:B)(4:o)
""")


def test_poly_printing():
    p = Poly.monomial(3, 2) + Poly.const(1)
    assert str(p) == "3*δ^2 + 1"
    assert str(scalar(1, 1)) == "2*δ"
    assert str(Poly.const(-1)) == "-1"
    assert str(Poly.monomial(1, 1) - Poly.const(2)) == "δ - 2"


def test_confluence_examples():
    x = d(1)
    assert check_confluence([RawDiagram(x.matching, {0: ["bbbB"], 4: ["b"]})])
    assert check_confluence([RawDiagram(x.matching, {0: ["b"], 4: ["b"]}, loops=[["bb", "B"]])])
    from ctilde.diagram import to_raw
    assert check_confluence([to_raw(x)])


def test_normal_forms_report_every_result():
    x = d(1)
    raw = RawDiagram(x.matching, {0: ["b", "b", "b"], 4: ["b"]}, loops=[["b"], ["B", "b", "b"]])
    assert normal_forms(raw) == {canonicalize(raw)}


ELEMENTS = {n: sorted(reachable(n, 3), key=str) for n in (2, 3, 4)}


@settings(max_examples=150, deadline=None)
@given(st.sampled_from([2, 3, 4]), st.data())
def test_associativity(n, data):
    pool = ELEMENTS[n]
    x, y, z = (Element.of(data.draw(st.sampled_from(pool))) for _ in range(3))
    assert multiply(multiply(x, y), z) == multiply(x, multiply(y, z))


@settings(max_examples=100, deadline=None)
@given(st.sampled_from([2, 3, 4]), st.data())
def test_a_value_monotone_and_unit(n, data):
    pool = sorted(reachable(n, 5), key=str)
    top = data.draw(st.sampled_from(pool))
    bot = data.draw(st.sampled_from(pool))
    assert concat(top, bot)[2].a_value >= top.a_value
    e = identity_diagram(n + 2)
    assert concat(e, top) == (0, 0, top) == concat(top, e)


def test_monoid_images_are_single_terms():
    rng = random.Random(7)
    for n in (2, 3, 4):
        for _ in range(200):
            w = [rng.randint(1, n + 1) for _ in range(rng.randint(0, 12))]
            coeff, _ = eval_word(w, n).single()
            assert sum(1 for c in coeff.coeffs if c) == 1


def _undecorated(x):
    return sorted(x.chords())


@pytest.mark.parametrize("n", [2, 3, 4])
def test_shapes_follow_type_a_composition(n):
    # forgetting decorations, stacking must agree with plain matching composition
    pool = sorted(reachable(n, 4), key=str)
    k = n + 2
    for top in pool[:25]:
        for bot in pool[:25]:
            raw = stack(top, bot)
            loops, chords = oracles.compose_type_a(k, top.chords(), bot.chords())
            assert sorted(raw.matching.chords()) == chords
            assert len(raw.loops) == loops


def test_alpha_one_with_extra_loop():
    # a product of a-value 1 diagrams can close one new loop at the interface
    two, delta, x = eval_scaled([1, 3, 2, 1, 3], 2)
    assert len(x.loops) == 1 and (two, delta) == (0, 0)
