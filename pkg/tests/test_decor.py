from __future__ import annotations

import pytest
from hypothesis import given, strategies as st

from ctilde import decor
from ctilde.decor import IrreducibleLoop, RemovableLoop, ScaledWord

import oracles

words = st.text(alphabet="bBoO", max_size=12)


def test_reduce_word_examples():
    assert decor.reduce_word("bb") == ScaledWord(0, "B")
    assert decor.reduce_word("") == ScaledWord(0, "")
    assert decor.reduce_word("bbobooob") == ScaledWord(1, "Bobob")
    assert decor.reduce_word(decor.check_word("••∘•∘∘•")) == ScaledWord(0, "BobOb")
    assert decor.reduce_word("bbb") == ScaledWord(1, "b")
    assert decor.reduce_word("BbB") == ScaledWord(2, "b")


def test_glyph_round_trip():
    assert decor.pretty("BobOb") == "▲∘•▽•"
    assert decor.check_word("▲∘•▽•") == "BobOb"
    with pytest.raises(ValueError):
        decor.check_word("bx")


def test_reduce_cyclic_examples():
    assert decor.reduce_cyclic("") == RemovableLoop(0)
    assert decor.reduce_cyclic("BO") == IrreducibleLoop(0, "BO")
    assert decor.reduce_cyclic("bb") == RemovableLoop(0)
    assert decor.reduce_cyclic("bB") == IrreducibleLoop(1, "b")


def test_is_basis_word_examples():
    assert decor.is_basis_word("BobOb")
    assert decor.is_basis_word("")
    assert not decor.is_basis_word("bb")


@given(words)
def test_reduce_matches_relation_oracle(w):
    assert tuple(decor.reduce_word(w)) == oracles.reduce_by_relations(w)


@given(st.text(alphabet="bBoO", max_size=8))
def test_exhaustive_rewriting_is_confluent(w):
    assert oracles.all_rewrite_results(w) == {tuple(decor.reduce_word(w))}


def test_single_step_rewriting_is_confluent():
    # every maximal sequence of the package's own single steps ends in one place
    def ends(w, two=0):
        steps = list(decor.rewrite_steps(w))
        if not steps:
            return {(two, w)}
        out = set()
        for t, v in steps:
            out |= ends(v, two + t)
        return out

    for w in ["bbbB", "BbBbo", "oOoobb", "bbbbbb"]:
        assert ends(w) == {tuple(decor.reduce_word(w))}


@given(words)
def test_normalization_is_idempotent(w):
    r = decor.reduce_word(w).word
    assert decor.reduce_word(r) == ScaledWord(0, r)
    assert decor.is_alternating(r)


@given(words)
def test_type_separation(w):
    r = decor.reduce_word(w).word
    pattern = lambda s: "".join("c" if c in "bB" else "o" for c in s)
    collapse = lambda s: "".join(k for k, _ in __import__("itertools").groupby(s))
    assert collapse(pattern(w)) == pattern(r)


@given(words, words)
def test_homomorphism(u, v):
    ru, rv = decor.reduce_word(u), decor.reduce_word(v)
    joined = decor.reduce_word(ru.word + rv.word)
    assert decor.reduce_word(u + v) == ScaledWord(ru.two_exp + rv.two_exp + joined.two_exp, joined.word)


@given(st.text(alphabet="bBoO", min_size=1, max_size=10), st.integers(0, 20), st.booleans())
def test_cyclic_invariance(w, r, flip):
    r %= len(w)
    v = w[r:] + w[:r]
    if flip:
        v = v[::-1]
    assert decor.reduce_cyclic(v) == decor.reduce_cyclic(w)


@given(st.text(alphabet="bBoO", max_size=10))
def test_reduce_cyclic_matches_oracle(w):
    kind, two, word = oracles.reduce_loop(w)
    got = decor.reduce_cyclic(w)
    if kind == "delta":
        assert got == RemovableLoop(two)
    else:
        assert got == IrreducibleLoop(two, word)


def test_cyclic_single_steps_are_confluent():
    def ends(w, two=0):
        steps = list(decor.cyclic_rewrite_steps(w))
        if not steps:
            return {(two, decor.canonical_cyclic(w))}
        out = set()
        for t, v in steps:
            out |= ends(v, two + t)
        return out

    for w in ["bbB", "bBoO", "obbo", "BbOo"]:
        assert len(ends(w)) == 1
