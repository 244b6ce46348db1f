from __future__ import annotations

import itertools
import math

import pytest
from hypothesis import given, settings, strategies as st

from ctilde.coxeter import (
    CoxeterGraph,
    affine_c,
    canonical,
    chebyshev,
    check_quadratic,
    check_tl_presentation,
    commutation_class,
    enumerate_fc,
    is_fully_commutative,
    relation_element,
    theta,
)
from ctilde.diagram import identity_diagram, simple_diagram
from ctilde.engine import Element

import oracles


def brute_fc(word, g):
    """Scan every commutation-class member for ss and alternating braid factors."""
    for v in commutation_class(word, g):
        for p in range(len(v) - 1):
            if v[p] == v[p + 1]:
                return False
            m = g.m(v[p], v[p + 1])
            if m >= 3 and p + m <= len(v):
                if all(v[p + j] == v[p + (j % 2)] for j in range(m)):
                    return False
    return True


def test_bonds():
    g = affine_c(4)
    assert g.m(1, 2) == 4 and g.m(4, 5) == 4
    assert g.m(2, 3) == 3 and g.m(3, 4) == 3
    assert g.m(1, 3) == 2 and g.m(2, 2) == 1
    assert CoxeterGraph("B", 3).m(1, 2) == 4 and CoxeterGraph("B", 3).m(2, 3) == 3
    assert CoxeterGraph("B'", 3).m(3, 4) == 4 and CoxeterGraph("B'", 3).m(2, 3) == 3
    assert CoxeterGraph("A", 3).m(1, 2) == 3


def test_fc_examples():
    assert not is_fully_commutative([1, 2, 1, 2], affine_c(2))
    assert not is_fully_commutative([2, 3, 2], affine_c(3))
    assert is_fully_commutative([1, 3], affine_c(2))
    assert not is_fully_commutative([1, 3, 1], affine_c(2))
    with pytest.raises(ValueError):
        is_fully_commutative([4], affine_c(2))


@pytest.mark.parametrize("n, length", [(2, 7), (3, 6), (4, 5)])
def test_heap_test_matches_class_scan(n, length):
    g = affine_c(n)
    for L in range(length + 1):
        for w in itertools.product(g.generators, repeat=L):
            assert is_fully_commutative(w, g) == brute_fc(w, g), w


def test_enumerate_examples():
    assert len(enumerate_fc(CoxeterGraph("A", 2))) == 5
    assert len(enumerate_fc(CoxeterGraph("A", 3))) == 14
    assert enumerate_fc(affine_c(2), 0) == {()}


@pytest.mark.parametrize("n", range(1, 6))
def test_type_a_counts(n):
    assert len(enumerate_fc(CoxeterGraph("A", n))) == oracles.count_321_avoiding(n + 1)


@pytest.mark.parametrize("n", range(2, 6))
def test_type_b_counts(n):
    fc = enumerate_fc(CoxeterGraph("B", n))
    assert len(fc) == oracles.fc_count_type_b(n)
    assert len(enumerate_fc(CoxeterGraph("B'", n))) == len(fc)


def test_enumeration_gives_canonical_representatives():
    g = affine_c(3)
    for w in enumerate_fc(g, 7):
        assert canonical(w, g) == w == min(commutation_class(w, g))


@settings(max_examples=200)
@given(st.lists(st.integers(1, 4), max_size=9), st.randoms(use_true_random=False))
def test_theta_respects_commutation(word, rnd):
    g = affine_c(3)
    cls = sorted(commutation_class(word, g))
    other = rnd.choice(cls)
    assert theta(word, 3) == theta(other, 3)
    assert canonical(word, g) == canonical(other, g)


def test_chebyshev_examples():
    assert chebyshev(0) == [1]
    assert chebyshev(1) == [0, 1]
    assert chebyshev(3) == [0, -2, 0, 1]


@pytest.mark.parametrize("k", range(8))
def test_chebyshev_against_trigonometric_identity(k):
    for t in (0.3, 0.7, 1.1):
        x = 2 * math.cos(t)
        value = sum(c * x**j for j, c in enumerate(chebyshev(k)))
        assert value == pytest.approx(oracles.chebyshev_value(k, t))


def test_theta_examples():
    assert theta([1], 2) == Element.of(simple_diagram(1, 2))
    assert theta([1, 2, 1, 2], 2) == theta([1, 2], 2).scale(2)
    assert theta([], 2) == Element.of(identity_diagram(4))


def test_presentation_examples():
    assert not relation_element(3, 2, 3, 3)
    assert not relation_element(2, 1, 2, 4)
    assert not relation_element(2, 1, 3, 2)
    for n in range(2, 6):
        for m in (2, 3, 4):
            assert check_tl_presentation(n, m)
        assert check_quadratic(n)


def test_presentation_detects_a_wrong_relation():
    # b_1 b_2 b_1 - b_1 is not zero: the bond between 1 and 2 is 4, not 3
    assert relation_element(2, 1, 2, 3)
