from __future__ import annotations

import random

import pytest
from hypothesis import given, strategies as st

from conftest import forms
from steenrod2 import checks
from steenrod2.action import apply_word, milnor_q
from steenrod2.errors import ContractError, GrammarError, ResourceError
from steenrod2.operations import OperationClass, evaluate, k2
from steenrod2.poly import Poly
from steenrod2.steenrod import (
    KCohomology, adem_normalize, admissible_words, all_words, apply_to_fundamental, binom2,
    compose, excess, f_basis, f_dims, format_sum, is_admissible, k_cohomology, parse_word,
    serre_generators, steenrod_on_K,
)


def test_binom2_lucas():
    from math import comb

    for n in range(40):
        for k in range(n + 1):
            assert binom2(n, k) == comb(n, k) % 2


def test_adem_examples():
    assert adem_normalize((1, 1)) == frozenset()
    assert adem_normalize((1, 2)) == {(3,)}
    assert adem_normalize((2, 2)) == {(3, 1)}
    assert adem_normalize((4, 2)) == {(4, 2)}
    assert adem_normalize((2, 4)) == {(6,), (5, 1)}
    assert format_sum(adem_normalize((2, 4))) == "Sq^6 + Sq^5 Sq^1"


def test_adem_drops_sq0():
    assert adem_normalize((0, 2, 0)) == {(2,)}
    with pytest.raises(ContractError):
        adem_normalize((-1,))


@pytest.mark.parametrize("d", range(1, 11))
def test_normalize_idempotent_and_degree_preserving(d):
    for w in all_words(d):
        out = adem_normalize(w)
        assert all(is_admissible(x) and sum(x) == d for x in out)
    for w in admissible_words(d):
        assert adem_normalize(w) == {w}


def test_excess():
    assert excess((3, 1)) == 2
    assert excess((1,)) == 1
    assert excess(()) == 0
    with pytest.raises(ContractError):
        excess((1, 2))


def test_admissible_enumeration_counts():
    # admissible words of degree d <-> partitions of d into parts 2^k - 1
    def parts(d, sizes):
        if d == 0:
            return 1
        if not sizes:
            return 0
        s = sizes[0]
        return sum(parts(d - j * s, sizes[1:]) for j in range(d // s + 1))

    for d in range(0, 25):
        assert len(admissible_words(d)) == parts(d, [1, 3, 7, 15, 31])


def test_serre_generators():
    assert [w for w, _ in serre_generators(2, 10).generators] == [(), (1,), (2, 1), (4, 2, 1)]
    assert serre_generators(2, 10).degrees == [2, 3, 5, 9]
    assert [w for w, _ in serre_generators(3, 3).generators] == [()]
    # H^*(K_1) = F2[u]: only the fundamental class
    assert serre_generators(1, 8).generators == (((), 1),)


def test_f_basis():
    assert f_dims(1, 8) == [0, 1, 1, 0, 1, 0, 0, 0, 1]
    assert f_basis(1, 8) == [(), (1,), (2, 1), (4, 2, 1)]
    assert f_dims(2, 4)[2] == 1 and f_dims(2, 4)[4] == 1


def test_word_grammar():
    assert parse_word("Sq^2 Sq^1") == (2, 1)
    assert parse_word("1") == ()
    with pytest.raises(GrammarError):
        parse_word("Sq^2 Sq")


def test_h_k3_dims():
    # Sq^1 i3 has excess 1 < 3, so H^4(K_3) is nonzero
    assert KCohomology(3, 6).dims() == [1, 0, 0, 1, 1, 1, 2]


def test_apply_to_fundamental_examples():
    K = k_cohomology(2)
    i2, q0, q1 = (K.ring.var(n) for n in ("i2", "q0", "q1"))
    assert apply_to_fundamental(2, (2,)) == i2.square()
    assert not apply_to_fundamental(2, (3,))
    assert apply_to_fundamental(2, (3, 1)) == q0.square()
    assert apply_to_fundamental(2, (1,)) == q0
    assert apply_to_fundamental(2, (2, 1)) == q1
    assert apply_to_fundamental(2, (1, 2)) == apply_to_fundamental(2, (3,))


def test_steenrod_on_K_examples():
    K = k_cohomology(2)
    i2, q0 = K.ring.var("i2"), K.ring.var("q0")
    assert steenrod_on_K(2, i2, 1) == q0
    assert steenrod_on_K(2, i2, 2) == i2.square()
    assert not steenrod_on_K(2, q0, 1)
    with pytest.raises(ContractError):
        steenrod_on_K(2, checks.faithful_element(), 1)


def test_cap_errors():
    K = KCohomology(2, 10)
    with pytest.raises(ResourceError):
        K.apply_to_fundamental((8, 4, 2, 1))


@pytest.mark.parametrize("i", range(5))
def test_q_generators_are_milnor_primitives(i):
    word = tuple(1 << j for j in range(i, -1, -1))
    K = k_cohomology(2)
    assert apply_to_fundamental(2, word) == K.ring.var(f"q{i}")
    s = checks._f("u*v + w^2", 3)
    assert evaluate(OperationClass(K.ring.var(f"q{i}")), s) == milnor_q(i, s.to_poly())


def _realize(word, s):
    """Sq^I(i2) evaluated at s: straighten in H^*(K_2), then substitute."""
    return evaluate(OperationClass(apply_to_fundamental(2, word)), s)


@given(forms(3), st.integers(1, 10), st.data())
def test_straightening_compatible_with_evaluation(s, d, data):
    words = admissible_words(d)
    w = data.draw(st.sampled_from(words))
    assert _realize(w, s) == apply_word(w, s.to_poly())


@given(forms(3), st.integers(0, 7), st.data())
def test_sq_on_K_natural(s, k, data):
    K = k2()
    mono = data.draw(st.sampled_from([m for d in range(3, 9) for m in K.ring.monomials_of_degree(d)]))
    g = Poly(K.ring, (mono,))
    lhs = evaluate(OperationClass(K.sq(k, g)), s) if K.sq(k, g) else s.to_poly().ring.zero()
    rhs = apply_word((k,), evaluate(OperationClass(g), s))
    assert lhs == rhs


def test_faithful_element_certificate():
    assert checks.faithfulness_certificate(16)


def test_faithful_action_small():
    act = checks._WordAction()
    for d in range(1, 9):
        for w in all_words(d):
            assert act.matches(w)


def test_random_words_to_degree_16():
    rng = random.Random(7)
    act = checks._WordAction()
    for _ in range(50):
        d = rng.randint(1, 16)
        word, left = [], d
        while left:
            k = rng.randint(1, left)
            word.append(k)
            left -= k
        assert act.matches(tuple(word))


def test_compose_associative():
    a, b, c = adem_normalize((1,)), adem_normalize((2,)), adem_normalize((3,))
    assert compose(compose(a, b), c) == compose(a, compose(b, c))
    assert compose(a, a) == frozenset()
