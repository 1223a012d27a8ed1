from __future__ import annotations

import pytest
from hypothesis import given

from conftest import forms, linear_maps
from steenrod2.errors import ContractError, ResourceError, UnsupportedAlgebraError
from steenrod2.operations import (
    OperationClass, closure_witness, evaluate, generated_by, is_pullback_closed, kernel_set,
    kernel_witness, named, parse_class, search_classes,
)
from steenrod2.qforms import QuadraticForm, closure, orbits, pullback
from steenrod2.poly import vector_space_ring


def F(text, n=None):
    return QuadraticForm.parse(text, n)


R2 = vector_space_ring(2)


def test_aliases():
    assert named("d2") == parse_class("i2*q0 + q1")
    assert named("h2") == parse_class("i2^2*q1 + q0^3 + i2^3*q0")
    assert parse_class("d2*h2").target_degree == 14


def test_operation_class_contract():
    with pytest.raises(ContractError):
        parse_class("i2")
    with pytest.raises(ContractError):
        parse_class("i2^2 + q0")


def test_evaluate_examples():
    assert evaluate(parse_class("i2^2"), F("u*v")) == R2.parse("u^2*v^2")
    for i in range(4):
        k = (1 << (i + 1)) - 1
        assert evaluate(parse_class(f"q{i}" if i else "q0"), F("u*v")) == R2.parse(f"u^{k + 1}*v + u*v^{k + 1}")
    assert not evaluate(named("d2"), F("u^2 + u*v + v^2"))
    assert not evaluate(named("h2"), F("u*v"))


def test_evaluate_other_source_unsupported():
    psi = OperationClass(parse_class("i2^2").expression, source_degree=3)
    with pytest.raises(UnsupportedAlgebraError):
        evaluate(psi, F("u*v"))


def test_kernel_examples():
    assert kernel_set(parse_class("i2^2"), 2) == {QuadraticForm(2, 0)}
    assert kernel_set(parse_class("q1"), 2) == {F(t, 2) for t in ["0", "u^2", "v^2", "u^2 + v^2"]}
    d2 = kernel_set(named("d2"), 2)
    assert d2 == {F(t, 2) for t in ["0", "u^2", "v^2", "u^2 + v^2", "u^2 + u*v + v^2"]}
    with pytest.raises(ResourceError):
        kernel_set(named("d2"), 5)


# kernel sizes for n = 0..3, enumerated by kernel_set and frozen here
FROZEN_SIZES = {
    "i2^2": [1, 1, 1, 1], "i2^3": [1, 1, 1, 1],
    "q0": [1, 2, 4, 8], "q1": [1, 2, 4, 8], "i2*q0": [1, 2, 4, 8],
    "d2": [1, 2, 5, 15], "i2*d2": [1, 2, 5, 15],
    "h2": [1, 2, 7, 29], "i2*h2": [1, 2, 7, 29],
    "d2*h2": [1, 2, 8, 36],
}


@pytest.mark.parametrize("text", sorted(FROZEN_SIZES))
def test_kernel_sizes_frozen(text):
    w = kernel_witness(parse_class(text), 3)
    assert [len(w.forms[n]) for n in range(4)] == FROZEN_SIZES[text]


def test_generated_by():
    assert generated_by(kernel_witness(named("d2"), 3), [(2, F("u^2 + u*v + v^2"))], 3)
    assert generated_by(kernel_witness(parse_class("q1"), 3), [(1, F("u^2", 1))], 3)
    assert generated_by(kernel_witness(parse_class("i2^2"), 3), [], 3)
    assert not generated_by(kernel_witness(named("h2"), 3), [(2, F("u^2 + u*v + v^2"))], 3)


def test_h2_kernel_is_closure_of_uv():
    assert kernel_witness(named("h2"), 3).forms == closure([F("u*v")], 3)


@pytest.mark.parametrize("text", ["q0", "d2", "h2", "d2*h2"])
def test_kernels_are_subfunctors(text):
    w = kernel_witness(parse_class(text), 2)
    assert is_pullback_closed(w)
    for n in range(3):
        for orb in orbits(n):
            inside = {q in w.forms[n] for q in orb}
            assert len(inside) == 1


def test_closure_witness_closed():
    assert is_pullback_closed(closure_witness([F("u*v + w^2")], 2))


@given(forms(3), linear_maps(2, 3))
def test_naturality(s, phi):
    R = vector_space_ring(2)
    images = {}
    for i, name in enumerate(s.to_poly().ring.names):
        img = R.zero()
        for j in range(2):
            if (phi[i] >> j) & 1:
                img = img + R.gens()[j]
        images[name] = img
    for psi in (named("d2"), named("h2"), parse_class("i2*q1")):
        assert evaluate(psi, pullback(s, phi, 2)) == evaluate(psi, s).substitute(images, R)


PAIRS = [("q0", "d2"), ("i2^2", "h2"), ("d2", "h2"), ("q1", "i2^2")]


@pytest.mark.parametrize("a,b", PAIRS)
def test_product_kernel_is_union(a, b):
    pa, pb = parse_class(a), parse_class(b)
    prod = OperationClass(pa.expression * pb.expression)
    for n in range(4):
        assert kernel_set(prod, n) == kernel_set(pa, n) | kernel_set(pb, n)


# multipliers: 1 (no hypothesis) and nontrivial monomials
MULTIPLIERS = ["1", "i2", "i2^2", "q0", "q1", "i2*q0"]


@pytest.mark.parametrize("alpha", MULTIPLIERS)
def test_monomial_multiples_keep_kernel(alpha):
    d2 = parse_class("d2" if alpha == "1" else f"{alpha}*d2")
    h2 = parse_class("h2" if alpha == "1" else f"{alpha}*h2")
    assert generated_by(kernel_witness(d2, 3), [F("u^2 + u*v + v^2")], 3)
    assert generated_by(kernel_witness(h2, 3), [F("u*v")], 3)


@pytest.mark.parametrize("alpha", ["q0", "q1", "i2*q0", "q0^2", "i2^2*q1"])
def test_monomials_with_a_milnor_factor(alpha):
    assert generated_by(kernel_witness(parse_class(alpha), 3), [F("u^2", 1)], 3)


def test_search_d2_family():
    found = {str(c) for c in search_classes(9, [F("u^2 + u*v + v^2")], 2)}
    assert str(named("d2")) in found
    assert str(parse_class("i2*d2")) in found
    assert str(parse_class("i2^2*d2")) in found


def test_search_squares_family():
    found = {str(c) for c in search_classes(7, [F("u^2", 1)], 2, monomials_only=True)}
    assert {"q0", "q1", "i2*q0"} <= found
    assert "i2^2" not in found


def test_search_exercise_runs():
    # forms generated by uv + w^2: reported, no expectation
    out = search_classes(6, [F("u*v + w^2")], 3)
    assert isinstance(out, list)
