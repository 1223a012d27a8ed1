from __future__ import annotations

import pytest
from hypothesis import given, strategies as st

from conftest import linear_maps, polys
from steenrod2.action import apply_word, milnor_q, sq, total_square
from steenrod2.errors import UnsupportedAlgebraError
from steenrod2.poly import PolyRing, Variable, vector_space_ring

R2 = vector_space_ring(2)
P = R2.parse


def test_sq_examples():
    assert not sq(1, P("u^2"))
    assert sq(2, P("u^2")) == P("u^4")
    assert sq(1, P("u*v")) == P("u^2*v + u*v^2")
    assert sq(0, P("u*v + v^2")) == P("u*v + v^2")


def test_sq_matches_total_square_expansion():
    # (u + u^2)(v + v^2) = uv + (u^2 v + u v^2) + u^2 v^2
    assert total_square(P("u*v")) == P("u*v + u^2*v + u*v^2 + u^2*v^2")


def test_unsupported_ring():
    K = PolyRing([Variable("a", 2)])
    with pytest.raises(UnsupportedAlgebraError):
        sq(1, K.var("a"))
    with pytest.raises(UnsupportedAlgebraError):
        milnor_q(0, K.var("a"))


@pytest.mark.parametrize("i", range(4))
def test_milnor_on_squares_and_uv(i):
    k = (1 << (i + 1)) - 1
    uv = P("u*v")
    target = uv * (P("u") ** k + P("v") ** k)
    assert not milnor_q(i, P("u^2"))
    assert milnor_q(i, uv) == target
    assert milnor_q(i, P("u^2 + u*v + v^2")) == target


def test_milnor_q1_uv_factored():
    assert milnor_q(1, P("u*v")).factored_str() == "u*v*(u^3 + v^3)"


@pytest.mark.parametrize("i", range(6))
def test_milnor_on_variable(i):
    u = vector_space_ring(3).var("v")
    assert milnor_q(i, u) == u ** (1 << (i + 1))


@given(polys(nvars=3, max_degree=4, homogeneous=True), polys(nvars=3, max_degree=4, homogeneous=True),
       st.integers(0, 8))
def test_cartan(f, g, k):
    rhs = f.ring.zero()
    for a in range(k + 1):
        rhs = rhs + sq(a, f) * sq(k - a, g)
    assert sq(k, f * g) == rhs


@given(polys(nvars=3, max_degree=6, homogeneous=True))
def test_instability(f):
    d = f.degree
    if d is None:
        return
    assert sq(d, f) == f.square()
    for k in range(d + 1, d + 4):
        assert not sq(k, f)


@given(polys(nvars=3, max_degree=4), polys(nvars=3, max_degree=4), st.integers(0, 4))
def test_milnor_derivation(f, g, i):
    assert milnor_q(i, f * g) == milnor_q(i, f) * g + f * milnor_q(i, g)


@given(polys(nvars=3, max_degree=8, max_terms=3), st.integers(0, 3))
def test_milnor_squares_to_zero(f, i):
    assert not milnor_q(i, milnor_q(i, f))


@given(polys(nvars=3, max_degree=5, homogeneous=True), linear_maps(3, 3), st.integers(0, 6))
def test_naturality_under_linear_maps(f, phi, k):
    ring = f.ring
    images = {}
    for i, name in enumerate(ring.names):
        img = ring.zero()
        for j in range(3):
            if (phi[i] >> j) & 1:
                img = img + ring.gens()[j]
        images[name] = img
    assert sq(k, f.substitute(images)) == sq(k, f).substitute(images)


def test_apply_word_right_to_left():
    f = P("u*v")
    assert apply_word((2, 1), f) == sq(2, sq(1, f))
    assert apply_word((1, 1), f) == 0
