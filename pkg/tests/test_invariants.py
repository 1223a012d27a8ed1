from __future__ import annotations

import pytest

from steenrod2.action import milnor_q
from steenrod2.errors import ContractError
from steenrod2.invariants import (
    GL2, SWAP, SubalgebraSpec, dickson_dims, dickson_generators, ext_witness_dims, gl2_elements,
    h2_milnor_generators, h2_stiefel_whitney_generators, h2_two_descriptions_check,
    h2_two_descriptions_report, invariant_ring_dims, m2_dims, m2_table, matrix_action,
    norm_sequence_check, parity_report, ring_uv, subalgebra_dims,
)
from steenrod2.poly import free_algebra_dims, vector_space_ring

R = ring_uv()
P = R.parse


def test_invariant_ring_dims_examples():
    assert invariant_ring_dims(GL2, 2, 6) == [1, 0, 1, 1, 1, 1, 2]
    assert invariant_ring_dims([[[1, 0], [0, 1]]], 2, 4) == [1, 2, 3, 4, 5]
    assert invariant_ring_dims(SWAP, 2, 5) == free_algebra_dims([1, 2], 5)


def test_singular_matrix_rejected():
    with pytest.raises(ContractError):
        invariant_ring_dims([[[1, 1], [1, 1]]], 2, 3)


def test_full_group_equals_generators():
    assert invariant_ring_dims(gl2_elements(), 2, 10) == invariant_ring_dims(GL2, 2, 10)
    assert len(gl2_elements()) == 6


def test_dickson_generators_fixed():
    for g in gl2_elements():
        images = matrix_action(R, g)
        for d in dickson_generators():
            assert d.substitute(images) == d


def test_dickson_triple_oracle():
    dims = dickson_dims(15)
    assert dims["fixed_space"] == dims["subalgebra"] == dims["free_algebra"]


def test_subalgebra_examples():
    u = vector_space_ring(1).var("u")
    assert subalgebra_dims(SubalgebraSpec(u.ring, (u,), 3)) == [1, 1, 1, 1]
    assert subalgebra_dims(SubalgebraSpec(R, dickson_generators(), 6)) == invariant_ring_dims(GL2, 2, 6)
    # Milnor-type generators uv, uv(u+v), uv(u^3+v^3): frozen closure table through degree 8
    gens = (P("u*v"), P("u^2*v + u*v^2"), P("u^4*v + u*v^4"))
    assert subalgebra_dims(SubalgebraSpec(R, gens, 8)) == [1, 0, 1, 1, 1, 2, 2, 2, 3]


def test_subalgebra_rejects_inhomogeneous():
    with pytest.raises(ContractError):
        SubalgebraSpec(R, (P("u + u*v"),), 4)


@pytest.mark.parametrize("k", range(1, 5))
def test_h2_generators_are_milnor_images(k):
    uv = P("u*v")
    e = (1 << k) - 1
    assert milnor_q(k - 1, uv) == uv * (P("u") ** e + P("v") ** e)
    assert milnor_q(k - 1, uv) in h2_milnor_generators(2 + (1 << k))


def test_h2_small_degrees_agree():
    assert h2_two_descriptions_check(2)
    assert h2_two_descriptions_check(3)
    assert P("u^2*v + u*v^2") == h2_stiefel_whitney_generators(3)[1]


def test_h2_descriptions_diverge_in_degree_4():
    # w1^2 w2 = u^3 v + u v^3 is not a polynomial in uv, uv(u+v), ...
    rep = h2_two_descriptions_report(12)
    assert rep["first_raw_mismatch"] == 4
    assert rep["milnor_dims"][4] == 1 and rep["stiefel_whitney_dims"][4] == 2


def test_h2_descriptions_agree_after_square_roots():
    rep = h2_two_descriptions_report(12)
    assert rep["sqrt_equal"]
    assert rep["stiefel_whitney_closed"]
    assert rep["milnor_sqrt_dims"] == rep["stiefel_whitney_dims"]
    # F2 + w2 F2[w1, w2]
    expected = [1, 0] + [d // 2 for d in range(2, 13)]
    assert rep["stiefel_whitney_dims"] == expected


def test_m2():
    rows = m2_table(12)
    assert rows[0]["m2"] == 1
    assert rows[2]["m2"] == 1  # the pair (u^2 + uv + v^2, uv)
    for r in rows:
        assert r["m2"] == r["dickson"] + r["h2"] - r["image_intersection"]
        assert r["m2"] <= r["dickson"] + r["h2"]
        assert (r["m2"] == r["dickson"] + r["h2"]) == (r["image_intersection"] == 0)
    assert m2_dims(12) == [r["m2"] for r in rows]


def test_diagonal_restriction_values():
    diag = {"u": P("u"), "v": P("u")}
    assert dickson_generators()[0].substitute(diag) == P("u^2")
    assert P("u*v").substitute(diag) == P("u^2")


def test_norm_sequence():
    rep = norm_sequence_check(12)
    assert rep["ok"]
    rows = rep["degrees"]
    assert rows[0]["homology_dim"] == 1
    assert (rows[1]["kernel_dim"], rows[1]["homology_dim"]) == (1, 0)
    assert (rows[2]["kernel_dim"], rows[2]["image_dim"], rows[2]["homology_dim"]) == (2, 1, 1)


def test_ext_witness():
    dims = ext_witness_dims(12)
    assert dims[3] == 1 and dims[4] == 0
    assert dims == [d % 2 for d in range(13)]
    rows = {r["p_minus_one"]: r for r in parity_report()}
    assert rows[5]["witness_dim"] == 1 and rows[5]["p_minus_one_odd"]
