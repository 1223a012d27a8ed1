from __future__ import annotations

import pytest

from steenrod2.errors import ResourceError
from steenrod2.lannes import (
    gamma_dim, l2_zero_dim, l2_zero_rank, tv_F_dims, tv_HK_degree0, tv_report,
)
from steenrod2.operations import named, parse_class
from steenrod2.steenrod import f_dims


@pytest.mark.parametrize("p", range(1, 5))
def test_zero_space_is_identity(p):
    assert tv_F_dims(p, 0, 12) == f_dims(p, 12)


def test_tv_f1_v1():
    assert tv_F_dims(1, 1, 4) == [1, 1, 1, 0, 1]


@pytest.mark.parametrize("a,b,p", [(a, b, p) for a in range(3) for b in range(3) if a + b <= 3 for p in range(1, 5)])
def test_direct_sum_convolution(a, b, p):
    for i in range(p + 1):
        assert gamma_dim(a + b, i) == sum(gamma_dim(a, j) * gamma_dim(b, i - j) for j in range(i + 1))
    direct = tv_F_dims(p, a + b, 10)
    conv = [0] * 11
    for i in range(p + 1):
        g = sum(gamma_dim(a, j) * gamma_dim(b, i - j) for j in range(i + 1))
        for d, x in enumerate(f_dims(p - i, 10)):
            conv[d] += g * x
    assert direct == conv


def test_report_components():
    rep = tv_report(2, 2, 6)
    assert [(i, g) for i, g, _ in rep.components] == [(0, 1), (1, 2), (2, 3)]
    assert rep.to_dict()["dims"] == rep.dims


def test_hk_degree0():
    assert tv_HK_degree0(2, 0) == 1
    assert tv_HK_degree0(2, 1) == 2
    assert tv_HK_degree0(2, 2) == 8
    with pytest.raises(ResourceError):
        tv_HK_degree0(2, 11)


def test_l2_zero():
    assert l2_zero_dim(parse_class("i2^2"), 2) == 2
    assert l2_zero_dim(parse_class("q1"), 1) == 4
    assert l2_zero_dim(named("d2"), 1) == 4
    assert l2_zero_rank(named("d2"), 2) == 5
