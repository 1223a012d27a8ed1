"""Dimension bookkeeping for T_V on free unstable modules and on H^*(K_p) in degree 0."""

from __future__ import annotations

from dataclasses import dataclass, field
from math import comb

from .errors import ContractError, ResourceError
from .operations import OperationClass, kernel_set
from .steenrod import f_dims

MAX_BOOLEAN_EXPONENT = 64


def gamma_dim(n: int, i: int) -> int:
    """dim Gamma^i(V) for dim V = n."""
    if i == 0:
        return 1
    return comb(n + i - 1, i)


@dataclass
class TVReport:
    p: int
    n: int
    cap: int
    components: list = field(default_factory=list)  # (i, dim Gamma^i, dims of F(p - i))

    @property
    def dims(self) -> list[int]:
        out = [0] * (self.cap + 1)
        for _, g, fd in self.components:
            for d, x in enumerate(fd):
                out[d] += g * x
        return out

    def to_dict(self) -> dict:
        return {
            "p": self.p,
            "n": self.n,
            "cap": self.cap,
            "components": [{"i": i, "gamma_dim": g, "f_dims": fd} for i, g, fd in self.components],
            "dims": self.dims,
        }


def tv_report(p: int, n: int, cap: int) -> TVReport:
    """T_V F(p) = sum_i Gamma^i(V) (x) F(p - i), one component per i."""
    if p < 1 or n < 0:
        raise ContractError("need p >= 1 and n >= 0")
    comps = []
    for i in range(p + 1):
        g = gamma_dim(n, i)
        if g:
            comps.append((i, g, f_dims(p - i, cap)))
    return TVReport(p, n, cap, comps)


def tv_F_dims(p: int, n: int, cap: int) -> list[int]:
    return tv_report(p, n, cap).dims


def tv_HK_degree0(p: int, n: int) -> int:
    """dim of F2^X for X = Gamma^p(V^#), a set of 2^C(n+p-1, p) points."""
    if p < 1 or n < 0:
        raise ContractError("need p >= 1 and n >= 0")
    e = gamma_dim(n, p)
    if e > MAX_BOOLEAN_EXPONENT:
        raise ResourceError(f"2^{e} exceeds the 2^{MAX_BOOLEAN_EXPONENT} cap")
    return 1 << e


def l2_zero_rank(psi: OperationClass, n: int) -> int:
    """F2-dimension of the functions on the fiber psi_*^{-1}(0): the fiber size."""
    return len(kernel_set(psi, n))


def l2_zero_dim(psi: OperationClass, n: int) -> int:
    """Number of F2-valued functions on the fiber psi_*^{-1}(0), i.e. 2^|fiber|."""
    e = l2_zero_rank(psi, n)
    if e > MAX_BOOLEAN_EXPONENT:
        raise ResourceError(f"2^{e} exceeds the 2^{MAX_BOOLEAN_EXPONENT} cap")
    return 1 << e
