"""Evaluate classes of H^*(K_2) on quadratic forms and study their kernels.

A class psi in H^p(K_2) is a polynomial in i2, q0, q1, ... . Evaluating it on
s in S^2(V^#) = H^2(V) substitutes i2 -> s and q_i -> Q_i(s); the forms that
evaluate to zero make up a subfunctor of S^2.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from functools import lru_cache

from .action import milnor_q
from .errors import ContractError, ResourceError, UnsupportedAlgebraError
from .gf2 import kernel_basis
from .poly import DegreeBasis, Poly, PolyRing, Variable, vector_space_ring
from .qforms import QuadraticForm, all_forms, closure
from .steenrod import k_cohomology

KERNEL_DIM_BOUND = 4
ALIASES = {
    "d2": "i2*q0 + q1",
    "h2": "i2^2*q1 + q0^3 + i2^3*q0",
}


def k2():
    return k_cohomology(2)


@dataclass(frozen=True)
class OperationClass:
    """psi in H^p(K_q), stored as a homogeneous polynomial in the Serre generators."""

    expression: Poly
    source_degree: int = 2

    def __post_init__(self):
        if self.source_degree < 1:
            raise ContractError("source degree must be >= 1")
        if not self.expression.is_homogeneous():
            raise ContractError(f"{self.expression} is not homogeneous")
        if self.expression and self.target_degree <= self.source_degree:
            raise ContractError("target degree must exceed the source degree")

    @property
    def target_degree(self) -> int:
        return self.expression.degree or 0

    def __str__(self):
        return str(self.expression)

    def __mul__(self, other: "OperationClass") -> "OperationClass":
        return OperationClass(self.expression * other.expression, self.source_degree)


def parse_class(text: str) -> OperationClass:
    """Parse a class of H^*(K_2); the names ``d2`` and ``h2`` are expanded."""
    K = k2()
    base = K.ring
    ext = PolyRing(list(base.variables) + [Variable("d2", 5), Variable("h2", 9)])
    raw = ext.parse(text)
    images = {name: base.parse(expr) for name, expr in ALIASES.items()}
    return OperationClass(raw.substitute(images, target=base))


def named(name: str) -> OperationClass:
    return parse_class(ALIASES.get(name, name))


@lru_cache(maxsize=None)
def _generator_images(s: QuadraticForm, k_max: int) -> tuple:
    f = s.to_poly()
    return (f,) + tuple(milnor_q(i, f) for i in range(k_max + 1))


def evaluate(psi: OperationClass, s: QuadraticForm) -> Poly:
    """psi_*(s) in H^p(V_n)."""
    if psi.source_degree != 2:
        raise UnsupportedAlgebraError("evaluation is implemented for classes of H^*(K_2) only")
    ring = psi.expression.ring
    names = ring.names
    k_max = max((int(n[1:]) for n in names if n.startswith("q")), default=0)
    used = {i for m in psi.expression.terms for i, e in enumerate(m) if e}
    imgs = _generator_images(s, k_max)
    target = vector_space_ring(s.n)
    zero = target.zero()
    images = {}
    for i, name in enumerate(names):
        if i not in used:
            images[name] = zero
        elif name == "i2":
            images[name] = imgs[0]
        else:
            images[name] = imgs[1 + int(name[1:])]
    return psi.expression.substitute(images, target=target)


def kernel_set(psi: OperationClass, n: int, bound: int = KERNEL_DIM_BOUND) -> frozenset:
    """{s in S^2(V_n^#) : psi_*(s) = 0}."""
    if n > bound:
        raise ResourceError(f"kernel enumeration limited to n <= {bound}")
    return frozenset(s for s in all_forms(n) if not evaluate(psi, s))


@dataclass
class SubfunctorWitness:
    """Per-dimension sets of forms, intended to be closed under linear pullback."""

    forms: dict[int, frozenset]
    generators: list = field(default_factory=list)

    @property
    def n_max(self) -> int:
        return max(self.forms)

    def __eq__(self, other):
        return isinstance(other, SubfunctorWitness) and self.forms == other.forms


def kernel_witness(psi: OperationClass, n_max: int) -> SubfunctorWitness:
    return SubfunctorWitness({n: kernel_set(psi, n) for n in range(n_max + 1)})


def closure_witness(generators, n_max: int) -> SubfunctorWitness:
    gens = [g for _, g in generators] if generators and isinstance(generators[0], tuple) else list(generators)
    return SubfunctorWitness(closure(gens, n_max), list(gens))


def is_pullback_closed(w: SubfunctorWitness) -> bool:
    from .qforms import linear_maps, pullback

    for n, forms in w.forms.items():
        if QuadraticForm(n, 0) not in forms:
            return False
        for m in w.forms:
            for s in forms:
                for phi in linear_maps(m, n):
                    if pullback(s, phi, m) not in w.forms[m]:
                        return False
    return True


def generated_by(witness: SubfunctorWitness, generators, n_max: int) -> bool:
    """True iff ``witness`` equals the pullback closure of ``generators`` through n_max."""
    gens = [g if isinstance(g, QuadraticForm) else g[1] for g in generators]
    target = closure(gens, n_max)
    return all(witness.forms.get(n, frozenset()) == target[n] for n in range(n_max + 1))


def h2_basis(p: int) -> list[Poly]:
    """Monomial basis of H^p(K_2)."""
    ring = k2().ring
    return [Poly(ring, (m,)) for m in ring.monomials_of_degree(p)]


def search_classes(p_max: int, target, n_max: int, p_min: int = 3,
                   monomials_only: bool = False, max_dim: int = 16) -> list[OperationClass]:
    """Classes psi in H^p(K_2), p_min <= p <= p_max, whose kernel is <target> for n <= n_max.

    psi runs over every nonzero class of each degree (or only monomials). The
    kernel condition is linear on the forms inside <target> and a nonvanishing
    condition on the forms outside it.
    """
    gens = [g if isinstance(g, QuadraticForm) else g[1] for g in target]
    want = closure(gens, n_max)
    out = []
    for p in range(p_min, p_max + 1):
        basis = h2_basis(p)
        if not basis:
            continue
        if len(basis) > max_dim:
            raise ResourceError(f"H^{p}(K_2) has dimension {len(basis)} > {max_dim}")
        # cols[j]: concatenated coordinates of basis[j] evaluated on every inside form
        cols = [0] * len(basis)
        offset = 0
        outside = []
        for n in range(n_max + 1):
            tb = DegreeBasis(vector_space_ring(n), p)
            for s in all_forms(n):
                vals = [tb.vector(evaluate(OperationClass(b), s)) for b in basis]
                if s in want[n]:
                    for j, v in enumerate(vals):
                        cols[j] |= v << offset
                    offset += len(tb)
                else:
                    outside.append(vals)
        for c in _span(kernel_basis(cols)):
            if not c or (monomials_only and c & (c - 1)):
                continue
            if all(_combine(vals, c) for vals in outside):
                expr = basis[0].ring.zero()
                for j, b in enumerate(basis):
                    if (c >> j) & 1:
                        expr = expr + b
                out.append(OperationClass(expr))
    return out


def _combine(vals: list[int], c: int) -> int:
    acc = 0
    for j, v in enumerate(vals):
        if (c >> j) & 1:
            acc ^= v
    return acc


def _span(basis: list[int]) -> list[int]:
    out = [0]
    for b in basis:
        out += [x ^ b for x in out]
    return sorted(out)
