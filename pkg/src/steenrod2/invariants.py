"""Graded dimensions of invariant subalgebras of F2[u, v]: D(2), H_2, M_2 and friends.

Every computation is exact row reduction degree by degree; F2[u, v] has
dimension d + 1 in degree d, so everything here is small.
"""

from __future__ import annotations

from dataclasses import dataclass

from .action import milnor_q
from .errors import ContractError
from .gf2 import Echelon, intersection_dim, kernel_basis, rank
from .poly import DegreeBasis, Poly, PolyRing, free_algebra_dims, vector_space_ring

DEFAULT_CAP = 15


def ring_uv() -> PolyRing:
    return vector_space_ring(2)


def matrix_action(ring: PolyRing, matrix) -> dict[str, Poly]:
    """Substitution x_j -> sum_i matrix[i][j] x_i for an invertible n x n matrix."""
    n = ring.nvars
    rows = [sum(int(matrix[i][j]) << j for j in range(n)) for i in range(n)]
    if rank(rows) != n:
        raise ContractError(f"matrix {matrix} is singular")
    gens = ring.gens()
    out = {}
    for j, name in enumerate(ring.names):
        img = ring.zero()
        for i in range(n):
            if matrix[i][j]:
                img = img + gens[i]
        out[name] = img
    return out


GL2 = ([[1, 1], [0, 1]], [[0, 1], [1, 0]])
SWAP = ([[0, 1], [1, 0]],)


def gl2_elements() -> list:
    import itertools

    out = []
    for a, b, c, d in itertools.product((0, 1), repeat=4):
        if (a * d + b * c) % 2:
            out.append([[a, b], [c, d]])
    return out


def invariant_ring_dims(group, n: int, cap: int) -> list[int]:
    """dim of the G-fixed part of F2[x_1..x_n] in each degree 0..cap."""
    ring = vector_space_ring(n)
    actions = [matrix_action(ring, g) for g in group]
    dims = []
    for d in range(cap + 1):
        tb = DegreeBasis(ring, d)
        rows = []
        for images in actions:
            # columns: monomials; (g^* - id) applied to each basis monomial
            rows.append([tb.vector(Poly(ring, (m,)).substitute(images, ring)) ^ (1 << k)
                         for k, m in enumerate(tb.monomials)])
        # kernel of the stacked map: concatenate images per generator
        width = len(tb)
        stacked = []
        for k in range(width):
            v = 0
            for g, row in enumerate(rows):
                v |= row[k] << (g * width)
            stacked.append(v)
        dims.append(len(kernel_basis(stacked)))
    return dims


@dataclass(frozen=True)
class SubalgebraSpec:
    ambient: PolyRing
    generators: tuple
    cap: int

    def __post_init__(self):
        for g in self.generators:
            if not g or not g.is_homogeneous():
                raise ContractError(f"generator {g} must be nonzero and homogeneous")


def subalgebra_spans(spec: SubalgebraSpec) -> list[Echelon]:
    """Echelon bases of the degree-d part of the subalgebra, d = 0..cap."""
    ring = spec.ambient
    bases = [DegreeBasis(ring, d) for d in range(spec.cap + 1)]
    spans = [Echelon() for _ in range(spec.cap + 1)]
    spans[0].add(bases[0].vector(ring.one()))
    gens = [(g.degree, g) for g in spec.generators]
    for d in range(1, spec.cap + 1):
        for e, g in gens:
            if e > d:
                continue
            for v in spans[d - e].basis():
                spans[d].add(bases[d].vector(bases[d - e].poly(v) * g))
    return spans


def subalgebra_dims(spec: SubalgebraSpec) -> list[int]:
    return [len(s) for s in subalgebra_spans(spec)]


def sqrt_spans(make_generators, cap: int, depth: int = 2) -> list[Echelon]:
    """Degree-wise spans of {x : x^(2^k) lies in the subalgebra for some k <= depth}.

    ``make_generators(D)`` must return the generators of degree <= D. Frobenius
    is injective and linear, so for each k the condition cuts out a subspace.
    """
    ring = ring_uv()
    top = cap << depth
    spans_big = subalgebra_spans(SubalgebraSpec(ring, make_generators(top), top))
    out = []
    for d in range(cap + 1):
        tb = DegreeBasis(ring, d)
        ech = Echelon()
        for k in range(depth + 1):
            tk = DegreeBasis(ring, d << k)
            # x^(2^k) is in the span iff its image vanishes modulo the span
            residues = [spans_big[d << k].reduce(tk.vector(Poly(ring, (m,)).frobenius(k)))
                        for m in tb.monomials]
            for v in kernel_basis(residues):
                ech.add(v)
        out.append(ech)
    return out


def dickson_generators() -> tuple:
    R = ring_uv()
    return (R.parse("u^2 + u*v + v^2"), R.parse("u^2*v + u*v^2"))


def h2_milnor_generators(cap: int) -> tuple:
    """uv and uv(u^(2^k - 1) + v^(2^k - 1)) = Q_{k-1}(uv), up to degree cap."""
    R = ring_uv()
    uv = R.parse("u*v")
    gens = [uv]
    i = 0
    while 2 + (1 << (i + 1)) - 1 <= cap:
        gens.append(milnor_q(i, uv))
        i += 1
    return tuple(gens)


def h2_stiefel_whitney_generators(cap: int) -> tuple:
    """w_1^j w_2 with w_1 = u + v, w_2 = uv, up to degree cap."""
    R = ring_uv()
    w1, w2 = R.parse("u + v"), R.parse("u*v")
    return tuple(w1 ** j * w2 for j in range(cap - 1))


def h2_two_descriptions_check(cap: int) -> bool:
    """Do the two generating sets generate the same subalgebra through ``cap``?"""
    a = subalgebra_spans(SubalgebraSpec(ring_uv(), h2_milnor_generators(cap), cap))
    b = subalgebra_spans(SubalgebraSpec(ring_uv(), h2_stiefel_whitney_generators(cap), cap))
    return all(len(x) == len(y) and x.issubspace(y) for x, y in zip(a, b))


def h2_two_descriptions_report(cap: int, depth: int = 2) -> dict:
    """Degree-wise comparison of the two H_2 descriptions, raw and after square roots."""
    R = ring_uv()
    mil = SubalgebraSpec(R, h2_milnor_generators(cap), cap)
    sw = SubalgebraSpec(R, h2_stiefel_whitney_generators(cap), cap)
    a, b = subalgebra_spans(mil), subalgebra_spans(sw)
    ra = sqrt_spans(h2_milnor_generators, cap, depth)
    rb = sqrt_spans(h2_stiefel_whitney_generators, cap, depth)
    same = [len(x) == len(y) and x.issubspace(y) for x, y in zip(a, b)]
    same_sqrt = [len(x) == len(y) and x.issubspace(y) for x, y in zip(ra, rb)]
    return {
        "milnor_dims": [len(x) for x in a],
        "stiefel_whitney_dims": [len(x) for x in b],
        "milnor_sqrt_dims": [len(x) for x in ra],
        "stiefel_whitney_sqrt_dims": [len(x) for x in rb],
        "first_raw_mismatch": next((d for d, ok in enumerate(same) if not ok), None),
        "sqrt_equal": all(same_sqrt),
        "stiefel_whitney_closed": all(len(x) == len(y) for x, y in zip(b, rb)),
    }


def _restriction_vectors(spans: list[Echelon], d: int) -> list[int]:
    """Diagonal restriction u, v -> u of a degree-d basis, as vectors in F2[u]_d (0 or 1)."""
    R = ring_uv()
    tb = DegreeBasis(R, d)
    diag = {"u": R.var("u"), "v": R.var("u")}
    out = []
    for v in spans[d].basis():
        out.append(1 if tb.poly(v).substitute(diag, R) else 0)
    return out


def m2_table(cap: int, h2: str = "stiefel_whitney") -> list[dict]:
    """Per degree: dims of D(2), H_2, the fiber product M_2, and the restriction images."""
    R = ring_uv()
    dick = subalgebra_spans(SubalgebraSpec(R, dickson_generators(), cap))
    hgens = h2_stiefel_whitney_generators(cap) if h2 == "stiefel_whitney" else h2_milnor_generators(cap)
    h = subalgebra_spans(SubalgebraSpec(R, hgens, cap))
    rows = []
    for d in range(cap + 1):
        r1 = _restriction_vectors(dick, d)
        r2 = _restriction_vectors(h, d)
        # fiber product = kernel of (a, b) -> rho1(a) - rho2(b)
        fiber = len(kernel_basis(r1 + r2))
        rows.append({
            "degree": d,
            "dickson": len(dick[d]),
            "h2": len(h[d]),
            "m2": fiber,
            "image_sum": rank(r1 + r2),
            "image_intersection": intersection_dim(r1, r2),
        })
    return rows


def m2_dims(cap: int) -> list[int]:
    return [row["m2"] for row in m2_table(cap)]


def norm_sequence_check(cap: int) -> dict:
    """ker(1 + tau^*) on F2[u, v] vs F2[w1, w2], and dim ker/im, degree by degree."""
    R = ring_uv()
    swap = {"u": R.var("v"), "v": R.var("u")}
    w1, w2 = R.parse("u + v"), R.parse("u*v")
    rows = []
    for d in range(cap + 1):
        tb = DegreeBasis(R, d)
        norm = [tb.vector(Poly(R, (m,)) + Poly(R, (m,)).substitute(swap, R)) for m in tb.monomials]
        ker = kernel_basis(norm)
        sym = [tb.vector(w1 ** a * w2 ** b) for b in range(d // 2 + 1) for a in [d - 2 * b]]
        ker_dim, im_dim = len(ker), rank(norm)
        rows.append({
            "degree": d,
            "kernel_is_symmetric": len(Echelon(sym)) == ker_dim and Echelon(sym).issubspace(Echelon(ker)),
            "kernel_dim": ker_dim,
            "image_dim": im_dim,
            "homology_dim": ker_dim - im_dim,
        })
    ok = all(r["kernel_is_symmetric"] and r["homology_dim"] == (1 - d % 2)
             for d, r in enumerate(rows))
    return {"ok": ok, "degrees": rows}


def ext_witness_dims(cap: int) -> list[int]:
    """Graded dimension of F2[u] / F2[u^2], from the two subalgebra closures."""
    R = vector_space_ring(1)
    u = R.var("u")
    whole = subalgebra_dims(SubalgebraSpec(R, (u,), cap))
    squares = subalgebra_dims(SubalgebraSpec(R, (u.square(),), cap))
    return [a - b for a, b in zip(whole, squares)]


def parity_report(p_minus_one_values=range(2, 10)) -> list[dict]:
    """For each p - 1: does F2[u]/F2[u^2] vanish there, and is p - 1 odd?"""
    w = ext_witness_dims(max(p_minus_one_values))
    return [{"p_minus_one": k, "witness_dim": w[k], "p_minus_one_odd": k % 2 == 1,
             "agrees": (w[k] == 1) == (k % 2 == 1)} for k in p_minus_one_values]


def dickson_dims(cap: int) -> dict:
    """The three independent routes to the graded dimension of D(2)."""
    R = ring_uv()
    return {
        "fixed_space": invariant_ring_dims(GL2, 2, cap),
        "subalgebra": subalgebra_dims(SubalgebraSpec(R, dickson_generators(), cap)),
        "free_algebra": free_algebra_dims([2, 3], cap),
    }
