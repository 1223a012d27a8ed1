"""Quadratic forms over F2: polarization, Arf invariant, GL_n orbits.

A form on V_n is stored as an int whose bits are the upper-triangular
coefficients c_ij (i <= j) of sum c_ij x_i x_j, bit order (0,0), (0,1), ...,
(0,n-1), (1,1), ... . Points of V_n and linear forms on V_m are int bitmasks.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass
from functools import lru_cache

from .errors import ContractError, DegreeError, ResourceError
from .gf2 import kernel_basis, rank
from .poly import Poly, PolyRing, vector_space_ring

MAX_ORBIT_DIM = 4


@lru_cache(maxsize=None)
def _pairs(n: int) -> tuple:
    return tuple((i, j) for i in range(n) for j in range(i, n))


@lru_cache(maxsize=None)
def _pair_bit(n: int) -> dict:
    return {p: k for k, p in enumerate(_pairs(n))}


@dataclass(frozen=True, order=True)
class QuadraticForm:
    n: int
    bits: int

    @classmethod
    def from_coeffs(cls, n: int, coeffs) -> "QuadraticForm":
        """``coeffs``: iterable of (i, j) index pairs with coefficient 1."""
        pb = _pair_bit(n)
        bits = 0
        for i, j in coeffs:
            i, j = min(i, j), max(i, j)
            bits ^= 1 << pb[(i, j)]
        return cls(n, bits)

    @classmethod
    def from_poly(cls, p: Poly) -> "QuadraticForm":
        if any(d != 1 for d in p.ring.degrees):
            raise DegreeError("quadratic forms live in degree-1 polynomial rings")
        if p.terms and p.degrees() != {2}:
            raise DegreeError(f"{p} is not a quadratic form")
        n = p.ring.nvars
        coeffs = []
        for m in p.terms:
            idx = [i for i, e in enumerate(m) for _ in range(e)]
            coeffs.append((idx[0], idx[1]))
        return cls.from_coeffs(n, coeffs)

    @classmethod
    def parse(cls, text: str, n: int | None = None) -> "QuadraticForm":
        """Parse ``"u^2 + u*v"`` in the variables of H^*(V_n)."""
        if n is None:
            n = infer_dim(text)
        return cls.from_poly(vector_space_ring(n).parse(text))

    def coeff(self, i: int, j: int) -> int:
        i, j = min(i, j), max(i, j)
        return (self.bits >> _pair_bit(self.n)[(i, j)]) & 1

    def coeffs(self) -> list[tuple[int, int]]:
        return [p for k, p in enumerate(_pairs(self.n)) if (self.bits >> k) & 1]

    def to_poly(self, ring: PolyRing | None = None) -> Poly:
        ring = ring or vector_space_ring(self.n)
        terms = []
        for i, j in self.coeffs():
            e = [0] * ring.nvars
            e[i] += 1
            e[j] += 1
            terms.append(tuple(e))
        return Poly(ring, frozenset(terms))

    def __str__(self):
        return str(self.to_poly())

    def bitstring(self) -> str:
        """Canonical serialization: upper-triangular coefficients as '0'/'1'."""
        return "".join(str((self.bits >> k) & 1) for k in range(len(_pairs(self.n))))

    def __call__(self, x: int) -> int:
        """Value q(x) at a point x of V_n (bitmask)."""
        val = 0
        for i, j in self.coeffs():
            val ^= (x >> i) & (x >> j) & 1
        return val

    def polar_rows(self) -> list[int]:
        """Rows of the alternating matrix of b(x, y) = q(x+y) + q(x) + q(y)."""
        rows = [0] * self.n
        for i, j in self.coeffs():
            if i != j:
                rows[i] ^= 1 << j
                rows[j] ^= 1 << i
        return rows

    def polar(self, x: int, y: int) -> int:
        return self(x ^ y) ^ self(x) ^ self(y)

    def radical(self) -> list[int]:
        """Basis of the radical of the polar form (as points of V_n)."""
        return kernel_basis(self.polar_rows())

    def pullback(self, images, m: int) -> "QuadraticForm":
        return pullback(self, images, m)


def infer_dim(text: str) -> int:
    letters = "uvwxyz"
    used = [c for c in letters if c in text]
    return max((letters.index(c) + 1 for c in used), default=1)


def pullback(q: QuadraticForm, images, m: int) -> QuadraticForm:
    """phi^*(q) for phi: V_m -> V_n with phi^*(x_i) = images[i] (linear form on V_m)."""
    if len(images) != q.n:
        raise ContractError(f"need {q.n} linear forms, got {len(images)}")
    pb = _pair_bit(m)
    bits = 0
    for i, j in q.coeffs():
        a, b = images[i], images[j]
        # (sum_k a_k y_k)(sum_l b_l y_l): squares where both hit, cross terms symmetrized
        for k in range(m):
            ak = (a >> k) & 1
            bk = (b >> k) & 1
            if ak & bk:
                bits ^= 1 << pb[(k, k)]
            for l in range(k + 1, m):
                if (ak & ((b >> l) & 1)) ^ (bk & ((a >> l) & 1)):
                    bits ^= 1 << pb[(k, l)]
    return QuadraticForm(m, bits)


def all_forms(n: int) -> list[QuadraticForm]:
    return [QuadraticForm(n, b) for b in range(1 << len(_pairs(n)))]


def linear_maps(m: int, n: int):
    """All linear maps V_m -> V_n, as n-tuples of linear forms on V_m."""
    return itertools.product(range(1 << m), repeat=n)


def polar_rank(q: QuadraticForm) -> int:
    return rank(q.polar_rows())


def is_defective(q: QuadraticForm) -> bool:
    """True if q is nonzero somewhere on the radical of its polar form."""
    return any(q(r) for r in q.radical())


def zero_count(q: QuadraticForm) -> int:
    return sum(1 for x in range(1 << q.n) if not q(x))


def arf_by_zero_count(q: QuadraticForm) -> int:
    """Arf invariant of a nondefective form, from its zero count on V_n / radical."""
    if is_defective(q):
        raise ContractError(f"{q} is defective")
    r = polar_rank(q)
    if r == 0:
        return 0
    # q vanishes on the radical, so every zero of the quotient lifts 2^(n-r) times
    zeros = zero_count(q) >> (q.n - r)
    return 0 if zeros == (1 << (r - 1)) + (1 << (r // 2 - 1)) else 1


def arf(q: QuadraticForm) -> int:
    """Arf invariant of a nondegenerate form (full polar rank, even n)."""
    if q.n % 2 or polar_rank(q) != q.n:
        raise ContractError(f"Arf invariant needs a nondegenerate form on an even-dimensional space: {q}")
    zeros = zero_count(q)
    if q.n == 0:
        return 0
    return 0 if zeros == (1 << (q.n - 1)) + (1 << (q.n // 2 - 1)) else 1


def arf_by_reduction(q: QuadraticForm) -> int:
    """Arf invariant sum q(e_i) q(f_i) over a symplectic basis; q must be nondefective."""
    if is_defective(q):
        raise ContractError(f"{q} is defective")
    vecs = [1 << i for i in range(q.n)]
    total = 0
    while True:
        pair = None
        for a, b in itertools.combinations(range(len(vecs)), 2):
            if q.polar(vecs[a], vecs[b]):
                pair = (a, b)
                break
        if pair is None:
            return total
        e, f = vecs[pair[0]], vecs[pair[1]]
        total ^= q(e) & q(f)
        rest = [v for k, v in enumerate(vecs) if k not in pair]
        vecs = [v ^ (e if q.polar(v, f) else 0) ^ (f if q.polar(v, e) else 0) for v in rest]


@dataclass(frozen=True)
class FormClass:
    rank: int
    defective: bool
    arf: int | None
    representative: QuadraticForm

    @property
    def label(self) -> str:
        if self.defective:
            return f"rank {self.rank}, defective"
        return f"rank {self.rank}, Arf {self.arf}"


def normal_form(n: int, rank_: int, defective: bool, arf_: int | None) -> QuadraticForm:
    """sum_{i<k} x_{2i} x_{2i+1}, last pair anisotropic if Arf 1, plus x_{2k}^2 if defective."""
    k = rank_ // 2
    coeffs = [(2 * i, 2 * i + 1) for i in range(k)]
    if arf_ == 1:
        coeffs += [(2 * k - 2, 2 * k - 2), (2 * k - 1, 2 * k - 1)]
    if defective:
        coeffs.append((2 * k, 2 * k))
    return QuadraticForm.from_coeffs(n, coeffs)


def classify(q: QuadraticForm) -> FormClass:
    r = polar_rank(q)
    d = is_defective(q)
    a = None if d else arf_by_zero_count(q)
    return FormClass(r, d, a, normal_form(q.n, r, d, a))


def _generator_maps(n: int):
    """Transvections x_i -> x_i + x_j generating GL_n(F2), as pullback data."""
    for i in range(n):
        for j in range(n):
            if i != j:
                yield tuple((1 << k) | ((1 << j) if k == i else 0) for k in range(n))


def orbits(n: int) -> list[frozenset]:
    """GL_n(F2)-orbits on S^2(V_n^#) by closure under transvections."""
    if n > MAX_ORBIT_DIM:
        raise ResourceError(f"orbit enumeration limited to n <= {MAX_ORBIT_DIM}")
    gens = list(_generator_maps(n))
    seen: set = set()
    out = []
    for q in all_forms(n):
        if q in seen:
            continue
        orbit = {q}
        frontier = [q]
        while frontier:
            nxt = []
            for f in frontier:
                for g in gens:
                    h = pullback(f, g, n)
                    if h not in orbit:
                        orbit.add(h)
                        nxt.append(h)
            frontier = nxt
        seen |= orbit
        out.append(frozenset(orbit))
    return out


def canonical_form(q: QuadraticForm) -> QuadraticForm:
    """Lexicographically least coefficient string in the GL_n-orbit of q (n <= 4)."""
    for orb in orbits(q.n):
        if q in orb:
            return min(orb, key=lambda f: f.bitstring())
    raise AssertionError("unreachable")


def orbit_census(n: int) -> list[tuple[FormClass, int]]:
    """(class, orbit size) for every GL_n(F2)-orbit, sorted by (rank, kind)."""
    out = []
    for orb in orbits(n):
        cls = classify(next(iter(orb)))
        out.append((cls, len(orb)))
    out.sort(key=lambda t: (t[0].rank, t[0].defective, t[0].arf or 0))
    return out


def closure(generators, n_max: int) -> dict[int, frozenset]:
    """Pullback closure: dim m -> {phi^*(g) : g a generator, phi: V_m -> V_dim(g)}."""
    out = {}
    for m in range(n_max + 1):
        forms = {QuadraticForm(m, 0)}
        for g in generators:
            for phi in linear_maps(m, g.n):
                forms.add(pullback(g, phi, m))
        out[m] = frozenset(forms)
    return out


def inclusion_order(reps, n_max: int) -> set[tuple[int, int]]:
    """Pairs (a, b) of indices into ``reps`` with <reps[a]> contained in <reps[b]>."""
    out = set()
    for b, gb in enumerate(reps):
        sub = closure([gb], max(n_max, gb.n))
        for a, ga in enumerate(reps):
            if ga.n <= n_max and ga in sub[ga.n]:
                out.add((a, b))
    return out
