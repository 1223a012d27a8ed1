"""Tor over H^*(K_p) through the reduced bar complex.

The module is either F2 (trivial) or H^*(K_2) with H^*(K_p) acting through
the algebra map sending Sq^I i_p to Sq^I(psi). Chains of B_s are tuples
(m, a_1, ..., a_s) of monomials, m in the module and a_i of positive degree,
with boundary

    d(m|a_1|...|a_s) = m.a_1|a_2|...|a_s + sum_i m|...|a_i a_{i+1}|...|a_s

(the last face vanishes because the coefficient module is F2).
"""

from __future__ import annotations

from dataclasses import dataclass, field
from functools import lru_cache
from itertools import combinations, product

from .errors import ContractError, ResourceError
from .gf2 import Echelon, kernel_basis, rank
from .operations import OperationClass
from .poly import DegreeBasis, Poly
from .steenrod import KCohomology, k_cohomology

MAX_BAR_DEGREE = 26
DEFAULT_PSI_CAP = 12
DEFAULT_COLUMNS = 4
DEFAULT_TRIVIAL_CAP = 14


def _mono_mul(a: tuple, b: tuple) -> tuple:
    return tuple(x + y for x, y in zip(a, b))


@dataclass
class AlgebraTruncation:
    """H^*(K_p) through degree cap, as a polynomial ring on its Serre generators."""

    p: int
    cap: int
    K: KCohomology

    def basis(self, d: int) -> list[tuple]:
        return self.K.ring.monomials_of_degree(d) if d <= self.cap else []

    def dims(self) -> list[int]:
        return [len(self.basis(d)) for d in range(self.cap + 1)]

    def degree(self, m: tuple) -> int:
        return self.K.ring.mono_degree(m)

    def product(self, a: tuple, b: tuple) -> tuple:
        return _mono_mul(a, b)


@dataclass
class ModuleTruncation:
    """A module over an AlgebraTruncation: F2, or H^*(K_2) through psi."""

    cap: int
    psi: OperationClass | None
    K2: KCohomology | None = None
    images: dict = field(default_factory=dict)  # Serre word of K_p -> Sq^I(psi)

    @property
    def trivial(self) -> bool:
        return self.psi is None

    def basis(self, d: int) -> list[tuple]:
        if self.trivial:
            return [()] if d == 0 else []
        return self.K2.ring.monomials_of_degree(d) if d <= self.cap else []

    def dims(self) -> list[int]:
        return [len(self.basis(d)) for d in range(self.cap + 1)]

    def phi(self, alg: AlgebraTruncation, a: tuple) -> Poly:
        """Image of the monomial a of H^*(K_p) in H^*(K_2)."""
        acc = self.K2.ring.one()
        for word, e in zip(alg.K.words, a):
            if e:
                acc = acc * self.images[word] ** e
        return acc

    def act(self, alg: AlgebraTruncation, m: tuple, a: tuple) -> Poly:
        return Poly(self.K2.ring, (m,)) * self.phi(alg, a)


def build_truncations(p: int, psi: OperationClass | None, cap: int):
    """(algebra, module) truncations through degree cap; psi=None gives the trivial module."""
    if p < 2:
        raise ContractError("p must be >= 2")
    if cap > MAX_BAR_DEGREE:
        raise ResourceError(f"bar complex degree cap {cap} exceeds {MAX_BAR_DEGREE}")
    alg = AlgebraTruncation(p, cap, KCohomology(p, cap))
    if psi is None:
        return alg, ModuleTruncation(cap, None)
    if not psi.expression:
        raise ContractError("psi must be nonzero")
    if psi.target_degree != p:
        raise ContractError(f"psi has degree {psi.target_degree}, expected {p}")
    K2 = k_cohomology(2)
    if cap > K2.cap:
        raise ResourceError(f"H^*(K_2) is truncated at {K2.cap}")
    # Sq^I(psi) for every Serre generator Sq^I i_p of degree <= cap
    images = {w: K2.apply_word(w, psi.expression) for w in alg.K.words}
    return alg, ModuleTruncation(cap, psi, K2, images)


@dataclass
class TorTable:
    p: int
    psi: str
    cap: int
    columns: int
    dims: dict = field(default_factory=dict)  # (s, t) -> dim Tor^{-s, t}
    chain_dims: dict = field(default_factory=dict)  # (s, t) -> dim B_s(t)
    d_squared_checks: int = 0  # compositions d_s d_{s+1} verified to vanish

    def get(self, s: int, t: int) -> int:
        return self.dims.get((s, t), 0)

    def to_dict(self) -> dict:
        grid = [[self.get(s, t) for t in range(self.cap + 1)] for s in range(self.columns + 1)]
        return {"p": self.p, "psi": self.psi, "cap": self.cap, "columns": self.columns, "tor": grid}

    def render(self) -> str:
        """(s, t) grid; '.' marks the region t < s*p where Tor vanishes for degree reasons."""
        head = "s\\t " + " ".join(f"{t:>3}" for t in range(self.cap + 1))
        lines = [head]
        for s in range(self.columns + 1):
            cells = []
            for t in range(self.cap + 1):
                cells.append("  ." if t < s * self.p else f"{self.get(s, t):>3}")
            lines.append(f"{s:>3} " + " ".join(cells))
        return "\n".join(lines)


# -- chains for a psi-module, sliced by (s, t) --------------------------------


def _compositions(t: int, parts: int, low: int):
    """Ordered tuples of `parts` integers >= low summing to t."""
    if parts == 0:
        if t == 0:
            yield ()
        return
    for first in range(low, t - low * (parts - 1) + 1):
        for rest in _compositions(t - first, parts - 1, low):
            yield (first,) + rest


def _chain_basis(alg: AlgebraTruncation, mod: ModuleTruncation, s: int, t: int) -> list[tuple]:
    out = []
    for t0 in range(0, t - s * alg.p + 1):
        mb = mod.basis(t0)
        if not mb:
            continue
        for degs in _compositions(t - t0, s, alg.p):
            out.extend(product(mb, *(alg.basis(d) for d in degs)))
    return out


def _boundary(alg, mod, chain: tuple) -> list[tuple]:
    """Terms of d(chain), each a chain one bar-degree lower (with repeats to cancel)."""
    m, bars = chain[0], chain[1:]
    out = []
    # on F2 every positive-degree element acts by zero
    if not mod.trivial:
        for mm in mod.act(alg, m, bars[0]).terms:
            out.append((mm,) + bars[1:])
    for i in range(len(bars) - 1):
        out.append((m,) + bars[:i] + (alg.product(bars[i], bars[i + 1]),) + bars[i + 2 :])
    return out


def _matrix(alg, mod, source: list[tuple], target_index: dict) -> list[int]:
    rows = []
    for c in source:
        v = 0
        for term in _boundary(alg, mod, c):
            v ^= 1 << target_index[term]
        rows.append(v)
    return rows


def _compose_zero(inner: list[int], outer: list[int]) -> bool:
    """Is outer o inner zero? inner rows are vectors over outer's source basis."""
    for v in inner:
        acc = 0
        j = 0
        while v:
            if v & 1:
                acc ^= outer[j]
            v >>= 1
            j += 1
        if acc:
            return False
    return True


def _tor_cells(alg, mod, cells) -> tuple[dict, dict, int]:
    dims, chain_dims = {}, {}
    checks = 0
    needed_s = {}
    for s, t in cells:
        needed_s.setdefault(t, set()).update({s - 1, s, s + 1})
    for t, ss in sorted(needed_s.items()):
        bases = {s: _chain_basis(alg, mod, s, t) for s in ss if s >= 0}
        index = {s: {c: k for k, c in enumerate(b)} for s, b in bases.items()}
        mats = {}
        for s in bases:
            if s >= 1 and s - 1 in bases:
                mats[s] = _matrix(alg, mod, bases[s], index[s - 1])
        for s in sorted(bases):
            if s in mats and s + 1 in mats:
                assert _compose_zero(mats[s + 1], mats[s]), f"d^2 != 0 at (s, t) = ({s + 1}, {t})"
                checks += 1
        for s, tt in cells:
            if tt != t:
                continue
            n = len(bases[s])
            r_out = rank(mats[s]) if s >= 1 else 0
            r_in = rank(mats[s + 1]) if s + 1 in mats else 0
            dims[(s, t)] = n - r_out - r_in
            chain_dims[(s, t)] = n
    return dims, chain_dims, checks


# -- trivial module, sliced by multidegree ------------------------------------


@lru_cache(maxsize=None)
def _factorizations(e: tuple, s: int) -> tuple:
    """Ordered s-tuples of nonzero exponent vectors summing to e."""
    if s == 0:
        return ((),) if not any(e) else ()
    if s == 1:
        return ((e,),) if any(e) else ()
    out = []
    for first in _sub_vectors(e):
        rest = tuple(x - y for x, y in zip(e, first))
        if not any(rest):
            continue
        for tail in _factorizations(rest, s - 1):
            out.append((first,) + tail)
    return tuple(out)


def _sub_vectors(e: tuple):
    def rec(i, acc):
        if i == len(e):
            if any(acc):
                yield tuple(acc)
            return
        for x in range(e[i] + 1):
            acc.append(x)
            yield from rec(i + 1, acc)
            acc.pop()

    yield from rec(0, [])


def _trivial_cells(alg: AlgebraTruncation, cells) -> tuple[dict, dict, int]:
    """Homology of B(F2, A, F2) at the requested (s, t), one multidegree at a time."""
    ring = alg.K.ring
    dims = {c: 0 for c in cells}
    chain_dims = {c: 0 for c in cells}
    checks = 0
    by_t: dict[int, set] = {}
    for s, t in cells:
        by_t.setdefault(t, set()).add(s)
    for t, ss in by_t.items():
        for e in ring.monomials_of_degree(t):
            letters = sum(e)
            wanted = [s for s in ss if s <= letters]
            if not wanted:
                continue
            need = {x for s in wanted for x in (s - 1, s, s + 1) if 0 <= x <= letters}
            bases = {s: [((),) + f for f in _factorizations(e, s)] for s in need}
            index = {s: {c: k for k, c in enumerate(b)} for s, b in bases.items()}
            mats = {s: _matrix(alg, _TRIVIAL, bases[s], index[s - 1])
                    for s in bases if s >= 1 and s - 1 in bases}
            for s in mats:
                if s + 1 in mats:
                    assert _compose_zero(mats[s + 1], mats[s]), f"d^2 != 0 at multidegree {e}"
                    checks += 1
            for s in wanted:
                n = len(bases[s])
                r_out = rank(mats[s]) if s in mats else 0
                r_in = rank(mats[s + 1]) if s + 1 in mats else 0
                dims[(s, t)] += n - r_out - r_in
                chain_dims[(s, t)] += n
    return dims, chain_dims, checks


_TRIVIAL = ModuleTruncation(0, None)


def bar_tor(p: int, psi: OperationClass | None, cap: int | None = None,
            columns: int = DEFAULT_COLUMNS, cells=None) -> TorTable:
    """Tor^{-s,t}_{H^*(K_p)}(M, F2) for 0 <= s <= columns, t <= cap."""
    if cap is None:
        cap = DEFAULT_TRIVIAL_CAP if psi is None else DEFAULT_PSI_CAP
    if cells is None:
        cells = [(s, t) for s in range(columns + 1) for t in range(cap + 1)]
    cells = list(cells)
    alg, mod = build_truncations(p, psi, max(t for _, t in cells))
    if mod.trivial:
        dims, chain_dims, checks = _trivial_cells(alg, cells)
    else:
        dims, chain_dims, checks = _tor_cells(alg, mod, cells)
    label = "1" if psi is None else str(psi)
    return TorTable(p, label, cap, columns, dims, chain_dims, checks)


def ideal_quotient_dims(p: int, psi: OperationClass, cap: int) -> list[int]:
    """dim of H^*(K_2) / (Sq^I psi) in each degree, from the ideal's generators alone."""
    alg, mod = build_truncations(p, psi, cap)
    ring = mod.K2.ring
    out = []
    for d in range(cap + 1):
        tb = DegreeBasis(ring, d)
        span = Echelon()
        for g in mod.images.values():
            if not g:
                continue
            e = g.degree
            if e > d:
                continue
            for m in ring.monomials_of_degree(d - e):
                span.add(tb.vector(Poly(ring, (m,)) * g))
        out.append(len(tb) - len(span))
    return out


def euler_check(table: TorTable) -> bool:
    """sum_s (-1)^s dim B_s(t) = sum_s (-1)^s dim Tor^{-s,t} wherever every s is present."""
    for t in range(table.cap + 1):
        if t // table.p > table.columns:
            continue
        ss = range(t // table.p + 1)
        if not all((s, t) in table.chain_dims for s in ss):
            continue
        chains = sum((-1) ** s * table.chain_dims[(s, t)] for s in ss)
        homology = sum((-1) ** s * table.dims[(s, t)] for s in ss)
        if chains != homology:
            return False
    return True


def connectivity_check(table: TorTable) -> bool:
    """dims(s, t) = 0 whenever t <= s - 1."""
    return all(v == 0 for (s, t), v in table.dims.items() if t <= s - 1)


def structural_report(p: int, psi: OperationClass, cap: int = DEFAULT_PSI_CAP,
                      columns: int = 3) -> dict:
    """The checks run on every psi-module table; d^2 = 0 is asserted while building."""
    table = bar_tor(p, psi, cap, columns)
    quotient = ideal_quotient_dims(p, psi, cap)
    return {
        "table": table,
        # a nonzero d^2 raises while the table is built
        "d_squared_checks": table.d_squared_checks,
        "tor0_matches_quotient": [table.get(0, t) for t in range(cap + 1)] == quotient,
        "vanishes_below_sp": all(table.get(s, t) == 0 for s in range(columns + 1)
                                 for t in range(min(s * p, cap + 1))),
        "tor1p_zero": p > cap or table.get(1, p) == 0,
        "euler": euler_check(table),
        "connectivity": connectivity_check(table),
    }


def loop_totals(p: int, n_max: int) -> list[int]:
    """sum_s dim Tor^{-s, n+s} over the trivial module, n = 0..n_max."""
    s_max = n_max // (p - 1)
    cells = [(s, n + s) for n in range(n_max + 1) for s in range(s_max + 1) if n + s >= s * p]
    table = bar_tor(p, None, n_max + s_max, s_max, cells=cells)
    return [sum(table.get(s, n + s) for s in range(s_max + 1)) for n in range(n_max + 1)]


def loop_collapse_check(p: int, n_max: int) -> dict:
    """Bar totals for F2 over H^*(K_p) against the Poincare series of H^*(K_{p-1})."""
    if p not in (2, 3, 4):
        raise ContractError("loop check supports p in {2, 3, 4}")
    totals = loop_totals(p, n_max)
    expected = KCohomology(p - 1, n_max).dims() if p > 2 else [1] * (n_max + 1)
    return {"p": p, "n_max": n_max, "bar_totals": totals, "fiber_dims": expected,
            "ok": totals == expected}


# -- products -----------------------------------------------------------------


def shuffles(r: int, s: int):
    """Positions of the first factor's letters in each (r, s)-shuffle."""
    return combinations(range(r + s), r)


def shuffle_product(x: set, y: set, mod: ModuleTruncation) -> set:
    """Product of chains of B(M, A, F2) when M is a commutative A-algebra."""
    out: set = set()
    for a in x:
        for b in y:
            ma, bars_a = a[0], a[1:]
            mb, bars_b = b[0], b[1:]
            if mod.trivial:
                mm_terms = [()]
            else:
                ring = mod.K2.ring
                mm_terms = list((Poly(ring, (ma,)) * Poly(ring, (mb,))).terms)
            r, s = len(bars_a), len(bars_b)
            for pos in shuffles(r, s):
                pos_set = set(pos)
                ia, ib = iter(bars_a), iter(bars_b)
                merged = tuple(next(ia) if k in pos_set else next(ib) for k in range(r + s))
                for mm in mm_terms:
                    out ^= {(mm,) + merged}
    return out


def boundary_chain(alg, mod, chain: set) -> set:
    out: set = set()
    for c in chain:
        for term in _boundary(alg, mod, c):
            out ^= {term}
    return out


def tor1_cycles(p: int, psi: OperationClass, t: int, cap: int | None = None) -> tuple[list[set], list[set]]:
    """(cycles, boundaries) in B_1(t), as sets of chains; cap fixes the truncation used."""
    alg, mod = build_truncations(p, psi, max(t, cap or 0))
    b1 = _chain_basis(alg, mod, 1, t)
    b0 = _chain_basis(alg, mod, 0, t)
    b2 = _chain_basis(alg, mod, 2, t)
    i0 = {c: k for k, c in enumerate(b0)}
    i1 = {c: k for k, c in enumerate(b1)}
    ker = kernel_basis(_matrix(alg, mod, b1, i0))
    bnd = _matrix(alg, mod, b2, i1) if b2 else []

    def as_set(v):
        return {b1[k] for k in range(len(b1)) if (v >> k) & 1}

    return [as_set(v) for v in ker], [as_set(v) for v in bnd if v]
