"""Steenrod squares and Milnor primitives on polynomial algebras in degree-1 variables."""

from __future__ import annotations

from functools import lru_cache

from .errors import UnsupportedAlgebraError
from .poly import Monomial, Poly


def _require_degree_one(f: Poly):
    if any(d != 1 for d in f.ring.degrees):
        raise UnsupportedAlgebraError(
            f"Steenrod action is only implemented on degree-1 generators, got {f.ring!r}"
        )


@lru_cache(maxsize=None)
def sq_monomial(k: int, m: Monomial) -> frozenset:
    """Terms of Sq^k(x^m).

    Sq^k is the degree-(|m|+k) part of prod (x_i + x_i^2)^{m_i}, and
    (x + x^2)^a = sum_j C(a, j) x^{a+j}; by Lucas C(a, j) is odd iff j is a
    bit-submask of a. Distinct splittings of k give distinct monomials, so no
    cancellation happens and the result is a plain set.
    """
    if k == 0:
        return frozenset((m,))
    if k > sum(m):
        return frozenset()
    n = len(m)
    out = []
    acc = list(m)
    # suffix capacity bounds pruning
    cap = [0] * (n + 1)
    for i in range(n - 1, -1, -1):
        cap[i] = cap[i + 1] + m[i]

    def rec(i: int, left: int):
        if left == 0:
            out.append(tuple(acc))
            return
        if i == n or cap[i] < left:
            return
        a = m[i]
        j = a
        # submasks of a, descending; keep those <= left
        while True:
            if j <= left:
                acc[i] = a + j
                rec(i + 1, left - j)
            if j == 0:
                break
            j = (j - 1) & a
        acc[i] = a

    rec(0, k)
    return frozenset(out)


def sq(k: int, f: Poly) -> Poly:
    """Sq^k(f) for f in a polynomial algebra on degree-1 classes."""
    if k < 0:
        raise ValueError("k must be non-negative")
    _require_degree_one(f)
    acc: set = set()
    for m in f.terms:
        acc ^= sq_monomial(k, m)
    return Poly(f.ring, frozenset(acc))


def total_square(f: Poly) -> Poly:
    """Sum of all Sq^k(f)."""
    _require_degree_one(f)
    acc: set = set()
    for m in f.terms:
        for k in range(sum(m) + 1):
            acc ^= sq_monomial(k, m)
    return Poly(f.ring, frozenset(acc))


def apply_word(word, f: Poly) -> Poly:
    """Apply Sq^{i_1} ... Sq^{i_k} to f, rightmost letter first."""
    for k in reversed(tuple(word)):
        f = sq(k, f)
    return f


def _xor_sets(parts) -> frozenset:
    acc: set = set()
    for p in parts:
        acc ^= p
    return frozenset(acc)


@lru_cache(maxsize=None)
def milnor_q_monomial(i: int, m: Monomial) -> frozenset:
    """Terms of Q_i(x^m) via Q_0 = Sq^1, Q_{i+1} = [Sq^{2^{i+1}}, Q_i]."""
    if i == 0:
        return sq_monomial(1, m)
    k = 1 << i
    left = _xor_sets(sq_monomial(k, t) for t in milnor_q_monomial(i - 1, m))
    right = _xor_sets(milnor_q_monomial(i - 1, t) for t in sq_monomial(k, m))
    return left ^ right


def milnor_q(i: int, f: Poly) -> Poly:
    """Q_i(f), the Milnor primitive of degree 2^{i+1} - 1."""
    if i < 0:
        raise ValueError("i must be non-negative")
    _require_degree_one(f)
    acc: set = set()
    for m in f.terms:
        acc ^= milnor_q_monomial(i, m)
    return Poly(f.ring, frozenset(acc))
