"""Weighted-graded commutative polynomial algebras over F2.

A :class:`PolyRing` fixes an ordered list of variables with positive degrees.
Monomials are exponent tuples aligned with that list (zero entries stand for
absent variables), and a :class:`Poly` is a frozenset of monomials: the
coefficient of every listed monomial is 1, so addition is symmetric
difference.

Text grammar: terms joined by ``+``, each term a ``*``-joined product of
``name`` or ``name^k`` factors, ``1`` for the unit and ``0`` for zero.
"""

from __future__ import annotations

import re
from dataclasses import dataclass
from functools import cached_property
from typing import Iterable, Iterator, Mapping, Sequence

from .errors import AmbientMismatchError, DegreeError, GrammarError

Monomial = tuple  # tuple[int, ...] aligned with PolyRing.variables

_NAME = re.compile(r"[A-Za-z_][A-Za-z0-9_]*$")


@dataclass(frozen=True)
class Variable:
    name: str
    degree: int

    def __post_init__(self):
        if self.degree < 1:
            raise ValueError(f"variable {self.name!r} must have degree >= 1")
        if not _NAME.match(self.name):
            raise GrammarError(f"invalid variable name {self.name!r}")


class PolyRing:
    """F2[x_1, ..., x_n] with |x_i| = ``degrees[i]``."""

    def __init__(self, variables: Sequence[Variable]):
        self.variables = tuple(variables)
        names = [v.name for v in self.variables]
        if len(set(names)) != len(names):
            raise ValueError(f"duplicate variable names in {names}")
        self.index = {name: i for i, name in enumerate(names)}
        self.degrees = tuple(v.degree for v in self.variables)
        self.nvars = len(self.variables)
        self._key = tuple((v.name, v.degree) for v in self.variables)

    @classmethod
    def from_names(cls, names: Iterable[str], degrees: Iterable[int] | None = None) -> "PolyRing":
        names = list(names)
        degrees = [1] * len(names) if degrees is None else list(degrees)
        return cls([Variable(n, d) for n, d in zip(names, degrees, strict=True)])

    def __eq__(self, other):
        return isinstance(other, PolyRing) and self._key == other._key

    def __hash__(self):
        return hash(self._key)

    def __repr__(self):
        gens = ", ".join(f"{v.name}:{v.degree}" for v in self.variables)
        return f"PolyRing({gens})"

    @property
    def names(self) -> tuple[str, ...]:
        return tuple(v.name for v in self.variables)

    @cached_property
    def unit_monomial(self) -> Monomial:
        return (0,) * self.nvars

    def zero(self) -> "Poly":
        return Poly(self, ())

    def one(self) -> "Poly":
        return Poly(self, (self.unit_monomial,))

    def var(self, name: str) -> "Poly":
        i = self.index[name]
        return Poly(self, (tuple(int(j == i) for j in range(self.nvars)),))

    def gens(self) -> list["Poly"]:
        return [self.var(n) for n in self.names]

    def monomial(self, exponents: Mapping[str, int]) -> "Poly":
        e = [0] * self.nvars
        for name, k in exponents.items():
            e[self.index[name]] = k
        return Poly(self, (tuple(e),))

    def mono_degree(self, m: Monomial) -> int:
        return sum(e * d for e, d in zip(m, self.degrees))

    def monomials_of_degree(self, d: int) -> list[Monomial]:
        """All monomials of degree ``d``, in descending canonical order."""
        out: list[Monomial] = []
        degs = self.degrees

        def rec(i: int, left: int, acc: list[int]):
            if i == self.nvars:
                if left == 0:
                    out.append(tuple(acc))
                return
            for e in range(left // degs[i], -1, -1):
                acc.append(e)
                rec(i + 1, left - e * degs[i], acc)
                acc.pop()

        if d >= 0:
            rec(0, d, [])
        return out

    def parse(self, text: str) -> "Poly":
        return parse_poly(self, text)


class Poly:
    """Immutable F2-polynomial in a :class:`PolyRing`."""

    __slots__ = ("ring", "terms", "_hash")

    def __init__(self, ring: PolyRing, terms: Iterable[Monomial]):
        self.ring = ring
        self.terms = terms if isinstance(terms, frozenset) else frozenset(terms)
        self._hash = None

    def _check(self, other: "Poly"):
        if not isinstance(other, Poly):
            raise TypeError(f"cannot combine Poly with {type(other).__name__}")
        if other.ring is not self.ring and other.ring != self.ring:
            raise AmbientMismatchError(f"{self.ring!r} vs {other.ring!r}")

    def __add__(self, other: "Poly") -> "Poly":
        self._check(other)
        return Poly(self.ring, self.terms ^ other.terms)

    __sub__ = __add__

    def __mul__(self, other: "Poly") -> "Poly":
        self._check(other)
        if not self.terms or not other.terms:
            return Poly(self.ring, frozenset())
        acc: set = set()
        for a in self.terms:
            for b in other.terms:
                m = tuple(x + y for x, y in zip(a, b))
                if m in acc:
                    acc.remove(m)
                else:
                    acc.add(m)
        return Poly(self.ring, frozenset(acc))

    def square(self) -> "Poly":
        # Frobenius: distinct monomials square to distinct monomials
        return Poly(self.ring, frozenset(tuple(2 * e for e in m) for m in self.terms))

    def frobenius(self, k: int) -> "Poly":
        """Raise to the power ``2**k``."""
        f = 1 << k
        return Poly(self.ring, frozenset(tuple(f * e for e in m) for m in self.terms))

    def __pow__(self, n: int) -> "Poly":
        if n < 0:
            raise ValueError("negative exponent")
        result = self.ring.one()
        k = 0
        while n:
            if n & 1:
                result = result * self.frobenius(k)
            n >>= 1
            k += 1
        return result

    def __eq__(self, other):
        if isinstance(other, int) and other == 0:
            return not self.terms
        return isinstance(other, Poly) and self.ring == other.ring and self.terms == other.terms

    def __hash__(self):
        if self._hash is None:
            self._hash = hash((self.ring, self.terms))
        return self._hash

    def __bool__(self):
        return bool(self.terms)

    def __len__(self):
        return len(self.terms)

    def __iter__(self) -> Iterator[Monomial]:
        return iter(self.sorted_terms())

    def sorted_terms(self) -> list[Monomial]:
        return sorted(self.terms, reverse=True)

    def degrees(self) -> set[int]:
        return {self.ring.mono_degree(m) for m in self.terms}

    def is_homogeneous(self) -> bool:
        return len(self.degrees()) <= 1

    @property
    def degree(self) -> int | None:
        """Common degree of a nonzero homogeneous polynomial; None for zero."""
        degs = self.degrees()
        if not degs:
            return None
        if len(degs) > 1:
            raise DegreeError(f"{self} is not homogeneous")
        return degs.pop()

    def component(self, d: int) -> "Poly":
        md = self.ring.mono_degree
        return Poly(self.ring, frozenset(m for m in self.terms if md(m) == d))

    def components(self) -> dict[int, "Poly"]:
        md = self.ring.mono_degree
        out: dict[int, set] = {}
        for m in self.terms:
            out.setdefault(md(m), set()).add(m)
        return {d: Poly(self.ring, frozenset(ts)) for d, ts in sorted(out.items())}

    def __repr__(self):
        return f"Poly({self})"

    def __str__(self):
        return format_poly(self)

    def factored_str(self) -> str:
        """Display form with the largest common monomial factor pulled out."""
        if len(self.terms) < 2:
            return str(self)
        g = tuple(min(col) for col in zip(*self.terms))
        if not any(g):
            return str(self)
        rest = Poly(self.ring, frozenset(tuple(a - b for a, b in zip(m, g)) for m in self.terms))
        return f"{_format_monomial(self.ring, g)}*({rest})"

    def substitute(self, images: Mapping[str, "Poly"], target: PolyRing | None = None) -> "Poly":
        return substitute(self, images, target)


def _format_monomial(ring: PolyRing, m: Monomial) -> str:
    parts = []
    for name, e in zip(ring.names, m):
        if e == 1:
            parts.append(name)
        elif e > 1:
            parts.append(f"{name}^{e}")
    return "*".join(parts) if parts else "1"


def format_poly(p: Poly) -> str:
    if not p.terms:
        return "0"
    return " + ".join(_format_monomial(p.ring, m) for m in p.sorted_terms())


def parse_poly(ring: PolyRing, text: str) -> Poly:
    src = text.strip()
    if not src:
        raise GrammarError("empty polynomial")
    acc: set = set()
    for raw in src.split("+"):
        term = raw.strip()
        if not term:
            raise GrammarError(f"empty term in {text!r}")
        e = [0] * ring.nvars
        zero = False
        for fac in term.split("*"):
            fac = fac.strip()
            name, caret, power = fac.partition("^")
            name, power = name.strip(), power.strip()
            if caret and not power.isdigit():
                raise GrammarError(f"bad exponent in {fac!r}")
            try:
                k = int(power) if caret else 1
            except ValueError:
                raise GrammarError(f"bad exponent in {fac!r}") from None
            if k < 0:
                raise GrammarError(f"negative exponent in {fac!r}")
            if name in ("0", "1"):
                if power:
                    raise GrammarError(f"cannot raise a constant: {fac!r}")
                zero = zero or name == "0"
                continue
            if name not in ring.index:
                raise GrammarError(f"unknown variable {name!r}; ring has {ring.names}")
            e[ring.index[name]] += k
        if zero:
            continue
        m = tuple(e)
        if m in acc:
            acc.remove(m)
        else:
            acc.add(m)
    return Poly(ring, frozenset(acc))


def substitute(p: Poly, images: Mapping[str, Poly], target: PolyRing | None = None) -> Poly:
    """Ring homomorphism determined by ``images`` (variable name -> Poly).

    Variables without an image map to the same-named variable of ``target``.
    Every image must be homogeneous of its variable's degree (zero allowed).
    """
    src = p.ring
    if target is None:
        target = next(iter(images.values())).ring if images else src
    per_var: list[Poly] = []
    for v in src.variables:
        img = images.get(v.name)
        if img is None:
            if v.name not in target.index:
                raise DegreeError(f"no image for variable {v.name!r}")
            img = target.var(v.name)
            if target.degrees[target.index[v.name]] != v.degree:
                raise DegreeError(f"degree clash for implicit image of {v.name!r}")
        if img.ring != target:
            raise AmbientMismatchError(f"image of {v.name!r} lives in {img.ring!r}")
        if img.terms and img.degrees() != {v.degree}:
            raise DegreeError(f"image of {v.name!r} must be homogeneous of degree {v.degree}, got {img}")
        per_var.append(img)

    powers: dict[tuple[int, int], Poly] = {}

    def power(i: int, e: int) -> Poly:
        key = (i, e)
        if key not in powers:
            powers[key] = per_var[i] ** e
        return powers[key]

    acc: set = set()
    one = target.one()
    for m in p.terms:
        term = one
        for i, e in enumerate(m):
            if e:
                term = term * power(i, e)
                if not term.terms:
                    break
        for t in term.terms:
            if t in acc:
                acc.remove(t)
            else:
                acc.add(t)
    return Poly(target, frozenset(acc))


def free_algebra_dims(generator_degrees: Iterable[int], cap: int) -> list[int]:
    """Degree-wise dimensions 0..cap of the polynomial algebra on the given generators."""
    dims = [1] + [0] * cap
    for g in generator_degrees:
        if g < 1:
            raise ValueError("generator degrees must be positive")
        for d in range(g, cap + 1):
            dims[d] += dims[d - g]
    return dims


def vector_space_ring(n: int) -> PolyRing:
    """H^*(V_n) = F2[u, v, w, x, y, z] (or x1..xn for n > 6), all in degree 1."""
    names = list("uvwxyz"[:n]) if n <= 6 else [f"x{i}" for i in range(1, n + 1)]
    return PolyRing.from_names(names)


class DegreeBasis:
    """Coordinates of homogeneous polynomials of one degree as bitsets."""

    def __init__(self, ring: PolyRing, d: int):
        self.ring = ring
        self.degree = d
        self.monomials = ring.monomials_of_degree(d)
        self.index = {m: i for i, m in enumerate(self.monomials)}

    def __len__(self):
        return len(self.monomials)

    def vector(self, p: Poly) -> int:
        v = 0
        for m in p.terms:
            v |= 1 << self.index[m]
        return v

    def poly(self, vec: int) -> Poly:
        terms = []
        i = 0
        while vec:
            if vec & 1:
                terms.append(self.monomials[i])
            vec >>= 1
            i += 1
        return Poly(self.ring, frozenset(terms))
