"""GF(2) linear algebra on int bitsets.

A vector is a Python int whose bit ``j`` is the coordinate at column ``j``.
"""

from __future__ import annotations

from typing import Iterable


def rank(rows: Iterable[int]) -> int:
    """Rank over GF(2) of a collection of bitset rows."""
    return len(Echelon(rows))


class Echelon:
    """Incrementally maintained row-echelon basis, keyed by leading bit."""

    __slots__ = ("pivots",)

    def __init__(self, rows: Iterable[int] = ()):
        self.pivots: dict[int, int] = {}
        for r in rows:
            self.add(r)

    def __len__(self) -> int:
        return len(self.pivots)

    def reduce(self, vec: int) -> int:
        pivots = self.pivots
        while vec:
            p = pivots.get(vec.bit_length() - 1)
            if p is None:
                return vec
            vec ^= p
        return 0

    def add(self, vec: int) -> bool:
        """Insert ``vec``; return True if it enlarged the span."""
        vec = self.reduce(vec)
        if not vec:
            return False
        self.pivots[vec.bit_length() - 1] = vec
        return True

    def __contains__(self, vec: int) -> bool:
        return self.reduce(vec) == 0

    def basis(self) -> list[int]:
        return [self.pivots[k] for k in sorted(self.pivots)]

    def issubspace(self, other: "Echelon") -> bool:
        return all(v in other for v in self.pivots.values())


def same_span(a: Iterable[int], b: Iterable[int]) -> bool:
    ea, eb = Echelon(a), Echelon(b)
    return len(ea) == len(eb) and ea.issubspace(eb)


def intersection_dim(a: Iterable[int], b: Iterable[int]) -> int:
    """dim(A ∩ B) = dim A + dim B - dim(A + B)."""
    a, b = list(a), list(b)
    return rank(a) + rank(b) - rank(a + b)


def kernel_basis(images: list[int]) -> list[int]:
    """Kernel of the map sending source basis vector ``i`` to ``images[i]``.

    Returned vectors are bitsets over the source basis.
    """
    pivots: dict[int, tuple[int, int]] = {}
    kernel = []
    for i, img in enumerate(images):
        tag = 1 << i
        while img:
            lead = img.bit_length() - 1
            hit = pivots.get(lead)
            if hit is None:
                pivots[lead] = (img, tag)
                break
            img ^= hit[0]
            tag ^= hit[1]
        else:
            kernel.append(tag)
    return kernel
