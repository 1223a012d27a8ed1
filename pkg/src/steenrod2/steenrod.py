"""The mod-2 Steenrod algebra: Adem normal form, Serre bases and H^*(K_n).

Words are tuples ``(i_1, ..., i_k)`` meaning Sq^{i_1} Sq^{i_2} ... Sq^{i_k},
with the rightmost square applied first. An admissible sum is a frozenset of
admissible words (F2 coefficients).
"""

from __future__ import annotations

import re
from dataclasses import dataclass
from functools import lru_cache

from .errors import ContractError, GrammarError, ResourceError
from .poly import Poly, PolyRing, Variable

Word = tuple


def binom2(n: int, k: int) -> int:
    """C(n, k) mod 2 by the Lucas criterion."""
    if k < 0 or n < 0 or k > n:
        return 0
    return int((k & ~n) == 0)


def is_admissible(word: Word) -> bool:
    return all(word[j] >= 2 * word[j + 1] for j in range(len(word) - 1))


def excess(word: Word) -> int:
    if not word:
        return 0
    if not is_admissible(word):
        raise ContractError(f"excess is only defined for admissible words, got {word}")
    return word[0] - sum(word[1:])


def word_degree(word: Word) -> int:
    return sum(word)


@lru_cache(maxsize=None)
def _normalize(word: Word) -> frozenset:
    for j in range(len(word) - 1):
        a, b = word[j], word[j + 1]
        if a < 2 * b:
            break
    else:
        return frozenset((word,))
    head, tail = word[:j], word[j + 2 :]
    acc: set = set()
    for c in range(a // 2 + 1):
        if binom2(b - c - 1, a - 2 * c):
            mid = (a + b - c, c) if c else (a + b - c,)
            acc ^= _normalize(head + mid + tail)
    return frozenset(acc)


def adem_normalize(word) -> frozenset:
    """Admissible expansion of a word via the Adem relations.

    Sq^a Sq^b = sum_c C(b-c-1, a-2c) Sq^{a+b-c} Sq^c for a < 2b, applied to the
    leftmost inadmissible pair until none remain. Sq^0 letters are dropped.
    """
    word = tuple(int(i) for i in word)
    if any(i < 0 for i in word):
        raise ContractError(f"negative square in {word}")
    return _normalize(tuple(i for i in word if i))


def normalize_sum(words) -> frozenset:
    acc: set = set()
    for w in words:
        acc ^= adem_normalize(w)
    return frozenset(acc)


def compose(left: frozenset, right: frozenset) -> frozenset:
    """Product of two admissible sums in the Steenrod algebra."""
    acc: set = set()
    for a in left:
        for b in right:
            acc ^= adem_normalize(a + b)
    return frozenset(acc)


def admissible_words(degree: int, max_excess: int | None = None) -> list[Word]:
    """Admissible words of the given degree, optionally with excess <= max_excess."""
    out: list[Word] = []

    def rec(left: int, upper: int, acc: tuple):
        if left == 0:
            out.append(acc)
            return
        for i in range(min(left, upper), 0, -1):
            # the tail can contribute at most i - 1 more
            if left - i > i - 1:
                break
            rec(left - i, i // 2, acc + (i,))

    if degree == 0:
        out.append(())
    else:
        rec(degree, degree, ())
    if max_excess is not None:
        out = [w for w in out if excess(w) <= max_excess]
    return sorted(out)


def all_words(degree: int) -> list[Word]:
    """Every word of positive entries with the given degree (compositions)."""
    if degree == 0:
        return [()]
    out = []
    for first in range(1, degree + 1):
        for rest in all_words(degree - first):
            out.append((first,) + rest)
    return out


@dataclass(frozen=True)
class SerrePresentation:
    n: int
    cap: int
    generators: tuple  # of (word, degree)

    @property
    def degrees(self) -> list[int]:
        return [d for _, d in self.generators]


def serre_generators(n: int, cap: int) -> SerrePresentation:
    """Polynomial generators Sq^I i_n of H^*(K_n), I admissible of excess < n."""
    if n < 1:
        raise ContractError("n must be >= 1")
    gens = []
    for d in range(0, cap - n + 1):
        for w in admissible_words(d, max_excess=n - 1):
            gens.append((w, n + d))
    return SerrePresentation(n, cap, tuple(gens))


def f_basis(n: int, cap: int) -> list[Word]:
    """Basis of F(n) through degree ``cap``: admissible words of excess <= n."""
    if n < 0:
        raise ContractError("n must be >= 0")
    out = []
    for d in range(0, cap - n + 1):
        out.extend(admissible_words(d, max_excess=n))
    return out


def f_dims(n: int, cap: int) -> list[int]:
    dims = [0] * (cap + 1)
    for w in f_basis(n, cap):
        dims[n + sum(w)] += 1
    return dims


_WORD_TOKEN = re.compile(r"Sq\^?(\d+)$")


def parse_word(text: str) -> Word:
    """``"Sq^2 Sq^1"`` -> (2, 1); ``"1"`` or empty -> ()."""
    text = text.strip()
    if text in ("", "1"):
        return ()
    out = []
    for tok in text.split():
        m = _WORD_TOKEN.match(tok)
        if not m:
            raise GrammarError(f"bad Steenrod factor {tok!r}")
        out.append(int(m.group(1)))
    return tuple(out)


def format_word(word: Word) -> str:
    return " ".join(f"Sq^{i}" for i in word) if word else "1"


def format_sum(words) -> str:
    if not words:
        return "0"
    return " + ".join(format_word(w) for w in sorted(words, reverse=True))


def generator_name(n: int, word: Word) -> str:
    """Printable name of Sq^I i_n; for n = 2 the aliases i2, q0, q1, ..."""
    if n == 2:
        if not word:
            return "i2"
        return f"q{len(word) - 1}"
    if not word:
        return f"i{n}"
    return "sq" + "_".join(str(i) for i in word) + f"_i{n}"


DEFAULT_CAPS = {1: 64, 2: 40}


def default_cap(n: int) -> int:
    return DEFAULT_CAPS.get(n, 2 * n + 14)


class KCohomology:
    """H^*(K_n) truncated to degrees <= cap, as a polynomial ring on Serre generators."""

    def __init__(self, n: int, cap: int):
        self.n = n
        self.cap = cap
        self.presentation = serre_generators(n, cap)
        self.words = [w for w, _ in self.presentation.generators]
        self.ring = PolyRing(
            [Variable(generator_name(n, w), d) for w, d in self.presentation.generators]
        )
        self.word_index = {w: i for i, w in enumerate(self.words)}
        self._straight: dict[Word, Poly] = {}
        self._sq_mono: dict[tuple, Poly] = {}

    def __repr__(self):
        return f"KCohomology(n={self.n}, cap={self.cap})"

    def fundamental(self) -> Poly:
        return self.generator(())

    def generator(self, word: Word) -> Poly:
        return self.ring.var(self.ring.variables[self.word_index[word]].name)

    def _check_cap(self, d: int):
        if d > self.cap:
            raise ResourceError(f"degree {d} exceeds truncation cap {self.cap} of H^*(K_{self.n})")

    def straighten(self, word: Word) -> Poly:
        """Sq^I i_n for an admissible I."""
        if word in self._straight:
            return self._straight[word]
        self._check_cap(self.n + sum(word))
        e = excess(word)
        if e > self.n:
            val = self.ring.zero()
        elif e < self.n:
            val = self.generator(word)
        else:
            val = self.straighten(word[1:]).square()
        self._straight[word] = val
        return val

    def apply_to_fundamental(self, word) -> Poly:
        acc = self.ring.zero()
        for w in adem_normalize(word):
            acc = acc + self.straighten(w)
        return acc

    def sq_generator(self, k: int, index: int) -> Poly:
        return self.apply_to_fundamental((k,) + self.words[index])

    def _total_square_pieces(self, index: int, upto: int) -> list[Poly]:
        """[Sq^0 g, Sq^1 g, ...] for generator g, truncated at relative degree upto."""
        deg = self.ring.degrees[index]
        return [self.sq_generator(j, index) if j else self.ring.var(self.ring.names[index])
                for j in range(min(deg, upto) + 1)]

    def sq_monomial(self, k: int, m: tuple) -> Poly:
        key = (k, m)
        if key in self._sq_mono:
            return self._sq_mono[key]
        self._check_cap(self.ring.mono_degree(m) + k)
        zero = self.ring.zero()
        # graded total square: pieces[j] holds the relative-degree-j part
        pieces = [self.ring.one()] + [zero] * k
        for idx, e in enumerate(m):
            if not e:
                continue
            base = self._total_square_pieces(idx, k)
            bit = 0
            while e:
                if e & 1:
                    f = 1 << bit
                    factor = [zero] * (k + 1)
                    for j, c in enumerate(base):
                        if j * f <= k:
                            factor[j * f] = c.frobenius(bit)
                    new = [zero] * (k + 1)
                    for a, pa in enumerate(pieces):
                        if not pa:
                            continue
                        for b in range(k + 1 - a):
                            if factor[b]:
                                new[a + b] = new[a + b] + pa * factor[b]
                    pieces = new
                e >>= 1
                bit += 1
        val = pieces[k]
        self._sq_mono[key] = val
        return val

    def sq(self, k: int, g: Poly) -> Poly:
        """Sq^k on an element of H^*(K_n), by the Cartan formula."""
        acc = self.ring.zero()
        for m in g.terms:
            acc = acc + self.sq_monomial(k, m)
        return acc

    def apply_word(self, word, g: Poly) -> Poly:
        for k in reversed(tuple(word)):
            g = self.sq(k, g)
        return g

    def dims(self, upto: int | None = None) -> list[int]:
        from .poly import free_algebra_dims

        upto = self.cap if upto is None else upto
        return free_algebra_dims(self.presentation.degrees, upto)


_CACHE: dict[tuple[int, int], KCohomology] = {}


def k_cohomology(n: int, cap: int | None = None) -> KCohomology:
    key = (n, default_cap(n) if cap is None else cap)
    K = _CACHE.get(key)
    if K is None:
        K = _CACHE.setdefault(key, KCohomology(*key))
    return K


def apply_to_fundamental(n: int, word, cap: int | None = None) -> Poly:
    """Sq^word(i_n) in the Serre presentation of H^*(K_n)."""
    return k_cohomology(n, cap).apply_to_fundamental(tuple(word))


def steenrod_on_K(n: int, g: Poly, k: int) -> Poly:
    """Sq^k(g) for g in a ring produced by ``k_cohomology(n, ...)``."""
    for (m, _), K in list(_CACHE.items()):
        if m == n and K.ring == g.ring:
            return K.sq(k, g)
    raise ContractError(f"{g.ring!r} is not a truncation of H^*(K_{n}) built by k_cohomology")
