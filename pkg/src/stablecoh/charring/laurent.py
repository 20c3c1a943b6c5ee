"""Symmetric Laurent polynomials in n variables: the finite-n character oracle.

A character is stored by its dominant (weakly decreasing) exponent vectors only;
each stands for its whole S_n-orbit of monomials.
"""

from __future__ import annotations

from collections import Counter
from functools import lru_cache
from math import factorial, prod
from typing import Iterator, Mapping

from ..partitions import Bipartition


def _is_dominant(w) -> bool:
    return all(a >= b for a, b in zip(w, w[1:]))


def orbit_size(w) -> int:
    return factorial(len(w)) // prod(factorial(m) for m in Counter(w).values())


def distinct_permutations(w) -> Iterator[tuple[int, ...]]:
    """All distinct rearrangements of ``w``."""
    items = sorted(Counter(w).items())
    n = len(w)
    out = [0] * n

    def rec(pos):
        if pos == n:
            yield tuple(out)
            return
        for i, (val, cnt) in enumerate(items):
            if cnt:
                items[i] = (val, cnt - 1)
                out[pos] = val
                yield from rec(pos + 1)
                items[i] = (val, cnt)

    yield from rec(0)


class LaurentCharacter:
    """Symmetric Laurent polynomial Σ c_w m_w over dominant exponent vectors w."""

    __slots__ = ("n", "terms")

    def __init__(self, n: int, terms: Mapping[tuple[int, ...], int] | None = None):
        if n < 1:
            raise ValueError("alphabet size must be positive")
        self.n = n
        clean = {}
        for w, c in (terms or {}).items():
            w = tuple(w)
            if len(w) != n:
                raise ValueError(f"exponent vector {w} does not have length {n}")
            if not _is_dominant(w):
                raise ValueError(f"exponent vector {w} is not weakly decreasing")
            if c:
                clean[w] = clean.get(w, 0) + c
        self.terms = {w: c for w, c in clean.items() if c}

    @classmethod
    def from_monomials(cls, n: int, monomials: Mapping[tuple[int, ...], int]) -> "LaurentCharacter":
        """Build from a full monomial expansion; rejects non-symmetric input."""
        mons = {tuple(w): c for w, c in monomials.items() if c}
        dom = {}
        for w, c in mons.items():
            if len(w) != n:
                raise ValueError(f"exponent vector {w} does not have length {n}")
            s = tuple(sorted(w, reverse=True))
            if s in dom and dom[s] != c:
                raise ValueError(f"not symmetric: coefficients differ on the orbit of {s}")
            dom[s] = c
        for s, c in dom.items():
            if sum(1 for w in mons if tuple(sorted(w, reverse=True)) == s) != orbit_size(s):
                raise ValueError(f"not symmetric: orbit of {s} is incomplete")
        return cls(n, dom)

    @classmethod
    def one(cls, n: int) -> "LaurentCharacter":
        return cls(n, {(0,) * n: 1})

    # ---- arithmetic
    def _check(self, other):
        if self.n != other.n:
            raise ValueError(f"alphabet sizes differ: {self.n} vs {other.n}")

    def __add__(self, other):
        self._check(other)
        out = dict(self.terms)
        for w, c in other.terms.items():
            out[w] = out.get(w, 0) + c
        return LaurentCharacter(self.n, out)

    def __neg__(self):
        return LaurentCharacter(self.n, {w: -c for w, c in self.terms.items()})

    def __sub__(self, other):
        return self + (-other)

    def scale(self, k: int) -> "LaurentCharacter":
        return LaurentCharacter(self.n, {w: k * c for w, c in self.terms.items()})

    def __mul__(self, other):
        if isinstance(other, int):
            return self.scale(other)
        self._check(other)
        # expand the factor with fewer monomials, look the other up by orbit
        if self.num_monomials() > other.num_monomials():
            self, other = other, self
        small = list(self.monomials())
        big = other.terms
        cand = set()
        for a in big:
            for b, _ in small:
                cand.add(tuple(sorted((x + y for x, y in zip(a, b)), reverse=True)))
        out = {}
        for g in cand:
            total = 0
            for b, cb in small:
                key = tuple(sorted((x - y for x, y in zip(g, b)), reverse=True))
                cg = big.get(key)
                if cg:
                    total += cb * cg
            if total:
                out[g] = total
        return LaurentCharacter(self.n, out)

    __rmul__ = __mul__

    def __pow__(self, k: int):
        out = LaurentCharacter.one(self.n)
        for _ in range(k):
            out = out * self
        return out

    def adams(self, k: int) -> "LaurentCharacter":
        """x_i -> x_i^k."""
        if k < 1:
            raise ValueError("k must be positive")
        out = {}
        for w, c in self.terms.items():
            kw = tuple(k * x for x in w)
            out[kw] = out.get(kw, 0) + c
        return LaurentCharacter(self.n, out)

    # ---- inspection
    def monomials(self) -> Iterator[tuple[tuple[int, ...], int]]:
        for w, c in self.terms.items():
            for v in distinct_permutations(w):
                yield v, c

    def num_monomials(self) -> int:
        return sum(orbit_size(w) for w in self.terms)

    def dimension(self) -> int:
        """Value at x_1 = ... = x_n = 1."""
        return sum(c * orbit_size(w) for w, c in self.terms.items())

    def coefficient(self, w) -> int:
        return self.terms.get(tuple(sorted(w, reverse=True)), 0)

    def __eq__(self, other):
        return isinstance(other, LaurentCharacter) and self.n == other.n and self.terms == other.terms

    def __bool__(self):
        return bool(self.terms)

    def __repr__(self):
        return f"LaurentCharacter(n={self.n}, {len(self.terms)} orbits)"


# ------------------------------------------------------------ irreducibles

def _horizontal_strips(shape: tuple[int, ...], k: int):
    """Shapes κ ⊆ shape with shape/κ a horizontal strip of k boxes."""
    m = len(shape)
    out = []

    def rec(i, rest, acc):
        if i == m:
            if rest == 0:
                out.append(tuple(p for p in acc if p > 0))
            return
        lower = shape[i + 1] if i + 1 < m else 0
        for take in range(0, min(rest, shape[i] - lower) + 1):
            acc.append(shape[i] - take)
            rec(i + 1, rest - take, acc)
            acc.pop()

    rec(0, k, [])
    return out


@lru_cache(maxsize=None)
def kostka(shape: tuple[int, ...], content: tuple[int, ...]) -> int:
    """Number of SSYT of ``shape`` with weakly decreasing ``content``."""
    if sum(shape) != sum(content):
        return 0
    if not content:
        return 1 if not shape else 0
    if len(shape) > len(content):
        return 0
    last = content[-1]
    rest = content[:-1]
    return sum(kostka(k, rest) for k in _horizontal_strips(shape, last))


def _dominated(mu: tuple[int, ...], n: int) -> list[tuple[int, ...]]:
    """Partitions ν of |μ| with exactly n entries (zeros allowed) and ν ⊴ μ."""
    total = sum(mu)
    mu = tuple(mu) + (0,) * (n - len(mu))
    prefix = [0]
    for x in mu:
        prefix.append(prefix[-1] + x)
    out = []

    def rec(i, bound, acc, s):
        if i == n:
            if s == total:
                out.append(tuple(acc))
            return
        remaining = n - i
        for v in range(min(bound, total - s), -1, -1):
            if s + v > prefix[i + 1]:
                continue
            if s + v + v * (remaining - 1) < total:
                break
            acc.append(v)
            rec(i + 1, v, acc, s + v)
            acc.pop()

    rec(0, mu[0] if mu else 0, [], 0)
    return out


@lru_cache(maxsize=None)
def irrep_character(b: Bipartition, n: int) -> LaurentCharacter:
    """Character of V_b(n), via weight multiplicities of V_μ ⊗ det^{-k}.

    μ is the highest weight shifted by k = (largest contravariant part) to a
    polynomial weight; weight multiplicities are Kostka numbers.
    """
    if b.length > n:
        raise ValueError(f"{b} has length {b.length} > n={n}")
    shift = b.contravariant[0] if b.contravariant else 0
    mu = tuple(x + shift for x in b.weight(n))
    mu_shape = tuple(x for x in mu if x > 0)
    terms = {}
    for nu in _dominated(mu, n):
        k = kostka(mu_shape, tuple(x for x in nu if x > 0))
        if k:
            terms[tuple(x - shift for x in nu)] = k
    return LaurentCharacter(n, terms)


def peel(chi: LaurentCharacter) -> dict[Bipartition, int]:
    """Decompose a (possibly virtual) character into irreducibles.

    Repeatedly removes the irreducible whose highest weight is the
    lexicographically largest dominant exponent vector still present.
    """
    n = chi.n
    rest = dict(chi.terms)
    out: dict[Bipartition, int] = {}
    while rest:
        top = max(rest)
        c = rest[top]
        b = Bipartition.from_weight(top)
        out[b] = out.get(b, 0) + c
        for w, m in irrep_character(b, n).terms.items():
            v = rest.get(w, 0) - c * m
            if v:
                rest[w] = v
            else:
                rest.pop(w, None)
    return {b: c for b, c in out.items() if c}


def standard_character(n: int) -> LaurentCharacter:
    """x_1 + ... + x_n."""
    return LaurentCharacter(n, {(1,) + (0,) * (n - 1): 1})


def dual_standard_character(n: int) -> LaurentCharacter:
    return LaurentCharacter(n, {(0,) * (n - 1) + (-1,): 1})
