"""Partitions, bipartitions and the exact combinatorics built on them.

Canonical order for partitions (used by every deterministic output): decreasing
size, then reverse-lexicographic on parts, so ``[3] < [2,1] < [1,1,1] < [2] < ...``
when sorted with :func:`partition_key`.  Bipartitions sort by total size
(ascending), then by the canonical order of the covariant and contravariant parts.
"""

from __future__ import annotations

import re
from fractions import Fraction
from functools import lru_cache
from math import factorial, prod
from typing import Iterator, NamedTuple


class Partition(tuple):
    """A weakly decreasing tuple of positive integers."""

    __slots__ = ()

    def __new__(cls, parts=()):
        parts = tuple(int(p) for p in parts)
        if any(p <= 0 for p in parts):
            raise ValueError(f"partition parts must be positive: {list(parts)}")
        if any(a < b for a, b in zip(parts, parts[1:])):
            raise ValueError(f"partition parts must be weakly decreasing: {list(parts)}")
        return super().__new__(cls, parts)

    @classmethod
    def _trusted(cls, parts) -> "Partition":
        # skips validation; callers guarantee a valid partition
        return tuple.__new__(cls, parts)

    @property
    def size(self) -> int:
        return sum(self)

    @property
    def length(self) -> int:
        return len(self)

    def conjugate(self) -> "Partition":
        if not self:
            return self
        return Partition._trusted(
            tuple(sum(1 for p in self if p > i) for i in range(self[0]))
        )

    def contains(self, other: "Partition") -> bool:
        """True when the Young diagram of ``other`` fits inside this one."""
        if len(other) > len(self):
            return False
        return all(a >= b for a, b in zip(self, other))

    def __str__(self) -> str:
        return "[" + ",".join(str(p) for p in self) + "]"

    def __repr__(self) -> str:
        return f"Partition({list(self)})"

    @classmethod
    def parse(cls, text: str) -> "Partition":
        """Parse ``"[3,1]"`` (or ``"[]"``)."""
        m = re.fullmatch(r"\s*\[\s*((?:\d+\s*(?:,\s*\d+\s*)*)?)\]\s*", text)
        if m is None:
            raise ValueError(f"malformed partition: {text!r}")
        body = m.group(1).strip()
        parts = [int(tok) for tok in body.split(",")] if body else []
        try:
            return cls(parts)
        except ValueError as exc:
            raise ValueError(f"malformed partition: {text!r} ({exc})") from None


EMPTY = Partition()


class Bipartition(NamedTuple):
    """Index of an irreducible algebraic GL(n) representation.

    ``covariant`` is the part coming from tensor powers of H, ``contravariant``
    the part coming from H*.
    """

    covariant: Partition
    contravariant: Partition

    @property
    def size(self) -> int:
        return self.covariant.size + self.contravariant.size

    @property
    def length(self) -> int:
        return len(self.covariant) + len(self.contravariant)

    @property
    def degree(self) -> int:
        return self.covariant.size - self.contravariant.size

    def dual(self) -> "Bipartition":
        return Bipartition(self.contravariant, self.covariant)

    def weight(self, n: int) -> tuple[int, ...]:
        """Highest weight (λ_1,…,0,…,−λ'_1) at rank n."""
        if self.length > n:
            raise ValueError(f"{self} has length {self.length} > n={n}")
        lam, mu = self.covariant, self.contravariant
        return tuple(lam) + (0,) * (n - self.length) + tuple(-m for m in reversed(mu))

    @classmethod
    def from_weight(cls, weight) -> "Bipartition":
        if any(a < b for a, b in zip(weight, weight[1:])):
            raise ValueError(f"weight is not dominant: {tuple(weight)}")
        pos = [w for w in weight if w > 0]
        neg = [-w for w in reversed(weight) if w < 0]
        return cls(Partition._trusted(tuple(pos)), Partition._trusted(tuple(neg)))

    def __str__(self) -> str:
        return f"{self.covariant}|{self.contravariant}"

    @classmethod
    def parse(cls, text: str) -> "Bipartition":
        """Parse ``"[3,1]|[1]"``."""
        if text.count("|") != 1:
            raise ValueError(f"malformed bipartition: {text!r}")
        a, b = text.split("|")
        return cls(Partition.parse(a), Partition.parse(b))


def bip(covariant=(), contravariant=()) -> Bipartition:
    """Shorthand constructor: ``bip((1, 1), (1,))``."""
    return Bipartition(Partition(covariant), Partition(contravariant))


TRIVIAL = Bipartition(EMPTY, EMPTY)


def partition_key(lam: Partition):
    return (-sum(lam), tuple(-p for p in lam))


def bipartition_key(b: Bipartition):
    return (b.size, partition_key(b.covariant), partition_key(b.contravariant))


# ---------------------------------------------------------------- enumeration

def partitions_of(k: int, max_part: int | None = None, max_length: int | None = None) -> Iterator[Partition]:
    """All partitions of ``k`` in reverse-lexicographic order."""
    if max_part is None:
        max_part = k
    if max_length is None:
        max_length = k

    def rec(rest, bound, slots):
        if rest == 0:
            yield ()
            return
        if slots == 0:
            return
        for first in range(min(rest, bound), 0, -1):
            for tail in rec(rest - first, first, slots - 1):
                yield (first,) + tail

    for parts in rec(k, max_part, max_length):
        yield Partition._trusted(parts)


@lru_cache(maxsize=None)
def partition_count(k: int) -> int:
    return sum(1 for _ in partitions_of(k))


def bipartitions_of_size(total: int) -> Iterator[Bipartition]:
    for a in range(total, -1, -1):
        for lam in partitions_of(a):
            for mu in partitions_of(total - a):
                yield Bipartition(lam, mu)


def bipartitions_up_to(total: int) -> list[Bipartition]:
    return [b for s in range(total + 1) for b in bipartitions_of_size(s)]


# ------------------------------------------------------------------ dimensions

def hook_lengths(lam: Partition) -> list[int]:
    conj = lam.conjugate()
    return [lam[i] - j + conj[j] - i - 1 for i in range(len(lam)) for j in range(lam[i])]


@lru_cache(maxsize=None)
def specht_dim(lam: Partition) -> int:
    """Dimension of the Specht module S^λ (hook length formula)."""
    return factorial(lam.size) // prod(hook_lengths(lam))


def weyl_dimension(weight) -> int:
    """Weyl dimension formula for a dominant integral GL(n) weight."""
    n = len(weight)
    num = 1
    den = 1
    for i in range(n):
        for j in range(i + 1, n):
            num *= weight[i] - weight[j] + j - i
            den *= j - i
    return num // den


def dim_irrep(b: Bipartition, n: int) -> int:
    """dim V_b(n); zero when the bipartition is longer than n."""
    if n < 1:
        raise ValueError("n must be positive")
    if b.length > n:
        return 0
    return weyl_dimension(b.weight(n))


# --------------------------------------------------------- Littlewood-Richardson

@lru_cache(maxsize=None)
def lr_coeff(lam: Partition, mu: Partition, nu: Partition) -> int:
    """c^ν_{λμ} by enumerating LR tableaux of shape ν/λ with content μ.

    Cells are filled in reading order (rows top to bottom, each right to left);
    the filling must be semistandard and the reading word a lattice word.
    """
    lam, mu, nu = Partition(lam), Partition(mu), Partition(nu)
    if lam.size + mu.size != nu.size or not nu.contains(lam) or not nu.contains(mu):
        return 0
    if not mu:
        return 1
    if not lam:
        return 1 if mu == nu else 0

    lam_ext = tuple(lam) + (0,) * (len(nu) - len(lam))
    cells = [(r, c) for r in range(len(nu)) for c in range(nu[r] - 1, lam_ext[r] - 1, -1)]
    filling: dict[tuple[int, int], int] = {}
    counts = [0] * (len(mu) + 1)

    def rec(idx: int) -> int:
        if idx == len(cells):
            return 1
        r, c = cells[idx]
        # row weakly increases left to right: this cell <= its right neighbour
        hi = filling.get((r, c + 1), len(mu))
        # column strictly increases downward
        lo = filling.get((r - 1, c), 0) + 1
        total = 0
        for v in range(lo, hi + 1):
            if counts[v] >= mu[v - 1]:
                continue
            if v > 1 and counts[v] + 1 > counts[v - 1]:
                continue
            counts[v] += 1
            filling[(r, c)] = v
            total += rec(idx + 1)
            del filling[(r, c)]
            counts[v] -= 1
        return total

    return rec(0)


def lr_product(lam: Partition, mu: Partition) -> dict[Partition, int]:
    """s_λ s_μ = Σ c^ν_{λμ} s_ν."""
    out = {}
    for nu in partitions_of(lam.size + mu.size, max_length=len(lam) + len(mu)):
        if nu.contains(lam) and nu.contains(mu):
            c = lr_coeff(lam, mu, nu)
            if c:
                out[nu] = c
    return out


# ------------------------------------------------------------- power sums / MN

def z_factor(mu: Partition) -> int:
    """|centralizer| of a permutation of cycle type μ."""
    out = 1
    for part in set(mu):
        m = mu.count(part)
        out *= part ** m * factorial(m)
    return out


@lru_cache(maxsize=None)
def sn_character(lam: Partition, mu: Partition) -> int:
    """χ^λ(μ) by the Murnaghan–Nakayama rule on beta-sets."""
    if lam.size != mu.size:
        raise ValueError("sizes differ")
    if not mu:
        return 1
    r = mu[0]
    rest = Partition._trusted(tuple(mu[1:]))
    k = len(lam)
    beta = [lam[i] + (k - 1 - i) for i in range(k)]
    occupied = set(beta)
    total = 0
    for b in beta:
        t = b - r
        if t < 0 or t in occupied:
            continue
        height = sum(1 for x in beta if t < x < b)
        new_beta = sorted((occupied - {b}) | {t}, reverse=True)
        parts = [x - (k - 1 - i) for i, x in enumerate(new_beta)]
        new_lam = Partition._trusted(tuple(p for p in parts if p > 0))
        total += (-1) ** height * sn_character(new_lam, rest)
    return total


def power_sum_expand(lam: Partition) -> dict[Partition, Fraction]:
    """Coefficients of s_λ in the power-sum basis: χ^λ(μ)/z_μ."""
    out = {}
    for mu in partitions_of(lam.size):
        c = sn_character(lam, mu)
        if c:
            out[mu] = Fraction(c, z_factor(mu))
    return out


def schur_expand_power(mu: Partition) -> dict[Partition, int]:
    """p_μ = Σ_λ χ^λ(μ) s_λ."""
    out = {}
    for lam in partitions_of(mu.size):
        c = sn_character(lam, mu)
        if c:
            out[lam] = c
    return out
