"""Integer combinations of Schur functions and bipartitions.

``PairVector`` multiplies freely (Littlewood–Richardson on each alphabet, no
contractions).  ``StableCharacter`` multiplies like tensor products of stable
GL(n) representations: the product of two irreducibles is computed from
their characters at n = (sum of sizes) and peeled back into irreducibles.
"""

from __future__ import annotations

from functools import lru_cache
from typing import Iterable, Mapping

from ..partitions import (
    EMPTY,
    TRIVIAL,
    Bipartition,
    Partition,
    bipartition_key,
    dim_irrep,
    lr_product,
    partition_key,
)
from .laurent import LaurentCharacter, irrep_character, peel


class _IntVector:
    """Finitely supported integer-valued map with vector-space operations."""

    __slots__ = ("terms",)
    _sort_key = staticmethod(lambda k: k)

    def __init__(self, terms: Mapping | Iterable | None = None):
        acc: dict = {}
        if terms is not None:
            items = terms.items() if isinstance(terms, Mapping) else terms
            for k, c in items:
                if not isinstance(c, int):
                    raise TypeError(f"coefficients must be integers, got {c!r}")
                acc[k] = acc.get(k, 0) + c
        self.terms = {k: c for k, c in acc.items() if c}

    @classmethod
    def basis(cls, key):
        return cls({key: 1})

    def __add__(self, other):
        out = dict(self.terms)
        for k, c in other.terms.items():
            out[k] = out.get(k, 0) + c
        return type(self)(out)

    def __neg__(self):
        return type(self)({k: -c for k, c in self.terms.items()})

    def __sub__(self, other):
        return self + (-other)

    def scale(self, s: int):
        return type(self)({k: s * c for k, c in self.terms.items()})

    def __rmul__(self, s):
        if isinstance(s, int):
            return self.scale(s)
        return NotImplemented

    def __eq__(self, other):
        return type(self) is type(other) and self.terms == other.terms

    def __hash__(self):
        return hash((type(self).__name__, frozenset(self.terms.items())))

    def __bool__(self):
        return bool(self.terms)

    def __getitem__(self, key) -> int:
        return self.terms.get(key, 0)

    def __iter__(self):
        return iter(self.items())

    def __len__(self):
        return len(self.terms)

    def items(self):
        """Terms in canonical order."""
        return sorted(self.terms.items(), key=lambda kv: self._sort_key(kv[0]))

    def is_nonnegative(self) -> bool:
        return all(c > 0 for c in self.terms.values())

    def __repr__(self):
        body = " + ".join(f"{c}*{k}" for k, c in self.items())
        return f"{type(self).__name__}({body or '0'})"


class SchurVector(_IntVector):
    """Σ c_λ s_λ in a single alphabet."""

    __slots__ = ()
    _sort_key = staticmethod(lambda lam: (lam.size, partition_key(lam)))

    def __mul__(self, other):
        if isinstance(other, int):
            return self.scale(other)
        out: dict = {}
        for a, ca in self.terms.items():
            for b, cb in other.terms.items():
                for nu, c in lr_product(a, b).items():
                    out[nu] = out.get(nu, 0) + ca * cb * c
        return SchurVector(out)

    def to_json(self):
        return [{"partition": str(k), "mult": c} for k, c in self.items()]


class _BipartitionVector(_IntVector):
    __slots__ = ()
    _sort_key = staticmethod(bipartition_key)

    @classmethod
    def one(cls):
        return cls({TRIVIAL: 1})

    def dual(self):
        return type(self)({b.dual(): c for b, c in self.terms.items()})

    def of_size(self, size: int):
        return type(self)({b: c for b, c in self.terms.items() if b.size == size})

    def max_size(self) -> int:
        return max((b.size for b in self.terms), default=0)

    def to_json(self):
        return [{"bipartition": str(b), "mult": c} for b, c in self.items()]

    @classmethod
    def from_json(cls, rows):
        return cls((Bipartition.parse(r["bipartition"]), int(r["mult"])) for r in rows)


@lru_cache(maxsize=None)
def _free_basis_product(a: Bipartition, b: Bipartition) -> tuple:
    cov = lr_product(a.covariant, b.covariant)
    con = lr_product(a.contravariant, b.contravariant)
    return tuple(
        (Bipartition(nu, nu2), c1 * c2) for nu, c1 in cov.items() for nu2, c2 in con.items()
    )


class PairVector(_BipartitionVector):
    """Two-alphabet Schur combination with the free (contraction-free) product."""

    __slots__ = ()

    def __mul__(self, other):
        if isinstance(other, int):
            return self.scale(other)
        out: dict = {}
        for a, ca in self.terms.items():
            for b, cb in other.terms.items():
                for nu, c in _free_basis_product(a, b):
                    out[nu] = out.get(nu, 0) + ca * cb * c
        return PairVector(out)

    def free_character(self, n: int) -> LaurentCharacter:
        """Image under s_λ(x)s_μ(y) ↦ s_λ(x_1..x_n)·s_μ(x_1^-1..x_n^-1).

        This evaluation is a ring (and λ-ring) homomorphism for the free product.
        """
        out = LaurentCharacter(n)
        for b, c in self.terms.items():
            if len(b.covariant) > n or len(b.contravariant) > n:
                continue
            left = irrep_character(Bipartition(b.covariant, EMPTY), n)
            right = irrep_character(Bipartition(EMPTY, b.contravariant), n)
            out = out + (left * right).scale(c)
        return out

    def free_dimension(self, n: int) -> int:
        return sum(
            c * dim_irrep(Bipartition(b.covariant, EMPTY), n) * dim_irrep(Bipartition(EMPTY, b.contravariant), n)
            for b, c in self.terms.items()
        )

    def as_stable(self) -> "StableCharacter":
        return StableCharacter(self.terms)


def stable_product_at(a: Bipartition, b: Bipartition, n: int) -> dict[Bipartition, int]:
    """Decomposition of V_a(n) ⊗ V_b(n) by the character oracle."""
    chi = irrep_character(a, n) * irrep_character(b, n)
    return peel(chi)


@lru_cache(maxsize=None)
def _stable_basis_product(a: Bipartition, b: Bipartition) -> tuple:
    if a == TRIVIAL:
        return ((b, 1),)
    if b == TRIVIAL:
        return ((a, 1),)
    n = a.size + b.size
    return tuple(stable_product_at(a, b, n).items())


class StableCharacter(_BipartitionVector):
    """Stable algebraic GL(n) representation as a combination of irreducibles."""

    __slots__ = ()

    def __mul__(self, other):
        if isinstance(other, int):
            return self.scale(other)
        return stable_product(self, other)

    def character(self, n: int) -> LaurentCharacter:
        out = LaurentCharacter(n)
        for b, c in self.terms.items():
            if b.length <= n:
                out = out + irrep_character(b, n).scale(c)
        return out

    def dimension(self, n: int) -> int:
        return sum(c * dim_irrep(b, n) for b, c in self.terms.items())

    def as_pair(self) -> PairVector:
        return PairVector(self.terms)


def stable_product(a: StableCharacter, b: StableCharacter) -> StableCharacter:
    """Tensor product of stable representations, extended bilinearly."""
    out: dict = {}
    for x, cx in a.terms.items():
        for y, cy in b.terms.items():
            for z, c in _stable_basis_product(x, y):
                out[z] = out.get(z, 0) + cx * cy * c
    return StableCharacter(out)


def schur(*parts) -> SchurVector:
    return SchurVector({Partition(parts): 1})
