"""Conjectural stable characters built from the Albanese generators.

U_i = Hom(H, Λ^{i+1}H) has character ((1^{i+1});(1)) + ((1^i);∅).  W_* is
modelled as the free graded-symmetric algebra on the U_i (no contractions
between different factors); W^O_* replaces U_1 by U_1/H.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache

from .charring import GradedCharacter, PairVector, StableCharacter, graded_symmetric_algebra, stable_product
from .partitions import TRIVIAL, Bipartition, Partition

VARIANTS = ("IA", "IO")


class ConsistencyError(AssertionError):
    """Two independent computations of the same quantity disagree."""


def _u(i: int) -> PairVector:
    return PairVector({
        Bipartition(Partition((1,) * (i + 1)), Partition((1,))): 1,
        Bipartition(Partition((1,) * i), Partition()): 1,
    })


@dataclass(frozen=True)
class AlbaneseGenerators:
    variant: str

    def __post_init__(self):
        if self.variant not in VARIANTS:
            raise ValueError(f"variant must be one of {VARIANTS}, got {self.variant!r}")

    def piece(self, i: int) -> PairVector:
        if i < 1:
            raise ValueError("generator degrees start at 1")
        if i == 1 and self.variant == "IO":
            return PairVector({Bipartition(Partition((1, 1)), Partition((1,))): 1})
        return _u(i)

    def pieces(self, max_degree: int) -> list[tuple[int, PairVector]]:
        return [(i, self.piece(i)) for i in range(1, max_degree + 1)]


@lru_cache(maxsize=None)
def w_algebra(variant: str, max_degree: int) -> GradedCharacter:
    """W_0, …, W_D (or W^O_*) as free-ring characters."""
    gens = AlbaneseGenerators(variant.upper())
    return graded_symmetric_algebra(gens.pieces(max_degree), max_degree)


def z_monomial_count(degree: int) -> int:
    """Monomials of total degree ``degree`` in z_1, z_2, … with deg z_k = 4k."""
    if degree < 0 or degree % 4:
        return 0
    m = degree // 4
    # partitions of m
    counts = [1] + [0] * m
    for part in range(1, m + 1):
        for s in range(part, m + 1):
            counts[s] += counts[s - part]
    return counts[m]


def conjectural_ia_cohomology(variant: str, degree: int) -> StableCharacter:
    """Degree-i part of (W_*)^* ⊗ Q[z_1, z_2, …]."""
    if degree < 0:
        raise ValueError("degree must be >= 0")
    W = w_algebra(variant.upper(), degree)
    out = StableCharacter()
    for j in range(degree + 1):
        z = z_monomial_count(degree - j)
        if z:
            out = out + StableCharacter(W[j].dual().terms).scale(z)
    return out


def invariant_multiplicity(a: StableCharacter, b: StableCharacter) -> int:
    """dim (A ⊗ B)^GL, computed from the tensor product and by orthogonality."""
    via_product = stable_product(a, b)[TRIVIAL]
    via_pairing = sum(c * b[x.dual()] for x, c in a.terms.items())
    if via_product != via_pairing:
        raise ConsistencyError(
            f"invariant multiplicity disagrees: product gives {via_product}, pairing gives {via_pairing}"
        )
    return via_product


def ia_io_factorization_check(max_degree: int, ia_pieces=None) -> bool:
    """W_d = W^O_d + W^O_{d-1} ⊗ H for d = 1..D.

    The tensor with H is the stable (GL) product.  ``ia_pieces`` overrides the
    IA generators, for negative controls.
    """
    if max_degree < 1:
        raise ValueError("max_degree must be >= 1")
    if ia_pieces is None:
        W = w_algebra("IA", max_degree)
    else:
        W = graded_symmetric_algebra(ia_pieces, max_degree)
    WO = w_algebra("IO", max_degree)
    h = StableCharacter({Bipartition(Partition((1,)), Partition()): 1})
    for d in range(1, max_degree + 1):
        lhs = StableCharacter(W[d].terms)
        rhs = StableCharacter(WO[d].terms) + stable_product(StableCharacter(WO[d - 1].terms), h)
        if lhs != rhs:
            return False
    return True
