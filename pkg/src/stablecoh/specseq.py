"""Dimension-level spectral sequence bookkeeping: Koszul exactness, the
degree-shift S(V) -> S(V[-1]) and E_2 series products."""

from __future__ import annotations

from dataclasses import dataclass
from math import comb
from typing import Mapping

from .series import HilbertSeries, free_algebra_series


def koszul_euler_check(d: int, i: int) -> int:
    """Σ_j (−1)^j dim Λ^j(Q^d) · dim S^{i−j}(Q^d); zero for i >= 1."""
    if d < 0 or i < 1:
        raise ValueError("need d >= 0 and i >= 1")
    return sum((-1) ** j * comb(d, j) * _sym_dim(d, i - j) for j in range(i + 1))


def _sym_dim(d: int, k: int) -> int:
    if k == 0:
        return 1
    return comb(d + k - 1, k) if d else 0


@dataclass(frozen=True)
class GradedDims:
    """Finitely supported degree -> dimension map."""

    dims: tuple[tuple[int, int], ...]

    @classmethod
    def of(cls, mapping: Mapping[int, int]) -> "GradedDims":
        if any(v < 0 for v in mapping.values()):
            raise ValueError("dimensions must be non-negative")
        return cls(tuple(sorted((d, v) for d, v in mapping.items() if v)))

    def as_dict(self) -> dict[int, int]:
        return dict(self.dims)

    def shift(self, by: int = -1) -> "GradedDims":
        return GradedDims.of({d + by: v for d, v in self.dims})


@dataclass(frozen=True)
class DegreeLedger:
    """(source degree, target degree, label) for x_k ↦ y_k."""

    pairs: tuple[tuple[int, int, int], ...]

    def __post_init__(self):
        for src, tgt, _ in self.pairs:
            if tgt != src - 1:
                raise ValueError(f"target degree {tgt} is not source degree {src} minus one")


def antitransgression_ledger(count: int) -> DegreeLedger:
    """x_k in degree 4k+1 goes to y_k in degree 4k, k = 1..count."""
    return DegreeLedger(tuple((4 * k + 1, 4 * k, k) for k in range(1, count + 1)))


def gl_generator_dims(max_degree: int) -> GradedDims:
    return GradedDims.of({4 * k + 1: 1 for k in range(1, max_degree // 4 + 1) if 4 * k + 1 <= max_degree})


def shift_algebra(V: GradedDims, max_degree: int) -> tuple[HilbertSeries, HilbertSeries]:
    """Series of SV and of S(V[−1]) (graded-commutative on both sides).

    V must sit in odd degrees >= 3: its generators are exterior and the shifted
    ones polynomial, which is the only configuration used here.
    """
    dims = V.as_dict()
    for d in dims:
        if d < 2:
            raise ValueError(f"V must be supported in degrees >= 2, got degree {d}")
        if d % 2 == 0:
            raise ValueError(f"even-degree generators (degree {d}) are not shifted by this construction")
    sv = free_algebra_series(dims, max_degree)
    shifted = free_algebra_series(V.shift(-1).as_dict(), max_degree)
    return sv, shifted


def e2_series(base: HilbertSeries, fiber_inv: HilbertSeries, max_degree: int) -> HilbertSeries:
    """Total-degree series of base ⊗ fiber invariants, truncated at ``max_degree``."""
    return (base.truncate(max_degree) * fiber_inv.truncate(max_degree)).truncate(max_degree)


def koszul_weight_series(V: GradedDims, max_degree: int) -> HilbertSeries:
    """Euler series of SV ⊗ S(V[−1]) with each shifted generator weighted like its source.

    Every differential x ↦ y preserves this weight, so exactness forces the
    result to be 1.
    """
    sv, _ = shift_algebra(V, max_degree)
    signed = sv.substitute_sign()
    # shifted generators counted at their source degree, polynomial
    return signed * free_algebra_series(V.as_dict(), max_degree, exterior=False)
