"""Truncated integer power series and free graded-commutative algebras."""

from __future__ import annotations

from dataclasses import dataclass
from math import comb
from typing import Iterable, Mapping


@dataclass(frozen=True)
class HilbertSeries:
    """Σ coeffs[d] t^d, truncated at ``max_degree``."""

    coeffs: tuple[int, ...]

    @classmethod
    def one(cls, max_degree: int) -> "HilbertSeries":
        return cls((1,) + (0,) * max_degree)

    @property
    def max_degree(self) -> int:
        return len(self.coeffs) - 1

    def __getitem__(self, d: int) -> int:
        return self.coeffs[d] if 0 <= d < len(self.coeffs) else 0

    def __mul__(self, other: "HilbertSeries") -> "HilbertSeries":
        top = min(self.max_degree, other.max_degree)
        out = [0] * (top + 1)
        for i, a in enumerate(self.coeffs[: top + 1]):
            if a:
                for j in range(top + 1 - i):
                    out[i + j] += a * other.coeffs[j]
        return HilbertSeries(tuple(out))

    def truncate(self, max_degree: int) -> "HilbertSeries":
        c = self.coeffs[: max_degree + 1]
        return HilbertSeries(c + (0,) * (max_degree + 1 - len(c)))

    def substitute_sign(self) -> "HilbertSeries":
        """t ↦ −t."""
        return HilbertSeries(tuple((-1) ** d * c for d, c in enumerate(self.coeffs)))

    def to_list(self) -> list[int]:
        return list(self.coeffs)


def generator_factor(degree: int, count: int, max_degree: int, exterior: bool | None = None) -> HilbertSeries:
    """(1 + t^d)^m for an exterior generator block, (1 − t^d)^{−m} for a polynomial one.

    By default the parity of ``degree`` decides (graded-commutative convention).
    """
    if degree < 1:
        raise ValueError("generator degree must be >= 1")
    if exterior is None:
        exterior = degree % 2 == 1
    out = [0] * (max_degree + 1)
    k = 0
    while k * degree <= max_degree:
        out[k * degree] = comb(count, k) if exterior else comb(count + k - 1, k)
        k += 1
    return HilbertSeries(tuple(out))


def free_algebra_series(generators: Mapping[int, int] | Iterable[tuple[int, int]], max_degree: int,
                        exterior: bool | None = None) -> HilbertSeries:
    """Hilbert series of the free graded-commutative algebra on ``{degree: count}``."""
    items = generators.items() if isinstance(generators, Mapping) else generators
    out = HilbertSeries.one(max_degree)
    for d, m in items:
        if m and d <= max_degree:
            out = out * generator_factor(d, m, max_degree, exterior)
    return out
