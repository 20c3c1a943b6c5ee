"""λ-ring operations on the free two-alphabet ring.

Work happens in the power-sum basis p_μ(x)p_ν(y) with exact rationals, where
Adams operations are diagonal and products just merge cycle types.  Results
are converted back to Schur pairs, and must come out integral.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Sequence

from ..partitions import Bipartition, Partition, power_sum_expand, schur_expand_power
from .vectors import PairVector, StableCharacter

PowerPair = dict  # (Partition, Partition) -> Fraction


def _merge(a: Partition, b: Partition) -> Partition:
    return Partition._trusted(tuple(sorted(a + b, reverse=True)))


def to_power(v: PairVector) -> PowerPair:
    out: PowerPair = {}
    for b, c in v.terms.items():
        left = power_sum_expand(b.covariant)
        right = power_sum_expand(b.contravariant)
        for mu, x in left.items():
            for nu, y in right.items():
                key = (mu, nu)
                out[key] = out.get(key, 0) + c * x * y
    return {k: c for k, c in out.items() if c}


def from_power(d: PowerPair) -> PairVector:
    acc: dict = {}
    for (mu, nu), c in d.items():
        left = schur_expand_power(mu)
        right = schur_expand_power(nu)
        for lam, x in left.items():
            for lam2, y in right.items():
                key = Bipartition(lam, lam2)
                acc[key] = acc.get(key, 0) + c * x * y
    out = {}
    for k, c in acc.items():
        c = Fraction(c)
        if c.denominator != 1:
            raise ArithmeticError(f"non-integral coefficient {c} at {k}")
        if c:
            out[k] = int(c)
    return PairVector(out)


def power_mul(a: PowerPair, b: PowerPair) -> PowerPair:
    out: PowerPair = {}
    for (m1, n1), c1 in a.items():
        for (m2, n2), c2 in b.items():
            key = (_merge(m1, m2), _merge(n1, n2))
            out[key] = out.get(key, 0) + c1 * c2
    return {k: c for k, c in out.items() if c}


def power_add(a: PowerPair, b: PowerPair, scale=1) -> PowerPair:
    out = dict(a)
    for k, c in b.items():
        out[k] = out.get(k, 0) + scale * c
    return {k: c for k, c in out.items() if c}


def power_adams(k: int, d: PowerPair) -> PowerPair:
    out: PowerPair = {}
    for (mu, nu), c in d.items():
        key = (Partition._trusted(tuple(k * p for p in mu)), Partition._trusted(tuple(k * p for p in nu)))
        out[key] = out.get(key, 0) + c
    return out


POWER_ONE: PowerPair = {(Partition(), Partition()): Fraction(1)}


def adams(k: int, v: PairVector) -> PairVector:
    """ψ^k: p_r ↦ p_{rk} in both alphabets."""
    if k < 1:
        raise ValueError("Adams operations need k >= 1")
    if k == 1:
        return PairVector(v.terms)
    return from_power(power_adams(k, to_power(v)))


def power_series(v: PairVector, top: int, kind: str) -> list[PowerPair]:
    """[Λ^0 v, …, Λ^top v] (kind='ext') or the symmetric powers (kind='sym'),
    by the Newton recurrences, in the power-sum basis."""
    if kind not in ("ext", "sym"):
        raise ValueError(kind)
    base = to_power(v)
    psi = [None] + [power_adams(m, base) for m in range(1, top + 1)]
    out = [dict(POWER_ONE)]
    for k in range(1, top + 1):
        acc: PowerPair = {}
        for m in range(1, k + 1):
            sign = (-1) ** (m - 1) if kind == "ext" else 1
            acc = power_add(acc, power_mul(psi[m], out[k - m]), sign)
        out.append({key: c / k for key, c in acc.items()})
    return out


def exterior_power(k: int, v: PairVector) -> PairVector:
    if k < 0:
        raise ValueError("k must be non-negative")
    return from_power(power_series(v, k, "ext")[k])


def symmetric_power(k: int, v: PairVector) -> PairVector:
    if k < 0:
        raise ValueError("k must be non-negative")
    return from_power(power_series(v, k, "sym")[k])


@dataclass(frozen=True)
class GradedCharacter:
    """Degree-truncated graded character; ``coefficients[d]`` is the degree-d part."""

    coefficients: tuple

    @property
    def max_degree(self) -> int:
        return len(self.coefficients) - 1

    def __getitem__(self, d: int):
        return self.coefficients[d]

    def __iter__(self):
        return iter(self.coefficients)

    def dual(self) -> "GradedCharacter":
        return GradedCharacter(tuple(c.dual() for c in self.coefficients))

    def as_stable(self) -> "GradedCharacter":
        return GradedCharacter(tuple(StableCharacter(c.terms) for c in self.coefficients))


def graded_symmetric_algebra(pieces: Sequence[tuple[int, PairVector]], max_degree: int) -> GradedCharacter:
    """Free graded-symmetric algebra on generators ``v_i`` placed in degree i.

    Odd-degree generators contribute exterior powers, even-degree ones
    symmetric powers.
    """
    degrees = [d for d, _ in pieces]
    if len(set(degrees)) != len(degrees):
        raise ValueError(f"duplicate degrees in {degrees}")
    if any(d < 1 for d in degrees):
        raise ValueError("generator degrees must be >= 1")
    if max_degree < 0:
        raise ValueError("max_degree must be >= 0")

    total: list[PowerPair] = [dict(POWER_ONE)] + [{} for _ in range(max_degree)]
    for d, v in sorted(pieces, key=lambda p: p[0]):
        if d > max_degree:
            continue
        powers = power_series(v, max_degree // d, "ext" if d % 2 else "sym")
        new: list[PowerPair] = [{} for _ in range(max_degree + 1)]
        for deg, acc in enumerate(total):
            if not acc:
                continue
            for k, pk in enumerate(powers):
                t = deg + k * d
                if t > max_degree:
                    break
                new[t] = power_add(new[t], power_mul(acc, pk))
        total = new
    return GradedCharacter(tuple(from_power(c) for c in total))
