"""Stable twisted cohomology tables for Aut(F_n), Out(F_n) and the closed-form
stable series, each value tagged with its stable bound and citation."""

from __future__ import annotations

import json
from dataclasses import dataclass, field
from enum import Enum
from math import comb, factorial
from pathlib import Path

from .albanese import ConsistencyError, invariant_multiplicity, w_algebra
from .charring import StableCharacter
from .partitions import TRIVIAL, Bipartition, bip
from .registry import status_of
from .series import HilbertSeries, free_algebra_series
from .tensor import multiplicity

OUTSIDE_STABLE_RANGE = "outside stable range"

H = bip((1,))
H1_FACTOR = bip((1, 1), (1,))  # V_{1^2,1}

# H^1(IA_n) = V_{0,1} + V_{1,1^2} and H^1(IO_n) = V_{1,1^2}
H1_IA = StableCharacter({bip((), (1,)): 1, bip((1,), (1, 1)): 1})
H1_IO = StableCharacter({bip((1,), (1, 1)): 1})


@dataclass(frozen=True)
class RangedValue:
    """A dimension valid for n >= ``valid_from``."""

    value: int
    valid_from: int
    source: str

    @property
    def status(self) -> str:
        return status_of(self.source)

    def at(self, n: int):
        return self.value if n >= self.valid_from else OUTSIDE_STABLE_RANGE


@dataclass(frozen=True)
class CompositionFactors:
    factors: tuple[Bipartition, ...]
    name: str = ""
    group: str = "aut"

    @classmethod
    def from_json(cls, doc: dict) -> "CompositionFactors":
        group = doc.get("group", "aut").lower()
        if group not in ("aut", "out"):
            raise ValueError(f"group must be aut or out, got {group!r}")
        return cls(tuple(Bipartition.parse(s) for s in doc["factors"]), doc.get("name", ""), group)

    @classmethod
    def load(cls, path: str | Path) -> "CompositionFactors":
        return cls.from_json(json.loads(Path(path).read_text()))


def _check_group(group: str) -> str:
    g = group.lower()
    if g not in ("aut", "out"):
        raise ValueError(f"group must be 'aut' or 'out', got {group!r}")
    return g


# ------------------------------------------------------------------ H^1 tables

def h1_aut_irrep(b: Bipartition) -> RangedValue:
    if b in (H, H1_FACTOR):
        return RangedValue(1, 4, "aut-h1-irreducible")
    return RangedValue(0, 3, "aut-h1-irreducible")


def h1_out_irrep(b: Bipartition) -> RangedValue:
    if b == H1_FACTOR:
        return RangedValue(1, 4, "out-h1-irreducible")
    return RangedValue(0, 3, "out-h1-irreducible")


def h1_irrep(group: str, b: Bipartition) -> RangedValue:
    return h1_aut_irrep(b) if _check_group(group) == "aut" else h1_out_irrep(b)


def h1_irrep_derived(group: str, b: Bipartition) -> int:
    """Invariant part of H^1(IA_n) ⊗ V_b (resp. IO_n), by the tensor product."""
    base = H1_IA if _check_group(group) == "aut" else H1_IO
    return invariant_multiplicity(base, StableCharacter.basis(b))


def _h1_tensor(group: str, p: int, q: int) -> RangedValue:
    if p < 1 or q < 1:
        raise ValueError("p and q must be >= 1")
    tag = f"{group}-h1-tensor"
    if p - q != 1:
        return RangedValue(0, 3, tag)
    if group == "aut":
        closed = factorial(q + 2) // 2
        summed = multiplicity(p, q, H) + multiplicity(p, q, H1_FACTOR)
    else:
        closed = comb(q + 1, 2) * factorial(q)
        summed = multiplicity(p, q, H1_FACTOR)
    if closed != summed:
        raise ConsistencyError(f"H^1({group}, H^{{{p},{q}}}): closed form {closed} != multiplicity sum {summed}")
    return RangedValue(closed, 4, tag)


def h1_aut_tensor(p: int, q: int) -> RangedValue:
    return _h1_tensor("aut", p, q)


def h1_out_tensor(p: int, q: int) -> RangedValue:
    return _h1_tensor("out", p, q)


@dataclass(frozen=True)
class VanishingResult:
    vanishes: bool
    witness: tuple[Bipartition, ...] = field(default=())
    source: str = ""


def h1_vanishes(group: str, m: CompositionFactors) -> VanishingResult:
    """H^1 of a polynomial module vanishes stably when no forbidden factor occurs."""
    g = _check_group(group)
    forbidden = (H, H1_FACTOR) if g == "aut" else (H1_FACTOR,)
    bad = tuple(b for b in m.factors if b in forbidden)
    return VanishingResult(not bad, bad, f"{g}-h1-module-vanishing")


# ----------------------------------------------------------- higher degrees

@dataclass(frozen=True)
class TensorVanishing:
    stably_zero: bool
    value: int | None
    source: str
    note: str = ""


def hi_aut_tensor_vanishing(i: int, p: int, q: int, conjectural: bool = False) -> TensorVanishing:
    """Stable H^i(Aut(F_n), H^{p,q}): zero off the line i = p − q.

    On the line, the value is known here for i = 0 (invariants) and i = 1; for
    i >= 2 it is only offered as the W-based surrogate when ``conjectural``.
    """
    if min(i, p, q) < 0:
        raise ValueError("i, p, q must be non-negative")
    if i != p - q:
        return TensorVanishing(True, 0, "aut-tensor-vanishing-line")
    if i == 0:
        return TensorVanishing(False, factorial(q), "aut-tensor-vanishing-line",
                               "degree zero: invariants of H^{q,q}")
    if i == 1:
        return TensorVanishing(False, factorial(q + 2) // 2, "wheeled-prop-degree-one")
    if not conjectural:
        return TensorVanishing(False, None, "aut-tensor-vanishing-line",
                               "nonzero in general; value only available with --conjectural")
    W = w_algebra("IA", i)
    from .tensor import full_decompose

    value = invariant_multiplicity(StableCharacter(W[i].dual().terms), full_decompose(p, q).terms)
    return TensorVanishing(False, value, "albanese-tensor-surrogate")


class HypothesisRejected(ValueError):
    pass


def h2_aut_from_hypothesis(b: Bipartition, h2_ia: StableCharacter) -> RangedValue:
    """H^2(Aut(F_n), V_b) from a supplied stable character of H^2(IA_n)."""
    if h2_ia[TRIVIAL]:
        raise HypothesisRejected(
            "hypothesis contains the trivial representation, but H^2(IA_n)^GL = 0 for n >= 4 "
            "(ia-h2-invariants-vanish)"
        )
    value = invariant_multiplicity(h2_ia, StableCharacter.basis(b))
    return RangedValue(value, 4 if b == TRIVIAL else 5, "aut-h2-reduction")


# ------------------------------------------------------------ set partitions

def set_partitions(q: int):
    """Restricted growth strings of length q."""
    if q == 0:
        yield ()
        return

    def rec(prefix, top):
        if len(prefix) == q:
            yield tuple(prefix)
            return
        for block in range(top + 2):
            prefix.append(block)
            yield from rec(prefix, max(top, block))
            prefix.pop()

    yield from rec([0], 0)


def hq_out_tensor_top(q: int) -> int:
    """Set partitions of {1..q} with no singleton blocks."""
    if q < 2:
        raise ValueError("q must be >= 2")
    count = 0
    for rgs in set_partitions(q):
        sizes = {}
        for blk in rgs:
            sizes[blk] = sizes.get(blk, 0) + 1
        if min(sizes.values()) >= 2:
            count += 1
    return count


# ------------------------------------------------------------------- series

class TheoremSeries(Enum):
    GL = "gl"
    SP = "sp"
    MCG = "mcg"
    IA_INV = "ia-inv"
    IO_INV = "io-inv"
    TORELLI_INV = "torelli-inv"

    def generators(self, max_degree: int) -> dict[int, int]:
        step, offset = {
            TheoremSeries.GL: (4, 1),
            TheoremSeries.SP: (4, -2),
            TheoremSeries.MCG: (2, 0),
            TheoremSeries.IA_INV: (4, 0),
            TheoremSeries.IO_INV: (4, 0),
            TheoremSeries.TORELLI_INV: (4, 0),
        }[self]
        out = {}
        i = 1
        while step * i + offset <= max_degree:
            out[step * i + offset] = 1
            i += 1
        return out

    @property
    def exterior(self) -> bool:
        return self is TheoremSeries.GL

    @property
    def source(self) -> str:
        return {
            TheoremSeries.GL: "gl-stable-cohomology",
            TheoremSeries.SP: "sp-stable-cohomology",
            TheoremSeries.MCG: "mcg-stable-cohomology",
            TheoremSeries.IA_INV: "ia-invariants-conjecture",
            TheoremSeries.IO_INV: "io-invariants-conjecture",
            TheoremSeries.TORELLI_INV: "torelli-invariants-conjecture",
        }[self]


def series_coefficients(kind: TheoremSeries | str, max_degree: int) -> HilbertSeries:
    kind = TheoremSeries(kind) if isinstance(kind, str) else kind
    if max_degree < 0:
        raise ValueError("max_degree must be >= 0")
    return free_algebra_series(kind.generators(max_degree), max_degree, exterior=kind.exterior)
