"""Mixed tensor spaces H^{p,q} = H^{⊗p} ⊗ (H*)^{⊗q}: traceless parts,
the contraction filtration and irreducible decompositions."""

from __future__ import annotations

import itertools
from dataclasses import dataclass
from fractions import Fraction
from math import comb, factorial

from .charring import StableCharacter, dual_standard_character, peel, standard_character
from .charring.laurent import LaurentCharacter
from .partitions import Bipartition, dim_irrep, partitions_of, specht_dim


@dataclass(frozen=True)
class TensorSpace:
    p: int
    q: int

    def __post_init__(self):
        if self.p < 0 or self.q < 0:
            raise ValueError("p and q must be non-negative")

    def dimension(self, n: int) -> int:
        return n ** (self.p + self.q)

    def character(self, n: int) -> LaurentCharacter:
        return standard_character(n) ** self.p * dual_standard_character(n) ** self.q


@dataclass(frozen=True)
class Decomposition:
    """Multiplicities of irreducibles; ``n is None`` means the stable answer."""

    terms: StableCharacter
    n: int | None = None

    def __getitem__(self, b: Bipartition) -> int:
        return self.terms[b]

    def items(self):
        return self.terms.items()

    def dimension(self, n: int | None = None) -> int:
        n = self.n if n is None else n
        if n is None:
            raise ValueError("stable decomposition needs an explicit n")
        return self.terms.dimension(n)


def traceless_decompose(p: int, q: int) -> Decomposition:
    """H^⟨p,q⟩ = ⊕ V_(λ;λ') ⊗ (S^λ ⊗ S^λ'), so mult = dim S^λ · dim S^λ'."""
    TensorSpace(p, q)
    terms = {
        Bipartition(lam, mu): specht_dim(lam) * specht_dim(mu)
        for lam in partitions_of(p)
        for mu in partitions_of(q)
    }
    return Decomposition(StableCharacter(terms))


def contraction_copies(p: int, q: int, l: int) -> int:
    """Number of copies of H^⟨p−l,q−l⟩ in the l-th graded piece of the filtration."""
    return comb(p, l) * comb(q, l) * factorial(l)


def oracle_decompose(p: int, q: int, n: int) -> Decomposition:
    """Peel the explicit character (Σx)^p (Σx^-1)^q at rank n."""
    return Decomposition(StableCharacter(peel(TensorSpace(p, q).character(n))), n)


def full_decompose(p: int, q: int, n: int | None = None) -> Decomposition:
    """Decompose H^{p,q}.

    Stably (``n=None``) or for n > p+q−1 this sums the traceless pieces of the
    contraction filtration; below that bound the character oracle is used.
    """
    TensorSpace(p, q)
    if n is not None and n <= p + q - 1:
        return oracle_decompose(p, q, n)
    terms: dict = {}
    for l in range(min(p, q) + 1):
        copies = contraction_copies(p, q, l)
        for b, m in traceless_decompose(p - l, q - l).items():
            if n is not None and b.length > n:
                continue
            terms[b] = terms.get(b, 0) + copies * m
    return Decomposition(StableCharacter(terms), n)


def multiplicity(p: int, q: int, b: Bipartition) -> int:
    return full_decompose(p, q)[b]


def traceless_dimension(p: int, q: int, n: int) -> int:
    return traceless_decompose(p, q).terms.dimension(n)


# ---------------------------------------------------------------- explicit check

def _rank(rows: list[list[int]]) -> int:
    m = [[Fraction(x) for x in r] for r in rows if any(r)]
    rank = 0
    cols = len(m[0]) if m else 0
    for c in range(cols):
        pivot = next((i for i in range(rank, len(m)) if m[i][c]), None)
        if pivot is None:
            continue
        m[rank], m[pivot] = m[pivot], m[rank]
        pv = m[rank][c]
        for i in range(rank + 1, len(m)):
            if m[i][c]:
                f = m[i][c] / pv
                m[i] = [a - f * b for a, b in zip(m[i], m[rank])]
        rank += 1
    return rank


def _contraction_index_sets(p: int, q: int, l: int):
    """Λ_{p,q}(l): l+1 pairs with increasing H-slots and distinct H*-slots."""
    for iset in itertools.combinations(range(p), l + 1):
        for jseq in itertools.permutations(range(q), l + 1):
            yield tuple(zip(iset, jseq))


def filtration_dimensions(p: int, q: int, n: int) -> list[int]:
    """dim F^l for l = 0..min(p,q), by exact rank of the stacked contractions.

    Basis vectors of H^{p,q} are index tuples (a_1..a_p, b_1..b_q); the pairing
    ⟨e_a, e^b⟩ is δ_ab.  Only meant for tiny p, q, n.
    """
    basis = list(itertools.product(range(n), repeat=p + q))
    k = min(p, q)
    dims = []
    for l in range(k + 1):
        if l == k:
            dims.append(len(basis))
            break
        rows = []
        for pairs in _contraction_index_sets(p, q, l):
            used_i = {i for i, _ in pairs}
            used_j = {j for _, j in pairs}
            targets = {}
            cols_of = {}
            for col, idx in enumerate(basis):
                a, b = idx[:p], idx[p:]
                if any(a[i] != b[j] for i, j in pairs):
                    continue
                rest = tuple(a[i] for i in range(p) if i not in used_i) + tuple(
                    b[j] for j in range(q) if j not in used_j
                )
                cols_of.setdefault(rest, []).append(col)
            for rest, cols in cols_of.items():
                row = [0] * len(basis)
                for col in cols:
                    row[col] = 1
                targets[rest] = row
            rows.extend(targets.values())
        dims.append(len(basis) - _rank(rows))
    return dims
