from math import factorial

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from stablecoh.charring import StableCharacter
from stablecoh.partitions import TRIVIAL, bip
from stablecoh.tensor import (
    TensorSpace,
    contraction_copies,
    filtration_dimensions,
    full_decompose,
    multiplicity,
    oracle_decompose,
    traceless_decompose,
    traceless_dimension,
)

PQ = [(p, t - p) for t in range(7) for p in range(t + 1)]


def test_small_decompositions():
    assert full_decompose(1, 1).terms == StableCharacter({TRIVIAL: 1, bip((1,), (1,)): 1})
    assert full_decompose(2, 1).terms == StableCharacter({bip((1,)): 2, bip((2,), (1,)): 1, bip((1, 1), (1,)): 1})
    assert full_decompose(2, 2).terms == StableCharacter({
        TRIVIAL: 2, bip((1,), (1,)): 4,
        bip((2,), (2,)): 1, bip((2,), (1, 1)): 1, bip((1, 1), (2,)): 1, bip((1, 1), (1, 1)): 1,
    })


def test_traceless_multiplicities_are_specht_products():
    d = traceless_decompose(3, 2)
    assert d[bip((2, 1), (1, 1))] == 2
    assert d[bip((3,), (2,))] == 1
    assert sum(m for _, m in d.items()) == 4 * 2  # number of SYT pairs: (1+2+1) * (1+1)


@pytest.mark.parametrize("p,q", PQ)
def test_dimension_identity(p, q):
    for n in range(max(1, p + q), 9):
        assert full_decompose(p, q, n).dimension() == n ** (p + q)


@pytest.mark.parametrize("p,q", PQ)
def test_duality_and_grading(p, q):
    d = full_decompose(p, q).terms
    assert d.dual() == full_decompose(q, p).terms
    for b in d.terms:
        assert b.degree == p - q
        assert (p + q - b.size) % 2 == 0


@pytest.mark.parametrize("p,q", [(p, q) for p, q in PQ if p + q <= 5])
def test_stable_matches_oracle(p, q):
    stable = full_decompose(p, q).terms
    n = max(1, p + q)
    assert oracle_decompose(p, q, n).terms == stable
    assert oracle_decompose(p, q, n + 1).terms == stable


@pytest.mark.parametrize("p,q,n", [(2, 1, 2), (2, 2, 2), (3, 1, 2), (2, 2, 3), (1, 1, 1)])
def test_below_stable_bound_uses_oracle(p, q, n):
    d = full_decompose(p, q, n)
    assert d.terms == oracle_decompose(p, q, n).terms
    assert d.dimension() == n ** (p + q)


def test_contraction_copies():
    assert contraction_copies(2, 2, 2) == 2
    assert contraction_copies(3, 2, 1) == 6
    assert contraction_copies(3, 2, 2) == 3 * 1 * 2


@settings(max_examples=30, deadline=None)
@given(st.integers(0, 3), st.integers(0, 3), st.integers(0, 3))
def test_filtration_sums_to_total(p, q, extra):
    n = max(1, p + q) + extra
    total = sum(contraction_copies(p, q, l) * traceless_dimension(p - l, q - l, n) for l in range(min(p, q) + 1))
    assert total == n ** (p + q)


def test_multiplicity_of_h_in_h_q1_q():
    for q in range(1, 6):
        assert multiplicity(q + 1, q, bip((1,))) == factorial(q + 1)


def test_rejects_negative():
    with pytest.raises(ValueError):
        TensorSpace(-1, 0)
    with pytest.raises(ValueError):
        full_decompose(1, -1)


@pytest.mark.parametrize("p,q", [(1, 1), (2, 1), (1, 2), (2, 2)])
def test_explicit_contraction_filtration(p, q):
    # dim F^l from explicit contraction maps agrees with the traceless pieces
    for n in range(max(1, p + q), 5):
        got = filtration_dimensions(p, q, n)
        want = [
            sum(contraction_copies(p, q, j) * traceless_dimension(p - j, q - j, n) for j in range(l + 1))
            for l in range(min(p, q) + 1)
        ]
        assert got == want
