from math import comb, factorial

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from stablecoh.partitions import (
    EMPTY,
    TRIVIAL,
    Bipartition,
    Partition,
    bip,
    bipartition_key,
    bipartitions_of_size,
    dim_irrep,
    hook_lengths,
    lr_coeff,
    lr_product,
    partition_count,
    partitions_of,
    sn_character,
    specht_dim,
    weyl_dimension,
    z_factor,
)


@st.composite
def partitions(draw, max_size=6):
    k = draw(st.integers(0, max_size))
    return draw(st.sampled_from(list(partitions_of(k))))


@st.composite
def bipartitions(draw, max_size=4):
    return Bipartition(draw(partitions(max_size)), draw(partitions(max_size)))


# --- parsing and basic structure

def test_parse_and_format():
    assert Partition.parse("[3,1]") == Partition((3, 1))
    assert Partition.parse("[]") == EMPTY
    assert str(Partition((3, 1))) == "[3,1]"
    assert Bipartition.parse("[3,1]|[1]") == bip((3, 1), (1,))
    assert str(TRIVIAL) == "[]|[]"


@pytest.mark.parametrize("text", ["[1,2]", "[0]", "3,1", "[a]", "[1]|", "[1]|[1]|[1]", "[-1]"])
def test_malformed_rejected(text):
    with pytest.raises(ValueError) as exc:
        Bipartition.parse(text) if "|" in text else Partition.parse(text)
    assert "malformed" in str(exc.value)


@given(bipartitions())
def test_bipartition_roundtrip(b):
    assert Bipartition.parse(str(b)) == b


@given(partitions(8))
def test_conjugate_is_involution(lam):
    assert lam.conjugate().conjugate() == lam
    assert lam.conjugate().size == lam.size


@given(bipartitions())
def test_dual_and_degree(b):
    assert b.dual().dual() == b
    assert b.dual().degree == -b.degree
    assert b.dual().size == b.size


@given(bipartitions(), st.integers(1, 8))
def test_weight_roundtrip(b, n):
    if b.length > n:
        with pytest.raises(ValueError):
            b.weight(n)
    else:
        w = b.weight(n)
        assert len(w) == n and list(w) == sorted(w, reverse=True)
        assert Bipartition.from_weight(w) == b


def test_from_weight_rejects_non_dominant():
    with pytest.raises(ValueError):
        Bipartition.from_weight((0, 1, -1))


def test_partition_counts():
    # p(k), k = 0..10
    assert [partition_count(k) for k in range(11)] == [1, 1, 2, 3, 5, 7, 11, 15, 22, 30, 42]
    assert [sum(1 for _ in bipartitions_of_size(k)) for k in range(5)] == [1, 2, 5, 10, 20]


def test_canonical_order_is_total():
    bs = list(bipartitions_of_size(3)) + list(bipartitions_of_size(2))
    keys = [bipartition_key(b) for b in bs]
    assert len(set(keys)) == len(keys)


# --- dimensions

def test_hooks_and_specht():
    assert hook_lengths(Partition((3, 1))) == [4, 2, 1, 1]
    assert specht_dim(Partition((2, 2))) == 2
    assert specht_dim(Partition((3, 2, 1))) == 16


@pytest.mark.parametrize("k", range(8))
def test_specht_sum_of_squares(k):
    assert sum(specht_dim(lam) ** 2 for lam in partitions_of(k)) == factorial(k)


def test_dim_irrep_values():
    assert dim_irrep(bip((1,)), 5) == 5
    assert dim_irrep(bip((1,), (1,)), 4) == 15
    assert dim_irrep(bip((1, 1), (1,)), 3) == 6
    assert dim_irrep(bip((2,), (2,)), 3) == 27
    assert dim_irrep(bip((1, 1), (1,)), 2) == 0
    with pytest.raises(ValueError):
        dim_irrep(TRIVIAL, 0)


@given(bipartitions(), st.integers(1, 7))
def test_dual_dimension(b, n):
    assert dim_irrep(b, n) == dim_irrep(b.dual(), n)


@given(partitions(5), st.integers(1, 6))
def test_exterior_and_symmetric_dims(lam, n):
    k = lam.size
    assert dim_irrep(bip((1,) * k), n) == comb(n, k)
    assert dim_irrep(bip((k,) if k else ()), n) == comb(n + k - 1, k)


def test_weyl_dimension_shift_invariant():
    assert weyl_dimension((2, 1, 0)) == weyl_dimension((3, 2, 1)) == 8


# --- Littlewood-Richardson

def test_lr_square_of_21():
    # s_21^2, a standard worked example
    expected = {
        (4, 2): 1, (4, 1, 1): 1, (3, 3): 1, (3, 2, 1): 2,
        (3, 1, 1, 1): 1, (2, 2, 2): 1, (2, 2, 1, 1): 1,
    }
    got = lr_product(Partition((2, 1)), Partition((2, 1)))
    assert {tuple(k): v for k, v in got.items()} == expected
    assert lr_coeff(Partition((2, 1)), Partition((2, 1)), Partition((3, 2, 1))) == 2


def test_lr_wrong_size_is_zero():
    assert lr_coeff(Partition((1,)), Partition((1,)), Partition((3,))) == 0


@settings(max_examples=60)
@given(partitions(4), partitions(4))
def test_lr_dimension_count(lam, mu):
    # restriction of S_{a+b} induced module: sum c f^nu = binom(a+b, a) f^lam f^mu
    prod = lr_product(lam, mu)
    lhs = sum(c * specht_dim(nu) for nu, c in prod.items())
    assert lhs == comb(lam.size + mu.size, lam.size) * specht_dim(lam) * specht_dim(mu)


@settings(max_examples=60)
@given(partitions(4), partitions(4))
def test_lr_symmetries(lam, mu):
    a = lr_product(lam, mu)
    assert a == lr_product(mu, lam)
    conj = {nu.conjugate(): c for nu, c in lr_product(lam.conjugate(), mu.conjugate()).items()}
    assert conj == a


# --- symmetric group characters

@pytest.mark.parametrize("k", range(1, 7))
def test_character_orthogonality(k):
    parts = list(partitions_of(k))
    for mu in parts:
        assert sum(sn_character(lam, mu) ** 2 for lam in parts) == z_factor(mu)
    for lam in parts:
        assert sn_character(lam, Partition((1,) * k)) == specht_dim(lam)


def test_sign_character():
    # the sign representation on a 3-cycle and a transposition
    assert sn_character(Partition((1, 1, 1)), Partition((3,))) == 1
    assert sn_character(Partition((1, 1, 1)), Partition((2, 1))) == -1
