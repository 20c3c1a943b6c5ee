"""Small worked examples across modules, each checked against an
independent hand computation."""

from fractions import Fraction
from math import factorial

import pytest

from stablecoh.albanese import w_algebra
from stablecoh.charring import (
    LaurentCharacter,
    PairVector,
    StableCharacter,
    adams,
    irrep_character,
    peel,
    standard_character,
    dual_standard_character,
    symmetric_power,
)
from stablecoh.cohomology import h2_aut_from_hypothesis, hi_aut_tensor_vanishing, series_coefficients
from stablecoh.partitions import EMPTY, TRIVIAL, Partition, bip, lr_coeff, power_sum_expand, specht_dim
from stablecoh.series import HilbertSeries
from stablecoh.specseq import GradedDims, e2_series, shift_algebra
from stablecoh.tensor import full_decompose, oracle_decompose, traceless_decompose

P = Partition


def test_specht_small():
    assert [specht_dim(P((k,))) for k in range(1, 5)] == [1, 1, 1, 1]
    assert specht_dim(P((2, 1))) == 2


def test_lr_unit_and_pieri():
    assert lr_coeff(P((2, 1)), EMPTY, P((2, 1))) == 1
    assert lr_coeff(P((1,)), P((1,)), P((2,))) == 1
    assert lr_coeff(P((1,)), P((1,)), P((1, 1))) == 1


def test_power_sum_expansions():
    assert power_sum_expand(P((1,))) == {P((1,)): 1}
    assert power_sum_expand(P((2,))) == {P((2,)): Fraction(1, 2), P((1, 1)): Fraction(1, 2)}
    assert power_sum_expand(P((1, 1))) == {P((2,)): Fraction(-1, 2), P((1, 1)): Fraction(1, 2)}


def test_rank_two_characters():
    assert irrep_character(bip((1,)), 2) == LaurentCharacter.from_monomials(2, {(1, 0): 1, (0, 1): 1})
    assert irrep_character(bip((), (1,)), 2) == LaurentCharacter.from_monomials(2, {(-1, 0): 1, (0, -1): 1})
    adj = LaurentCharacter.from_monomials(2, {(1, -1): 1, (-1, 1): 1, (0, 0): 1})
    assert irrep_character(bip((1,), (1,)), 2) == adj


def test_peel_h21_rank_three():
    chi = standard_character(3) ** 2 * dual_standard_character(3)
    assert peel(chi) == {bip((2,), (1,)): 1, bip((1, 1), (1,)): 1, bip((1,)): 2}


def test_products():
    h, hs = StableCharacter.basis(bip((1,))), StableCharacter.basis(bip((), (1,)))
    assert h * hs == StableCharacter({bip((1,), (1,)): 1, TRIVIAL: 1})
    assert StableCharacter.one() * h == h
    assert h * h == StableCharacter({bip((2,)): 1, bip((1, 1)): 1})


def test_lambda_examples():
    v = PairVector.basis(bip((), (1,)))
    assert adams(1, v) == v
    assert adams(2, v) == PairVector({bip((), (2,)): 1, bip((), (1, 1)): -1})
    both = PairVector({bip((1,)): 1, bip((), (1,)): 1})
    assert symmetric_power(2, both) == PairVector({bip((2,)): 1, bip((1,), (1,)): 1, bip((), (2,)): 1})


def test_traceless_examples():
    assert traceless_decompose(1, 1).terms == StableCharacter({bip((1,), (1,)): 1})
    assert traceless_decompose(2, 1).terms == StableCharacter({bip((2,), (1,)): 1, bip((1, 1), (1,)): 1})
    assert traceless_decompose(3, 0).terms == StableCharacter({bip((3,)): 1, bip((2, 1)): 2, bip((1, 1, 1)): 1})


@pytest.mark.parametrize("q", [1, 2, 3])
def test_invariants_of_hqq(q):
    assert full_decompose(q, q)[TRIVIAL] == factorial(q)
    assert oracle_decompose(q, q, 2 * q)[TRIVIAL] == factorial(q)
    assert full_decompose(q + 1, q)[TRIVIAL] == 0


def test_vanishing_examples():
    assert not hi_aut_tensor_vanishing(1, 3, 2).stably_zero
    assert not hi_aut_tensor_vanishing(2, 4, 2).stably_zero
    # i = 2 is off the line p - q = 1
    assert hi_aut_tensor_vanishing(2, 3, 2).stably_zero
    assert hi_aut_tensor_vanishing(1, 2, 2).stably_zero
    r = hi_aut_tensor_vanishing(0, 0, 0)
    assert not r.stably_zero and r.value == 1


def test_h2_examples():
    assert h2_aut_from_hypothesis(bip((1, 1), (1,)), StableCharacter()).value == 0
    dual_w2 = StableCharacter(w_algebra("IA", 2)[2].dual().terms)
    for b in (bip((1, 1), (1,)), bip((2, 1), (1,)), bip((1, 1)), bip((1, 1, 1), (1,))):
        # (W_2^* ⊗ V_b)^GL picks out the multiplicity of b in W_2
        assert h2_aut_from_hypothesis(b, dual_w2).value == w_algebra("IA", 2)[2][b]


def test_shift_single_generator():
    sv, shifted = shift_algebra(GradedDims.of({5: 1}), 12)
    assert sv.to_list() == [1, 0, 0, 0, 0, 1] + [0] * 7
    assert shifted.to_list() == [1, 0, 0, 0, 1, 0, 0, 0, 1, 0, 0, 0, 1]


def test_e2_examples():
    gl, ia = series_coefficients("gl", 4), series_coefficients("ia-inv", 4)
    assert e2_series(gl, ia, 4).to_list() == [1, 0, 0, 0, 1]
    assert e2_series(HilbertSeries.one(4), ia, 4) == ia
