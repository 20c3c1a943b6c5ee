from math import comb, factorial

import pytest

from stablecoh import cohomology
from stablecoh.albanese import ConsistencyError
from stablecoh.charring import StableCharacter
from stablecoh.cohomology import (
    H,
    H1_FACTOR,
    OUTSIDE_STABLE_RANGE,
    CompositionFactors,
    HypothesisRejected,
    TheoremSeries,
    h1_aut_irrep,
    h1_aut_tensor,
    h1_irrep,
    h1_irrep_derived,
    h1_out_irrep,
    h1_out_tensor,
    h1_vanishes,
    h2_aut_from_hypothesis,
    hi_aut_tensor_vanishing,
    hq_out_tensor_top,
    series_coefficients,
    set_partitions,
)
from stablecoh.partitions import TRIVIAL, bip, bipartitions_up_to, partition_count
from stablecoh.registry import CITATIONS, STATUS

BELL = [1, 1, 2, 5, 15, 52, 203, 877]


def test_h1_irreducible_tables():
    assert h1_aut_irrep(H).value == 1
    assert h1_aut_irrep(H1_FACTOR).value == 1
    assert h1_aut_irrep(bip((), (1,))).value == 0
    assert h1_out_irrep(H).value == 0
    assert h1_out_irrep(H1_FACTOR).value == 1
    assert h1_aut_irrep(H).valid_from == 4
    assert h1_aut_irrep(H).status == "theorem"


@pytest.mark.parametrize("b", bipartitions_up_to(4))
def test_h1_tables_rederived(b):
    for group in ("aut", "out"):
        assert h1_irrep_derived(group, b) == h1_irrep(group, b).value


def test_outside_stable_range_marker():
    rv = h1_aut_irrep(H1_FACTOR)
    assert rv.at(3) == OUTSIDE_STABLE_RANGE
    assert rv.at(4) == 1


def test_h1_tensor_values():
    assert [h1_aut_tensor(q + 1, q).value for q in range(1, 6)] == [3, 12, 60, 360, 2520]
    assert [h1_out_tensor(q + 1, q).value for q in range(1, 6)] == [1, 6, 36, 240, 1800]
    assert h1_aut_tensor(2, 2).value == 0
    assert h1_out_tensor(3, 1).value == 0
    with pytest.raises(ValueError):
        h1_aut_tensor(0, 1)


def test_h1_tensor_consistency_failure(monkeypatch):
    monkeypatch.setattr(cohomology, "multiplicity", lambda p, q, b: 1)
    with pytest.raises(ConsistencyError):
        h1_aut_tensor(3, 2)


def test_module_vanishing():
    a2 = CompositionFactors.from_json(
        {"name": "A_2", "group": "aut", "factors": ["[]|[4]", "[]|[2,2]", "[]|[1,1,1]", "[]|[2]"]}
    )
    assert h1_vanishes("aut", a2).vanishes
    bad = CompositionFactors(a2.factors + (H,))
    r = h1_vanishes("aut", bad)
    assert not r.vanishes and r.witness == (H,)
    # H is harmless for Out(F_n)
    assert h1_vanishes("out", bad).vanishes
    assert not h1_vanishes("out", CompositionFactors((H1_FACTOR,))).vanishes


def test_composition_factors_validation():
    with pytest.raises(ValueError):
        CompositionFactors.from_json({"group": "gl", "factors": []})
    with pytest.raises(ValueError):
        CompositionFactors.from_json({"factors": ["[1]"]})


def test_vanishing_line():
    r = hi_aut_tensor_vanishing(2, 2, 1)
    assert r.stably_zero and r.value == 0
    assert hi_aut_tensor_vanishing(0, 3, 3).value == 6
    assert hi_aut_tensor_vanishing(1, 3, 2).value == 12
    unknown = hi_aut_tensor_vanishing(2, 3, 1)
    assert not unknown.stably_zero and unknown.value is None


def test_vanishing_conjectural_surrogate():
    r = hi_aut_tensor_vanishing(2, 3, 1, conjectural=True)
    assert r.source == "albanese-tensor-surrogate"
    assert STATUS[r.source] == "conjecture"
    assert r.value == 10


def test_h2_hypothesis():
    h2 = StableCharacter({bip((1, 1), (1, 1)): 1, bip((1,), (1,)): 2})
    rv = h2_aut_from_hypothesis(bip((1,), (1,)), h2)
    assert rv.value == 2 and rv.valid_from == 5
    assert h2_aut_from_hypothesis(TRIVIAL, h2).valid_from == 4
    with pytest.raises(HypothesisRejected):
        h2_aut_from_hypothesis(H, StableCharacter({TRIVIAL: 1}))


def test_set_partitions_are_bell():
    for q in range(8):
        assert sum(1 for _ in set_partitions(q)) == BELL[q]


def test_singleton_free_counts():
    for q in range(2, 8):
        inclusion_exclusion = sum((-1) ** k * comb(q, k) * BELL[q - k] for k in range(q + 1))
        assert hq_out_tensor_top(q) == inclusion_exclusion
    assert [hq_out_tensor_top(q) for q in range(2, 7)] == [1, 1, 4, 11, 41]


def test_series():
    gl = series_coefficients("gl", 18)
    assert [d for d in range(19) if gl[d]] == [0, 5, 9, 13, 14, 17, 18]
    assert series_coefficients("sp", 6).to_list()[2::2] == [1, 1, 2]
    mcg = series_coefficients("mcg", 16)
    assert [mcg[2 * k] for k in range(9)] == [partition_count(k) for k in range(9)]
    ia = series_coefficients("ia-inv", 16)
    assert ia.to_list()[::4] == [1, 1, 2, 3, 5]
    assert ia == series_coefficients("torelli-inv", 16) == series_coefficients("io-inv", 16)


def test_series_status():
    assert STATUS[TheoremSeries.GL.source] == "theorem"
    assert STATUS[TheoremSeries.TORELLI_INV.source] == "conjecture"


def test_registry_tags_are_consistent():
    assert set(STATUS) == set(CITATIONS)
    assert set(STATUS.values()) <= {"theorem", "conjecture", "computation"}


def test_closed_forms_are_multiplicity_sums():
    from stablecoh.tensor import multiplicity

    for q in range(1, 6):
        assert multiplicity(q + 1, q, H) == factorial(q + 1)
        assert multiplicity(q + 1, q, H1_FACTOR) == comb(q + 1, 2) * factorial(q)
