"""Named cross-check suites run by ``stablecoh verify``."""

from __future__ import annotations

import time
from dataclasses import dataclass
from math import factorial
from typing import Callable

from . import albanese, cohomology, specseq, tensor
from .charring import PairVector, StableCharacter, stable_product_at
from .partitions import bip, bipartitions_up_to, partition_count


@dataclass
class CheckResult:
    name: str
    passed: bool
    elapsed: float
    detail: str = ""


def _tensor_dimension_identity():
    bad = []
    for total in range(7):
        for p in range(total + 1):
            q = total - p
            for n in range(max(1, total), 9):
                d = tensor.full_decompose(p, q, n)
                if d.dimension() != n ** total:
                    bad.append((p, q, n))
    return not bad, f"failures: {bad}" if bad else "p+q <= 6, p+q-1 < n <= 8"


def _tensor_duality_and_grading():
    for total in range(7):
        for p in range(total + 1):
            q = total - p
            d = tensor.full_decompose(p, q).terms
            if d.dual() != tensor.full_decompose(q, p).terms:
                return False, f"duality fails at ({p},{q})"
            for b in d.terms:
                if b.degree != p - q or (b.size - total) % 2:
                    return False, f"grading fails at ({p},{q}) for {b}"
    return True, "p+q <= 6"


def _tensor_explicit_filtration():
    for p in range(3):
        for q in range(3):
            for n in range(p + q, 5):
                if n < 1:
                    continue
                got = tensor.filtration_dimensions(p, q, n)
                want = [
                    sum(tensor.contraction_copies(p, q, j) * tensor.traceless_dimension(p - j, q - j, n)
                        for j in range(l + 1))
                    for l in range(min(p, q) + 1)
                ]
                if got != want:
                    return False, f"({p},{q}) at n={n}: {got} != {want}"
    return True, "p,q <= 2, n <= 4"


def _oracle_full_decompose():
    for total in range(6):
        for p in range(total + 1):
            q = total - p
            stable = tensor.full_decompose(p, q).terms
            for n in (max(1, total), total + 1):
                if tensor.oracle_decompose(p, q, n).terms != stable:
                    return False, f"({p},{q}) at n={n}"
    return True, "p+q <= 5 at n = p+q, p+q+1"


def _oracle_small_n():
    for total in range(6):
        for p in range(total + 1):
            q = total - p
            for n in range(1, 9):
                d = tensor.full_decompose(p, q, n)
                if d.dimension() != n ** total:
                    return False, f"({p},{q}) at n={n}"
    return True, "p+q <= 5, 1 <= n <= 8"


def _oracle_stable_product_independence():
    basis = bipartitions_up_to(3)
    for a in basis:
        for b in basis:
            n = max(1, a.size + b.size)
            first = stable_product_at(a, b, n)
            for m in (n + 1, n + 2):
                if stable_product_at(a, b, m) != first:
                    return False, f"{a} * {b} differs at n={m}"
    return True, f"{len(basis)}^2 pairs, n, n+1, n+2"


def _oracle_free_is_top():
    basis = bipartitions_up_to(3)
    for a in basis:
        for b in basis:
            free = PairVector.basis(a) * PairVector.basis(b)
            stable = StableCharacter.basis(a) * StableCharacter.basis(b)
            top = a.size + b.size
            if stable.of_size(top).as_pair() != free:
                return False, f"{a} * {b}"
            if any(x.size > top or (x.size - top) % 2 for x in stable.terms):
                return False, f"size bookkeeping {a} * {b}"
    return True, "size <= 3 pairs"


def _oracle_h1_table():
    for b in bipartitions_up_to(4):
        for group in ("aut", "out"):
            if cohomology.h1_irrep_derived(group, b) != cohomology.h1_irrep(group, b).value:
                return False, f"{group} {b}"
    return True, "|b| <= 4, aut and out"


def _koszul_identity(max_d=6, max_i=8):
    for d in range(max_d + 1):
        for i in range(1, max_i + 1):
            if specseq.koszul_euler_check(d, i) != 0:
                return False, f"d={d}, i={i}"
    return True, f"d <= {max_d}, i <= {max_i}"


def _koszul_weight():
    V = specseq.gl_generator_dims(40)
    s = specseq.koszul_weight_series(V, 40)
    return s.to_list() == [1] + [0] * 40, "GL generators to degree 40"


def _ia_io_factorization(max_degree=3):
    ok = albanese.ia_io_factorization_check(max_degree)
    return ok, f"degrees 1..{max_degree}"


def _ia_io_negative_control(max_degree=3):
    pieces = albanese.AlbaneseGenerators("IA").pieces(max_degree)
    # dropping H from U_1 makes IA coincide with IO, so the check must fail
    pieces[0] = (1, PairVector.basis(bip((1, 1), (1,))))
    return not albanese.ia_io_factorization_check(max_degree, ia_pieces=pieces), "U_1 without H"


def _w1():
    W1 = albanese.w_algebra("IA", 1)[1]
    return W1 == PairVector({bip((1, 1), (1,)): 1, bip((1,)): 1}), str(W1)


def _series_checks():
    S = cohomology.series_coefficients
    gl = S("gl", 16)
    if (gl[5], gl[9], gl[14], gl[10]) != (1, 1, 1, 0):
        return False, "GL"
    sp = S("sp", 6)
    if (sp[2], sp[4], sp[6]) != (1, 1, 2):
        return False, "Sp"
    mcg = S("mcg", 16)
    if any(mcg[2 * k] != partition_count(k) for k in range(9)):
        return False, "MCG"
    if S("ia-inv", 16) != S("torelli-inv", 16) or S("ia-inv", 16) != S("io-inv", 16):
        return False, "invariant series disagree"
    return True, "GL, Sp, MCG, IA/IO/Torelli invariants"


def _series_derivation():
    _, shifted = specseq.shift_algebra(specseq.gl_generator_dims(17), 16)
    return shifted == cohomology.series_coefficients("ia-inv", 16), str(shifted.to_list())


def _set_partitions():
    got = [cohomology.hq_out_tensor_top(q) for q in range(2, 7)]
    return got == [1, 1, 4, 11, 41], str(got)


def _h1_tensor_two_way():
    for q in range(1, 7):
        cohomology.h1_aut_tensor(q + 1, q)
        cohomology.h1_out_tensor(q + 1, q)
    return True, "q <= 6"


def _albanese_degree_one():
    for q in range(1, 4):
        v = albanese.invariant_multiplicity(
            StableCharacter(albanese.w_algebra("IA", 1)[1].dual().terms), tensor.full_decompose(q + 1, q).terms
        )
        if v != factorial(q + 2) // 2:
            return False, f"q={q}: {v}"
    return True, "q <= 3"


SUITES: dict[str, list[tuple[str, Callable]]] = {
    "tensor": [
        ("dimension identity", _tensor_dimension_identity),
        ("duality and grading", _tensor_duality_and_grading),
        ("explicit contraction filtration", _tensor_explicit_filtration),
        ("h1 tensor closed form vs multiplicities", _h1_tensor_two_way),
    ],
    "oracle": [
        ("full decomposition vs peeled character", _oracle_full_decompose),
        ("decomposition dimensions below the stable bound", _oracle_small_n),
        ("stable product independent of n", _oracle_stable_product_independence),
        ("free product is the top-size part", _oracle_free_is_top),
        ("h1 tables re-derived from H^1(IA)", _oracle_h1_table),
    ],
    "koszul": [
        ("Koszul Euler identity", _koszul_identity),
        ("weighted Euler series", _koszul_weight),
    ],
    "ia-io": [
        ("W_1 = U_1", _w1),
        ("IA = IO tensor (1 + H)", _ia_io_factorization),
        ("negative control", _ia_io_negative_control),
        ("degree-one invariants", _albanese_degree_one),
    ],
    "series": [
        ("closed-form series", _series_checks),
        ("derived invariant series", _series_derivation),
        ("singleton-free set partitions", _set_partitions),
    ],
}


# per-suite knobs exposed on the command line
OPTIONS = {
    "Koszul Euler identity": ("max_d", "max_i"),
    "IA = IO tensor (1 + H)": ("max_degree",),
    "negative control": ("max_degree",),
}


def run_suite(name: str, on_result: Callable[[CheckResult], None] | None = None,
              **options) -> list[CheckResult]:
    """Run one suite (or ``"all"``); ``options`` feed the checks listed in ``OPTIONS``."""
    names = list(SUITES) if name == "all" else [name]
    if any(n not in SUITES for n in names):
        raise ValueError(f"unknown suite {name!r}")
    results = []
    for suite in names:
        for label, fn in SUITES[suite]:
            kwargs = {k: options[k] for k in OPTIONS.get(label, ()) if options.get(k) is not None}
            t0 = time.perf_counter()
            try:
                ok, detail = fn(**kwargs)
            except AssertionError as exc:
                ok, detail = False, f"consistency failure: {exc}"
            res = CheckResult(f"{suite}: {label}", bool(ok), time.perf_counter() - t0, detail)
            results.append(res)
            if on_result:
                on_result(res)
    return results
