"""``stablecoh`` command-line front end.

Every command prints one JSON object whose leading keys are always
``value``, ``status``, ``citation`` and (when it applies) ``valid_from``.
Exit codes: 0 success, 1 usage error, 2 internal consistency failure or a
failed ``verify`` check.
"""

from __future__ import annotations

import argparse
import json
import sys
from pathlib import Path

from . import albanese, cohomology, specseq, tensor
from .albanese import ConsistencyError
from .charring import StableCharacter
from .partitions import Bipartition, Partition, dim_irrep, lr_coeff
from .registry import status_of
from .verify import run_suite

FIXTURES_DIR = Path(__file__).resolve().parent / "fixtures"


class UsageError(Exception):
    pass


class _Parser(argparse.ArgumentParser):
    # argparse exits with 2 on bad usage; 2 is reserved for consistency failures
    def error(self, message):
        raise UsageError(f"{self.prog}: error: {message}")


def _partition(text: str) -> Partition:
    try:
        return Partition.parse(text)
    except ValueError as exc:
        raise argparse.ArgumentTypeError(str(exc)) from None


def _bipartition(text: str) -> Bipartition:
    try:
        return Bipartition.parse(text)
    except ValueError as exc:
        raise argparse.ArgumentTypeError(str(exc)) from None


def _nonneg(text: str) -> int:
    try:
        v = int(text)
    except ValueError:
        raise argparse.ArgumentTypeError(f"not an integer: {text!r}") from None
    if v < 0:
        raise argparse.ArgumentTypeError(f"must be non-negative: {text!r}")
    return v


def _positive(text: str) -> int:
    v = _nonneg(text)
    if v < 1:
        raise argparse.ArgumentTypeError(f"must be positive: {text!r}")
    return v


def _result(value, tag: str, valid_from: int | None = None, **extra) -> dict:
    out = {"value": value, "status": status_of(tag), "citation": tag}
    if valid_from is not None:
        out["valid_from"] = valid_from
    out.update(extra)
    return out


def _ranged(rv: cohomology.RangedValue, n: int | None, **extra) -> dict:
    value = rv.value if n is None else rv.at(n)
    return _result(value, rv.source, rv.valid_from, **extra)


# ---------------------------------------------------------------- commands

def cmd_decompose(args) -> dict:
    p, q, n = args.p, args.q, args.n
    if args.traceless:
        if n is not None and n < p + q:
            raise UsageError(f"traceless decomposition of H^{{{p},{q}}} needs n >= {p + q}")
        d = tensor.traceless_decompose(p, q)
        tag = "mixed-tensor-decomposition"
    else:
        d = tensor.full_decompose(p, q, n)
        tag = "computation" if n is not None and n < p + q else "mixed-tensor-decomposition"
    extra = {"p": p, "q": q}
    if n is not None:
        extra["n"] = n
        extra["dimension"] = d.dimension(n)
    return _result(d.terms.to_json(), tag, None if n is not None else max(1, p + q), **extra)


def cmd_dim(args) -> dict:
    return _result(dim_irrep(args.bip, args.n), "computation", bipartition=str(args.bip), n=args.n)


def cmd_lr(args) -> dict:
    return _result(lr_coeff(args.lam, args.mu, args.nu), "computation",
                   lam=str(args.lam), mu=str(args.mu), nu=str(args.nu))


def cmd_h1(args) -> dict:
    if (args.coeff is None) == (args.tensor is None):
        raise UsageError("h1: give exactly one of --coeff or --tensor")
    if args.coeff is not None:
        return _ranged(cohomology.h1_irrep(args.group, args.coeff), args.n, coefficients=str(args.coeff))
    p, q = args.tensor
    fn = cohomology.h1_aut_tensor if args.group == "aut" else cohomology.h1_out_tensor
    try:
        rv = fn(p, q)
    except ValueError as exc:
        raise UsageError(str(exc)) from None
    return _ranged(rv, args.n, p=p, q=q)


def cmd_h2_hypothesis(args) -> dict:
    try:
        rows = json.loads(Path(args.hypothesis).read_text())
        h2 = StableCharacter.from_json(rows)
    except (OSError, ValueError, KeyError, TypeError) as exc:
        raise UsageError(f"cannot read hypothesis {args.hypothesis!r}: {exc}") from None
    try:
        rv = cohomology.h2_aut_from_hypothesis(args.coeff, h2)
    except cohomology.HypothesisRejected as exc:
        raise UsageError(f"hypothesis rejected: {exc}") from None
    return _ranged(rv, args.n, coefficients=str(args.coeff), hypothesis_status="conjecture")


def cmd_vanishing(args) -> dict:
    r = cohomology.hi_aut_tensor_vanishing(args.i, args.p, args.q, conjectural=args.conjectural)
    extra = {"stably_zero": r.stably_zero}
    if r.note:
        extra["note"] = r.note
    return _result(r.value, r.source, **extra)


def cmd_series(args) -> dict:
    kind = cohomology.TheoremSeries(args.kind)
    s = cohomology.series_coefficients(kind, args.max_degree)
    return _result(s.to_list(), kind.source, kind=kind.value)


def cmd_series_derive(args) -> dict:
    if args.target != "ia-inv" or args.source != "gl":
        raise UsageError("only 'series-derive ia-inv --from gl' is supported")
    _, shifted = specseq.shift_algebra(specseq.gl_generator_dims(args.max_degree + 1), args.max_degree)
    expected = cohomology.series_coefficients("ia-inv", args.max_degree)
    if shifted != expected:
        raise ConsistencyError(f"shifted GL series {shifted.to_list()} != Q[z_i] series {expected.to_list()}")
    ledger = specseq.antitransgression_ledger(args.max_degree // 4)
    return _result(shifted.to_list(), "ia-invariants-conditional",
                   generators=[{"source_degree": s, "target_degree": t} for s, t, _ in ledger.pairs])


def cmd_albanese(args) -> dict:
    variant = "IA" if args.which == "w" else "IO"
    piece = albanese.w_algebra(variant, args.degree)[args.degree]
    if args.dual:
        piece = piece.dual()
    tag = "albanese-ia-conjecture" if variant == "IA" else "albanese-io-conjecture"
    return _result(piece.to_json(), tag, degree=args.degree, dual=args.dual)


def cmd_ia_cohomology(args) -> dict:
    if not args.conjectural:
        raise UsageError("ia-cohomology reports a conjectural character; pass --conjectural")
    variant = args.variant.upper()
    chi = albanese.conjectural_ia_cohomology(variant, args.degree)
    tag = "ia-cohomology-conjecture" if variant == "IA" else "io-cohomology-conjecture"
    return _result(chi.to_json(), tag, variant=args.variant, degree=args.degree)


def _resolve_fixture(name: str, fixtures: str | None) -> Path:
    base = Path(fixtures) if fixtures else FIXTURES_DIR
    candidate = base / name
    if candidate.is_file():
        return candidate
    if fixtures is None and Path(name).is_file():
        return Path(name)
    raise UsageError(f"fixture not found: {name!r} (searched {base})")


def cmd_module_h1(args) -> dict:
    path = _resolve_fixture(args.factors, args.fixtures)
    try:
        m = cohomology.CompositionFactors.load(path)
    except (OSError, ValueError, KeyError) as exc:
        raise UsageError(f"cannot read {path.name}: {exc}") from None
    r = cohomology.h1_vanishes(args.group, m)
    return _result(r.vanishes, r.source, module=m.name,
                   forbidden_factors=[str(b) for b in r.witness])


def cmd_verify(args) -> dict:
    def report(res):
        mark = "PASS" if res.passed else "FAIL"
        print(f"{mark} {res.name} ({res.elapsed:.2f}s)", file=sys.stderr)

    results = run_suite(args.suite, report, max_d=args.max_d, max_i=args.max_i, max_degree=args.max_degree)
    ok = all(r.passed for r in results)
    out = _result(ok, "computation", suite=args.suite,
                  checks=[{"name": r.name, "passed": r.passed, "detail": r.detail} for r in results])
    if args.timings:
        for row, r in zip(out["checks"], results):
            row["elapsed_s"] = round(r.elapsed, 3)
    return out


# ------------------------------------------------------------------ parser

def build_parser() -> argparse.ArgumentParser:
    parser = _Parser(prog="stablecoh", description="Stable representation-theoretic computations.")
    parser.add_argument("--format", choices=("json", "tsv"), default="json")
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("decompose", help="decompose H^{p,q} into irreducibles")
    p.add_argument("--p", type=_nonneg, required=True)
    p.add_argument("--q", type=_nonneg, required=True)
    g = p.add_mutually_exclusive_group()
    g.add_argument("--n", type=_positive)
    g.add_argument("--stable", action="store_true")
    p.add_argument("--traceless", action="store_true")
    p.set_defaults(func=cmd_decompose)

    p = sub.add_parser("dim", help="dimension of V_b at rank n")
    p.add_argument("--bip", type=_bipartition, required=True)
    p.add_argument("--n", type=_positive, required=True)
    p.set_defaults(func=cmd_dim)

    p = sub.add_parser("lr", help="Littlewood-Richardson coefficient")
    p.add_argument("--lam", type=_partition, required=True)
    p.add_argument("--mu", type=_partition, required=True)
    p.add_argument("--nu", type=_partition, required=True)
    p.set_defaults(func=cmd_lr)

    p = sub.add_parser("h1", help="stable H^1 with twisted coefficients")
    p.add_argument("group", choices=("aut", "out"))
    p.add_argument("--coeff", type=_bipartition)
    p.add_argument("--tensor", type=_nonneg, nargs=2, metavar=("P", "Q"))
    p.add_argument("--n", type=_positive)
    p.set_defaults(func=cmd_h1)

    p = sub.add_parser("h2-hypothesis", help="H^2(Aut(F_n), V_b) from a supplied H^2(IA_n) character")
    p.add_argument("--coeff", type=_bipartition, required=True)
    p.add_argument("--hypothesis", required=True, help="JSON list of {bipartition, mult}")
    p.add_argument("--n", type=_positive)
    p.set_defaults(func=cmd_h2_hypothesis)

    p = sub.add_parser("vanishing", help="stable vanishing of H^i(Aut(F_n), H^{p,q})")
    p.add_argument("--i", type=_nonneg, required=True)
    p.add_argument("--p", type=_nonneg, required=True)
    p.add_argument("--q", type=_nonneg, required=True)
    p.add_argument("--conjectural", action="store_true")
    p.set_defaults(func=cmd_vanishing)

    p = sub.add_parser("series", help="stable Hilbert series coefficients")
    p.add_argument("kind", choices=[k.value for k in cohomology.TheoremSeries])
    p.add_argument("--max-degree", type=_nonneg, required=True)
    p.set_defaults(func=cmd_series)

    p = sub.add_parser("series-derive", help="derive a series by degree shifting")
    p.add_argument("target", choices=("ia-inv",))
    p.add_argument("--from", dest="source", choices=("gl",), required=True)
    p.add_argument("--max-degree", type=_nonneg, required=True)
    p.set_defaults(func=cmd_series_derive)

    p = sub.add_parser("albanese", help="degree-i piece of W or W^O")
    p.add_argument("which", choices=("w", "wo"))
    p.add_argument("--degree", type=_nonneg, required=True)
    p.add_argument("--dual", action="store_true")
    p.set_defaults(func=cmd_albanese)

    p = sub.add_parser("ia-cohomology", help="conjectural stable H^i(IA_n) or H^i(IO_n)")
    p.add_argument("--variant", choices=("ia", "io"), required=True)
    p.add_argument("--degree", type=_nonneg, required=True)
    p.add_argument("--conjectural", action="store_true")
    p.set_defaults(func=cmd_ia_cohomology)

    p = sub.add_parser("module-h1", help="H^1 vanishing for a polynomial module")
    p.add_argument("group", choices=("aut", "out"))
    p.add_argument("--factors", required=True)
    p.add_argument("--fixtures")
    p.set_defaults(func=cmd_module_h1)

    p = sub.add_parser("verify", help="run cross-check suites")
    p.add_argument("suite", choices=("all", "tensor", "oracle", "koszul", "ia-io", "series"))
    p.add_argument("--max-d", type=_nonneg)
    p.add_argument("--max-i", type=_positive)
    p.add_argument("--max-degree", type=_positive)
    p.add_argument("--timings", action="store_true", help="include elapsed times in the JSON report")
    p.set_defaults(func=cmd_verify)
    return parser


def _tsv(result: dict) -> str:
    value = result["value"]
    if isinstance(value, list) and all(isinstance(r, dict) for r in value):
        return "".join(f"{r['bipartition']}\t{r['mult']}\n" for r in value)
    if isinstance(value, list):
        return "".join(f"{d}\t{c}\n" for d, c in enumerate(value))
    return f"{json.dumps(value)}\n"


def run(argv=None, stdout=None) -> int:
    stdout = stdout or sys.stdout
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
        result = args.func(args)
    except UsageError as exc:
        print(exc, file=sys.stderr)
        return 1
    except ConsistencyError as exc:
        print(f"consistency failure: {exc}", file=sys.stderr)
        return 2
    except ValueError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 1
    if args.format == "tsv":
        stdout.write(_tsv(result))
    else:
        stdout.write(json.dumps(result, indent=2) + "\n")
    if args.command == "verify" and not result["value"]:
        return 2
    return 0


def main():
    sys.exit(run())


if __name__ == "__main__":
    main()
