"""Decompose the conjectural Albanese pieces W_i (or W^O_i) and report their
dimensions at a few ranks, together with the degree-one tensor invariants."""

import argparse
from math import factorial

from stablecoh import albanese, tensor
from stablecoh.charring import StableCharacter


def main():
    ap = argparse.ArgumentParser(description=__doc__)
    ap.add_argument("--variant", choices=("IA", "IO"), default="IA")
    ap.add_argument("--max-degree", type=int, default=3)
    ap.add_argument("--ranks", type=int, nargs="*", default=[4, 5, 6])
    ap.add_argument("--max-q", type=int, default=3)
    args = ap.parse_args()

    W = albanese.w_algebra(args.variant, args.max_degree)
    for i in range(1, args.max_degree + 1):
        # W_i is the traceless part, so its GL dimension is the sum over irreducibles
        chi = StableCharacter(W[i].terms)
        dims = ", ".join(f"n={n}: {chi.dimension(n)}" for n in args.ranks)
        print(f"W_{i} ({len(W[i])} irreducibles; {dims})")
        for b, m in W[i].items():
            print(f"  {m} x {b}")

    print("\nq\t((W_1)^* x H^{q+1,q})^GL\t(q+2)!/2")
    dual_w1 = StableCharacter(albanese.w_algebra("IA", 1)[1].dual().terms)
    for q in range(1, args.max_q + 1):
        v = albanese.invariant_multiplicity(dual_w1, tensor.full_decompose(q + 1, q).terms)
        print(f"{q}\t{v}\t{factorial(q + 2) // 2}")


if __name__ == "__main__":
    main()
