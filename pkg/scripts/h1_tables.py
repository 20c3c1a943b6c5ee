"""Print the stable H^1 tables: irreducible coefficients re-derived from
H^1(IA_n), and the mixed-tensor values with their multiplicity breakdown."""

import argparse
from math import comb, factorial

from stablecoh import cohomology, tensor
from stablecoh.partitions import bipartitions_up_to


def main():
    ap = argparse.ArgumentParser(description=__doc__)
    ap.add_argument("--max-size", type=int, default=4, help="largest |b| for the irreducible table")
    ap.add_argument("--max-q", type=int, default=6)
    args = ap.parse_args()

    print("b\taut\taut(derived)\tout\tout(derived)")
    for b in bipartitions_up_to(args.max_size):
        a, o = cohomology.h1_aut_irrep(b), cohomology.h1_out_irrep(b)
        da, do = cohomology.h1_irrep_derived("aut", b), cohomology.h1_irrep_derived("out", b)
        if a.value or o.value or da or do:
            print(f"{b}\t{a.value}\t{da}\t{o.value}\t{do}")
    print("(all other b with |b| <= %d give 0 in every column)\n" % args.max_size)

    print("q\tmult H\tmult V_{1^2,1}\taut\t(q+2)!/2\tout\tC(q+1,2)q!")
    for q in range(1, args.max_q + 1):
        mh = tensor.multiplicity(q + 1, q, cohomology.H)
        mv = tensor.multiplicity(q + 1, q, cohomology.H1_FACTOR)
        print(f"{q}\t{mh}\t{mv}\t{cohomology.h1_aut_tensor(q + 1, q).value}\t{factorial(q + 2) // 2}"
              f"\t{cohomology.h1_out_tensor(q + 1, q).value}\t{comb(q + 1, 2) * factorial(q)}")


if __name__ == "__main__":
    main()
