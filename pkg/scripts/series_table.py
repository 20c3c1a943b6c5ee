"""Tabulate the stable Hilbert series side by side, plus the series obtained
by shifting the GL generators down one degree."""

import argparse

from stablecoh import specseq
from stablecoh.cohomology import TheoremSeries, series_coefficients


def main():
    ap = argparse.ArgumentParser(description=__doc__)
    ap.add_argument("--max-degree", type=int, default=24)
    args = ap.parse_args()
    D = args.max_degree

    cols = {k.value: series_coefficients(k, D) for k in TheoremSeries}
    _, shifted = specseq.shift_algebra(specseq.gl_generator_dims(D + 1), D)
    cols["shift(gl)"] = shifted
    print("deg\t" + "\t".join(cols))
    for d in range(D + 1):
        print(f"{d}\t" + "\t".join(str(s[d]) for s in cols.values()))


if __name__ == "__main__":
    main()
