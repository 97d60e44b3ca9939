"""Print class sizes side by side: each half-plane class next to its quarter-plane partner."""

import argparse

from tandemwalks.oracle import count_class
from tandemwalks.words import (BICOL_MOTZKIN, MOTZKIN, QSYM, QUARTER, lukasiewicz_class,
                               ptandem_class)


def main() -> None:
    ap = argparse.ArgumentParser(description=__doc__)
    ap.add_argument("--n", type=int, default=15)
    ap.add_argument("--p", type=int, nargs="*", default=[2, 3, 5])
    args = ap.parse_args()
    cols = [("motzkin", MOTZKIN), ("quarter", QUARTER), ("bicol", BICOL_MOTZKIN), ("qsym", QSYM)]
    for p in args.p:
        cols += [(f"luk{p}", lukasiewicz_class(p)), (f"tandem{p}", ptandem_class(p))]
    print("\t".join(["n"] + [name for name, _ in cols]))
    for n in range(args.n + 1):
        print("\t".join([str(n)] + [str(count_class(c, n)) for _, c in cols]))


if __name__ == "__main__":
    main()
