"""Run every oracle suite at the acceptance sizes and print one summary line each."""

import argparse
import sys

from tandemwalks import oracle
from tandemwalks.parameters import verify_six_step_table, verify_variation_table
from tandemwalks.words import ptandem_class


def main() -> int:
    ap = argparse.ArgumentParser(description=__doc__)
    ap.add_argument("--quick", action="store_true", help="smaller sizes for a fast smoke run")
    ap.add_argument("--seed", type=int, default=1)
    args = ap.parse_args()
    big, small = (8, 6) if args.quick else (12, 8)

    jobs = [
        lambda: oracle.verify_bijection_suite(1, big),
        lambda: oracle.verify_bijection_suite(2, small),
        lambda: oracle.verify_bijection_suite(3, small),
        lambda: oracle.verify_two_n_law(small + 2, small),
        lambda: oracle.verify_raising_transducer_equivalence(1, big),
        lambda: oracle.verify_raising_transducer_equivalence(2, small),
        lambda: oracle.verify_raising_transducer_equivalence(3, small),
        lambda: oracle.verify_raising_transducer_equivalence("six-step", small),
        lambda: oracle.verify_pdt_equivalence(1, big),
        lambda: oracle.verify_pdt_equivalence(2, small),
        lambda: oracle.verify_pdt_equivalence(3, small),
        lambda: oracle.verify_pdt_equivalence("six-step", small),
        lambda: oracle.verify_stack_lemmas(1, oracle.exhaustive(ptandem_class(1), small)),
        lambda: oracle.verify_stack_lemmas(2, oracle.exhaustive(ptandem_class(2), small)),
        lambda: oracle.verify_stack_lemmas(
            5, oracle.random_tandem_words(5, 1_000 if args.quick else 10_000, 40, args.seed)),
        lambda: oracle.verify_suffix_bounds(1, big),
        lambda: oracle.verify_suffix_bounds(2, small),
        lambda: oracle.verify_suffix_bounds(3, small),
    ]
    ok = True
    for job in jobs:
        report = job()
        print(report.summary(), flush=True)
        for failure in report.failures[:5]:
            print("   ", failure)
        ok &= report.passed
    for p in (1, 2, 3, 5):
        table = verify_variation_table(p)
        print(f"variation table p={p}: {'PASS' if table.passed else 'FAIL'}, {table.checked} entries")
        ok &= table.passed
    table = verify_six_step_table()
    print(f"variation table six-step: {'PASS' if table.passed else 'FAIL'}, {table.checked} entries")
    ok &= table.passed
    return 0 if ok else 3


if __name__ == "__main__":
    sys.exit(main())
