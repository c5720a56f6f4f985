#!/usr/bin/env python3
"""Tabulate the no-Massey bound for k-equal arrangements.

For each (n, k) prints the top nonvanishing cohomology degree and whether the
degree-counting inequality rules out nontrivial Massey products.
"""

import sys

from echarr.massey import kequal_no_massey, kequal_top_degree


def main() -> int:
    max_n = int(sys.argv[1]) if len(sys.argv) > 1 else 12
    print(f"{'n':>3s} {'k':>3s} {'top degree':>10s} {'no massey':>9s}")
    for n in range(3, max_n + 1):
        for k in range(3, n + 1):
            verdict = kequal_no_massey(n, k)
            print(f"{n:3d} {k:3d} {kequal_top_degree(n, k):10d} {str(verdict):>9s}")
    return 0


if __name__ == "__main__":
    sys.exit(main())
