"""Print the algorithm-count table for a range of sizes.

Columns: the member count from the parametrization, the simplified
closed form (which undercounts by a factor of 2^(n-2)), and the count
of members whose stages are all permutation matrices.
"""

import argparse

from linwht.groups import (
    count_algorithms,
    count_algorithms_simplified,
    count_bit_index_algorithms,
    count_gl,
)


def main():
    ap = argparse.ArgumentParser(description=__doc__)
    ap.add_argument("--max-n", type=int, default=8)
    args = ap.parse_args()

    header = f"{'n':>3} {'|GL_n|':>22} {'members':>34} {'simplified':>34} {'bit-index':>18}"
    print(header)
    print("-" * len(header))
    for n in range(1, args.max_n + 1):
        print(
            f"{n:>3} {count_gl(n):>22} {count_algorithms(n):>34} "
            f"{count_algorithms_simplified(n):>34} {count_bit_index_algorithms(n):>18}"
        )


if __name__ == "__main__":
    main()
