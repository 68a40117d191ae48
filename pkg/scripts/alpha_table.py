"""Print the doubling-order table for odd moduli.

For each odd n the table lists the radical of n, the order alpha(n) of 2^n
in the units mod n, and the refinement beta(n), the least e with
2^(e*n) = +-1 mod n.  alpha is always beta or 2*beta; the last column shows
which.
"""

import argparse

from steinhaus import alpha, beta, radical


def main():
    parser = argparse.ArgumentParser(description=__doc__)
    parser.add_argument("--limit", type=int, default=103, help="largest modulus (default 103)")
    args = parser.parse_args()

    print(f"{'n':>5} {'rad(n)':>7} {'alpha':>6} {'beta':>5}  ratio")
    for n in range(1, args.limit + 1, 2):
        a, b = alpha(n), beta(n)
        print(f"{n:>5} {radical(n):>7} {a:>6} {b:>5}  {a // b}")


if __name__ == "__main__":
    main()
