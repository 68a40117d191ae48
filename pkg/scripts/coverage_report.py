"""Report how much of the admissible range the constructions reach.

For each odd modulus n >= 3 the constructions produce balanced sequences
whose lengths fall in 2 of the admissible residue classes modulo beta(n)*n.
The covered fraction of admissible lengths is 1 / (2^(omega(n)-1) * beta(n)),
which this script tabulates; 1 means every admissible length has an explicit
balanced sequence.
"""

import argparse

from steinhaus import admissible_classes, beta, coverage_fraction, omega


def main():
    parser = argparse.ArgumentParser(description=__doc__)
    parser.add_argument("--limit", type=int, default=99, help="largest modulus (default 99)")
    args = parser.parse_args()

    print(f"{'n':>5} {'omega':>5} {'beta':>5} {'classes':>8}  covered")
    for n in range(3, args.limit + 1, 2):
        ac = admissible_classes(n)
        frac = coverage_fraction(n)
        print(f"{n:>5} {omega(n):>5} {beta(n):>5} {len(ac.residues):>8}  {frac}")


if __name__ == "__main__":
    main()
