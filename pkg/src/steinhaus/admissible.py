"""Which sequence lengths can carry a balanced triangle mod n.

A length m is admissible when n divides the entry count m(m+1)/2.  The
admissible m form a union of residue classes: one class mod p^v(p) picks
m = 0 or m = -1 for each odd prime power in n (mod 2^(v+1) for the prime 2),
and the choices combine independently by the Chinese remainder theorem.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass
from fractions import Fraction

from .errors import EvenModulus
from .orders import beta, factorize, invert, omega


@dataclass(frozen=True, slots=True)
class AdmissibleClasses:
    """The admissible lengths mod n, as residue classes of a fixed period."""

    period: int
    residues: tuple[int, ...]

    def __contains__(self, m: int) -> bool:
        return m % self.period in self.residues


def solve_congruences(pairs) -> tuple[int, int]:
    """Solve x = r (mod q) for all (r, q) with pairwise coprime moduli q.

    Returns (x, M) with 0 <= x < M and M the product of the moduli.
    """
    x, modulus = 0, 1
    for r, q in pairs:
        if q < 1:
            raise ValueError(f"moduli must be positive, got {q}")
        t = (r - x) * invert(modulus, q) % q
        x += modulus * t
        modulus *= q
    return x % modulus, modulus


def admissible_classes(n: int) -> AdmissibleClasses:
    """All classes of lengths m with n | m(m+1)/2.

    The period is n for odd n and 2n for even n, and there are exactly
    2^omega(n) classes, always including 0 and period - 1.
    """
    if n < 1:
        raise ValueError(f"modulus must be positive, got {n}")
    moduli = [p ** (e + 1) if p == 2 else p ** e for p, e in factorize(n)]
    residues = []
    for choice in itertools.product((0, -1), repeat=len(moduli)):
        x, period = solve_congruences(
            [(c % q, q) for c, q in zip(choice, moduli)]
        )
        residues.append(x)
    period = 1
    for q in moduli:
        period *= q
    return AdmissibleClasses(period, tuple(sorted(residues)))


def is_admissible(n: int, m: int) -> bool:
    """Whether n divides the triangle entry count m(m+1)/2."""
    if n < 1 or m < 1:
        raise ValueError("modulus and length must be positive")
    return (m * (m + 1) // 2) % n == 0


def coverage_fraction(n: int) -> Fraction:
    """Share of admissible classes settled by the progression constructions.

    For odd n >= 3 the constructions reach 1 in 2^(omega(n)-1) * beta(n) of
    the admissible classes, returned as an exact rational.
    """
    if n % 2 == 0:
        raise EvenModulus(f"coverage applies to odd moduli, got {n}")
    if n < 3:
        raise ValueError("coverage is defined for odd n >= 3")
    return Fraction(1, 2 ** (omega(n) - 1) * beta(n))
