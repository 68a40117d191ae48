"""Arithmetic progressions mod n and the balanced triangles they generate.

Derivation sends a progression to a progression, so a progression's whole
triangle has closed forms for its rows and entries.  When the step is a
unit mod odd n, suitable lengths (multiples of beta(n)*n or alpha(n)*n, or
one less) make the triangle balanced.
"""

from __future__ import annotations

from dataclasses import dataclass
from math import gcd

from .errors import EvenModulus, IndexOutOfRange, NotInvertible, UnsupportedLength
from .orders import alpha, beta
from .sequences import Sequence


@dataclass(frozen=True, slots=True)
class ArithmeticProgression:
    """start, start + step, ..., with `length` terms, all mod `modulus`."""

    modulus: int
    start: int
    step: int
    length: int

    def __post_init__(self):
        if self.modulus < 1:
            raise ValueError(f"modulus must be positive, got {self.modulus}")
        if self.length < 1:
            raise ValueError(f"length must be positive, got {self.length}")
        for value in (self.start, self.step):
            if not 0 <= value < self.modulus:
                raise ValueError(f"{value} is not a residue mod {self.modulus}")

    def to_sequence(self) -> Sequence:
        n = self.modulus
        return Sequence(
            n, tuple((self.start + k * self.step) % n for k in range(self.length))
        )

    def derived(self, i: int) -> "ArithmeticProgression":
        """The progression generating the i-th derived sequence.

        Derivation doubles the step and shifts the start; after i steps the
        start is 2^i * a + i * 2^(i-1) * d, where the integer coefficient
        i * 2^(i-1) reduces mod n as (i mod n) * (2^(i-1) mod n).
        """
        if not 0 <= i <= self.length - 1:
            raise IndexOutOfRange(f"derivation count {i} outside 0..{self.length - 1}")
        if i == 0:
            return self
        n = self.modulus
        start = (pow(2, i, n) * self.start + pow(2, i - 1, n) * (i % n) * self.step) % n
        return ArithmeticProgression(n, start, pow(2, i, n) * self.step % n, self.length - i)

    def entry(self, i: int, j: int) -> int:
        """Triangle entry in row i, column j (1-based), without materializing."""
        m = self.length
        if not 1 <= i <= m:
            raise IndexOutOfRange(f"row {i} outside 1..{m}")
        if not 1 <= j <= m - i + 1:
            raise IndexOutOfRange(f"column {j} outside 1..{m - i + 1} in row {i}")
        n, a, d = self.modulus, self.start, self.step
        if i == 1:
            return (a + (j - 1) * d) % n
        return (pow(2, i - 1, n) * a + pow(2, i - 2, n) * ((2 * j + i - 3) % n) * d) % n


def primitive_progression(ap: ArithmeticProgression) -> ArithmeticProgression:
    """The unique progression whose derived sequence is `ap` (odd modulus).

    For even moduli a derived progression can come from sequences that are
    no progression at all, so uniqueness fails and we refuse.
    """
    n = ap.modulus
    if n % 2 == 0:
        raise EvenModulus(f"primitives are only unique for odd moduli, got {n}")
    inv2 = (n + 1) // 2  # 2^-1 mod odd n
    inv4 = inv2 * inv2 % n
    start = (inv2 * ap.start - inv4 * ap.step) % n
    return ArithmeticProgression(n, start, inv2 * ap.step % n, ap.length + 1)


def antisymmetric_progression(n: int, step: int, length: int) -> ArithmeticProgression:
    """The unique antisymmetric progression mod odd n with the given step.

    Antisymmetry (reversal equals negation) pins the start to
    2^-1 * (1 - length) * step.
    """
    if n < 1:
        raise ValueError(f"modulus must be positive, got {n}")
    if n % 2 == 0:
        raise EvenModulus(f"the antisymmetric progression is only unique for odd moduli, got {n}")
    inv2 = (n + 1) // 2
    start = inv2 * ((1 - length) % n) % n * (step % n) % n
    return ArithmeticProgression(n, start, step % n, length)


def construct_balanced(
    n: int, m: int, step: int = 1, family: str = "beta", start: int | None = None
) -> Sequence:
    """A balanced sequence of length m mod odd n, built from a progression.

    The default "beta" family needs m = 0 or -1 mod beta(n)*n and fixes the
    start from the step.  The "alpha" family needs the coarser classes
    m = 0 or -1 mod alpha(n)*n but accepts any start (default 0).  A length
    outside the family's classes raises UnsupportedLength, which says only
    that this construction does not apply, not that no balanced sequence of
    that length exists.
    """
    if n < 1:
        raise ValueError(f"modulus must be positive, got {n}")
    if n % 2 == 0:
        raise EvenModulus(f"the constructions require an odd modulus, got {n}")
    if m < 1:
        raise ValueError(f"length must be positive, got {m}")
    step %= n
    if gcd(step, n) != 1:
        raise NotInvertible(f"step {step} shares a factor with {n}")
    if family == "beta":
        if start is not None:
            raise ValueError("the beta family fixes the start; do not pass one")
        span = beta(n) * n
        inv2 = (n + 1) // 2
        if m % span == 0:
            ap = ArithmeticProgression(n, inv2 * step % n, step, m)
        elif (m + 1) % span == 0:
            ap = ArithmeticProgression(n, step, step, m)
        else:
            raise UnsupportedLength(
                f"beta family needs m = 0 or -1 mod {span}, got m = {m}"
            )
    elif family == "alpha":
        span = alpha(n) * n
        if m % span != 0 and (m + 1) % span != 0:
            raise UnsupportedLength(
                f"alpha family needs m = 0 or -1 mod {span}, got m = {m}"
            )
        ap = ArithmeticProgression(n, 0 if start is None else start % n, step, m)
    else:
        raise ValueError(f"unknown family {family!r}, expected 'beta' or 'alpha'")
    return ap.to_sequence()
