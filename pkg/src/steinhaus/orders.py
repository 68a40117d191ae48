"""Factorization helpers and the order functions alpha and beta.

For odd n, alpha(n) is the least e >= 1 with 2^(e*n) = 1 mod n and beta(n)
the least e >= 1 with 2^(e*n) = +-1 mod n.  They set the period of the
progression constructions: balanced triangles come from progressions whose
length is a multiple (or one less than a multiple) of alpha(n)*n or
beta(n)*n.
"""

from __future__ import annotations

from functools import lru_cache
from math import gcd

from .errors import EvenModulus, NotCoprime, NotPrime


def is_prime(n: int) -> bool:
    """Trial-division primality check."""
    if n < 2:
        return False
    if n < 4:
        return True
    if n % 2 == 0:
        return False
    f = 3
    while f * f <= n:
        if n % f == 0:
            return False
        f += 2
    return True


def factorize(n: int) -> tuple[tuple[int, int], ...]:
    """Prime factorization of n >= 1 as ((p, exponent), ...), p increasing."""
    if n < 1:
        raise ValueError(f"need a positive integer, got {n}")
    out = []
    rest = n
    p = 2
    while p * p <= rest:
        if rest % p == 0:
            e = 0
            while rest % p == 0:
                rest //= p
                e += 1
            out.append((p, e))
        p += 1 if p == 2 else 2
    if rest > 1:
        out.append((rest, 1))
    return tuple(out)


def radical(n: int) -> int:
    """Product of the distinct primes dividing n; radical(1) = 1."""
    r = 1
    for p, _ in factorize(n):
        r *= p
    return r


def omega(n: int) -> int:
    """Number of distinct prime divisors of n."""
    return len(factorize(n))


def totient(n: int) -> int:
    """Euler's totient."""
    t = 1
    for p, e in factorize(n):
        t *= p ** (e - 1) * (p - 1)
    return t


def padic_valuation(p: int, n: int) -> int:
    """Exponent of the prime p in n."""
    if not is_prime(p):
        raise NotPrime(f"{p} is not prime")
    if n < 1:
        raise ValueError(f"need a positive integer, got {n}")
    v = 0
    while n % p == 0:
        n //= p
        v += 1
    return v


def invert(a: int, n: int) -> int:
    """Inverse of a mod n, for gcd(a, n) = 1."""
    if n < 1:
        raise ValueError(f"modulus must be positive, got {n}")
    try:
        return pow(a, -1, n)
    except ValueError:
        raise NotCoprime(f"{a} is not invertible mod {n}") from None


def multiplicative_order(a: int, n: int) -> int:
    """Least e >= 1 with a^e = 1 mod n.  a must be coprime to n."""
    if n < 1:
        raise ValueError(f"modulus must be positive, got {n}")
    a %= n
    if gcd(a, n) != 1:
        raise NotCoprime(f"{a} is not a unit mod {n}")
    target = 1 % n
    x = a
    for e in range(1, totient(n) + 1):
        if x == target:
            return e
        x = x * a % n
    raise AssertionError("order not found below the totient")


@lru_cache(maxsize=None)
def alpha(n: int) -> int:
    """Least e >= 1 with 2^(e*n) = 1 mod n, for odd n.  alpha(1) = 1."""
    if n < 1:
        raise ValueError(f"modulus must be positive, got {n}")
    if n % 2 == 0:
        raise EvenModulus(f"alpha is defined for odd moduli, got {n}")
    return multiplicative_order(pow(2, n, n), n)


@lru_cache(maxsize=None)
def beta(n: int) -> int:
    """Least e >= 1 with 2^(e*n) = +1 or -1 mod n, for odd n.  beta(1) = 1."""
    if n < 1:
        raise ValueError(f"modulus must be positive, got {n}")
    if n % 2 == 0:
        raise EvenModulus(f"beta is defined for odd moduli, got {n}")
    step = pow(2, n, n)
    hits = {1 % n, (n - 1) % n}
    x = step
    for e in range(1, totient(n) + 1):
        if x in hits:
            return e
        x = x * step % n
    raise AssertionError("no power of 2^n reached +-1 below the totient")
