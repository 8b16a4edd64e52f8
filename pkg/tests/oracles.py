"""Independent naive reference implementations used as test oracles.

Deliberately primitive: square-set membership for the character, pure
Python loops for sums and point counts, the definitional form of the
variance, exhaustive searches for the decompositions.  Nothing here
imports from the package under test.
"""

from fractions import Fraction
from functools import lru_cache
from math import isqrt


@lru_cache(maxsize=None)
def square_set(p: int) -> frozenset:
    return frozenset(x * x % p for x in range(1, p))


def sigma(a: int, p: int) -> int:
    a %= p
    if a == 0:
        return 0
    return 1 if a in square_set(p) else -1


def poly_eval(coeffs, x: int, p: int) -> int:
    acc = 0
    for c in reversed(coeffs):
        acc = (acc * x + c) % p
    return acc


def char_sum(coeffs, p: int) -> int:
    return sum(sigma(poly_eval(coeffs, x, p), p) for x in range(p))


def root_count(coeffs, p: int) -> int:
    return sum(1 for x in range(p) if poly_eval(coeffs, x, p) == 0)


def point_count(coeffs, p: int) -> int:
    total = 0
    for x in range(p):
        fx = poly_eval(coeffs, x, p)
        for y in range(p):
            if y * y % p == fx:
                total += 1
    return total


def mean(values) -> Fraction:
    return Fraction(sum(values), len(values))


def variance(values) -> Fraction:
    """Definitional E((X - mu)^2); a different formula than the package uses."""
    n = len(values)
    mu = Fraction(sum(values), n)
    return sum((Fraction(v) - mu) ** 2 for v in values) / n


def sieve(n: int) -> list:
    """Primes up to n inclusive."""
    if n < 2:
        return []
    flags = bytearray([1]) * (n + 1)
    flags[0] = flags[1] = 0
    for i in range(2, isqrt(n) + 1):
        if flags[i]:
            flags[i * i :: i] = bytearray(len(range(i * i, n + 1, i)))
    return [i for i, f in enumerate(flags) if f]


def field_primes(lo: int, hi: int) -> list:
    """Primes usable as moduli (at least 5) in [lo, hi]."""
    return [p for p in sieve(hi) if p >= max(lo, 5)]


def two_square_search(p: int) -> list:
    """All (a, b) with p = a^2 + b^2, a = -1 mod 4, b > 0, by brute force."""
    sols = []
    for a in range(-isqrt(p), isqrt(p) + 1):
        if a % 4 != 3:
            continue
        rest = p - a * a
        if rest <= 0:
            continue
        b = isqrt(rest)
        if b * b == rest and b > 0:
            sols.append((a, b))
    return sols


def eisenstein_search(p: int) -> list:
    """All (a, b) with p = a^2 + 3b^2, a = -1 mod 3, b > 0, by brute force."""
    sols = []
    for a in range(-isqrt(p), isqrt(p) + 1):
        if a % 3 != 2:
            continue
        rest = p - a * a
        if rest <= 0 or rest % 3:
            continue
        b2 = rest // 3
        b = isqrt(b2)
        if b * b == b2 and b > 0:
            sols.append((a, b))
    return sols
