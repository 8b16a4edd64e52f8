"""Signed quadratic decompositions of primes.

For p = 1 mod 4 there is exactly one pair (a, b) with p = a^2 + b^2,
a = -1 mod 4 and b > 0; for p = 1 mod 3 exactly one (a, b) with
p = a^2 + 3 b^2, a = -1 mod 3 and b > 0.  The sign normalizations are
what make the closed-form character sums single-valued wherever the
lemmas pin them down.
"""

from __future__ import annotations

from dataclasses import dataclass
from math import isqrt

from .fp_core import PrimeContext


class WrongResidueError(ValueError):
    """p lies in a residue class that has no such decomposition."""


@dataclass(frozen=True)
class TwoSquare:
    """p = a^2 + b^2 with a = -1 (mod 4) odd and b > 0 even."""

    p: int
    a: int
    b: int


@dataclass(frozen=True)
class Eisenstein:
    """p = a^2 + 3*b^2 with a = -1 (mod 3) and b > 0."""

    p: int
    a: int
    b: int


def _cornacchia(ctx: PrimeContext, d: int) -> tuple[int, int]:
    """Positive (x, y) with x^2 + d*y^2 = p, by descent from sqrt(-d)."""
    p = ctx.p
    r = ctx.sqrt(-d)
    assert r is not None, "caller must ensure -d is a square mod p"
    if r < p - r:
        r = p - r  # descend from the larger root
    a, b = p, r
    limit = isqrt(p)
    while b > limit:
        a, b = b, a % b
    rem = p - b * b
    y2, m = divmod(rem, d)
    y = isqrt(y2)
    assert m == 0 and y * y == y2, "descent must land on a representation"
    return b, y


def two_square(ctx: PrimeContext) -> TwoSquare:
    """Decompose p = a^2 + b^2, normalized so a = -1 (mod 4), b > 0."""
    if ctx.p % 4 != 1:
        raise WrongResidueError(
            f"p={ctx.p} is 3 mod 4 and is not a sum of two squares"
        )
    x, y = _cornacchia(ctx, 1)
    a, b = (x, y) if x % 2 == 1 else (y, x)
    if a % 4 != 3:
        a = -a
    return TwoSquare(ctx.p, a, b)


def eisenstein(ctx: PrimeContext) -> Eisenstein:
    """Decompose p = a^2 + 3*b^2, normalized so a = -1 (mod 3), b > 0."""
    if ctx.p % 3 != 1:
        raise WrongResidueError(
            f"p={ctx.p} is 2 mod 3 and is not of the form a^2 + 3b^2"
        )
    a, b = _cornacchia(ctx, 3)
    if a % 3 != 2:
        a = -a
    return Eisenstein(ctx.p, a, b)
