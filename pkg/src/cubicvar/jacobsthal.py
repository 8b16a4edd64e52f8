"""Jacobsthal-type cubic character sums and their closed forms.

Three sums over x in F_p:

  phi2(c) = sum sigma(x^3 + c x)          (c != 0)
  psi3(c) = sum sigma(x^3 + c)            (c != 0)
  rho(c)  = sum sigma(x^3 + x^2 + c x)    (c = 0 allowed)

The closed forms express phi2 and psi3 through the signed prime
decompositions; where only the pair {±v} is pinned down the value is
returned as a two-candidate set and callers check membership.
"""

from __future__ import annotations

from dataclasses import dataclass
from math import gcd

from .decomp import eisenstein, two_square
from .fp_core import Poly, PrimeContext, ZeroParameterError, char_sum


@dataclass(frozen=True)
class ClosedForm:
    """A closed-form value: one candidate when exact, two when sign-ambiguous."""

    candidates: tuple[int, ...]

    def __post_init__(self):
        if len(self.candidates) not in (1, 2):
            raise ValueError("closed form carries one or two candidates")

    @property
    def is_exact(self) -> bool:
        return len(self.candidates) == 1

    @property
    def exact(self) -> int | None:
        return self.candidates[0] if self.is_exact else None

    def __contains__(self, value: int) -> bool:
        return value in self.candidates


def _exact(v: int) -> ClosedForm:
    return ClosedForm((v,))


def _pair(u: int, v: int) -> ClosedForm:
    return ClosedForm(tuple(sorted((u, v))))


def phi2_brute(ctx: PrimeContext, c: int) -> int:
    """phi2(c) by direct summation; needs c != 0."""
    c %= ctx.p
    if c == 0:
        raise ZeroParameterError("phi2 needs c != 0")
    return char_sum(Poly(ctx, (0, c, 0, 1)))


def psi3_brute(ctx: PrimeContext, c: int) -> int:
    """psi3(c) by direct summation; needs c != 0."""
    c %= ctx.p
    if c == 0:
        raise ZeroParameterError("psi3 needs c != 0")
    return char_sum(Poly(ctx, (c, 0, 0, 1)))


def rho_brute(ctx: PrimeContext, c: int) -> int:
    """rho(c) by direct summation; rho(0) = -1 always."""
    return char_sum(Poly(ctx, (0, c % ctx.p, 1, 1)))


def is_cube(ctx: PrimeContext, c: int) -> bool:
    """True iff nonzero c is a cube: c^((p-1)/gcd(3, p-1)) = 1."""
    c %= ctx.p
    if c == 0:
        raise ZeroParameterError("is_cube needs c != 0")
    e = (ctx.p - 1) // gcd(3, ctx.p - 1)
    return pow(c, e, ctx.p) == 1


def phi2_closed(ctx: PrimeContext, c: int) -> ClosedForm:
    """phi2(c) without summation.

    Zero identically for p = 3 mod 4.  For p = 1 mod 4 write
    p = a^2 + b^2 (a = -1 mod 4, b > 0): on squares c = s^2 the value is
    sigma(s) * 2a (well defined since sigma(-1) = 1 here); on
    non-squares only the pair {±2b} is determined.
    """
    c %= ctx.p
    if c == 0:
        raise ZeroParameterError("phi2 needs c != 0")
    if ctx.p % 4 == 3:
        return _exact(0)
    dec = two_square(ctx)
    s = ctx.sqrt(c)
    if s is not None:
        return _exact(ctx.legendre(s) * 2 * dec.a)
    return _pair(2 * dec.b, -2 * dec.b)


def psi3_closed(ctx: PrimeContext, c: int) -> ClosedForm:
    """psi3(c) without summation.

    Zero identically for p = 2 mod 3.  For p = 1 mod 3 write
    p = a^2 + 3 b^2 (a = -1 mod 3, b > 0): sigma(c) * psi3(c) equals 2a
    when c is a cube and one of -a ± 3b otherwise.
    """
    c %= ctx.p
    if c == 0:
        raise ZeroParameterError("psi3 needs c != 0")
    if ctx.p % 3 == 2:
        return _exact(0)
    dec = eisenstein(ctx)
    sc = ctx.legendre(c)
    if is_cube(ctx, c):
        return _exact(sc * 2 * dec.a)
    return _pair(sc * (-dec.a + 3 * dec.b), sc * (-dec.a - 3 * dec.b))
