"""Prime-field arithmetic and quadratic-character sums.

Everything works with exact integers; no floating point anywhere.  The
quadratic character sigma maps 0 to 0, nonzero squares to +1 and
non-squares to -1.  Character evaluation exists twice on purpose — a
lookup table built by marking squares, and Euler's criterion — so that
higher layers can rely on a cross-checked kernel.
"""

from __future__ import annotations

import numpy as np

# Deterministic Miller-Rabin witness set, valid for all n < 3.3e24.
MR_WITNESSES = (2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37)

# Largest p for which the character table may be materialized.
DEFAULT_TABLE_CAP = 1 << 20

# Below this, modular square roots are found by exhaustive scan.
EXHAUSTIVE_SQRT_CAP = 10_000


class NotPrimeError(ValueError):
    """The modulus is composite."""


class TooSmallError(ValueError):
    """The modulus is below 5; the engine needs p > 3."""


class BudgetExceededError(ValueError):
    """A lookup table would exceed the configured size cap."""


class ZeroPolynomialError(ValueError):
    """The operation needs a nonzero polynomial."""


class ZeroParameterError(ValueError):
    """An argument that must be nonzero mod p reduced to zero."""


def is_prime(n: int) -> bool:
    """Deterministic Miller-Rabin primality test."""
    if n < 2:
        return False
    for q in MR_WITNESSES:
        if n % q == 0:
            return n == q
    d = n - 1
    r = 0
    while d % 2 == 0:
        d //= 2
        r += 1
    for a in MR_WITNESSES:
        x = pow(a, d, n)
        if x in (1, n - 1):
            continue
        for _ in range(r - 1):
            x = x * x % n
            if x == n - 1:
                break
        else:
            return False
    return True


class PrimeContext:
    """The field F_p for a validated prime p > 3, with cached tables."""

    def __init__(self, p: int, table_cap: int = DEFAULT_TABLE_CAP):
        if p < 2:
            raise TooSmallError(f"modulus must be a prime greater than 3, got {p}")
        if not is_prime(p):
            raise NotPrimeError(f"modulus {p} is not prime")
        if p < 5:
            raise TooSmallError(f"modulus must be greater than 3, got {p}")
        self.p = p
        self.table_cap = table_cap
        self._table: np.ndarray | None = None

    def __repr__(self) -> str:
        return f"PrimeContext({self.p})"

    def reduce(self, a: int) -> int:
        return a % self.p

    def inv(self, a: int) -> int:
        a %= self.p
        if a == 0:
            raise ZeroParameterError("0 has no inverse")
        return pow(a, -1, self.p)

    def frac(self, num: int, den: int) -> int:
        """The residue num/den mod p."""
        return num * self.inv(den) % self.p

    @property
    def legendre_table(self) -> np.ndarray:
        """int8 vector t with t[a] = sigma(a), built by marking squares."""
        if self._table is None:
            if self.p > self.table_cap:
                raise BudgetExceededError(
                    f"character table for p={self.p} exceeds cap {self.table_cap}"
                )
            x = np.arange(self.p, dtype=np.int64)
            table = np.full(self.p, -1, dtype=np.int8)
            table[x * x % self.p] = 1
            table[0] = 0
            self._table = table
        return self._table

    def legendre_euler(self, a: int) -> int:
        """sigma(a) via Euler's criterion a^((p-1)/2) mod p."""
        a %= self.p
        if a == 0:
            return 0
        return 1 if pow(a, (self.p - 1) // 2, self.p) == 1 else -1

    def legendre(self, a: int) -> int:
        """sigma(a); table lookup when the table fits, Euler above."""
        if self.p <= self.table_cap:
            return int(self.legendre_table[a % self.p])
        return self.legendre_euler(a)

    def sqrt(self, a: int) -> int | None:
        """The smaller square root of a mod p, or None for non-squares."""
        a %= self.p
        if a == 0:
            return 0
        if self.legendre(a) != 1:
            return None
        if self.p <= EXHAUSTIVE_SQRT_CAP:
            return next(x for x in range(1, self.p) if x * x % self.p == a)
        return self._tonelli_shanks(a)

    def _tonelli_shanks(self, a: int) -> int:
        p = self.p
        q, s = p - 1, 0
        while q % 2 == 0:
            q //= 2
            s += 1
        if s == 1:
            r = pow(a, (p + 1) // 4, p)
            return min(r, p - r)
        z = 2
        while self.legendre_euler(z) != -1:
            z += 1
        c = pow(z, q, p)
        r = pow(a, (q + 1) // 2, p)
        t = pow(a, q, p)
        m = s
        while t != 1:
            t2 = t
            i = 0
            while t2 != 1:
                t2 = t2 * t2 % p
                i += 1
            b = pow(c, 1 << (m - i - 1), p)
            r = r * b % p
            c = b * b % p
            t = t * c % p
            m = i
        return min(r, p - r)


class Poly:
    """Polynomial over F_p; coefficients run from the constant term upward."""

    __slots__ = ("ctx", "coeffs")

    def __init__(self, ctx: PrimeContext, coeffs):
        reduced = [c % ctx.p for c in coeffs]
        while reduced and reduced[-1] == 0:
            reduced.pop()
        self.ctx = ctx
        self.coeffs = tuple(reduced)

    @property
    def degree(self) -> int:
        """Degree, with the zero polynomial at -1."""
        return len(self.coeffs) - 1

    def is_zero(self) -> bool:
        return not self.coeffs

    def __call__(self, x: int) -> int:
        x %= self.ctx.p
        acc = 0
        for c in reversed(self.coeffs):
            acc = (acc * x + c) % self.ctx.p
        return acc

    def values(self) -> np.ndarray:
        """f(x) for every x in F_p, as int64 residues."""
        p = self.ctx.p
        x = np.arange(p, dtype=np.int64)
        acc = np.zeros(p, dtype=np.int64)
        for c in reversed(self.coeffs):
            acc = (acc * x + c) % p
        return acc

    def scaled(self, k: int) -> "Poly":
        """The polynomial k*f."""
        return Poly(self.ctx, [k * c for c in self.coeffs])

    def __eq__(self, other) -> bool:
        return (
            isinstance(other, Poly)
            and self.ctx.p == other.ctx.p
            and self.coeffs == other.coeffs
        )

    def __hash__(self) -> int:
        return hash((self.ctx.p, self.coeffs))

    def __str__(self) -> str:
        if self.is_zero():
            return "0"
        parts = []
        for exp in range(self.degree, -1, -1):
            c = self.coeffs[exp]
            if c == 0:
                continue
            if exp == 0:
                parts.append(str(c))
            else:
                x = "x" if exp == 1 else f"x^{exp}"
                parts.append(x if c == 1 else f"{c}{x}")
        return " + ".join(parts)

    def __repr__(self) -> str:
        return f"Poly(p={self.ctx.p}, {self})"


def root_count(f: Poly) -> int:
    """Number of roots of f in F_p, by full enumeration."""
    if f.is_zero():
        raise ZeroPolynomialError("root counting needs a nonzero polynomial")
    if f.ctx.p <= f.ctx.table_cap:
        return int(np.count_nonzero(f.values() == 0))
    return sum(1 for x in range(f.ctx.p) if f(x) == 0)


def char_sum(f: Poly) -> int:
    """Sum of sigma(f(x)) over all x in F_p."""
    ctx = f.ctx
    if ctx.p <= ctx.table_cap:
        return int(ctx.legendre_table[f.values()].sum(dtype=np.int64))
    return sum(ctx.legendre_euler(f(x)) for x in range(ctx.p))
