"""One-parameter families of cubic curves y^2 = f_lam(x) over F_p.

Five families, tagged by which coefficient carries the parameter lam:

  C   y^2 = x^3 + a x^2 + b x + lam        (constant term varies)
  B   y^2 = x^3 + a x^2 + lam x + c        (linear coefficient varies)
  A   y^2 = x^3 + lam x^2 + b x + c        (quadratic coefficient varies)
  D   y^2 = x^3 + b x + c + lam (x^2 - x)  (perturbation along x^2 - x)
  T   y^2 = x^3 + lam^2 (b x + 1)          (squared-twist pencil)

Every family is affine in a function of the parameter:
f_lam = g + h(lam) * m, where h(lam) = lam except for T, which uses
h(lam) = lam^2.  The fiber sum S_lam = sum_x sigma(f_lam(x)) gives the
point count of the affine curve as p + S_lam.
"""

from __future__ import annotations

import numpy as np

from .fp_core import Poly, PrimeContext, ZeroParameterError, char_sum

FAMILY_TAGS = ("A", "B", "C", "D", "T")

# Parameter names per family, in canonical order.
PARAM_NAMES = {
    "A": ("b", "c"),
    "B": ("a", "c"),
    "C": ("a", "b"),
    "D": ("b", "c"),
    "T": ("b",),
}

# Upper bound on lam-block cells handed to numpy at once.
CELL_BUDGET = 1 << 22


class BothZeroError(ValueError):
    """Family A needs (b, c) != (0, 0)."""


class Family:
    """A concrete family over a fixed prime context."""

    def __init__(self, ctx: PrimeContext, tag: str, **params: int):
        if tag not in PARAM_NAMES:
            raise ValueError(f"unknown family tag {tag!r}")
        names = PARAM_NAMES[tag]
        if set(params) != set(names):
            raise ValueError(f"family {tag} takes parameters {names}")
        vals = {k: params[k] % ctx.p for k in names}
        if tag == "A" and vals["b"] == 0 and vals["c"] == 0:
            raise BothZeroError("family A needs (b, c) != (0, 0)")
        if tag == "T" and vals["b"] == 0:
            raise ZeroParameterError("family T needs b != 0")
        self.ctx = ctx
        self.tag = tag
        self.params = vals
        self.base, self.step = self._decompose()

    def __repr__(self) -> str:
        inner = ", ".join(f"{k}={v}" for k, v in self.params.items())
        return f"Family({self.tag}, p={self.ctx.p}, {inner})"

    def _decompose(self) -> tuple[Poly, Poly]:
        """Fixed part g and multiplier m with f_lam = g + h(lam) * m."""
        q = self.params
        ctx = self.ctx
        if self.tag == "C":
            return Poly(ctx, (0, q["b"], q["a"], 1)), Poly(ctx, (1,))
        if self.tag == "B":
            return Poly(ctx, (q["c"], 0, q["a"], 1)), Poly(ctx, (0, 1))
        if self.tag == "A":
            return Poly(ctx, (q["c"], q["b"], 0, 1)), Poly(ctx, (0, 0, 1))
        if self.tag == "D":
            return Poly(ctx, (q["c"], q["b"], 0, 1)), Poly(ctx, (0, -1, 1))
        return Poly(ctx, (0, 0, 0, 1)), Poly(ctx, (1, q["b"]))

    def param_shift(self, lam: int) -> int:
        """h(lam): squared for family T, identity otherwise."""
        lam %= self.ctx.p
        if self.tag == "T":
            return lam * lam % self.ctx.p
        return lam

    def poly(self, lam: int) -> Poly:
        """The cubic at one parameter value."""
        h = self.param_shift(lam)
        n = max(len(self.base.coeffs), len(self.step.coeffs))
        base = self.base.coeffs + (0,) * (n - len(self.base.coeffs))
        step = self.step.coeffs + (0,) * (n - len(self.step.coeffs))
        return Poly(self.ctx, [g + h * m for g, m in zip(base, step)])

    def fiber_sum(self, lam: int) -> int:
        """S_lam = sum_x sigma(f_lam(x))."""
        return char_sum(self.poly(lam))

    def fiber_sums(self) -> list[int]:
        """S_lam for every lam in F_p, via the blocked table kernel."""
        ctx = self.ctx
        p = ctx.p
        if p > ctx.table_cap:
            return [self.fiber_sum(lam) for lam in range(p)]
        table = ctx.legendre_table
        base = self.base.values()
        step = self.step.values()
        lam = np.arange(p, dtype=np.int64)
        shift = lam * lam % p if self.tag == "T" else lam
        out = np.empty(p, dtype=np.int64)
        block = max(1, CELL_BUDGET // p)
        for lo in range(0, p, block):
            hs = shift[lo:lo + block, None]
            vals = (base[None, :] + hs * step[None, :]) % p
            out[lo:lo + block] = table[vals].sum(axis=1, dtype=np.int64)
        return out.tolist()

    def twisted_fiber_sums(self, d: int) -> list[int]:
        """Fiber sums of the twisted family d*y^2 = f_lam(x).

        Each x contributes 1 + sigma(f_lam(x)/d) solutions in y, so the
        sums are taken over the polynomials f_lam/d directly.
        """
        d %= self.ctx.p
        if d == 0:
            raise ZeroParameterError("twist needs d != 0")
        dinv = self.ctx.inv(d)
        return [char_sum(self.poly(lam).scaled(dinv)) for lam in range(self.ctx.p)]

    def point_count(self, lam: int) -> int:
        """Affine point count of y^2 = f_lam(x), as p + S_lam."""
        return self.ctx.p + self.fiber_sum(lam)

    def point_count_naive(self, lam: int) -> int:
        """Affine point count by the double loop over (x, y)."""
        p = self.ctx.p
        f = self.poly(lam)
        count = 0
        for x in range(p):
            fx = f(x)
            for y in range(p):
                if y * y % p == fx:
                    count += 1
        return count
