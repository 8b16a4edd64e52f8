"""Closed-form variances for the five families.

Each operation returns the exact variance of the fiber-sum vector
(equivalently, of the point counts) as a Fraction, together with the
named integer sub-terms that enter the formula, so callers can
re-assemble and audit every term.  Residual character sums are computed
by direct enumeration.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction

from .families import BothZeroError, Family
from .fp_core import Poly, PrimeContext, ZeroParameterError, char_sum, root_count
from .jacobsthal import phi2_brute, psi3_brute, rho_brute


@dataclass(frozen=True)
class ClosedVariance:
    """Exact closed-form variance plus its named sub-terms."""

    value: Fraction
    formula: str
    residuals: dict[str, int] = field(default_factory=dict)


def var_vary_const(ctx: PrimeContext, a: int, b: int) -> ClosedVariance:
    """Variance for y^2 = x^3 + a x^2 + b x + lam over all lam.

    p - 1 - sigma(-3) - sigma(a^2 - 3b) off the boundary a^2 = 3b;
    (1 + sigma(-3)) (p - 1) on it.
    """
    p = ctx.p
    a %= p
    b %= p
    s_m3 = ctx.legendre(-3)
    disc = (a * a - 3 * b) % p
    if disc == 0:
        return ClosedVariance(
            Fraction((1 + s_m3) * (p - 1)),
            "vary_const",
            {"sigma_m3": s_m3, "boundary": 1},
        )
    s_disc = ctx.legendre(disc)
    return ClosedVariance(
        Fraction(p - 1 - s_m3 - s_disc),
        "vary_const",
        {"sigma_m3": s_m3, "sigma_disc": s_disc, "boundary": 0},
    )


def var_vary_linear(ctx: PrimeContext, a: int, c: int) -> ClosedVariance:
    """Variance for y^2 = x^3 + a x^2 + lam x + c over all lam.

    (1 + sigma(-1)) (p - 1) at a = c = 0; p - 2 - sigma(-1) for c = 0,
    a != 0; else p - 1 - sigma(-1) - n3 + sigma(c) * sum over x of
    sigma(x^3 + a x^2 - 4c), with n3 the root count of that same cubic.
    """
    p = ctx.p
    a %= p
    c %= p
    s_m1 = ctx.legendre(-1)
    if c == 0:
        if a == 0:
            return ClosedVariance(
                Fraction((1 + s_m1) * (p - 1)),
                "vary_linear",
                {"sigma_m1": s_m1, "boundary": 1},
            )
        return ClosedVariance(
            Fraction(p - 2 - s_m1),
            "vary_linear",
            {"sigma_m1": s_m1, "boundary": 2},
        )
    aux = Poly(ctx, (-4 * c, 0, a, 1))
    n3 = root_count(aux)
    tail = char_sum(aux)
    s_c = ctx.legendre(c)
    return ClosedVariance(
        Fraction(p - 1 - s_m1 - n3 + s_c * tail),
        "vary_linear",
        {"sigma_m1": s_m1, "sigma_c": s_c, "n3": n3, "tail_sum": tail, "boundary": 0},
    )


def var_vary_quad(ctx: PrimeContext, b: int, c: int) -> ClosedVariance:
    """Variance for y^2 = x^3 + lam x^2 + b x + c over all lam, (b,c) != (0,0).

    p - 1 - sigma(b) - 1/p for c = 0; else p - 1 - n3 - 1/p + sum over x
    of sigma(4 c x^3 + (b x + c)^2), with n3 the root count of
    x^3 - b x - 2 c.
    """
    p = ctx.p
    b %= p
    c %= p
    if b == 0 and c == 0:
        raise BothZeroError("the variance formula needs (b, c) != (0, 0)")
    if c == 0:
        s_b = ctx.legendre(b)
        return ClosedVariance(
            Fraction(p - 1 - s_b) - Fraction(1, p),
            "vary_quad",
            {"sigma_b": s_b, "boundary": 1},
        )
    aux = Poly(ctx, (-2 * c, -b, 0, 1))
    n3 = root_count(aux)
    quartic = Poly(ctx, (c * c, 2 * b * c, b * b, 4 * c))
    tail = char_sum(quartic)
    return ClosedVariance(
        Fraction(p - 1 - n3 + tail) - Fraction(1, p),
        "vary_quad",
        {"n3": n3, "tail_sum": tail, "boundary": 0},
    )


# Tabulated (b, c) pairs of the perturbed family, grouped by the shape of
# their correction term.  The first four groups are dual pairs under
# (b, c) |-> (b, -(b + c + 1)); the last three are fixed by that duality.
_PERTURBED_TABLE: tuple[tuple[str, Fraction, Fraction], ...] = (
    ("plain", Fraction(0), Fraction(0)),
    ("plain", Fraction(0), Fraction(-1)),
    ("shift_two", Fraction(-2), Fraction(0)),
    ("shift_two", Fraction(-2), Fraction(1)),
    ("unit", Fraction(1), Fraction(0)),
    ("unit", Fraction(1), Fraction(-2)),
    ("half", Fraction(-1, 2), Fraction(0)),
    ("half", Fraction(-1, 2), Fraction(-1, 2)),
    ("legendre", Fraction(-1), Fraction(0)),
    ("triple", Fraction(-3), Fraction(1)),
    ("palindromic", Fraction(1), Fraction(-1)),
)


def perturbed_pairs(ctx: PrimeContext) -> list[tuple[int, int]]:
    """The tabulated (b, c) pairs reduced mod p, in table order."""
    return [
        (ctx.frac(fb.numerator, fb.denominator), ctx.frac(fc.numerator, fc.denominator))
        for _, fb, fc in _PERTURBED_TABLE
    ]


def perturbed_dual(b: int, c: int) -> tuple[int, int]:
    """The dual parameter pair (b, -(b + c + 1)); variance-preserving."""
    return b, -(b + c + 1)


def var_perturbed(ctx: PrimeContext, b: int, c: int) -> ClosedVariance | None:
    """Variance for y^2 = x^3 + b x + c + lam (x^2 - x), tabulated pairs only.

    Returns p - 2 - 1/p + correction(b, c) for the eleven tabulated
    pairs (fractions reduced mod p) and None for every other pair, in
    which case callers fall back to the brute-force variance.
    """
    p = ctx.p
    b %= p
    c %= p
    group = None
    for (name, fb, fc), (rb, rc) in zip(_PERTURBED_TABLE, perturbed_pairs(ctx)):
        if (rb, rc) == (b, c):
            group = name
            break
    if group is None:
        return None
    s_m1 = ctx.legendre(-1)
    s_2 = ctx.legendre(2)
    res: dict[str, int] = {"sigma_m1": s_m1, "sigma_2": s_2}
    if group == "plain":
        sig = -1 - s_m1
    elif group == "shift_two":
        res["phi2_1"] = phi2_brute(ctx, 1)
        sig = -1 - s_m1 + s_2 * res["phi2_1"]
    elif group == "unit":
        res["phi2_1"] = phi2_brute(ctx, 1)
        sig = -1 - s_2 + res["phi2_1"]
    elif group == "half":
        res["phi2_1"] = phi2_brute(ctx, 1)
        sig = -1 - s_2 + s_2 * res["phi2_1"]
    elif group == "legendre":
        sig = 0
    elif group == "triple":
        res["sigma_m3"] = ctx.legendre(-3)
        sig = -2 * (1 + s_m1 + res["sigma_m3"])
    else:
        res["n4"] = root_count(Poly(ctx, (1, -2, 1, -2, 1)))
        res["rho_2"] = rho_brute(ctx, 2)
        res["phi2_1"] = phi2_brute(ctx, 1)
        sig = -res["n4"] - 2 * s_m1 + s_m1 * res["rho_2"] + s_2 * res["phi2_1"]
    res["correction"] = sig
    return ClosedVariance(
        Fraction(p - 2 + sig) - Fraction(1, p), "perturbed", res
    )


def var_twisted_square(ctx: PrimeContext, b: int) -> ClosedVariance:
    """Variance for y^2 = x^3 + lam^2 (b x + 1) over all lam; b != 0.

    The fiber-sum mean is 1 + sigma(-b) exactly (it equals 2 only when
    -b is a square), and the second moment is
    p - 1 - sigma(-3) - sigma(-3b) - phi2(b)^2 / p.  The variance is
    their exact difference:

        p - 1 - sigma(-3) - sigma(-3b) - phi2(b)^2/p - (1 + sigma(-b))^2.
    """
    p = ctx.p
    b %= p
    if b == 0:
        raise ZeroParameterError("family T needs b != 0")
    s_m3 = ctx.legendre(-3)
    s_m3b = ctx.legendre(-3 * b)
    s_mb = ctx.legendre(-b)
    f2b = phi2_brute(ctx, b)
    mean_offset = 1 + s_mb
    second = Fraction(p - 1 - s_m3 - s_m3b) - Fraction(f2b * f2b, p)
    return ClosedVariance(
        second - mean_offset * mean_offset,
        "twisted_square",
        {
            "sigma_m3": s_m3,
            "sigma_m3b": s_m3b,
            "sigma_mb": s_mb,
            "phi2_b": f2b,
            "mean_offset": mean_offset,
        },
    )


def var_depressed_const(ctx: PrimeContext, b: int) -> ClosedVariance:
    """Variance for y^2 = x^3 + b x + lam, b != 0: p - 1 - sigma(-3) - sigma(-3b).

    Coincides with var_vary_const(0, b).
    """
    p = ctx.p
    b %= p
    if b == 0:
        raise ZeroParameterError("the depressed pencil formula needs b != 0")
    s_m3 = ctx.legendre(-3)
    s_m3b = ctx.legendre(-3 * b)
    return ClosedVariance(
        Fraction(p - 1 - s_m3 - s_m3b),
        "depressed_const",
        {"sigma_m3": s_m3, "sigma_m3b": s_m3b},
    )


def var_vary_linear_6_4(ctx: PrimeContext) -> ClosedVariance:
    """Variance for y^2 = x^3 + 6 x^2 + lam x + 4.

    p - 3 - sigma(-1) - sigma(3) + phi2(-12), which splits mod 12 into
    p-5±2a (class 1), p-3±2b (class 5), p-1 (class 7), p-3 (class 11),
    with (a, b) the two-square decomposition; the residuals record the
    class and the enumerated sign of phi2(-12).
    """
    p = ctx.p
    s_m1 = ctx.legendre(-1)
    s_3 = ctx.legendre(3)
    f2 = phi2_brute(ctx, -12)
    sign = (f2 > 0) - (f2 < 0)
    return ClosedVariance(
        Fraction(p - 3 - s_m1 - s_3 + f2),
        "vary_linear_6_4",
        {
            "sigma_m1": s_m1,
            "sigma_3": s_3,
            "phi2_m12": f2,
            "phi2_sign": sign,
            "p_mod_12": p % 12,
        },
    )


def var_vary_quad_b0(ctx: PrimeContext, c: int) -> ClosedVariance:
    """Variance for y^2 = x^3 + lam x^2 + c, c != 0.

    p - 1 - n3 - 1/p + sigma(2c) * psi3(2c), with n3 the root count of
    x^3 - 2c.  Coincides with var_vary_quad(0, c).
    """
    p = ctx.p
    c %= p
    if c == 0:
        raise ZeroParameterError("this formula needs c != 0")
    n3 = root_count(Poly(ctx, (-2 * c, 0, 0, 1)))
    s_2c = ctx.legendre(2 * c)
    psi = psi3_brute(ctx, 2 * c)
    return ClosedVariance(
        Fraction(p - 1 - n3 + s_2c * psi) - Fraction(1, p),
        "vary_quad_b0",
        {"n3": n3, "sigma_2c": s_2c, "psi3_2c": psi},
    )


def var_vary_quad_6_2(ctx: PrimeContext) -> ClosedVariance:
    """Variance for y^2 = x^3 + lam x^2 + 6 x + 2.

    p - 3 - sigma(3) - 1/p + sigma(-3) * psi3(1).  Coincides with
    var_vary_quad(6, 2).
    """
    p = ctx.p
    s_3 = ctx.legendre(3)
    s_m3 = ctx.legendre(-3)
    psi = psi3_brute(ctx, 1)
    return ClosedVariance(
        Fraction(p - 3 - s_3 + s_m3 * psi) - Fraction(1, p),
        "vary_quad_6_2",
        {"sigma_3": s_3, "sigma_m3": s_m3, "psi3_1": psi},
    )


def closed_variance(fam: Family) -> ClosedVariance | None:
    """The closed form matching a family instance; None when untabulated."""
    q = fam.params
    if fam.tag == "C":
        return var_vary_const(fam.ctx, q["a"], q["b"])
    if fam.tag == "B":
        return var_vary_linear(fam.ctx, q["a"], q["c"])
    if fam.tag == "A":
        return var_vary_quad(fam.ctx, q["b"], q["c"])
    if fam.tag == "D":
        return var_perturbed(fam.ctx, q["b"], q["c"])
    return var_twisted_square(fam.ctx, q["b"])
