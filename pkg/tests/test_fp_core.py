"""Prime-field arithmetic and the character-sum kernel."""

import random

import pytest

import oracles
from cubicvar.fp_core import (
    BudgetExceededError,
    NotPrimeError,
    Poly,
    PrimeContext,
    TooSmallError,
    ZeroPolynomialError,
    char_sum,
    is_prime,
    root_count,
)

SMALL_PRIMES = [5, 7, 11, 13, 17, 19, 23, 29, 31]


def test_is_prime_matches_sieve():
    primes = set(oracles.sieve(20_000))
    for n in range(20_001):
        assert is_prime(n) == (n in primes)


def test_is_prime_large_and_pseudoprime_cases():
    assert is_prime(2**31 - 1)
    assert is_prime(2**61 - 1)
    assert not is_prime(561)  # Carmichael number
    assert not is_prime(3_215_031_751)  # strong pseudoprime to bases 2,3,5,7
    assert not is_prime(2**61 + 1)
    assert not is_prime(-7)


def test_context_rejects_bad_moduli():
    with pytest.raises(NotPrimeError):
        PrimeContext(4)
    with pytest.raises(NotPrimeError):
        PrimeContext(561)
    for n in (-5, 0, 1, 2, 3):
        with pytest.raises(TooSmallError):
            PrimeContext(n)


def test_reduce_inv_frac():
    ctx = PrimeContext(7)
    assert ctx.reduce(-1) == 6
    assert ctx.reduce(15) == 1
    assert ctx.inv(3) == 5
    with pytest.raises(ValueError):
        ctx.inv(14)
    assert ctx.frac(1, 2) * 2 % 7 == 1
    assert ctx.frac(-1, 2) == 3


def test_legendre_table_p5_frozen():
    assert PrimeContext(5).legendre_table.tolist() == [0, 1, -1, -1, 1]


@pytest.mark.parametrize("p", SMALL_PRIMES + [97, 101, 199])
def test_legendre_agrees_with_oracle_and_euler(p):
    ctx = PrimeContext(p)
    for a in range(p):
        s = ctx.legendre(a)
        assert s == oracles.sigma(a, p)
        assert s == ctx.legendre_euler(a)
    assert ctx.legendre(-1) == ctx.legendre(p - 1)
    assert ctx.legendre(p) == 0


@pytest.mark.parametrize("p", [5, 13, 31])
def test_legendre_multiplicative(p):
    ctx = PrimeContext(p)
    for a in range(p):
        for b in range(p):
            assert ctx.legendre(a * b) == ctx.legendre(a) * ctx.legendre(b)


def test_table_budget_falls_back_to_euler():
    ctx = PrimeContext(11, table_cap=7)
    with pytest.raises(BudgetExceededError):
        ctx.legendre_table
    assert [ctx.legendre(a) for a in range(11)] == [
        oracles.sigma(a, 11) for a in range(11)
    ]


@pytest.mark.parametrize("p", SMALL_PRIMES + [9973])
def test_sqrt_small_moduli(p):
    ctx = PrimeContext(p)
    assert ctx.sqrt(0) == 0
    for a in range(1, p):
        r = ctx.sqrt(a)
        if oracles.sigma(a, p) == 1:
            assert r is not None
            assert r * r % p == a
            assert r <= p - r
        else:
            assert r is None


def _next_prime(n, mod4):
    while not (is_prime(n) and n % 4 == mod4):
        n += 1
    return n


@pytest.mark.parametrize("mod4", [1, 3])
def test_sqrt_beyond_exhaustive_cap(mod4):
    p = _next_prime(10_001, mod4)
    ctx = PrimeContext(p)
    rng = random.Random(mod4)
    for _ in range(25):
        x = rng.randrange(1, p)
        a = x * x % p
        r = ctx.sqrt(a)
        assert r is not None
        assert r * r % p == a
        assert r <= p - r
    nonsquare = next(a for a in range(2, p) if ctx.legendre(a) == -1)
    assert ctx.sqrt(nonsquare) is None


def test_poly_eval_matches_oracle():
    ctx = PrimeContext(101)
    coeffs = (-16, 0, 6, 1)
    f = Poly(ctx, coeffs)
    assert f(-2) == 0
    for x in range(101):
        assert f(x) == oracles.poly_eval(coeffs, x, 101)
    assert f.values().tolist() == [f(x) for x in range(101)]


def test_poly_normalization_and_rendering():
    ctx = PrimeContext(5)
    f = Poly(ctx, (6, 5, 10, 0, 0))
    assert f.coeffs == (1,)
    assert f.degree == 0
    assert Poly(ctx, (0, 0)).is_zero()
    assert Poly(ctx, ()).degree == -1
    assert str(Poly(ctx, (4, 0, 1))) == "x^2 + 4"
    assert str(Poly(ctx, (4, 4, 0, 1))) == "x^3 + 4x + 4"
    assert Poly(ctx, (1, 2)) == Poly(ctx, (6, 7))
    assert Poly(ctx, (0, 1)).scaled(3) == Poly(ctx, (0, 3))


def test_root_count_matches_oracle():
    ctx = PrimeContext(13)
    for coeffs in [(0, 1), (1, 0, 1), (-2, 0, 0, 1), (1, -2, 1, -2, 1), (3,)]:
        assert root_count(Poly(ctx, coeffs)) == oracles.root_count(coeffs, 13)
    with pytest.raises(ZeroPolynomialError):
        root_count(Poly(ctx, (0,)))


@pytest.mark.parametrize("p", [5, 13, 31])
def test_char_sum_matches_oracle_on_both_kernels(p):
    rng = random.Random(p)
    ctx = PrimeContext(p)
    capped = PrimeContext(p, table_cap=2)
    for _ in range(20):
        coeffs = tuple(rng.randrange(p) for _ in range(rng.randrange(1, 6)))
        expected = oracles.char_sum(coeffs, p)
        assert char_sum(Poly(ctx, coeffs)) == expected
        assert char_sum(Poly(capped, coeffs)) == expected


@pytest.mark.parametrize("p", SMALL_PRIMES)
def test_shifted_linear_sum_vanishes(p):
    ctx = PrimeContext(p)
    for c in range(p):
        assert char_sum(Poly(ctx, (c, 1))) == 0


@pytest.mark.parametrize("p", SMALL_PRIMES)
def test_shifted_square_sum(p):
    ctx = PrimeContext(p)
    for c in range(p):
        expected = p - 1 if c == 0 else -1
        assert char_sum(Poly(ctx, (c, 0, 1))) == expected


@pytest.mark.parametrize("p", SMALL_PRIMES)
def test_paired_linear_sum(p):
    ctx = PrimeContext(p)
    for c1 in range(p):
        for c2 in range(p):
            total = sum(
                ctx.legendre(x + c1) * ctx.legendre(x + c2) for x in range(p)
            )
            assert total == (p - 1 if c1 == c2 else -1)


@pytest.mark.parametrize("p", [5, 7, 11, 13])
def test_quadratic_solution_count(p):
    ctx = PrimeContext(p)
    for a in range(1, p):
        for b in range(p):
            for c in range(p):
                hits = sum(1 for y in range(p) if (a * y * y + b * y + c) % p == 0)
                assert hits == 1 + ctx.legendre(b * b - 4 * a * c)
