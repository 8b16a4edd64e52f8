"""Normalized two-square and Eisenstein decompositions vs exhaustive search."""

import pytest

import oracles
from cubicvar.decomp import (
    Eisenstein,
    TwoSquare,
    WrongResidueError,
    eisenstein,
    two_square,
)
from cubicvar.fp_core import PrimeContext


def test_two_square_frozen_examples():
    assert two_square(PrimeContext(5)) == TwoSquare(5, -1, 2)
    assert two_square(PrimeContext(13)) == TwoSquare(13, 3, 2)
    assert two_square(PrimeContext(29)) == TwoSquare(29, -5, 2)


def test_eisenstein_frozen_examples():
    assert eisenstein(PrimeContext(7)) == Eisenstein(7, 2, 1)
    assert eisenstein(PrimeContext(13)) == Eisenstein(13, -1, 2)
    assert eisenstein(PrimeContext(31)) == Eisenstein(31, 2, 3)


def test_wrong_residue_class_rejected():
    with pytest.raises(WrongResidueError):
        two_square(PrimeContext(7))
    with pytest.raises(WrongResidueError):
        two_square(PrimeContext(11))
    with pytest.raises(WrongResidueError):
        eisenstein(PrimeContext(5))
    with pytest.raises(WrongResidueError):
        eisenstein(PrimeContext(11))


def test_two_square_exhaustive_to_10000():
    for p in oracles.field_primes(5, 10_000):
        if p % 4 != 1:
            continue
        sols = oracles.two_square_search(p)
        assert len(sols) == 1  # the normalization pins a unique pair
        d = two_square(PrimeContext(p))
        assert (d.a, d.b) == sols[0]
        assert d.a * d.a + d.b * d.b == p
        assert d.a % 4 == 3
        assert d.b > 0 and d.b % 2 == 0


def test_eisenstein_exhaustive_to_10000():
    for p in oracles.field_primes(5, 10_000):
        if p % 3 != 1:
            continue
        sols = oracles.eisenstein_search(p)
        assert len(sols) == 1
        d = eisenstein(PrimeContext(p))
        assert (d.a, d.b) == sols[0]
        assert d.a * d.a + 3 * d.b * d.b == p
        assert d.a % 3 == 2
        assert d.b > 0
