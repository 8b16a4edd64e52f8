"""Exact first and second moments of integer samples."""

from __future__ import annotations

from fractions import Fraction


class EmptySampleError(ValueError):
    """Moments of an empty sample are undefined."""


def mean(values) -> Fraction:
    """Exact arithmetic mean."""
    vs = list(values)
    if not vs:
        raise EmptySampleError("mean of an empty sample")
    return Fraction(sum(vs), len(vs))


def variance(values) -> Fraction:
    """Exact population variance E(X^2) - E(X)^2."""
    vs = list(values)
    if not vs:
        raise EmptySampleError("variance of an empty sample")
    n = len(vs)
    s = sum(vs)
    s2 = sum(v * v for v in vs)
    return Fraction(n * s2 - s * s, n * n)
