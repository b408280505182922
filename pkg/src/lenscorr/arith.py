"""Exact rational helpers: floor, fractional part, the sawtooth and the
periodic first Bernoulli function.

Every value is a :class:`fractions.Fraction`, which is always stored in
lowest terms with a positive denominator, so equality is structural.
Nothing in here touches floating point.
"""

from fractions import Fraction
from numbers import Rational
from typing import Union

RationalLike = Union[int, Fraction, Rational]

HALF = Fraction(1, 2)


def as_rational(x: RationalLike) -> Fraction:
    """Coerce an int or rational to a reduced Fraction; floats are refused."""
    if isinstance(x, Fraction):
        return x
    if isinstance(x, bool) or not isinstance(x, Rational):
        raise TypeError(f"expected an exact rational, got {type(x).__name__}")
    return Fraction(x.numerator, x.denominator)


def floor_rat(x: RationalLike) -> int:
    """Largest integer <= x (toward -infinity, also for negative x)."""
    x = as_rational(x)
    return x.numerator // x.denominator


def frac_part(x: RationalLike) -> Fraction:
    """{x} = x - floor(x), always in [0, 1)."""
    x = as_rational(x)
    return Fraction(x.numerator % x.denominator, x.denominator)


def is_integral(x: RationalLike) -> bool:
    return as_rational(x).denominator == 1


def sawtooth(x: RationalLike) -> Fraction:
    """((x)): {x} - 1/2 off the integers and 0 on them."""
    x = as_rational(x)
    if x.denominator == 1:
        return Fraction(0)
    return frac_part(x) - HALF


def bernoulli1(x: RationalLike) -> Fraction:
    """Periodic first Bernoulli function {x} - 1/2 (equals -1/2 on integers)."""
    return frac_part(x) - HALF


def mod_inverse(q: int, p: int) -> int:
    """Inverse of q modulo p in {1, ..., p-1}, by the extended Euclidean algorithm.

    Raises ValueError when p < 2 or gcd(q, p) != 1.
    """
    if p < 2:
        raise ValueError(f"modulus must be >= 2, got {p}")
    old_r, r = q % p, p
    old_s, s = 1, 0
    while r:
        quot = old_r // r
        old_r, r = r, old_r - quot * r
        old_s, s = s, old_s - quot * s
    if old_r != 1:
        raise ValueError(f"{q} is not invertible modulo {p} (gcd {old_r})")
    return old_s % p
