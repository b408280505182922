"""Brute-force reference implementations, written straight from the
definitions with Fraction and math.floor. They deliberately share no code
with the package so they can check it.
"""

import math
from fractions import Fraction as F


def saw(x):
    x = F(x)
    if x.denominator == 1:
        return F(0)
    return x - math.floor(x) - F(1, 2)


def b1(x):
    x = F(x)
    return x - math.floor(x) - F(1, 2)


def dedekind(q, p):
    return sum((saw(F(k * q, p)) * saw(F(k, p)) for k in range(p)), F(0))


def rademacher(q, p, n):
    return sum((b1(F(k * q + n, p)) * b1(F(k, p)) for k in range(p)), F(0))


def sigma(q, p, n):
    return sum((saw(F(k * q + n, p)) * saw(F(k, p)) for k in range(p)), F(0))


def d_value(p, q, n):
    """Correction term from the Dedekind-Rademacher closed form, computed naively."""
    if p == 1:
        return F(0)
    return 2 * rademacher(q, p, n) + dedekind(q, p) - F(1, 2 * p)


def inverse(q, p):
    for k in range(1, p):
        if (k * q) % p == 1:
            return k
    raise ValueError
