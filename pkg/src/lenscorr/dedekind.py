"""Dedekind sums, both Dedekind-Rademacher conventions, and the glue between them.

Conventions, for p >= 1 and gcd(q, p) = 1:

* ``dedekind_sum(q, p)``      s(q,p)    = sum_k ((kq/p)) ((k/p))
* ``rademacher_sum(q, p, n)`` s(q,p;n)  = sum_k B1((kq+n)/p) B1(k/p)
* ``sigma_sum(q, p, n)``      sigma(q,p;n) = sum_k (((kq+n)/p)) ((k/p))

with k running over 0..p-1, ((.)) the sawtooth and B1 the periodic first
Bernoulli function. All three are evaluated term by term (no reciprocity
shortcuts), so they serve as the reference values for everything else.
"""

from fractions import Fraction
from math import gcd

from . import kernels
from .arith import bernoulli1, mod_inverse


def _check_args(q: int, p: int) -> None:
    if p <= 0:
        raise ValueError(f"p must be a positive integer, got {p}")
    if gcd(q, p) != 1:
        raise ValueError(f"q and p must be coprime, got q={q}, p={p}")


def dedekind_sum(q: int, p: int) -> Fraction:
    """Classical Dedekind sum s(q, p); depends on q only modulo p."""
    _check_args(q, p)
    return Fraction(kernels.sigma_num(q, p, 0), 4 * p * p)


def rademacher_sum(q: int, p: int, n: int) -> Fraction:
    """Dedekind-Rademacher sum s(q, p; n) built from the Bernoulli function."""
    _check_args(q, p)
    return Fraction(kernels.rademacher_num(q, p, n), 4 * p * p)


def sigma_sum(q: int, p: int, n: int) -> Fraction:
    """Sawtooth variant sigma(q, p; n) of the Dedekind-Rademacher sum."""
    _check_args(q, p)
    return Fraction(kernels.sigma_num(q, p, n), 4 * p * p)


def rademacher_sums(q: int, p: int) -> list[Fraction]:
    """[s(q, p; n) for n in 0..p-1]."""
    _check_args(q, p)
    den = 4 * p * p
    return [Fraction(v, den) for v in kernels.rademacher_row(q, p)]


def sigma_sums(q: int, p: int) -> list[Fraction]:
    _check_args(q, p)
    den = 4 * p * p
    return [Fraction(v, den) for v in kernels.sigma_row(q, p)]


def solve_kq(q: int, p: int, n: int) -> int:
    """The unique k in 0..p-1 with k*q + n = 0 (mod p)."""
    _check_args(q, p)
    if p == 1:
        return 0
    return (-n * mod_inverse(q, p)) % p


def s_sigma_delta(q: int, p: int, n: int) -> Fraction:
    """s(q,p;n) - sigma(q,p;n) in closed form.

    1/4 when p divides n, otherwise -(B1(n/p) + B1(k_q/p)) / 2 where k_q is
    :func:`solve_kq`.
    """
    _check_args(q, p)
    if n % p == 0:
        return Fraction(1, 4)
    kq = solve_kq(q, p, n)
    return -(bernoulli1(Fraction(n, p)) + bernoulli1(Fraction(kq, p))) / 2


def knuth_e_factor(q: int, n: int) -> int:
    """e(q, n): 1 if n == 0 or q does not divide n, else 0.

    n is deliberately not reduced mod q; the reciprocity law it feeds also
    uses floor(n / q).
    """
    if q < 1 or n < 0:
        raise ValueError(f"need q >= 1 and n >= 0, got q={q}, n={n}")
    if n == 0 or n % q:
        return 1
    return 0
