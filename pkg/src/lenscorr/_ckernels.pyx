# cython: language_level=3, boundscheck=False, wraparound=False, cdivision=True
"""Compiled integer kernels; same contracts as ``lenscorr._pykernels``.

Sums use 64-bit accumulators, so callers must keep p below ``kernels.SUM_LIMIT``.
``recursive_pair`` checks every product and raises OverflowError instead of
wrapping around.
"""
cimport cython


cdef inline long long _pmod(long long a, long long m) noexcept nogil:
    a = a % m
    if a < 0:
        a += m
    return a


cdef long long _rademacher(long long q, long long p, long long r) noexcept nogil:
    cdef long long k, acc = 0
    for k in range(p):
        acc += (2 * r - p) * (2 * k - p)
        r += q
        if r >= p:
            r -= p
    return acc


cdef long long _sigma(long long q, long long p, long long n) noexcept nogil:
    cdef long long k, acc = 0
    cdef long long r = n + q
    if r >= p:
        r -= p
    for k in range(1, p):
        if r != 0:
            acc += (2 * r - p) * (2 * k - p)
        r += q
        if r >= p:
            r -= p
    return acc


def rademacher_num(long long q, long long p, long long n):
    return _rademacher(_pmod(q, p), p, _pmod(n, p))


def sigma_num(long long q, long long p, long long n):
    return _sigma(_pmod(q, p), p, _pmod(n, p))


def rademacher_row(long long q, long long p):
    cdef long long qq = _pmod(q, p), n
    return [_rademacher(qq, p, n) for n in range(p)]


def sigma_row(long long q, long long p):
    cdef long long qq = _pmod(q, p), n
    return [_sigma(qq, p, n) for n in range(p)]


def tange_row(long long qinv, long long p):
    cdef long long two_p = 2 * p
    cdef long long step = _pmod(2 * qinv, two_p)
    cdef long long r = _pmod(step - 1, two_p)
    cdef long long acc = 0, k
    row = [0]
    for k in range(1, p):
        acc += r - p
        row.append(acc)
        r += step
        if r >= two_p:
            r -= two_p
    return row


def tange_num(long long qinv, long long p, long long n):
    cdef long long two_p = 2 * p
    cdef long long step = _pmod(2 * qinv, two_p)
    cdef long long r = _pmod(step - 1, two_p)
    cdef long long acc = 0, k
    for k in range(n):
        acc += r - p
        r += step
        if r >= two_p:
            r -= two_p
    return acc


cdef inline long long _gcd(long long a, long long b) noexcept nogil:
    if a < 0:
        a = -a
    if b < 0:
        b = -b
    while b:
        a, b = b, a % b
    return a


@cython.overflowcheck(True)
def recursive_pair(long long p, long long q, long long n):
    cdef long long num = 0, den = 1, sign = 1
    cdef long long rn, rd, g, t
    while p > 1:
        rn = p * q + 4 * n * n + 4 * n * (1 - p - q) + p * p + 1 + q * q - 2 * p - 2 * q
        rd = 4 * p * q
        g = _gcd(rn, rd)
        rn = sign * (rn // g)
        rd = rd // g
        g = _gcd(den, rd)
        num = num * (rd // g) + rn * (den // g)
        den = den * (rd // g)
        g = _gcd(num, den)
        num = num // g
        den = den // g
        t = p
        p = q
        q = t % q
        n = n % p
        sign = -sign
    return num, den
