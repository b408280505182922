"""Pure-Python integer kernels (fallback for the compiled ``_ckernels``).

Each sum kernel returns an integer numerator over a fixed denominator, so
callers build the exact value with a single Fraction. With r the residue of
kq + n mod p, the periodic Bernoulli factor is (2r - p) / (2p), hence

    s(q, p; n)     = rademacher_num(q, p, n) / (4 p^2)
    sigma(q, p; n) = sigma_num(q, p, n) / (4 p^2)

The sawtooth version drops every term whose argument is an integer.
Arguments must satisfy p >= 1; q and n may be any integers.
"""


def rademacher_num(q, p, n):
    q %= p
    r = n % p
    acc = 0
    for k in range(p):
        acc += (2 * r - p) * (2 * k - p)
        r += q
        if r >= p:
            r -= p
    return acc


def sigma_num(q, p, n):
    q %= p
    r = (n + q) % p
    acc = 0
    for k in range(1, p):
        if r:
            acc += (2 * r - p) * (2 * k - p)
        r += q
        if r >= p:
            r -= p
    return acc


def rademacher_row(q, p):
    """[rademacher_num(q, p, n) for n in range(p)]."""
    return [rademacher_num(q, p, n) for n in range(p)]


def sigma_row(q, p):
    return [sigma_num(q, p, n) for n in range(p)]


def tange_row(qinv, p):
    """Prefix sums T[n] = sum_{k=1..n} (((2 qinv k - 1) mod 2p) - p), n < p.

    2 * sum_{k=1..n} (((2 qinv k - 1) / (2p))) == T[n] / p; the argument has
    an odd numerator over an even denominator, so it is never an integer.
    """
    two_p = 2 * p
    step = (2 * qinv) % two_p
    r = (step - 1) % two_p
    acc = 0
    row = [0]
    for _ in range(1, p):
        acc += r - p
        row.append(acc)
        r += step
        if r >= two_p:
            r -= two_p
    return row


def tange_num(qinv, p, n):
    two_p = 2 * p
    step = (2 * qinv) % two_p
    r = (step - 1) % two_p
    acc = 0
    for _ in range(n):
        acc += r - p
        r += step
        if r >= two_p:
            r -= two_p
    return acc


def _gcd(a, b):
    a, b = abs(a), abs(b)
    while b:
        a, b = b, a % b
    return a


def recursive_pair(p, q, n):
    """Euclidean descent on the lens-space reciprocity law.

    Requires p >= 1, 0 <= q < p coprime and 0 <= n < p. Returns the reduced
    (numerator, denominator) of d(L(p, q), n); each step adds
    +/- (pq + 4n^2 + 4n(1 - p - q) + p^2 + 1 + q^2 - 2p - 2q) / (4pq)
    and moves to (q, p mod q, n mod q) until p == 1.
    """
    num, den, sign = 0, 1, 1
    while p > 1:
        rn = p * q + 4 * n * n + 4 * n * (1 - p - q) + p * p + 1 + q * q - 2 * p - 2 * q
        rd = 4 * p * q
        g = _gcd(rn, rd)
        rn, rd = sign * (rn // g), rd // g
        g = _gcd(den, rd)
        num = num * (rd // g) + rn * (den // g)
        den = den * (rd // g)
        g = _gcd(num, den)
        num, den = num // g, den // g
        p, q, n = q, p % q, n % q
        sign = -sign
    return num, den
