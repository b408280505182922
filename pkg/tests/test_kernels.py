"""Both kernel backends against the brute-force oracle and each other."""

from fractions import Fraction as F
from math import gcd

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

import oracles
from lenscorr import _pykernels, kernels

BACKENDS = kernels.available_backends()
SMALL = [(p, q) for p in range(1, 19) for q in range(p) if gcd(p, q) == 1]


@pytest.fixture(params=list(BACKENDS))
def backend(request):
    return BACKENDS[request.param]


def test_compiled_backend_built():
    # with Cython present the extension is part of the build; catch a silent fallback
    pytest.importorskip("Cython")
    assert kernels.BACKEND == "compiled"


@pytest.mark.parametrize("p, q", SMALL)
def test_sum_rows_match_oracle(backend, p, q):
    den = 4 * p * p
    rad, sig = backend.rademacher_row(q, p), backend.sigma_row(q, p)
    for n in range(p):
        assert F(rad[n], den) == oracles.rademacher(q, p, n)
        assert F(sig[n], den) == oracles.sigma(q, p, n)
        assert rad[n] == backend.rademacher_num(q, p, n)
        assert sig[n] == backend.sigma_num(q, p, n)


@pytest.mark.parametrize("p, q", [pq for pq in SMALL if pq[0] > 1])
def test_tange_and_recursion_match_oracle(backend, p, q):
    qinv = oracles.inverse(q, p)
    row = backend.tange_row(qinv, p)
    for n in range(p):
        sawsum = sum((oracles.saw(F(2 * qinv * k - 1, 2 * p)) for k in range(1, n + 1)), F(0))
        assert F(row[n], p) == 2 * sawsum
        assert backend.tange_num(qinv, p, n) == row[n]
        assert F(*backend.recursive_pair(p, q, n)) == oracles.d_value(p, q, n)


def test_recursive_pair_is_reduced(backend):
    num, den = backend.recursive_pair(27, 7, 9)
    assert (num, den) == (-1, 6)


def test_negative_arguments_reduced(backend):
    assert backend.rademacher_num(-3, 7, -2) == _pykernels.rademacher_num(4, 7, 5)
    assert backend.sigma_num(-3, 7, -9) == _pykernels.sigma_num(4, 7, 5)


@settings(max_examples=60, deadline=None)
@given(st.integers(2, 3000), st.integers(1, 3000), st.integers(0, 3000))
def test_backends_agree(p, q, n):
    if gcd(p, q) != 1:
        return
    q, n = q % p, n % p
    if q == 0:
        return
    qinv = pow(q, -1, p)
    results = {
        name: (
            mod.rademacher_num(q, p, n),
            mod.sigma_num(q, p, n),
            mod.tange_num(qinv, p, n),
            mod.recursive_pair(p, q, n),
        )
        for name, mod in BACKENDS.items()
    }
    assert len(set(results.values())) == 1


def test_recursion_overflow_falls_back_to_python():
    p, q, n = 10**9 + 7, 123456789, 5
    if "compiled" in BACKENDS:
        with pytest.raises(OverflowError):
            BACKENDS["compiled"].recursive_pair(p, q, n)
    assert kernels.recursive_pair(p, q, n) == _pykernels.recursive_pair(p, q, n)


def test_large_modulus_sums_use_python(monkeypatch):
    calls = []
    real = _pykernels.sigma_num
    monkeypatch.setattr(_pykernels, "sigma_num", lambda *a: calls.append(a) or real(*a))
    monkeypatch.setattr(kernels, "SUM_LIMIT", 10)
    assert kernels.sigma_num(3, 11, 0) == real(3, 11, 0)
    assert calls


def test_fallback_selected_without_extension():
    import subprocess
    import sys

    code = (
        "import sys; sys.modules['lenscorr._ckernels'] = None\n"
        "import lenscorr\n"
        "from lenscorr import sweeps\n"
        "assert lenscorr.BACKEND == 'python', lenscorr.BACKEND\n"
        "assert sweeps.run('agreement', 25)[0].ok\n"
        "print(lenscorr.d_closed(lenscorr.LensSpace(27, 7), 9))\n"
    )
    proc = subprocess.run([sys.executable, "-c", code], capture_output=True, text=True)
    assert proc.returncode == 0, proc.stderr
    assert proc.stdout.strip() == "-1/6"
