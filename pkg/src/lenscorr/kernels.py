"""Backend selection for the integer kernels.

The compiled ``_ckernels`` extension is used when it was built; otherwise the
pure-Python ``_pykernels`` module does the same work with unbounded ints.
Inputs too large for 64-bit accumulators are always routed to Python, so the
result never depends on which backend ran.
"""

from . import _pykernels

try:
    from . import _ckernels
except ImportError:  # extension not built
    _ckernels = None

BACKEND = "compiled" if _ckernels is not None else "python"

# |sum| <= p^3 for the sum kernels; 2^20 keeps that far inside int64.
SUM_LIMIT = 1 << 20


def available_backends():
    """Mapping of backend name to kernel module, compiled first when present."""
    backends = {}
    if _ckernels is not None:
        backends["compiled"] = _ckernels
    backends["python"] = _pykernels
    return backends


def _pick(p):
    if _ckernels is not None and p <= SUM_LIMIT:
        return _ckernels
    return _pykernels


def rademacher_num(q: int, p: int, n: int) -> int:
    return _pick(p).rademacher_num(q % p, p, n % p)


def sigma_num(q: int, p: int, n: int) -> int:
    return _pick(p).sigma_num(q % p, p, n % p)


def rademacher_row(q: int, p: int) -> list[int]:
    return _pick(p).rademacher_row(q % p, p)


def sigma_row(q: int, p: int) -> list[int]:
    return _pick(p).sigma_row(q % p, p)


def tange_row(qinv: int, p: int) -> list[int]:
    return _pick(p).tange_row(qinv % p, p)


def tange_num(qinv: int, p: int, n: int) -> int:
    return _pick(p).tange_num(qinv % p, p, n)


def recursive_pair(p: int, q: int, n: int) -> tuple[int, int]:
    if _ckernels is not None:
        try:
            return _ckernels.recursive_pair(p, q, n)
        except OverflowError:
            pass
    return _pykernels.recursive_pair(p, q, n)
