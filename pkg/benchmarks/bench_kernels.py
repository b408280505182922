"""Time the compiled kernels against the pure-Python fallback.

    python benchmarks/bench_kernels.py [--p-max 120] [--repeat 3]

Each workload builds full rows for every coprime 0 < q < p <= p_max, which
is what the correction-term tables and the sweeps spend their time on.
"""

import argparse
import time
from math import gcd

from lenscorr import kernels


def pairs(p_max):
    return [(p, q) for p in range(2, p_max + 1) for q in range(1, p) if gcd(p, q) == 1]


def rademacher_rows(mod, work):
    for p, q in work:
        mod.rademacher_row(q, p)


def sigma_rows(mod, work):
    for p, q in work:
        mod.sigma_row(q, p)


def tange_rows(mod, work):
    for p, q in work:
        mod.tange_row(pow(q, -1, p), p)


def recursion(mod, work):
    for p, q in work:
        for n in range(p):
            mod.recursive_pair(p, q, n)


WORKLOADS = {"rademacher_row": rademacher_rows, "sigma_row": sigma_rows, "tange_row": tange_rows, "recursive_pair": recursion}


def best_of(fn, mod, work, repeat):
    best = float("inf")
    for _ in range(repeat):
        start = time.perf_counter()
        fn(mod, work)
        best = min(best, time.perf_counter() - start)
    return best


def main():
    parser = argparse.ArgumentParser(description=__doc__, formatter_class=argparse.RawDescriptionHelpFormatter)
    parser.add_argument("--p-max", type=int, default=120)
    parser.add_argument("--repeat", type=int, default=3)
    args = parser.parse_args()

    backends = kernels.available_backends()
    if "compiled" not in backends:
        print("compiled extension not built; only timing the Python fallback")
    work = pairs(args.p_max)
    print(f"{len(work)} lens spaces, p <= {args.p_max}, best of {args.repeat}")
    print(f"{'kernel':<16}" + "".join(f"{name:>12}" for name in backends) + f"{'speedup':>10}")
    for label, fn in WORKLOADS.items():
        times = {name: best_of(fn, mod, work, args.repeat) for name, mod in backends.items()}
        speedup = times["python"] / times["compiled"] if "compiled" in times else 1.0
        print(f"{label:<16}" + "".join(f"{t:>11.3f}s" for t in times.values()) + f"{speedup:>9.1f}x")


if __name__ == "__main__":
    main()
