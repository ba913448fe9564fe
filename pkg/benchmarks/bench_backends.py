"""Compare the two holds() kernels: jit scalar loop vs vectorized grid.

The backend is chosen per call from MVMLAB_BACKEND, so both paths run
in one process.  Axiom checks over the larger chain algebras are the
representative workload: a handful of equations with three variables
each, evaluated over every assignment.

Usage: python benchmarks/bench_backends.py [--sizes 6,8,12] [--repeat 5]
"""

import argparse
import os
import time

from mvmlab import holds, lukasiewicz_mvm
from mvmlab.mvm import ALL_AXIOM_EQUATIONS
from mvmlab._backend import HAS_NUMBA


def run_once(algebra):
    for _, eq in ALL_AXIOM_EQUATIONS:
        if not holds(algebra, eq):
            raise SystemExit(f"{algebra.name} unexpectedly fails an axiom")


def bench(backend, algebra, repeat):
    os.environ["MVMLAB_BACKEND"] = backend
    run_once(algebra)  # warm up: jit compile or first-touch caches
    best = float("inf")
    for _ in range(repeat):
        t0 = time.perf_counter()
        run_once(algebra)
        best = min(best, time.perf_counter() - t0)
    return best


def main():
    ap = argparse.ArgumentParser()
    ap.add_argument("--sizes", default="6,8,12",
                    help="comma-separated chain sizes")
    ap.add_argument("--repeat", type=int, default=5)
    args = ap.parse_args()
    sizes = [int(s) for s in args.sizes.split(",")]

    if not HAS_NUMBA:
        print("numba not importable; only the numpy path is measured")
    print(f"{'algebra':<16} {'numpy':>10} {'numba':>10} {'speedup':>8}")
    for n in sizes:
        alg = lukasiewicz_mvm(n).base
        t_np = bench("numpy", alg, args.repeat)
        if HAS_NUMBA:
            t_nb = bench("numba", alg, args.repeat)
            print(f"{alg.name:<16} {t_np * 1e3:>8.2f}ms {t_nb * 1e3:>8.2f}ms "
                  f"{t_np / t_nb:>7.1f}x")
        else:
            print(f"{alg.name:<16} {t_np * 1e3:>8.2f}ms {'-':>10} {'-':>8}")
    os.environ.pop("MVMLAB_BACKEND", None)


if __name__ == "__main__":
    main()
