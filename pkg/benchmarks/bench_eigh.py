"""Jacobi eigensolver: numba kernel vs numpy fallback, LAPACK for reference.

    python3 benchmarks/bench_eigh.py [--sizes 2 4 8 16] [--repeat 20]

Also times one matrix log on a density state, the operation every
geometry call reduces to, and one n^2 x n^2 modular log.
"""

import argparse
import time

import numpy as np

from qaitchison import modular
from qaitchison._kernels import jacobi_eigh_numba, jacobi_eigh_numpy
from qaitchison.linalg import random_density, random_hermitian


def best_of(fn, arg, repeat):
    best = float("inf")
    for _ in range(repeat):
        t0 = time.perf_counter()
        fn(arg)
        best = min(best, time.perf_counter() - t0)
    return best


def residual(fn, h):
    w, v = fn(h)[:2]
    return np.abs((v * w) @ v.conj().T - h).max()


def main():
    ap = argparse.ArgumentParser()
    ap.add_argument("--sizes", type=int, nargs="+", default=[2, 4, 8, 16, 32])
    ap.add_argument("--repeat", type=int, default=20)
    args = ap.parse_args()

    jacobi_eigh_numba(np.eye(2))  # compile (or load the cache) outside the timings

    print(f"{'n':>4} {'numba ms':>10} {'numpy ms':>10} {'lapack ms':>10} {'speedup':>8} {'resid numba':>12} {'resid numpy':>12}")
    for n in args.sizes:
        h = random_hermitian(n, n)
        repeat = args.repeat if n <= 16 else max(1, args.repeat // 10)
        t_nb = best_of(jacobi_eigh_numba, h, repeat)
        t_np = best_of(jacobi_eigh_numpy, h, repeat)
        t_la = best_of(np.linalg.eigh, h, repeat)
        print(
            f"{n:>4} {t_nb * 1e3:>10.3f} {t_np * 1e3:>10.3f} {t_la * 1e3:>10.3f} {t_np / t_nb:>7.1f}x"
            f" {residual(jacobi_eigh_numba, h):>12.1e} {residual(jacobi_eigh_numpy, h):>12.1e}"
        )

    # end to end, through whichever kernel QAITCHISON_NUMBA selects
    a, b = random_density(4, 1), random_density(4, 2)
    t0 = time.perf_counter()
    for _ in range(args.repeat):
        modular.log_modular(a, b, method="eig")
    print(f"modular log (16x16), active kernel: {(time.perf_counter() - t0) / args.repeat * 1e3:.3f} ms")


if __name__ == "__main__":
    main()
