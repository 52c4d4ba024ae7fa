#!/usr/bin/env python3
"""Benchmark the jitted difference-equation kernel against the pure-numpy
fallback (the path the package uses when NUGAP_DISABLE_NUMBA=1), plus the
FFT-based Toeplitz matvec for reference.
"""

import time

import numpy as np

from nugap import _kernels


def timeit(fn, *args, repeat=5):
    fn(*args)  # warm up (triggers jit compilation)
    best = np.inf
    for _ in range(repeat):
        t0 = time.perf_counter()
        fn(*args)
        best = min(best, time.perf_counter() - t0)
    return best


def main():
    rng = np.random.default_rng(0)
    print(f"numba path active: {_kernels.USE_NUMBA}")
    header = f"{'kernel':<44} {'numpy [ms]':>11} {'active [ms]':>12} {'speedup':>8}"
    print(header)
    print("-" * len(header))
    for n, order in [(1000, 1), (9000, 1), (9000, 4)]:
        u = rng.standard_normal(n)
        b = rng.standard_normal(order + 1)
        a = np.concatenate([[1.0], 0.5 * rng.standard_normal(order) / order])
        args = (b, a, u, 0)
        t_py = timeit(_kernels._difference_equation_py, *args)
        t_active = timeit(_kernels.difference_equation, *args)
        assert np.allclose(
            _kernels._difference_equation_py(*args),
            _kernels.difference_equation(*args),
            rtol=1e-10,
            atol=1e-12,
        )
        name = f"difference_equation (N={n}, order {order})"
        print(
            f"{name:<44} {1e3 * t_py:>11.3f} {1e3 * t_active:>12.3f} "
            f"{t_py / t_active:>7.1f}x"
        )
    g = 0.8 ** np.arange(2048)
    x = rng.standard_normal(2048)
    t = timeit(_kernels.toeplitz_matvec, g, x)
    print(f"{'toeplitz_matvec fft (N=2048)':<44} {'-':>11} {1e3 * t:>12.3f}")


if __name__ == "__main__":
    main()
