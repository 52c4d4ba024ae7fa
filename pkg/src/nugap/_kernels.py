"""Hot numeric kernels.

Each kernel has a numba @njit implementation and a pure-numpy fallback.
Set NUGAP_DISABLE_NUMBA=1 to force the fallback path (also used by the
benchmark in benchmarks/bench_kernels.py to compare the two).
"""

import os

import numpy as np

USE_NUMBA = os.environ.get("NUGAP_DISABLE_NUMBA", "0") not in ("1", "true", "yes")


def _difference_equation_py(b, a, u, delay):
    n = u.shape[0]
    ud = np.zeros(n)
    if delay < n:
        ud[delay:] = u[: n - delay]
    # feedforward part is a plain convolution
    v = np.convolve(ud, b)[:n]
    y = np.empty(n)
    na = a.shape[0]
    a0 = a[0]
    for k in range(n):
        acc = v[k]
        for i in range(1, min(na, k + 1)):
            acc -= a[i] * y[k - i]
        y[k] = acc / a0
    return y


def _fft_convolve_head(a, b):
    n = a.shape[0]
    m = 2 * n
    out = np.fft.irfft(np.fft.rfft(a, m) * np.fft.rfft(b, m), m)[:n]
    return out


def _toeplitz_matvec_py(g, x):
    return _fft_convolve_head(g, x)


def _toeplitz_rmatvec_py(g, x):
    return _fft_convolve_head(x[::-1], g)[::-1]


if USE_NUMBA:
    from numba import njit

    @njit(cache=True)
    def _difference_equation_nb(b, a, u, delay):  # pragma: no cover - jitted
        n = u.shape[0]
        nb = b.shape[0]
        na = a.shape[0]
        a0 = a[0]
        y = np.empty(n)
        for k in range(n):
            acc = 0.0
            for i in range(nb):
                m = k - delay - i
                if m < 0:
                    break
                acc += b[i] * u[m]
            for i in range(1, na):
                if i > k:
                    break
                acc -= a[i] * y[k - i]
            y[k] = acc / a0
        return y

    difference_equation = _difference_equation_nb
else:
    difference_equation = _difference_equation_py

# FFT-based convolution beats a jitted direct loop for the Toeplitz
# operator at every size we use, so these have a single implementation.
toeplitz_matvec = _toeplitz_matvec_py
toeplitz_rmatvec = _toeplitz_rmatvec_py
