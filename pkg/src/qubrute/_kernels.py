"""Compiled inner loops shared by the public API and the solvers.

All kernels release the GIL so subspace scans can run on a thread pool.
Summation orders are fixed (row-major over the upper triangle, sequential
row dot) to keep results reproducible; no fastmath.
"""

import numba
import numpy as np


@numba.njit(cache=True, nogil=True)
def eval_upper(coeffs, x):
    """f(x) = sum_{i<=j} coeffs[i,j] * x[i] * x[j], fixed summation order."""
    n = coeffs.shape[0]
    acc = 0.0
    for i in range(n):
        for j in range(i, n):
            acc += coeffs[i, j] * x[i] * x[j]
    return acc


@numba.njit(cache=True, nogil=True)
def naive_scan(coeffs):
    """Full enumeration in ascending integer order, one direct evaluation per step.

    Starts the loop at k=1 with the zero vector (value 0) as incumbent; a
    strictly smaller value replaces it, so the first minimizer in ascending
    order is kept.  Returns (minimizer, value, steps).
    """
    n = coeffs.shape[0]
    x = np.zeros(n, np.float64)
    x_min = np.zeros(n, np.float64)
    v_min = 0.0
    total = 1 << n
    for k in range(1, total):
        for i in range(n):
            x[i] = float((k >> i) & 1)
        v = eval_upper(coeffs, x)
        if v < v_min:
            x_min[:] = x
            v_min = v
    return x_min, v_min, total - 1


@numba.njit(cache=True, nogil=True)
def gray_scan(coeffs, qua, lin, x0, v0, n_free):
    """Gray-code scan over the n_free low bits of x0 with O(n) delta updates.

    Per step: l = trailing zeros of the counter, flip bit l, read row l of
    qua plus lin[l], accumulate the signed delta into the running value.
    The running value is never corrected, but whenever a new incumbent is
    recorded its value is recomputed exactly by direct evaluation (incumbent
    updates are rare), so the reported value carries no accumulated error.
    Returns (minimizer, value, steps).
    """
    n = qua.shape[0]
    x = x0.copy()
    x_min = x0.copy()
    v = v0
    v_min = v0
    total = 1 << n_free
    for k in range(1, total):
        l = 0
        while (k >> l) & 1 == 0:
            l += 1
        x[l] = 1.0 - x[l]
        row = 0.0
        for i in range(n):
            row += qua[l, i] * x[i]
        v += (2.0 * x[l] - 1.0) * (row + lin[l])
        if v < v_min:
            x_min[:] = x
            v_min = eval_upper(coeffs, x)
    return x_min, v_min, total - 1
