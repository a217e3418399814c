"""QUBO instance representation, objective evaluation and single-flip deltas.

A problem instance is an upper-triangular real matrix Q; the objective of a
binary vector x is

    f(x) = sum over i <= j of Q[i, j] * x[i] * x[j]

minimized over all x in {0,1}^n.  Bit 0 of x is the least-significant
position of the integer encoding used throughout the package.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Sequence

import numpy as np

from . import _kernels

# Hard dimension cap.  Loop counters stay comfortably inside int64 and
# exhaustive search beyond this size is hopeless anyway.  Overridable per
# instance via the max_n constructor argument.
MAX_DIM = 40


class DimensionCapError(ValueError):
    """Instance dimension exceeds the configured cap."""


BitVector = np.ndarray
"""Length-n array over {0, 1}; index 0 is the least-significant bit."""


class QuboInstance:
    """Dense QUBO instance with an upper-triangular coefficient matrix.

    Input matrices that carry entries below the diagonal are folded into the
    upper triangle on construction (``coeffs[i, j] += coeffs[j, i]`` for
    i < j), which is the usual convention since only the i <= j terms enter
    the objective.  Pass ``strict=True`` to reject such input instead.

    The stored matrix is float64, C-contiguous and read-only; instances are
    immutable and safe to share across threads.
    """

    __slots__ = ("n", "coeffs")

    def __init__(
        self,
        coeffs: Sequence[Sequence[float]] | np.ndarray,
        *,
        strict: bool = False,
        max_n: int = MAX_DIM,
    ) -> None:
        arr = np.array(coeffs, dtype=np.float64, order="C")
        if arr.ndim != 2 or arr.shape[0] != arr.shape[1]:
            raise ValueError(f"coefficient matrix must be square, got shape {arr.shape}")
        n = arr.shape[0]
        if n < 1:
            raise ValueError("dimension must be at least 1")
        if n > max_n:
            raise DimensionCapError(f"dimension {n} exceeds cap {max_n}")
        if not np.isfinite(arr).all():
            raise ValueError("coefficients must be finite (no NaN or infinity)")
        lower = np.tril(arr, -1)
        if strict:
            if np.any(lower != 0.0):
                raise ValueError("matrix has entries below the diagonal (strict mode)")
            upper = np.triu(arr)
        else:
            upper = np.triu(arr) + lower.T
        upper.setflags(write=False)
        self.n = n
        self.coeffs = upper

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, QuboInstance):
            return NotImplemented
        return self.n == other.n and np.array_equal(self.coeffs, other.coeffs)

    def __repr__(self) -> str:
        nonzero = int(np.count_nonzero(self.coeffs))
        return f"QuboInstance(n={self.n}, nonzero_terms={nonzero})"


@dataclass(frozen=True)
class SplitForm:
    """Preprocessed instance: symmetric off-diagonal part plus diagonal vector.

    ``qua`` is symmetric with zero diagonal and ``qua[i, j] == coeffs[i, j]``
    for i < j of the source instance; ``lin[i] == coeffs[i, i]``.  This lets a
    single-bit-flip delta read one row of ``qua`` plus one entry of ``lin``.
    """

    qua: np.ndarray
    lin: np.ndarray

    @property
    def n(self) -> int:
        return self.lin.shape[0]


def split(instance: QuboInstance) -> SplitForm:
    """Split ``instance`` into symmetric off-diagonal matrix plus diagonal."""
    qua = np.triu(instance.coeffs, 1)
    qua = qua + qua.T
    lin = np.diag(instance.coeffs).copy()
    qua.setflags(write=False)
    lin.setflags(write=False)
    return SplitForm(qua=qua, lin=lin)


def _as_bit_floats(x: Sequence[int] | np.ndarray, n: int) -> np.ndarray:
    arr = np.asarray(x, dtype=np.float64)
    if arr.shape != (n,):
        raise ValueError(f"bit vector has shape {arr.shape}, expected ({n},)")
    if np.any((arr != 0.0) & (arr != 1.0)):
        raise ValueError("bit vector entries must be 0 or 1")
    return arr


def evaluate(instance: QuboInstance, x: Sequence[int] | np.ndarray) -> float:
    """Evaluate the objective at ``x`` by direct summation.

    Summation runs row-major over the upper triangle (i <= j), so repeated
    calls on identical inputs are bit-for-bit reproducible.
    """
    xf = _as_bit_floats(x, instance.n)
    return float(_kernels.eval_upper(instance.coeffs, xf))


def delta(form: SplitForm, x: Sequence[int] | np.ndarray, l: int) -> float:
    """Objective change caused by the flip of bit ``l``, given the flipped state.

    ``x`` must already contain the new value at position ``l``; the sign
    factor is then ``2*x[l] - 1``.  Only row ``l`` of ``form.qua`` and
    ``form.lin[l]`` are read, so the cost is O(n):

        delta = (2*x[l] - 1) * (qua[l] @ x + lin[l])

    Adding the result to the objective value of the pre-flip state yields the
    value of ``x``.
    """
    n = form.n
    if not 0 <= l < n:
        raise ValueError(f"flip index {l} out of range [0, {n})")
    xf = _as_bit_floats(x, n)
    sign = 2.0 * xf[l] - 1.0
    return float(sign * (form.qua[l] @ xf + form.lin[l]))


def bits_from_int(k: int, n: int) -> np.ndarray:
    """Binary vector of length ``n`` for integer ``k``; bit 0 is the LSB."""
    if not 0 <= k < (1 << n):
        raise ValueError(f"integer {k} not representable in {n} bits")
    return np.array([(k >> i) & 1 for i in range(n)], dtype=np.uint8)


def bits_to_int(bits: Sequence[int] | np.ndarray) -> int:
    """Integer encoding of a binary vector; inverse of :func:`bits_from_int`."""
    return sum(int(b) << i for i, b in enumerate(bits))
