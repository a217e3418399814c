"""Exhaustive QUBO solvers.

Three search strategies over {0,1}^n:

* :func:`solve_naive` - ascending integer order, one full O(n^2) evaluation
  per vector.  Slow; kept as the reference oracle.
* :func:`solve_incremental` - Gray-code order with O(n) delta updates per
  step, roughly n times faster per vector.
* :func:`solve_parallel` - fixes the m most-significant bits to carve the
  space into 2**m disjoint subspaces, scans them on a thread pool and
  min-reduces the results.

All solvers guarantee the returned value is the exact direct evaluation of
the returned minimizer.  Tie policy: the naive solver keeps the first
minimizer in ascending integer order, the incremental solver the first in
Gray order, so their minimizers may differ while the values agree; the
parallel reduction breaks cross-subspace ties toward the lowest suffix.
"""

from __future__ import annotations

import time
from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass
from typing import Optional, Sequence

import numpy as np

from . import _kernels
from .core import MAX_DIM, DimensionCapError, QuboInstance, SplitForm, evaluate, split

# Practical ceiling for the O(2^n * n^2) oracle on desk hardware.
NAIVE_MAX_DIM = 24

MODES = ("naive", "incremental", "parallel")


@dataclass(frozen=True, eq=False)
class Solution:
    """Result of a solve: minimizing assignment plus search statistics.

    ``minimizer`` is a uint8 bit vector (index 0 = least-significant bit),
    ``value`` its exact objective value, ``evaluations`` the number of
    objective-update steps performed and ``elapsed`` the wall-clock seconds
    of the solve call.
    """

    minimizer: np.ndarray
    value: float
    evaluations: int
    elapsed: float


@dataclass(frozen=True)
class SubspaceSpec:
    """Assignment of the ``m`` most-significant bits for one subspace.

    Bit t of ``suffix`` is placed at position n - m + t, so the subspace
    covers exactly the integers [suffix * 2**(n-m), (suffix+1) * 2**(n-m));
    the 2**m suffixes partition {0,1}^n.  Free positions are 0 .. n-m-1.
    """

    m: int
    suffix: int

    def __post_init__(self) -> None:
        if self.m < 0:
            raise ValueError(f"fixed-bit count must be >= 0, got {self.m}")
        if not 0 <= self.suffix < (1 << self.m):
            raise ValueError(f"suffix {self.suffix} out of range [0, 2**{self.m})")

    def start_bits(self, n: int) -> np.ndarray:
        """All-zeros free bits plus the fixed suffix, as a uint8 vector."""
        if self.m >= n:
            raise ValueError(f"cannot fix {self.m} bits of an n={n} instance")
        bits = np.zeros(n, dtype=np.uint8)
        for t in range(self.m):
            bits[n - self.m + t] = (self.suffix >> t) & 1
        return bits


@dataclass(frozen=True)
class SolveConfig:
    """Knobs for the solver front end."""

    threads: int = 1
    fixed_bits: Optional[int] = None
    mode: str = "incremental"

    def __post_init__(self) -> None:
        if self.threads < 1:
            raise ValueError(f"threads must be >= 1, got {self.threads}")
        if self.fixed_bits is not None and self.fixed_bits < 0:
            raise ValueError(f"fixed_bits must be >= 0, got {self.fixed_bits}")
        if self.mode not in MODES:
            raise ValueError(f"mode must be one of {MODES}, got {self.mode!r}")


def solve_naive(instance: QuboInstance, *, max_n: int = NAIVE_MAX_DIM) -> Solution:
    """Minimize by evaluating every vector in ascending integer order.

    Refuses n above ``max_n`` by default: this is the O(2^n * n^2) oracle,
    not the workhorse.  Raise the guard explicitly if you really mean it.
    """
    if instance.n > max_n:
        raise DimensionCapError(
            f"n={instance.n} exceeds the naive-solver guard {max_n}; "
            f"use the incremental solver, or raise max_n to force it"
        )
    t0 = time.perf_counter()
    x_min, _v, steps = _kernels.naive_scan(instance.coeffs)
    minimizer = x_min.astype(np.uint8)
    value = evaluate(instance, minimizer)
    elapsed = time.perf_counter() - t0
    return Solution(minimizer=minimizer, value=value, evaluations=int(steps), elapsed=elapsed)


def solve_incremental(instance: QuboInstance) -> Solution:
    """Minimize via the Gray-code scan with incremental value updates.

    Performs exactly 2**n - 1 delta updates, each reading one row of the
    split form.  The initial incumbent is the zero vector with value 0, so
    the all-zeros vector is never explicitly visited.
    """
    if instance.n > MAX_DIM:
        raise DimensionCapError(f"n={instance.n} exceeds cap {MAX_DIM}")
    t0 = time.perf_counter()
    form = split(instance)
    sol = _scan_subspace(instance, form, SubspaceSpec(m=0, suffix=0))
    elapsed = time.perf_counter() - t0
    return Solution(
        minimizer=sol.minimizer,
        value=sol.value,
        evaluations=sol.evaluations,
        elapsed=elapsed,
    )


def solve_subspace(instance: QuboInstance, sub: SubspaceSpec) -> Solution:
    """Minimize over the vectors whose high ``sub.m`` bits match ``sub.suffix``.

    The start vector (free bits zero, fixed suffix placed) is priced by one
    full evaluation; the remaining 2**(n-m) - 1 vectors use delta updates.
    Each delta row-sum still runs over all n positions, so interactions with
    the fixed bits are included.
    """
    t0 = time.perf_counter()
    form = split(instance)
    sol = _scan_subspace(instance, form, sub)
    elapsed = time.perf_counter() - t0
    return Solution(
        minimizer=sol.minimizer,
        value=sol.value,
        evaluations=sol.evaluations,
        elapsed=elapsed,
    )


def _scan_subspace(instance: QuboInstance, form: SplitForm, sub: SubspaceSpec) -> Solution:
    """Run the compiled Gray scan over one subspace of a pre-split instance."""
    x0 = sub.start_bits(instance.n).astype(np.float64)
    v0 = float(_kernels.eval_upper(instance.coeffs, x0))
    t0 = time.perf_counter()
    x_min, _v, steps = _kernels.gray_scan(
        instance.coeffs, form.qua, form.lin, x0, v0, instance.n - sub.m
    )
    elapsed = time.perf_counter() - t0
    minimizer = x_min.astype(np.uint8)
    value = evaluate(instance, minimizer)
    return Solution(minimizer=minimizer, value=value, evaluations=int(steps), elapsed=elapsed)


def combine_subspace_minima(solutions: Sequence[Solution]) -> Solution:
    """Min-reduce subspace solutions; ties keep the earliest entry.

    Callers pass solutions in ascending-suffix order, so a value tie
    resolves to the lowest suffix regardless of completion order.
    """
    if not solutions:
        raise ValueError("no subspace solutions to combine")
    best = solutions[0]
    for sol in solutions[1:]:
        if sol.value < best.value:
            best = sol
    return best


def default_fixed_bits(n: int, threads: int) -> int:
    """Default m = min(n - 1, ceil(log2(threads)))."""
    return min(n - 1, (threads - 1).bit_length())


def solve_parallel(instance: QuboInstance, config: SolveConfig | None = None) -> Solution:
    """Scan all 2**m subspaces on a thread pool and min-reduce.

    The result value and minimizer are independent of the thread count and
    of subspace completion order; a worker failure propagates and discards
    partial results.  The scan kernels release the GIL, so worker threads
    run truly concurrently.
    """
    if config is None:
        config = SolveConfig()
    if instance.n < 2:
        raise ValueError("parallel solving needs n >= 2")
    if instance.n > MAX_DIM:
        raise DimensionCapError(f"n={instance.n} exceeds cap {MAX_DIM}")
    m = config.fixed_bits
    if m is None:
        m = default_fixed_bits(instance.n, config.threads)
    if not 0 <= m < instance.n:
        raise ValueError(f"fixed_bits must be in [0, {instance.n}), got {m}")

    t0 = time.perf_counter()
    form = split(instance)
    specs = [SubspaceSpec(m=m, suffix=s) for s in range(1 << m)]
    if config.threads == 1 or len(specs) == 1:
        results = [_scan_subspace(instance, form, sub) for sub in specs]
    else:
        with ThreadPoolExecutor(max_workers=config.threads) as pool:
            futures = [pool.submit(_scan_subspace, instance, form, sub) for sub in specs]
            results = [f.result() for f in futures]
    best = combine_subspace_minima(results)
    elapsed = time.perf_counter() - t0
    return Solution(
        minimizer=best.minimizer,
        value=best.value,
        evaluations=sum(sol.evaluations for sol in results),
        elapsed=elapsed,
    )


def solve(instance: QuboInstance, config: SolveConfig | None = None) -> Solution:
    """Dispatch to the solver selected by ``config.mode``."""
    if config is None:
        config = SolveConfig()
    if config.mode == "naive":
        return solve_naive(instance)
    if config.mode == "incremental":
        return solve_incremental(instance)
    return solve_parallel(instance, config)
