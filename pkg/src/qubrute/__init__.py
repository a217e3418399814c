"""Exact QUBO solving by Gray-code ordered brute force.

The incremental solver traverses {0,1}^n in Gray order so each step flips a
single bit and updates the objective in O(n) instead of re-evaluating the
full O(n^2) sum; the parallel solver fixes the high bits to split the search
into independent subspaces.
"""

from .core import (
    MAX_DIM,
    BitVector,
    DimensionCapError,
    QuboInstance,
    SplitForm,
    bits_from_int,
    bits_to_int,
    delta,
    evaluate,
    split,
)
from .graycode import ctz, flip_sequence, gray_permutation
from .instances import (
    ParseError,
    SplitMix64,
    bench_seed,
    load_instance,
    parse_instance,
    random_instance,
    save_instance,
    serialize_instance,
)
from .solver import (
    NAIVE_MAX_DIM,
    SolveConfig,
    Solution,
    SubspaceSpec,
    combine_subspace_minima,
    default_fixed_bits,
    solve,
    solve_incremental,
    solve_naive,
    solve_parallel,
    solve_subspace,
)

__version__ = "0.1.0"

__all__ = [
    "MAX_DIM",
    "NAIVE_MAX_DIM",
    "BitVector",
    "DimensionCapError",
    "ParseError",
    "QuboInstance",
    "SolveConfig",
    "Solution",
    "SplitForm",
    "SplitMix64",
    "SubspaceSpec",
    "bench_seed",
    "bits_from_int",
    "bits_to_int",
    "combine_subspace_minima",
    "ctz",
    "default_fixed_bits",
    "delta",
    "evaluate",
    "flip_sequence",
    "gray_permutation",
    "load_instance",
    "parse_instance",
    "random_instance",
    "save_instance",
    "serialize_instance",
    "solve",
    "solve_incremental",
    "solve_naive",
    "solve_parallel",
    "solve_subspace",
    "split",
]
