"""Instance text format and seeded random generation.

File format (line-oriented UTF-8, human-diffable):

    # anything after '#' is a comment; blank lines are ignored
    n 3
    0 0 -1
    0 2 0.5
    1 2 -0.25

The header ``n <N>`` comes first; each body line is ``<i> <j> <value>`` with
0-based indices into the coefficient matrix.  Entries with i > j are folded
into the upper triangle (strict mode rejects them); repeating the same
ordered pair (i, j) is an error.  Values are serialized in shortest
round-trip decimal form, so serialize -> parse preserves every coefficient
bit-exactly.

Random generation uses splitmix64, a fixed and portable PRNG, rather than
any platform default, so identical seeds produce byte-identical instances
everywhere.  State update and output mix (all arithmetic mod 2**64):

    state += 0x9E3779B97F4A7C15
    z = state
    z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9
    z = (z ^ (z >> 27)) * 0x94D049BB133111EB
    output = z ^ (z >> 31)

Reference outputs for seed 1234567: 6457827717110365317,
3203168211198807973, 9817491932198370423.
"""

from __future__ import annotations

import math

import numpy as np

from .core import MAX_DIM, DimensionCapError, QuboInstance

_MASK64 = (1 << 64) - 1
_GOLDEN = 0x9E3779B97F4A7C15


class ParseError(ValueError):
    """Malformed instance text; carries the offending line number."""

    def __init__(self, lineno: int, message: str) -> None:
        super().__init__(f"line {lineno}: {message}")
        self.lineno = lineno


def _mix64(z: int) -> int:
    z = ((z ^ (z >> 30)) * 0xBF58476D1CE4E5B9) & _MASK64
    z = ((z ^ (z >> 27)) * 0x94D049BB133111EB) & _MASK64
    return z ^ (z >> 31)


class SplitMix64:
    """The splitmix64 generator; see the module docstring for the equations."""

    def __init__(self, seed: int) -> None:
        self._state = seed & _MASK64

    def next_u64(self) -> int:
        self._state = (self._state + _GOLDEN) & _MASK64
        return _mix64(self._state)

    def next_unit(self) -> float:
        """Uniform double in [0, 1) from the top 53 bits."""
        return (self.next_u64() >> 11) * 2.0**-53

    def next_symmetric(self) -> float:
        """Uniform double in [-1, 1)."""
        return 2.0 * self.next_unit() - 1.0


def bench_seed(n: int, rep: int) -> int:
    """Deterministic seed for benchmark repetition ``rep`` at dimension ``n``.

    Defined as the splitmix64 output mix applied to (n << 32) | rep, so
    every mode of a benchmark run solves identical instances.
    """
    return _mix64(((n & 0xFFFFFFFF) << 32) | (rep & 0xFFFFFFFF))


def random_instance(n: int, seed: int, density: float = 1.0) -> QuboInstance:
    """Seeded random instance; deterministic per (n, seed, density).

    Upper-triangular entries are drawn i.i.d. uniform on [-1, 1] in
    row-major order; each is kept with probability ``density``.  Two PRNG
    draws are consumed per cell (keep test, then value) regardless of
    density, so the value stream does not shift when density changes.
    """
    if n < 1:
        raise ValueError(f"dimension must be >= 1, got {n}")
    if n > MAX_DIM:
        raise DimensionCapError(f"dimension {n} exceeds cap {MAX_DIM}")
    if not 0.0 < density <= 1.0:
        raise ValueError(f"density must be in (0, 1], got {density}")
    rng = SplitMix64(seed)
    coeffs = np.zeros((n, n))
    for i in range(n):
        for j in range(i, n):
            keep = rng.next_unit()
            value = rng.next_symmetric()
            if keep < density:
                coeffs[i, j] = value
    return QuboInstance(coeffs)


def _format_value(v: float) -> str:
    # Shortest decimal string that round-trips to the exact float64.
    return np.format_float_positional(float(v), unique=True, trim="-")


def serialize_instance(instance: QuboInstance) -> str:
    """Render to text: header, then nonzero upper-triangle entries, ascending (i, j)."""
    lines = [f"n {instance.n}"]
    for i in range(instance.n):
        for j in range(i, instance.n):
            v = instance.coeffs[i, j]
            if v != 0.0:
                lines.append(f"{i} {j} {_format_value(v)}")
    return "\n".join(lines) + "\n"


def parse_instance(text: str, *, strict: bool = False) -> QuboInstance:
    """Parse instance text; raises :class:`ParseError` with a line number."""
    n: int | None = None
    mat: np.ndarray | None = None
    seen: set[tuple[int, int]] = set()
    lineno = 0
    for lineno, raw in enumerate(text.splitlines(), start=1):
        line = raw.split("#", 1)[0].strip()
        if not line:
            continue
        tokens = line.split()
        if n is None:
            if tokens[0] != "n" or len(tokens) != 2:
                raise ParseError(lineno, "expected header 'n <dimension>'")
            try:
                n = int(tokens[1])
            except ValueError:
                raise ParseError(lineno, f"invalid dimension {tokens[1]!r}") from None
            if n < 1:
                raise ParseError(lineno, f"dimension must be >= 1, got {n}")
            if n > MAX_DIM:
                raise DimensionCapError(f"line {lineno}: dimension {n} exceeds cap {MAX_DIM}")
            mat = np.zeros((n, n))
            continue
        if len(tokens) != 3:
            raise ParseError(lineno, "expected entry '<i> <j> <value>'")
        try:
            i, j = int(tokens[0]), int(tokens[1])
        except ValueError:
            raise ParseError(lineno, f"invalid index pair {tokens[0]!r} {tokens[1]!r}") from None
        try:
            value = float(tokens[2])
        except ValueError:
            raise ParseError(lineno, f"invalid value {tokens[2]!r}") from None
        if not (0 <= i < n and 0 <= j < n):
            raise ParseError(lineno, f"index ({i}, {j}) out of range for n={n}")
        if not math.isfinite(value):
            raise ParseError(lineno, f"non-finite value {tokens[2]!r}")
        if strict and i > j:
            raise ParseError(lineno, f"entry ({i}, {j}) below the diagonal (strict mode)")
        if (i, j) in seen:
            raise ParseError(lineno, f"duplicate entry ({i}, {j})")
        seen.add((i, j))
        assert mat is not None
        mat[i, j] = value
    if n is None:
        raise ParseError(max(lineno, 1), "missing header 'n <dimension>'")
    return QuboInstance(mat, strict=strict)


def load_instance(path: str, *, strict: bool = False) -> QuboInstance:
    """Read and parse an instance file."""
    with open(path, "r", encoding="utf-8") as fh:
        return parse_instance(fh.read(), strict=strict)


def save_instance(instance: QuboInstance, path: str) -> None:
    """Serialize ``instance`` to a file."""
    with open(path, "w", encoding="utf-8") as fh:
        fh.write(serialize_instance(instance))
