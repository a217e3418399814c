"""Gray-code flip sequence and explicit ordering.

Counting up in plain binary flips many bits at once across Hamming cliffs
(e.g. 7 -> 8 flips four).  The Gray ordering visits every n-bit vector while
flipping exactly one bit per step; the sequence of flipped positions is
0,1,0,2,0,1,0,3,... whose k-th term is the number of trailing zeros of k.
"""

from __future__ import annotations

from typing import Iterator

from .core import MAX_DIM

# gray_permutation materializes the full ordering, so its width is capped
# much lower than the streaming flip sequence.
MAX_PERMUTATION_BITS = 20


def ctz(k: int) -> int:
    """Count of trailing zero bits of ``k`` (k >= 1).

    Equivalent formulations, both exercised by the test suite:
    ``popcount(k ^ (k-1)) - 1`` and ``floor(log2(k ^ (k-1)))``.
    """
    if k < 1:
        raise ValueError("ctz is undefined for k < 1 here")
    return (k & -k).bit_length() - 1


def flip_sequence(n: int) -> Iterator[int]:
    """Return a stream of the 2**n - 1 bit positions that Gray-traverse {0,1}^n.

    Applying the flips to the all-zeros vector visits every element of
    {0,1}^n exactly once.  Term k of the stream (counting from 1) is ctz(k).
    Validates eagerly; the returned iterator owns its counter state.
    """
    if not 1 <= n <= MAX_DIM:
        raise ValueError(f"bit width must be in [1, {MAX_DIM}], got {n}")
    return (ctz(k) for k in range(1, 1 << n))


def gray_permutation(k_bits: int) -> list[int]:
    """Full Gray ordering of [0, 2**k_bits) as integers.

    Built by the literal reflect-and-prefix recursion: the next width keeps
    the previous sequence (prefix bit 0), then appends it reversed with the
    new high bit set (prefix bit 1).  Base case for one bit is (0, 1).
    Intended as a test oracle; memory is O(2**k_bits), hence the low cap.
    """
    if not 1 <= k_bits <= MAX_PERMUTATION_BITS:
        raise ValueError(f"width must be in [1, {MAX_PERMUTATION_BITS}], got {k_bits}")
    seq = [0, 1]
    for width in range(2, k_bits + 1):
        high = 1 << (width - 1)
        seq = seq + [high + v for v in reversed(seq)]
    return seq
