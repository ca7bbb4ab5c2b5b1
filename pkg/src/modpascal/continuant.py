"""Binary run lengths and continuants: the fast route to the diagonal sums.

The run lengths of a binary string are the lengths of its maximal blocks
of equal symbols, e.g. 111000011111 -> (3, 4, 5).  For an integer n >= 1
the run lengths of its binary expansion are read most-significant-first,
so they alternate 1-run, 0-run, 1-run, ... starting with a 1-run; n = 0
maps to the empty sequence.

The continuant K(m_0, ..., m_k) of a sequence of positive integers is
the numerator of the continued fraction [m_0; m_1, ..., m_k].  It obeys

    K() = 1,  K(m_0) = m_0,
    K(m_0..m_j) = m_j * K(m_0..m_{j-1}) + K(m_0..m_{j-2}),

and is invariant under reversing the sequence.

The diagonal sum d(n) of the mod-2 triangle (A114214) equals the
continuant of the run lengths of n, which turns an O(n) sum over a
triangle diagonal into O(log n) big-int operations.  The empty-sequence
convention K() = 1 makes this hold at n = 0 as well, where the diagonal
is the single entry T(0, 0) = 1.
"""

import re
from collections.abc import Iterable

__all__ = ["continuant", "diagonal_sum_fast", "run_lengths", "runs_to_int"]

_RUN = re.compile(r"1+|0+")


def run_lengths(n: int) -> tuple[int, ...]:
    """Run lengths of the binary expansion of n, most significant first."""
    if n < 0:
        raise ValueError(f"n must be >= 0, got {n}")
    if n == 0:
        return ()
    return tuple(m.end() - m.start() for m in _RUN.finditer(bin(n)[2:]))


def runs_to_int(runs: Iterable[int]) -> int:
    """Rebuild the integer whose binary run lengths are `runs`.

    Inverse of run_lengths: blocks alternate 1s, 0s, 1s, ... starting
    with 1s; the empty sequence gives 0.
    """
    bits = []
    symbol = "1"
    for length in runs:
        if length < 1:
            raise ValueError(f"run lengths must be >= 1, got {length}")
        bits.append(symbol * length)
        symbol = "0" if symbol == "1" else "1"
    if not bits:
        return 0
    return int("".join(bits), 2)


def continuant(m: Iterable[int]) -> int:
    """Continuant K(m_0, ..., m_k) of a sequence of positive integers.

    Evaluated with the two-term linear recurrence (two rolling big-int
    accumulators); denominators of the underlying continued fraction are
    never formed.  O(k) big-int operations.
    """
    p, q = 1, 0  # K of the terms consumed so far, and of one term fewer
    for term in m:
        if term < 1:
            raise ValueError(f"continuant terms must be >= 1, got {term}")
        p, q = term * p + q, p
    return p


def diagonal_sum_fast(n: int) -> int:
    """d(n) as the continuant of the run lengths of n; O(log n)."""
    return continuant(run_lengths(n))
