"""Exact and mod-2 arithmetic for the modified Pascal triangle A119326.

The triangle, introduced by Paul Barry in the OEIS, is defined for
0 <= k <= n by

    T(n, k) = sum of C(k, j) * C(n - k, j) over even j,

with C(a, b) = 0 whenever b > a.  Reducing mod 2 gives the 0/1 triangle
A114213, whose row sums r(n) form A114212 and whose diagonal sums d(n)
form A114214.

The parity of T(n, k) never requires the defining sum: it collapses to
the parity of a single ordinary binomial coefficient (C(n, k) when n + k
is even, C(n - 1, k) otherwise), and binomial parity itself is a bitwise
subset test by Lucas' congruence.  That reduction is what makes the
parity row sums and diagonal sums tractable at large n; this module
keeps both routes so they can be checked against each other.

Everything here is a pure function of its arguments (no shared state),
safe to call from any number of threads.  Values are plain Python ints,
which are arbitrary precision; T(n, k) grows roughly like 3^n along the
middle of a row, so fixed-width types are not an option.
"""

from dataclasses import dataclass
from math import isqrt

__all__ = [
    "TriangleRow",
    "binom_parity",
    "diagonal_sum_brute",
    "digit_and",
    "iter_triangle_terms",
    "row_sum_brute",
    "row_sum_closed",
    "triangle_entry",
    "triangle_entry_parity",
    "triangle_row",
    "triangle_row_parity",
]


def _require_nonneg(name, value):
    if value < 0:
        raise ValueError(f"{name} must be >= 0, got {value}")


def _require_pair(n, k):
    _require_nonneg("n", n)
    _require_nonneg("k", k)
    if k > n:
        raise ValueError(f"k must be <= n, got k={k}, n={n}")


@dataclass(frozen=True)
class TriangleRow:
    """One row of the triangle: entries[k] = T(n, k), exact or mod 2."""

    n: int
    entries: tuple[int, ...]
    mode: str  # "exact" | "parity"

    def __post_init__(self):
        if self.mode not in ("exact", "parity"):
            raise ValueError(f"mode must be 'exact' or 'parity', got {self.mode!r}")
        if len(self.entries) != self.n + 1:
            raise ValueError(
                f"row {self.n} must have {self.n + 1} entries, got {len(self.entries)}"
            )


def triangle_entry(n: int, k: int) -> int:
    """Exact T(n, k) by the defining sum over even j.

    The two binomials are carried along the sum with the multiplicative
    one-step recurrence C(a, j) = C(a, j-1) * (a - j + 1) / j (the
    division is always exact), so no factorials are ever formed.  Cost
    is O(min(k, n - k)) big-int multiplications.
    """
    _require_pair(n, k)
    a, b = k, n - k
    c1 = c2 = 1  # C(a, j) and C(b, j), starting at j = 0
    total = 1
    for j in range(1, min(a, b) + 1):
        c1 = c1 * (a - j + 1) // j
        c2 = c2 * (b - j + 1) // j
        if j % 2 == 0:
            total += c1 * c2
    return total


def binom_parity(n: int, k: int) -> int:
    """C(n, k) mod 2 as a bitwise subset test (Lucas' congruence).

    C(n, k) is odd exactly when every binary digit of k is at most the
    corresponding digit of n.  k > n is allowed and gives 0, matching
    C(n, k) = 0.
    """
    if n < 0 or k < 0:
        raise ValueError(f"n and k must be >= 0, got n={n}, k={k}")
    return 1 if n & k == k else 0


def digit_and(n: int, k: int) -> int:
    """Digitwise minimum of two binary expansions, i.e. bitwise AND."""
    if n < 0 or k < 0:
        raise ValueError(f"n and k must be >= 0, got n={n}, k={k}")
    return n & k


def triangle_entry_parity(n: int, k: int) -> int:
    """T(n, k) mod 2 without evaluating the defining sum.

    The even-j sum reduces to a single binomial parity: C(n, k) when
    n + k is even, C(n - 1, k) otherwise.
    """
    _require_pair(n, k)
    if (n + k) % 2 == 0:
        return binom_parity(n, k)
    return binom_parity(n - 1, k)


def triangle_row(n: int) -> TriangleRow:
    """Exact row n, computed entry by entry from the defining sum."""
    _require_nonneg("n", n)
    return TriangleRow(n, tuple(triangle_entry(n, k) for k in range(n + 1)), "exact")


def triangle_row_parity(n: int) -> TriangleRow:
    """Mod-2 row n via the binomial-parity reduction."""
    _require_nonneg("n", n)
    return TriangleRow(
        n, tuple(triangle_entry_parity(n, k) for k in range(n + 1)), "parity"
    )


def row_sum_brute(n: int) -> int:
    """r(n) summed entry by entry across the parity row; O(n)."""
    _require_nonneg("n", n)
    return sum(triangle_entry_parity(n, k) for k in range(n + 1))


def row_sum_closed(n: int) -> int:
    """r(n) in closed form from the binary digit sum; O(log n).

    r(n) = 2^s2(n) for odd n and 2^s2(n) + 2^s2(n-2) for even n >= 2,
    where s2 is the binary popcount.  The even branch has no meaning at
    n = 0; there the row is the single entry T(0, 0) = 1.
    """
    _require_nonneg("n", n)
    if n == 0:
        return 1
    if n % 2 == 1:
        return 1 << n.bit_count()
    return (1 << n.bit_count()) + (1 << (n - 2).bit_count())


def diagonal_sum_brute(n: int) -> int:
    """d(n) summed along the diagonal of the parity triangle; O(n).

    This is the slow reference route for the diagonal sums; the
    continuant and matrix-recurrence routes must agree with it.
    """
    _require_nonneg("n", n)
    return sum(triangle_entry_parity(n - k, k) for k in range(n // 2 + 1))


def iter_triangle_terms(start: int, stop: int, mode: str = "exact"):
    """Yield triangle entries read by rows, for linear indices in
    range(start, stop).

    Index 0 is T(0, 0); row n occupies indices n(n+1)/2 .. n(n+1)/2 + n.
    Rows are generated one at a time (memory stays O(row length)).
    """
    _require_nonneg("start", start)
    if stop < start:
        raise ValueError(f"stop must be >= start, got start={start}, stop={stop}")
    if mode not in ("exact", "parity"):
        raise ValueError(f"mode must be 'exact' or 'parity', got {mode!r}")
    row_fn = triangle_row if mode == "exact" else triangle_row_parity
    # locate the row containing `start`: largest n with n(n+1)/2 <= start
    n = (isqrt(8 * start + 1) - 1) // 2
    while n * (n + 1) // 2 > start:
        n -= 1
    pos = n * (n + 1) // 2
    idx = start
    while idx < stop:
        entries = row_fn(n).entries
        for k in range(idx - pos, n + 1):
            yield entries[k]
            idx += 1
            if idx >= stop:
                return
        pos += n + 1
        n += 1
