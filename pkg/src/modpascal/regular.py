"""The diagonal sums as a 2-regular sequence: scalar recurrences and a
matrix linear representation.

d(n) satisfies four identities that close the sequence under the maps
n -> 2n and n -> 2n+1:

    d(2n+1) = d(2n)
    d(4n+2) = 3 d(2n) -   d(4n)
    d(8n)   =  -d(2n) + 2 d(4n)
    d(8n+4) = 4 d(2n) -   d(4n)

Two evaluators are built from them.  diagonal_sum_recurrence applies the
identities directly with a memo table, bottoming out at base values
d(0), d(2), d(4) taken from the continuant route.  The linear
representation packs the same four identities into 2x2 integer matrices
acting on the state vector v(n) = (d(2n), d(4n)):

    v(2n)   = M0 v(n),  M0 = [[ 0,  1], [-1,  2]]   (rows: d(4n), d(8n))
    v(2n+1) = M1 v(n),  M1 = [[ 3, -1], [ 4, -1]]   (rows: d(4n+2), d(8n+4))

with v(0) = (1, 1).  Coefficients are signed (the identities subtract),
so everything stays in plain signed Python ints; the readout is still
positive for every n.  Reading out d(n) uses d(n) = d(2*floor(n/2)) --
immediate for even n and exactly the first identity for odd n -- so
d(n) is component 0 of v(floor(n/2)), reached with one matrix product
per bit of n.

The module-level memo table is only ever extended with values that are
functions of the index, so concurrent reads and duplicate writes from
several threads are harmless; the matrix evaluators are pure.
"""

from dataclasses import dataclass

from .continuant import diagonal_sum_fast

__all__ = [
    "LinearRep",
    "derive_linear_rep",
    "diagonal_sum_recurrence",
    "linear_rep_eval",
    "linear_rep_state",
]

# Base values for the scalar recurrence, taken from the continuant route.
_BASE_INDICES = (0, 2, 4)
_memo: dict[int, int] = {n: diagonal_sum_fast(n) for n in _BASE_INDICES}


def _dependencies(m):
    """Indices whose d-values the identity for index m consumes."""
    if m % 2 == 1:
        return (m - 1,)
    if m % 4 == 2:
        return ((m - 2) // 2, m - 2)
    if m % 8 == 0:
        return (m // 4, m // 2)
    return ((m - 4) // 4, (m - 4) // 2)  # m % 8 == 4


def _combine(m, memo):
    if m % 2 == 1:
        return memo[m - 1]
    if m % 4 == 2:
        return 3 * memo[(m - 2) // 2] - memo[m - 2]
    if m % 8 == 0:
        return -memo[m // 4] + 2 * memo[m // 2]
    return 4 * memo[(m - 4) // 4] - memo[(m - 4) // 2]


def diagonal_sum_recurrence(n: int) -> int:
    """d(n) from the four scalar identities plus the three base values.

    Memoized; the recursion is run on an explicit stack so arbitrarily
    large n cannot hit the interpreter recursion limit.
    """
    if n < 0:
        raise ValueError(f"n must be >= 0, got {n}")
    memo = _memo
    stack = [n]
    while stack:
        m = stack[-1]
        if m in memo:
            stack.pop()
            continue
        deps = _dependencies(m)
        if any(dep >= m for dep in deps):
            # every identity must strictly reduce the index down to a base
            raise RuntimeError(
                f"recurrence cannot make progress at index {m}; "
                f"base-case set {sorted(_BASE_INDICES)} does not cover it"
            )
        missing = [dep for dep in deps if dep not in memo]
        if missing:
            stack.extend(missing)
            continue
        value = _combine(m, memo)
        if value < 0:
            raise RuntimeError(
                f"recurrence produced negative value {value} at index {m}"
            )
        memo[m] = value
        stack.pop()
    return memo[n]


@dataclass(frozen=True)
class LinearRep:
    """2x2 integer linear representation of the diagonal sums.

    State vector at n is (d(2n), d(4n)); m0/m1 append a 0/1 bit to n;
    readout names the component of the state at floor(n/2) that equals
    d(n).
    """

    v0: tuple[int, int]
    m0: tuple[tuple[int, int], tuple[int, int]]
    m1: tuple[tuple[int, int], tuple[int, int]]
    readout: int


def _apply(mat, vec):
    return (
        mat[0][0] * vec[0] + mat[0][1] * vec[1],
        mat[1][0] * vec[0] + mat[1][1] * vec[1],
    )


def derive_linear_rep(validate_to: int = 256) -> LinearRep:
    """Build the matrix representation and check it against the
    continuant route on 0..validate_to before handing it out."""
    rep = LinearRep(
        v0=(1, 1),
        m0=((0, 1), (-1, 2)),
        m1=((3, -1), (4, -1)),
        readout=0,
    )
    for n in range(validate_to + 1):
        got = linear_rep_eval(rep, n)
        want = diagonal_sum_fast(n)
        if got != want:
            raise RuntimeError(
                f"linear representation disagrees with the continuant route "
                f"at n={n}: {got} != {want}"
            )
    return rep


def linear_rep_state(rep: LinearRep, n: int) -> tuple[int, int]:
    """State vector (d(2n), d(4n)), one matrix product per bit of n."""
    if n < 0:
        raise ValueError(f"n must be >= 0, got {n}")
    w = rep.v0
    if n:
        for ch in bin(n)[2:]:
            w = _apply(rep.m1 if ch == "1" else rep.m0, w)
    return w


def linear_rep_eval(rep: LinearRep, n: int) -> int:
    """d(n) read out of the state at floor(n/2)."""
    if n < 0:
        raise ValueError(f"n must be >= 0, got {n}")
    return linear_rep_state(rep, n >> 1)[rep.readout]
