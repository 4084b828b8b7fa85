"""Pure-Python versions of the hot kernels.

These define the reference behaviour; ``_kernels.pyx`` must agree with them
exactly on every input.
"""

from __future__ import annotations

from itertools import permutations, product
from typing import Iterator, List, Sequence, Tuple


class BudgetExceeded(RuntimeError):
    """Raised when lattice point enumeration visits more nodes than allowed."""


def _rest_max(A: Sequence[Sequence[int]], lo: Sequence[int], hi: Sequence[int]) -> List[List[int]]:
    # rest[m][j]: max over the box of sum_{i > m} A[j][i] * y[i]
    d = len(lo)
    rest = [[0] * len(A) for _ in range(d)]
    for m in range(d - 2, -1, -1):
        i = m + 1
        rest[m] = [
            r + max(a[i] * lo[i], a[i] * hi[i]) for r, a in zip(rest[m + 1], A)
        ]
    return rest


def _bounds(A, partial, rest_m, m, lo_m, hi_m):
    lo_b, hi_b = lo_m, hi_m
    for a_row, p, r in zip(A, partial, rest_m):
        a = a_row[m]
        s = p + r  # need a * y_m + s >= 0
        if a > 0:
            t = -(s // a)  # ceil(-s / a)
            if t > lo_b:
                lo_b = t
        elif a < 0:
            t = s // (-a)
            if t < hi_b:
                hi_b = t
        elif s < 0:
            return 1, 0
    return lo_b, hi_b


def count_points(
    A: Sequence[Sequence[int]],
    b: Sequence[int],
    lo: Sequence[int],
    hi: Sequence[int],
    budget: int,
) -> Tuple[int, int]:
    """Count integer ``y`` in the box ``[lo, hi]`` with ``A @ y + b >= 0``.

    Returns ``(count, visited)`` where ``visited`` is the number of search
    nodes expanded.  The last coordinate is counted by interval length.
    """
    d = len(lo)
    rest = _rest_max(A, lo, hi)
    visited = 0
    count = 0

    def rec(m: int, partial: List[int]) -> None:
        nonlocal visited, count
        visited += 1
        if visited > budget:
            raise BudgetExceeded(f"enumeration exceeded budget of {budget} nodes")
        lo_b, hi_b = _bounds(A, partial, rest[m], m, lo[m], hi[m])
        if lo_b > hi_b:
            return
        if m == d - 1:
            count += hi_b - lo_b + 1
            return
        col = [a[m] for a in A]
        for y in range(lo_b, hi_b + 1):
            rec(m + 1, [p + c * y for p, c in zip(partial, col)])

    rec(0, list(b))
    return count, visited


def iter_points(
    A: Sequence[Sequence[int]],
    b: Sequence[int],
    lo: Sequence[int],
    hi: Sequence[int],
) -> Iterator[Tuple[int, ...]]:
    """Yield the points counted by :func:`count_points`, in lex order."""
    d = len(lo)
    rest = _rest_max(A, lo, hi)

    def rec(m: int, partial: List[int], prefix: Tuple[int, ...]):
        lo_b, hi_b = _bounds(A, partial, rest[m], m, lo[m], hi[m])
        col = [a[m] for a in A]
        for y in range(lo_b, hi_b + 1):
            if m == d - 1:
                yield prefix + (y,)
            else:
                yield from rec(m + 1, [p + c * y for p, c in zip(partial, col)], prefix + (y,))

    yield from rec(0, list(b), ())


def lexmin_permutation(
    rows: Sequence[Sequence[int]],
    base: int,
    blocks: Sequence[Sequence[int]],
) -> Tuple[List[int], List[int]]:
    """Search column orders for the lexicographically least sorted row list.

    ``blocks`` partitions the column indices; output position ``p`` may only
    draw from the block covering ``p`` in concatenation order.  Rows are
    compared as big-endian base-``base`` integers.  Returns ``(keys, order)``
    where ``order[p]`` is the source column placed at position ``p``.
    """
    n = sum(len(bl) for bl in blocks)
    cols = [[row[c] for row in rows] for c in range(n)]
    weights = [base ** (n - 1 - p) for p in range(n)]
    best_keys = None
    best_order: List[int] = []
    for choice in product(*(permutations(sorted(bl)) for bl in blocks)):
        order = [c for part in choice for c in part]
        keys = [0] * len(rows)
        for w, c in zip(weights, order):
            keys = [k + v * w for k, v in zip(keys, cols[c])]
        keys.sort()
        if best_keys is None or keys < best_keys:
            best_keys, best_order = keys, order
    return best_keys or [], best_order
