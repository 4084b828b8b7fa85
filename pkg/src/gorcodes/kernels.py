"""Kernel dispatch: the compiled extension if importable, else pure Python.

Set ``GORCODES_PURE=1`` to force the fallback.  ``BACKEND`` names the active
implementation.
"""

from __future__ import annotations

import os
from typing import List, Sequence, Tuple

from gorcodes import _fallback
from gorcodes._fallback import BudgetExceeded, iter_points

_INT64_LIMIT = 2**62

try:
    if os.environ.get("GORCODES_PURE"):
        raise ImportError("pure-Python kernels requested")
    from gorcodes import _kernels as _compiled
    BACKEND = "compiled"
except ImportError:
    _compiled = None
    BACKEND = "python"

__all__ = ["BACKEND", "BudgetExceeded", "count_points", "iter_points", "lexmin_permutation"]


def count_points(
    A: Sequence[Sequence[int]],
    b: Sequence[int],
    lo: Sequence[int],
    hi: Sequence[int],
    budget: int,
) -> Tuple[int, int]:
    if _compiled is not None and _fits_int64(A, b, lo, hi):
        return _compiled.count_points(A, b, lo, hi, budget)
    return _fallback.count_points(A, b, lo, hi, budget)


def lexmin_permutation(
    rows: Sequence[Sequence[int]],
    base: int,
    blocks: Sequence[Sequence[int]],
) -> Tuple[List[int], List[int]]:
    n = sum(len(bl) for bl in blocks)
    if _compiled is not None and base**n < _INT64_LIMIT:
        return _compiled.lexmin_permutation(rows, base, blocks)
    return _fallback.lexmin_permutation(rows, base, blocks)


def _fits_int64(A, b, lo, hi) -> bool:
    # crude bound on any partial sum the search can form
    span = max(max(abs(v) for v in lo), max(abs(v) for v in hi), 1)
    worst = max(sum(abs(a) for a in row) for row in A) * span + max(abs(v) for v in b)
    return worst < _INT64_LIMIT
