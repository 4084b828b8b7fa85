"""Exact integer and rational linear algebra on nested lists of Python ints.

Matrices are plain ``list[list[int]]`` (row-major).  Everything here is exact;
no floating point is ever involved.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import List, Sequence, Tuple

IntMatrix = List[List[int]]


class DimensionError(ValueError):
    """Raised when matrix shapes are incompatible with the operation."""


def as_matrix(rows: Sequence[Sequence[int]]) -> IntMatrix:
    """Copy ``rows`` into a fresh integer matrix, checking it is rectangular."""
    A = [[int(a) for a in row] for row in rows]
    if not A or not A[0]:
        raise DimensionError("matrix must have at least one row and column")
    width = len(A[0])
    if any(len(row) != width for row in A):
        raise DimensionError("ragged matrix")
    return A


def identity(n: int) -> IntMatrix:
    return [[int(i == j) for j in range(n)] for i in range(n)]


def transpose(A: Sequence[Sequence[int]]) -> IntMatrix:
    return [list(col) for col in zip(*A)]


def matmul(A: Sequence[Sequence], B: Sequence[Sequence]) -> list:
    if len(A[0]) != len(B):
        raise DimensionError(f"cannot multiply {len(A)}x{len(A[0])} by {len(B)}x{len(B[0])}")
    Bt = list(zip(*B))
    return [[sum(a * b for a, b in zip(row, col)) for col in Bt] for row in A]


def vecmat(x: Sequence, A: Sequence[Sequence]) -> list:
    """Row vector times matrix."""
    if len(x) != len(A):
        raise DimensionError("vector length does not match matrix rows")
    return [sum(xi * A[i][j] for i, xi in enumerate(x)) for j in range(len(A[0]))]


def _require_square(A: Sequence[Sequence[int]]) -> int:
    n = len(A)
    if n == 0 or any(len(row) != n for row in A):
        raise DimensionError("matrix is not square")
    return n


def determinant(A: Sequence[Sequence[int]]) -> int:
    """Determinant by Bareiss fraction-free elimination."""
    n = _require_square(A)
    M = [list(row) for row in A]
    sign = 1
    prev = 1
    for k in range(n - 1):
        if M[k][k] == 0:
            for i in range(k + 1, n):
                if M[i][k] != 0:
                    M[k], M[i] = M[i], M[k]
                    sign = -sign
                    break
            else:
                return 0
        pivot = M[k][k]
        for i in range(k + 1, n):
            for j in range(k + 1, n):
                M[i][j] = (M[i][j] * pivot - M[i][k] * M[k][j]) // prev
        prev = pivot
    return sign * M[n - 1][n - 1]


def adjugate(A: Sequence[Sequence[int]]) -> IntMatrix:
    """Classical adjoint, so that ``A @ adj(A) == det(A) * I``."""
    n = _require_square(A)
    if n == 1:
        return [[1]]
    adj = [[0] * n for _ in range(n)]
    for i in range(n):
        for j in range(n):
            minor = [row[:j] + row[j + 1:] for k, row in enumerate(A) if k != i]
            adj[j][i] = (-1) ** (i + j) * determinant(minor)
    return adj


def inverse(A: Sequence[Sequence[int]]) -> List[List[Fraction]]:
    """Exact rational inverse.  Raises ``ZeroDivisionError`` if singular."""
    det = determinant(A)
    if det == 0:
        raise ZeroDivisionError("singular matrix")
    return [[Fraction(a, det) for a in row] for row in adjugate(A)]


def solve_left(b: Sequence, A: Sequence[Sequence[int]]) -> List[Fraction]:
    """Solve ``x @ A == b`` exactly for the row vector ``x``."""
    return vecmat([Fraction(v) for v in b], inverse(A))


@dataclass(frozen=True)
class SmithDecomposition:
    """``U @ A @ V == S`` with ``S`` diagonal, d1 | d2 | ..., all >= 0."""

    S: IntMatrix
    U: IntMatrix
    V: IntMatrix

    @property
    def diagonal(self) -> List[int]:
        return [self.S[i][i] for i in range(min(len(self.S), len(self.S[0])))]


def _row_op(M: IntMatrix, dst: int, src: int, q: int) -> None:
    if q:
        rs = M[src]
        M[dst] = [a - q * b for a, b in zip(M[dst], rs)]


def _col_op(M: IntMatrix, dst: int, src: int, q: int) -> None:
    if q:
        for row in M:
            row[dst] -= q * row[src]


def _swap_cols(M: IntMatrix, i: int, j: int) -> None:
    for row in M:
        row[i], row[j] = row[j], row[i]


def smith_normal_form(A: Sequence[Sequence[int]]) -> SmithDecomposition:
    """Smith normal form with unimodular transforms.

    The pivot at each stage is the nonzero entry of smallest absolute value in
    the remaining block, which keeps intermediate entries small.
    """
    S = as_matrix(A)
    m, n = len(S), len(S[0])
    U = identity(m)
    V = identity(n)

    for t in range(min(m, n)):
        while True:
            best = None
            for i in range(t, m):
                for j in range(t, n):
                    if S[i][j] and (best is None or abs(S[i][j]) < abs(S[best[0]][best[1]])):
                        best = (i, j)
            if best is None:
                return _check_smith(A, SmithDecomposition(S, U, V))
            i, j = best
            if i != t:
                S[t], S[i] = S[i], S[t]
                U[t], U[i] = U[i], U[t]
            if j != t:
                _swap_cols(S, t, j)
                _swap_cols(V, t, j)
            p = S[t][t]
            dirty = False
            for i in range(t + 1, m):
                q = S[i][t] // p
                _row_op(S, i, t, q)
                _row_op(U, i, t, q)
                dirty = dirty or S[i][t] != 0
            for j in range(t + 1, n):
                q = S[t][j] // p
                _col_op(S, j, t, q)
                _col_op(V, j, t, q)
                dirty = dirty or S[t][j] != 0
            if dirty:
                continue
            # divisibility: fold any entry not divisible by p into row t
            bad = next(
                (i for i in range(t + 1, m) for j in range(t + 1, n) if S[i][j] % p),
                None,
            )
            if bad is None:
                break
            _row_op(S, t, bad, -1)
            _row_op(U, t, bad, -1)
        if S[t][t] < 0:
            S[t] = [-a for a in S[t]]
            U[t] = [-a for a in U[t]]
    return _check_smith(A, SmithDecomposition(S, U, V))


def _check_smith(A: Sequence[Sequence[int]], sd: SmithDecomposition) -> SmithDecomposition:
    assert matmul(matmul(sd.U, [list(r) for r in A]), sd.V) == sd.S
    return sd


def hermite_normal_form(A: Sequence[Sequence[int]]) -> Tuple[IntMatrix, IntMatrix]:
    """Row-style Hermite normal form.

    Returns ``(H, U)`` with ``U`` unimodular and ``U @ A == H``.  ``H`` is in
    row echelon form with positive pivots, entries above each pivot reduced to
    ``[0, pivot)``, and zero rows at the bottom.
    """
    H = as_matrix(A)
    m, n = len(H), len(H[0])
    U = identity(m)
    r = 0
    for c in range(n):
        if r == m:
            break
        # Euclid on column c among rows r..m-1
        while True:
            nz = [i for i in range(r, m) if H[i][c]]
            if not nz:
                break
            i = min(nz, key=lambda k: abs(H[k][c]))
            if i != r:
                H[r], H[i] = H[i], H[r]
                U[r], U[i] = U[i], U[r]
            done = True
            for k in range(r + 1, m):
                if H[k][c]:
                    q = H[k][c] // H[r][c]
                    _row_op(H, k, r, q)
                    _row_op(U, k, r, q)
                    done = done and H[k][c] == 0
            if done:
                break
        if H[r][c] == 0:
            continue
        if H[r][c] < 0:
            H[r] = [-a for a in H[r]]
            U[r] = [-a for a in U[r]]
        p = H[r][c]
        for k in range(r):
            q = H[k][c] // p
            _row_op(H, k, r, q)
            _row_op(U, k, r, q)
        r += 1
    assert matmul(U, [list(row) for row in A]) == H
    return H, U
