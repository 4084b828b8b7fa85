"""Brute-force Ehrhart data straight from lattice point counts.

Nothing here looks at the simplex's group: points of ``k * simplex`` are
enumerated directly, coordinate by coordinate, with the search box pruned by
the facet inequalities.  This makes it an independent check on the group
route to h*.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from math import comb
from typing import Iterator, List, Tuple

from gorcodes import kernels, linalg
from gorcodes.simplex import HStarPolynomial, LatticeSimplex

DEFAULT_BUDGET = 10**9


class ArithmeticConsistencyError(ArithmeticError):
    """Counts produced an h* that is not a nonnegative integer vector."""


def facet_inequalities(simplex: LatticeSimplex, k: int, interior: bool = False):
    """Integer system ``A @ y + b >= 0`` describing ``k * simplex`` (or its interior).

    Column ``j`` of the adjugate of the vertex matrix gives the barycentric
    coordinate of vertex ``j`` up to the positive factor ``|det|``.
    """
    M = simplex.vertex_matrix()
    det = linalg.determinant(M)
    adj = linalg.adjugate(M)
    sign = 1 if det > 0 else -1
    d = simplex.dim
    A = [[sign * adj[i][j] for i in range(d)] for j in range(d + 1)]
    b = [sign * adj[d][j] * k - (1 if interior else 0) for j in range(d + 1)]
    return A, b


def _box(simplex: LatticeSimplex, k: int) -> Tuple[List[int], List[int]]:
    cols = list(zip(*simplex.vertices))
    return [k * min(c) for c in cols], [k * max(c) for c in cols]


def count_points(
    simplex: LatticeSimplex, k: int, interior: bool = False, budget: int = DEFAULT_BUDGET
) -> int:
    """Number of lattice points in ``k * simplex`` (or in its interior)."""
    if k < 1:
        raise ValueError("dilation factor must be positive")
    A, b = facet_inequalities(simplex, k, interior)
    lo, hi = _box(simplex, k)
    count, _ = kernels.count_points(A, b, lo, hi, budget)
    return count


def interior_points(simplex: LatticeSimplex, k: int, limit: int | None = None) -> Iterator[Tuple[int, ...]]:
    """Lattice points in the interior of ``k * simplex`` (at most ``limit``)."""
    A, b = facet_inequalities(simplex, k, interior=True)
    lo, hi = _box(simplex, k)
    for i, p in enumerate(kernels.iter_points(A, b, lo, hi)):
        if limit is not None and i >= limit:
            return
        yield p


@dataclass(frozen=True)
class EhrhartData:
    dim: int
    counts: Tuple[int, ...]  # L(1), ..., L(d+1)
    interior_counts: Tuple[int, ...]  # interior counts for the same dilates
    polynomial: Tuple[Fraction, ...]  # coefficients of L(k), constant term first
    hstar: HStarPolynomial

    def __call__(self, k: int) -> Fraction:
        return sum(c * k**i for i, c in enumerate(self.polynomial))


def _interpolate(xs: List[int], ys: List[int]) -> List[Fraction]:
    """Coefficients of the unique polynomial through the points (Lagrange)."""
    n = len(xs)
    coeffs = [Fraction(0)] * n
    for i in range(n):
        basis = [Fraction(1)]
        denom = 1
        for j in range(n):
            if j == i:
                continue
            basis = [Fraction(0)] + basis
            for t in range(len(basis) - 1):
                basis[t] -= xs[j] * basis[t + 1]
            denom *= xs[i] - xs[j]
        for t in range(n):
            coeffs[t] += Fraction(ys[i], denom) * basis[t]
    return coeffs


def hstar_from_counts(counts: List[int], dim: int) -> List[int]:
    """``h*_j = sum_i (-1)^i C(d+1, i) L(j - i)`` with ``L(0) = 1``."""
    L = [1] + list(counts)
    return [
        sum((-1) ** i * comb(dim + 1, i) * L[j - i] for i in range(j + 1))
        for j in range(dim + 1)
    ]


def ehrhart_polynomial(
    simplex: LatticeSimplex, budget: int = DEFAULT_BUDGET, interior: bool = True
) -> EhrhartData:
    d = simplex.dim
    counts = [count_points(simplex, k, budget=budget) for k in range(1, d + 2)]
    inner = (
        [count_points(simplex, k, interior=True, budget=budget) for k in range(1, d + 2)]
        if interior
        else []
    )
    poly = _interpolate(list(range(d + 2)), [1] + counts)
    if poly[-1] != 0:
        raise ArithmeticConsistencyError("counts do not fit a polynomial of degree d")
    poly = poly[:-1]
    h = hstar_from_counts(counts[:d], d)
    if any(c < 0 for c in h):
        raise ArithmeticConsistencyError(f"negative h* coefficient in {h}")
    return EhrhartData(d, tuple(counts), tuple(inner), tuple(poly), HStarPolynomial(h))


def codegree_oracle(simplex: LatticeSimplex, budget: int = DEFAULT_BUDGET) -> int:
    """Smallest ``k`` with an interior lattice point in ``k * simplex``."""
    for k in range(1, simplex.dim + 2):
        if count_points(simplex, k, interior=True, budget=budget):
            return k
    raise ArithmeticConsistencyError("no interior point up to dilate d+1")
