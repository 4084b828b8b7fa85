"""Groups versus simplices: reconstruction and permutation-canonical forms."""

from __future__ import annotations

from dataclasses import dataclass, field
from itertools import groupby
from math import factorial
from typing import List, Sequence, Tuple

from gorcodes import kernels, linalg
from gorcodes.linalg import DimensionError
from gorcodes.simplex import LatticeSimplex, SimplexGroup, Vector


def simplex_from_group(group: SimplexGroup) -> LatticeSimplex:
    """A simplex whose group is exactly ``group``, coordinate order included.

    Let ``L`` be the lattice spanned by ``Z^n`` and the lifted elements.  Pick a
    basis ``b_0, ..., b_d`` of ``L`` whose coordinate sums are ``1, 0, ..., 0``
    and write each unit vector ``e_i`` in it; the coefficient on ``b_0`` is 1
    and the remaining coefficients give vertex ``i``.
    """
    group.validate()
    n, q = group.length, group.denominator
    gens = [[q * int(i == j) for j in range(n)] for i in range(n)]
    gens += [list(v) for v in group.vectors if any(v)]
    H, _ = linalg.hermite_normal_form(gens)
    basis = H[:n]  # q * (basis of L)
    sums = [[sum(row) // q] for row in basis]
    _, W = linalg.hermite_normal_form(sums)
    basis = linalg.matmul(W, basis)
    assert [sum(row) for row in basis] == [q] + [0] * (n - 1)
    inv = linalg.inverse(basis)
    A = [[q * a for a in row] for row in inv]
    if any(a.denominator != 1 for row in A for a in row):
        raise AssertionError("unit vectors are not integral in the adapted basis")
    verts = [[int(a) for a in row[1:]] for row in A]
    return LatticeSimplex(verts).normalized()


@dataclass(frozen=True)
class CanonicalGroupForm:
    """Permutation-invariant representative of a group.

    ``order`` records one coordinate order realising the form; it is not part
    of equality.
    """

    length: int
    denominator: int
    vectors: Tuple[Vector, ...]
    order: Tuple[int, ...] = field(compare=False, default=())

    def as_group(self) -> SimplexGroup:
        return SimplexGroup(self.length, self.denominator, self.vectors)


def _relabel(signatures: Sequence) -> List[int]:
    ranks = {s: i for i, s in enumerate(sorted(set(signatures)))}
    return [ranks[s] for s in signatures]


def refine(rows: Sequence[Sequence[int]], labels: Sequence, cells: List[List[int]]) -> List[List[int]]:
    """Split an ordered partition of the columns until it is equitable.

    Rows are coloured by their label and the multiset of (cell, value) pairs
    they see; a cell splits by the multiset of (row colour, value) pairs of its
    columns.  New cells keep the parent's position and are ordered by
    signature, so the result is equivariant under column permutations.
    """
    cols_t = list(zip(*rows))
    cells = [list(c) for c in cells]
    while True:
        where = {c: i for i, cell in enumerate(cells) for c in cell}
        row_col = _relabel(
            [(lab, tuple(sorted((where[c], v) for c, v in enumerate(row)))) for lab, row in zip(labels, rows)]
        )
        out: List[List[int]] = []
        for cell in cells:
            if len(cell) == 1:
                out.append(cell)
                continue
            sig = {c: tuple(sorted(zip(row_col, cols_t[c]))) for c in cell}
            for _, grp in groupby(sorted(cell, key=lambda c: (sig[c], c)), key=lambda c: sig[c]):
                out.append(sorted(grp))
        if len(out) == len(cells):
            return out
        cells = out


def column_blocks(rows: Sequence[Sequence[int]], labels: Sequence, n: int) -> List[List[int]]:
    """Equitable ordered partition of the columns, refined from the trivial one."""
    return refine(rows, labels, [list(range(n))])


# cell-product size below which every compatible column order is tried directly
BRUTE_FORCE_LIMIT = 720


class _Search:
    """Individualisation-refinement search with automorphism pruning."""

    def __init__(self, rows, base, labels):
        self.rows = [list(r) for r in rows]
        self.labels = list(labels)
        self.base = base
        self.n = len(self.rows[0])
        self.first = None  # (keys, order)
        self.best = None
        self.autos: List[Tuple[int, ...]] = []

    def leaf(self, keys, order):
        for ref in (self.first, self.best):
            if ref is not None and ref[0] == keys:
                gamma = [0] * self.n
                for a, b in zip(ref[1], order):
                    gamma[a] = b
                if any(gamma[i] != i for i in range(self.n)):
                    self.autos.append(tuple(gamma))
        if self.first is None:
            self.first = (keys, order)
        if self.best is None or keys < self.best[0]:
            self.best = (keys, order)

    def orbit_rep(self, prefix, c):
        # smallest element of c's orbit under automorphisms fixing the prefix
        parent = list(range(self.n))

        def find(x):
            while parent[x] != x:
                parent[x] = parent[parent[x]]
                x = parent[x]
            return x

        for g in self.autos:
            if all(g[p] == p for p in prefix):
                for i in range(self.n):
                    a, b = find(i), find(g[i])
                    if a != b:
                        parent[max(a, b)] = min(a, b)
        return find(c)

    def run(self, cells, prefix):
        size = 1
        for cell in cells:
            size *= factorial(len(cell))
        if size <= BRUTE_FORCE_LIMIT:
            keys, order = kernels.lexmin_permutation(self.rows, self.base, cells)
            self.leaf(list(keys), list(order))
            return
        t = next(i for i, cell in enumerate(cells) if len(cell) > 1)
        target = cells[t]
        done = set()
        for c in target:
            if self.orbit_rep(prefix, c) in {self.orbit_rep(prefix, x) for x in done}:
                continue
            split = cells[:t] + [[c], [x for x in target if x != c]] + cells[t + 1:]
            self.run(refine(self.rows, self.labels, split), prefix + [c])
            done.add(c)


def lexmin_rows(
    rows: Sequence[Sequence[int]], base: int, labels: Sequence, n: int
) -> Tuple[Tuple[Tuple[int, ...], ...], Tuple[int, ...]]:
    """Least sorted row list over the leaves of a refinement search tree.

    The candidate column orders depend only on permutation-invariant data, so
    the minimum is a canonical form: two row sets get the same result exactly
    when they differ by a column permutation.
    """
    if not rows:
        return (), tuple(range(n))
    search = _Search(rows, base, labels)
    search.run(column_blocks(rows, labels, n), [])
    order = search.best[1]
    best = tuple(sorted(tuple(r[c] for c in order) for r in rows))
    return best, tuple(order)


def canonical_group(group: SimplexGroup) -> CanonicalGroupForm:
    """Canonical form of ``group`` under coordinate permutations.

    Coordinates are split by the multiset of (value, element height) pairs
    and refined from there; see :func:`lexmin_rows`.
    """
    q = group.denominator
    heights = [sum(v) // q for v in group.vectors]
    vectors, order = lexmin_rows(group.vectors, max(q, 2), heights, group.length)
    return CanonicalGroupForm(group.length, q, vectors, order)


def groups_equivalent(g1: SimplexGroup, g2: SimplexGroup) -> bool:
    """Whether the groups agree up to a permutation of coordinates."""
    if g1.length != g2.length:
        raise DimensionError("groups have different lengths")
    if g1.denominator != g2.denominator or len(g1) != len(g2):
        return False
    return canonical_group(g1) == canonical_group(g2)


def simplices_equivalent(s1: LatticeSimplex, s2: LatticeSimplex) -> bool:
    """Unimodular equivalence of (unordered) simplices via their groups."""
    from gorcodes.simplex import group_of_simplex

    if s1.dim != s2.dim:
        return False
    return groups_equivalent(group_of_simplex(s1), group_of_simplex(s2))

