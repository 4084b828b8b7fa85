"""Lattice simplices, their finite abelian groups, and h*-polynomials.

For a simplex with vertex rows ``v_0, ..., v_d`` let ``A`` be the matrix with
rows ``(v_i, 1)``.  Its group is the set of ``x`` in ``[0, 1)^(d+1)`` with
``x @ A`` integral, under coordinatewise addition mod 1.  Elements are stored
as integer numerator vectors over one shared denominator.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction
from functools import reduce
from itertools import product
from math import gcd
from typing import Dict, FrozenSet, Iterable, List, Optional, Sequence, Tuple

from gorcodes import linalg

Vector = Tuple[int, ...]


class DegenerateSimplexError(ValueError):
    """The vertex matrix is singular."""


class IntegralityError(ValueError):
    """A coordinate sum that must be an integer is not."""


class ClosureError(ValueError):
    """A set of group elements is not closed under addition mod 1."""


class NotGorensteinError(ValueError):
    """The dilate that should hold a unique interior point does not."""


def _lcm(a: int, b: int) -> int:
    return a * b // gcd(a, b)


@dataclass(frozen=True)
class LatticeSimplex:
    """Full-dimensional lattice simplex given by ``d + 1`` ordered vertices in ``Z^d``."""

    vertices: Tuple[Vector, ...]

    def __init__(self, vertices: Iterable[Iterable[int]]):
        verts = tuple(tuple(int(a) for a in v) for v in vertices)
        if not verts:
            raise ValueError("a simplex needs at least one vertex")
        d = len(verts) - 1
        if d < 1:
            raise ValueError("dimension must be at least 1")
        if any(len(v) != d for v in verts):
            raise ValueError(f"expected {d + 1} vertices of length {d}")
        object.__setattr__(self, "vertices", verts)
        if linalg.determinant(self.vertex_matrix()) == 0:
            raise DegenerateSimplexError("vertices are affinely dependent")

    @property
    def dim(self) -> int:
        return len(self.vertices) - 1

    def vertex_matrix(self) -> linalg.IntMatrix:
        return [list(v) + [1] for v in self.vertices]

    def normalized_volume(self) -> int:
        return abs(linalg.determinant(self.vertex_matrix()))

    def normalized(self) -> "LatticeSimplex":
        """Unimodularly equivalent copy with ``v_0 = 0`` and lower-triangular edges.

        The vertex order, and hence the group, is preserved exactly.
        """
        v0 = self.vertices[0]
        edges = [[a - b for a, b in zip(v, v0)] for v in self.vertices[1:]]
        H, _ = linalg.hermite_normal_form(linalg.transpose(edges))
        L = linalg.transpose(H)
        return LatticeSimplex([[0] * self.dim] + L)


@dataclass(frozen=True)
class GroupElement:
    """A point of ``[0, 1)^n`` with coordinates ``numerators[i] / denominator``."""

    numerators: Vector
    denominator: int

    def __post_init__(self):
        q = self.denominator
        if q < 1 or any(not 0 <= a < q for a in self.numerators):
            raise ValueError("numerators must lie in [0, denominator)")

    @property
    def length(self) -> int:
        return len(self.numerators)

    @property
    def height(self) -> int:
        return height(self)

    def fractions(self) -> Tuple[Fraction, ...]:
        return tuple(Fraction(a, self.denominator) for a in self.numerators)

    def __str__(self) -> str:
        return "(" + ", ".join(str(f) for f in self.fractions()) + ")"


def height(x: GroupElement) -> int:
    """Coordinate sum of ``x``; raises if it is not an integer."""
    total = sum(x.numerators)
    if total % x.denominator:
        raise IntegralityError(f"height of {x} is not an integer")
    return total // x.denominator


@dataclass(frozen=True)
class SimplexGroup:
    """Finite subgroup of ``(Q/Z)^n`` stored over its exponent as denominator.

    ``vectors`` is the sorted tuple of numerator vectors.  The constructor
    reduces to the smallest common denominator, so two instances describe the
    same set exactly when they compare equal.  Closure is *not* checked on
    construction; call :meth:`validate`.
    """

    length: int
    denominator: int
    vectors: Tuple[Vector, ...] = field(repr=False)

    def __init__(self, length: int, denominator: int, vectors: Iterable[Sequence[int]]):
        vecs = {tuple(int(a) % denominator for a in v) for v in vectors}
        if any(len(v) != length for v in vecs):
            raise ValueError(f"all elements must have length {length}")
        g = reduce(gcd, (a for v in vecs for a in v), denominator)
        vecs = sorted(tuple(a // g for a in v) for v in vecs)
        object.__setattr__(self, "length", length)
        object.__setattr__(self, "denominator", denominator // g)
        object.__setattr__(self, "vectors", tuple(vecs))

    @classmethod
    def from_fractions(cls, elements: Iterable[Sequence]) -> "SimplexGroup":
        elems = [tuple(Fraction(a) % 1 for a in x) for x in elements]
        if not elems:
            raise ValueError("a group has at least the zero element")
        q = reduce(_lcm, (a.denominator for x in elems for a in x), 1)
        return cls(len(elems[0]), q, [[int(a * q) for a in x] for x in elems])

    def __len__(self) -> int:
        return len(self.vectors)

    def __contains__(self, x: GroupElement) -> bool:
        q = self.denominator
        if q % x.denominator:
            return False
        s = q // x.denominator
        return tuple(a * s for a in x.numerators) in set(self.vectors)

    def elements(self) -> List[GroupElement]:
        return [GroupElement(v, self.denominator) for v in self.vectors]

    def heights(self) -> List[int]:
        return [height(x) for x in self.elements()]

    def add(self, u: Vector, v: Vector) -> Vector:
        q = self.denominator
        return tuple((a + b) % q for a, b in zip(u, v))

    def neg(self, u: Vector) -> Vector:
        q = self.denominator
        return tuple(-a % q for a in u)

    def validate(self) -> "SimplexGroup":
        """Check zero, closure, and integral heights; return ``self``."""
        zero = (0,) * self.length
        members = set(self.vectors)
        if zero not in members:
            raise ClosureError("the zero element is missing")
        for u in self.vectors:
            if sum(u) % self.denominator:
                raise IntegralityError(f"element {u}/{self.denominator} has non-integral height")
        for u, v in product(self.vectors, repeat=2):
            if self.add(u, v) not in members:
                raise ClosureError(f"{u} + {v} (mod {self.denominator}) is not in the set")
        return self

    def permuted(self, order: Sequence[int]) -> "SimplexGroup":
        """New group whose coordinate ``p`` is this group's coordinate ``order[p]``."""
        return SimplexGroup(
            self.length, self.denominator, [[v[c] for c in order] for v in self.vectors]
        )

    def levels(self) -> Dict[int, List[Vector]]:
        out: Dict[int, List[Vector]] = {}
        for v in self.vectors:
            out.setdefault(sum(v) // self.denominator, []).append(v)
        return out


@dataclass(frozen=True)
class HStarPolynomial:
    """Coefficient vector ``h*_0, h*_1, ...`` with trailing zeros stripped."""

    coefficients: Tuple[int, ...]

    def __init__(self, coefficients: Iterable[int]):
        c = [int(a) for a in coefficients]
        while len(c) > 1 and c[-1] == 0:
            c.pop()
        object.__setattr__(self, "coefficients", tuple(c) or (0,))

    @property
    def degree(self) -> int:
        return len(self.coefficients) - 1

    def __call__(self, t):
        return sum(c * t**i for i, c in enumerate(self.coefficients))

    @property
    def volume(self) -> int:
        return sum(self.coefficients)

    def is_palindromic(self) -> bool:
        return self.coefficients == self.coefficients[::-1]

    def __str__(self) -> str:
        terms = []
        for i, c in enumerate(self.coefficients):
            if c == 0:
                continue
            mono = "" if i == 0 else ("t" if i == 1 else f"t^{i}")
            if i == 0:
                terms.append(str(c))
            else:
                terms.append(mono if c == 1 else f"{c}{mono}")
        return "+".join(terms) or "0"

    @classmethod
    def parse(cls, text: str) -> "HStarPolynomial":
        """Parse strings like ``"1+15t+15t^2+t^3"``."""
        coeffs: Dict[int, int] = {}
        for term in text.replace(" ", "").split("+"):
            if "t" in term:
                c, _, e = term.partition("t")
                power = int(e[1:]) if e.startswith("^") else 1
                coeffs[power] = coeffs.get(power, 0) + (int(c) if c else 1)
            else:
                coeffs[0] = coeffs.get(0, 0) + int(term)
        top = max(coeffs)
        return cls(coeffs.get(i, 0) for i in range(top + 1))


def group_of_simplex(simplex: LatticeSimplex) -> SimplexGroup:
    """The finite abelian group of ``simplex``, enumerated through Smith form.

    With ``U @ A @ V = diag(d_i)`` the group is the direct sum of the cyclic
    groups generated by ``U[i] / d_i`` mod 1.
    """
    A = simplex.vertex_matrix()
    if linalg.determinant(A) == 0:
        raise DegenerateSimplexError("vertices are affinely dependent")
    sd = linalg.smith_normal_form(A)
    n = len(A)
    diag = sd.diagonal
    q = reduce(_lcm, diag, 1)
    gens = [
        ([(u * (q // di)) % q for u in sd.U[i]], di)
        for i, di in enumerate(diag)
        if di > 1
    ]
    vectors = [[0] * n]
    for g, order in gens:
        step = []
        for v in vectors:
            for c in range(order):
                step.append([(a + c * b) % q for a, b in zip(v, g)])
        vectors = step
    return SimplexGroup(n, q, vectors)


def hstar_from_group(group: SimplexGroup) -> HStarPolynomial:
    """Coefficient ``i`` counts the elements of height ``i``."""
    heights = group.heights()
    coeffs = [0] * (max(heights) + 1)
    for h in heights:
        coeffs[h] += 1
    return HStarPolynomial(coeffs)


def hstar(simplex: LatticeSimplex) -> HStarPolynomial:
    return hstar_from_group(group_of_simplex(simplex))


def is_pyramid(group: SimplexGroup) -> Optional[int]:
    """Smallest coordinate that vanishes on every element, or ``None``."""
    for i in range(group.length):
        if all(v[i] == 0 for v in group.vectors):
            return i
    return None


def pyramid(simplex: LatticeSimplex) -> LatticeSimplex:
    """Lattice pyramid ``conv(simplex x {0}, e_{d+1})``."""
    d = simplex.dim
    verts = [list(v) + [0] for v in simplex.vertices]
    verts.append([0] * d + [1])
    return LatticeSimplex(verts)


def is_gorenstein(h: HStarPolynomial) -> bool:
    return h.is_palindromic()


def degree_and_codegree(h: HStarPolynomial, dim: int) -> Tuple[int, int]:
    return h.degree, dim + 1 - h.degree


@dataclass(frozen=True)
class InteriorPointData:
    """Unique interior lattice point of ``r * simplex`` in barycentric form."""

    codegree: int
    point: Vector
    barycentric: Tuple[Fraction, ...]

    @property
    def pyramid_witness(self) -> bool:
        """Some coefficient equals 1, which forces a lattice pyramid."""
        return any(lam == 1 for lam in self.barycentric)

    @property
    def strictly_inside_unit(self) -> bool:
        return all(0 < lam < 1 for lam in self.barycentric)


def interior_point_data(simplex: LatticeSimplex, r: int) -> InteriorPointData:
    """Locate the interior lattice point of ``r * simplex`` and solve for its weights."""
    from gorcodes.ehrhart import interior_points

    pts = list(interior_points(simplex, r, limit=2))
    if len(pts) != 1:
        raise NotGorensteinError(
            f"{r} times the simplex has {'no' if not pts else 'several'} interior lattice points"
        )
    p = pts[0]
    lam = linalg.solve_left(list(p) + [r], simplex.vertex_matrix())
    assert sum(lam) == r and all(x > 0 for x in lam)
    return InteriorPointData(r, p, tuple(lam))


def top_element_support_check(group: SimplexGroup, s: int) -> bool:
    """Whether the unique element of height ``s`` has every coordinate positive."""
    top = [v for v in group.vectors if sum(v) == s * group.denominator]
    if len(top) != 1:
        raise ValueError(f"expected a unique element of height {s}, found {len(top)}")
    if s == 0:
        return True
    return all(a > 0 for a in top[0])


def half_vectors(group: SimplexGroup) -> FrozenSet[int]:
    """Supports of a group whose coordinates all lie in {0, 1/2}, as bitmasks.

    Coordinate ``i`` maps to bit ``n - 1 - i``.
    """
    n = group.length
    if group.denominator == 1:
        return frozenset({0})
    if group.denominator != 2:
        raise ValueError("group is not half-integral")
    return frozenset(sum(1 << (n - 1 - i) for i, a in enumerate(v) if a) for v in group.vectors)
