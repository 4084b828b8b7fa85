"""Extremal Gorenstein simplices: height levels, support graphs and the H2 hypergraph.

For a Gorenstein simplex of dimension ``2s - 1`` and degree ``s`` that is not
a pyramid, every group element is a half-vector ``eta_A`` with ``|A| = 2 * height``.
Supports are handled here as frozensets of 0-based coordinates at the API and
as bitmasks internally (coordinate ``i`` is bit ``n - 1 - i``, as in
:mod:`gorcodes.codes`).
"""

from __future__ import annotations

from collections import Counter
from dataclasses import dataclass
from functools import lru_cache
from itertools import combinations
from typing import Dict, FrozenSet, Iterable, Iterator, List, Optional, Sequence, Set, Tuple

from gorcodes.codes import (
    BinaryCode,
    CanonicalCode,
    canonical_code,
    code_to_group,
    enumerate_escc,
    group_to_code,
    weight,
)
from gorcodes.correspondence import simplex_from_group
from gorcodes.simplex import (
    ClosureError,
    HStarPolynomial,
    LatticeSimplex,
    SimplexGroup,
    hstar_from_group,
)

Support = FrozenSet[int]

MAX_S = 5
SECTION4_RANGE = (2, 3, 4)


class NotExtremalError(ValueError):
    """The group does not have the shape forced by an extremal simplex."""


class ShapeError(ValueError):
    """A level element has the wrong number of half coordinates."""


class InconsistentLevelsError(ValueError):
    """Closure rules force an element that the fixed data forbids."""


class RouteDisagreementError(AssertionError):
    """The code route and the case-analysis route produced different classes."""


def _mask(support: Iterable[int], n: int) -> int:
    return sum(1 << (n - 1 - i) for i in support)


def _support(mask: int, n: int) -> Support:
    return frozenset(i for i in range(n) if (mask >> (n - 1 - i)) & 1)


def _half_masks(group: SimplexGroup) -> Dict[int, List[int]]:
    n = group.length
    if group.denominator not in (1, 2):
        raise NotExtremalError(f"denominator {group.denominator}; expected half-vectors")
    out: Dict[int, List[int]] = {}
    for v in group.vectors:
        m = sum(1 << (n - 1 - i) for i, a in enumerate(v) if a)
        out.setdefault(weight(m) // 2, []).append(m)
    return out


@dataclass(frozen=True)
class HeightLevels:
    """``levels[i]`` holds the supports of the height-``i`` elements."""

    s: int
    n: int
    levels: Tuple[Tuple[Support, ...], ...]

    def __getitem__(self, i: int) -> Tuple[Support, ...]:
        return self.levels[i]

    def sizes(self) -> Tuple[int, ...]:
        return tuple(len(h) for h in self.levels)


def build_height_levels(group: SimplexGroup, s: Optional[int] = None) -> HeightLevels:
    """Split an extremal group by height and check ``x + H_i = H_{s-i}``."""
    n = group.length
    if s is None:
        if n % 2:
            raise NotExtremalError(f"odd length {n}")
        s = n // 2
    if n != 2 * s:
        raise NotExtremalError(f"length {n} is not 2s for s = {s}")
    by_height = _half_masks(group)
    full = (1 << n) - 1
    if by_height.get(s) != [full]:
        raise NotExtremalError("the all-half element is not the unique top element")
    if set(by_height) - set(range(s + 1)):
        raise NotExtremalError("heights exceed the degree")
    levels = [sorted(by_height.get(i, []), reverse=True) for i in range(s + 1)]
    for i in range(s + 1):
        if {m ^ full for m in levels[i]} != set(levels[s - i]):
            raise NotExtremalError(f"x + H_{i} differs from H_{s - i}")
    return HeightLevels(s, n, tuple(tuple(_support(m, n) for m in lv) for lv in levels))


@dataclass(frozen=True)
class SupportGraph:
    """Graph on ``{0, ..., n-1}``; isolated vertices count."""

    n: int
    edges: FrozenSet[Tuple[int, int]]

    @classmethod
    def from_partition(cls, parts: Sequence[int]) -> "SupportGraph":
        """Disjoint union of cliques on consecutive blocks of the given sizes."""
        edges, start = set(), 0
        for p in parts:
            edges.update(combinations(range(start, start + p), 2))
            start += p
        return cls(start, frozenset(edges))

    def adjacent(self, i: int, j: int) -> bool:
        return (min(i, j), max(i, j)) in self.edges

    def components(self) -> List[List[int]]:
        seen: Set[int] = set()
        comps = []
        for v in range(self.n):
            if v in seen:
                continue
            stack, comp = [v], []
            seen.add(v)
            while stack:
                u = stack.pop()
                comp.append(u)
                for w in range(self.n):
                    if w not in seen and self.adjacent(u, w):
                        seen.add(w)
                        stack.append(w)
            comps.append(sorted(comp))
        return comps

    def partition(self) -> Tuple[int, ...]:
        return tuple(sorted((len(c) for c in self.components()), reverse=True))

    def is_union_of_cliques(self) -> bool:
        return all(
            self.adjacent(a, b) for c in self.components() for a, b in combinations(c, 2)
        )

    @property
    def label(self) -> str:
        """``"K4⊔2K2"`` style name; isolated vertices are left out, ``"∅"`` if edgeless."""
        sizes = Counter(p for p in self.partition() if p > 1)
        if not sizes:
            return "∅"
        return "⊔".join(
            f"{'' if m == 1 else m}K{k}" for k, m in sorted(sizes.items(), reverse=True)
        )


def graph_of_H1(h1: Iterable[Support], n: int) -> SupportGraph:
    """Edges ``{i, j}`` for the height-one elements ``eps_ij``."""
    edges = set()
    for a in h1:
        if len(a) != 2:
            raise ShapeError(f"height-one element with support {sorted(a)}")
        i, j = sorted(a)
        edges.add((i, j))
    return SupportGraph(n, frozenset(edges))


def _matchings(edges: Sequence[Tuple[int, int]], k: int, used: int = 0, start: int = 0) -> Iterator[int]:
    """Vertex masks covered by ``k`` disjoint edges."""
    if k == 0:
        yield used
        return
    for idx in range(start, len(edges)):
        i, j = edges[idx]
        if used >> i & 1 or used >> j & 1:
            continue
        yield from _matchings(edges, k - 1, used | 1 << i | 1 << j, idx + 1)


def closure_check_graph(graph: SupportGraph, s: int) -> bool:
    """Triangle closure, and every ``(s-1)``-matching leaves an edge behind."""
    n = graph.n
    for i in range(n):
        nbrs = [j for j in range(n) if j != i and graph.adjacent(i, j)]
        if any(not graph.adjacent(j, k) for j, k in combinations(nbrs, 2)):
            return False
    edges = sorted(graph.edges)
    for covered in _matchings(edges, s - 1):
        p, q = [v for v in range(n) if not covered >> v & 1]
        if not graph.adjacent(p, q):
            return False
    return True


def _partitions(n: int, largest: Optional[int] = None) -> Iterator[Tuple[int, ...]]:
    largest = n if largest is None else largest
    if n == 0:
        yield ()
        return
    for p in range(min(n, largest), 0, -1):
        for rest in _partitions(n - p, p):
            yield (p,) + rest


def admissible_graphs(s: int) -> List[SupportGraph]:
    """Unions of cliques on ``2s`` vertices passing both closure rules, one per shape."""
    if not 1 <= s <= MAX_S:
        raise ValueError(f"s must be in [1, {MAX_S}]")
    graphs = [SupportGraph.from_partition(p) for p in _partitions(2 * s)]
    out = [g for g in graphs if closure_check_graph(g, s)]
    return sorted(out, key=lambda g: (len(g.edges), g.partition()))


# ---------------------------------------------------------------- degree four

_N4 = 8
_FULL4 = (1 << _N4) - 1
_QUADS = [m for m in range(1 << _N4) if weight(m) == 4]


def _close(h1: Set[int], h2: Set[int], fixed_h1: Optional[FrozenSet[int]]) -> Tuple[Set[int], Set[int], bool]:
    """One pass of the eight rules; returns the new sets and whether anything grew."""
    new1, new2 = set(h1), set(h2)

    def force1(m: int) -> None:
        if fixed_h1 is not None and m not in fixed_h1:
            raise InconsistentLevelsError(f"forces height-one element {sorted(_support(m, _N4))}")
        new1.add(m)

    for a in h2:
        new2.add(a ^ _FULL4)  # (1)
    for e, f in combinations(h1, 2):  # (2)
        if not e & f:
            new2.add(e | f)
    for a in h2:
        for e in h1:
            meet = weight(a & e)
            if meet == 1:  # (3a)
                new2.add(a ^ e)
            elif meet == 2:  # (3b)
                force1(a ^ e)
            else:  # (3c)
                force1(_FULL4 ^ a ^ e)
    for a, b in combinations(h2, 2):
        meet = weight(a & b)
        if meet == 3:  # (4a)
            force1(a ^ b)
        elif meet == 2:  # (4b)
            new2.add(a ^ b)
        elif meet == 1:  # (4c)
            force1(_FULL4 ^ a ^ b)
    grew = len(new1) > len(h1) or len(new2) > len(h2)
    return new1, new2, grew


def _to_masks(sets: Iterable[Iterable[int]], size: int) -> Set[int]:
    out = set()
    for a in sets:
        a = frozenset(a)
        if len(a) != size or not a <= set(range(_N4)):
            raise ShapeError(f"expected a {size}-subset of 0..7, got {sorted(a)}")
        out.add(_mask(a, _N4))
    return out


def hypergraph_closure_step(
    h1: Iterable[Support],
    h2: Iterable[Support],
    fixed_h1: Optional[Iterable[Support]] = None,
) -> Tuple[FrozenSet[Support], FrozenSet[Support]]:
    """Apply every closure rule once to ``(H_1, H_2)`` for ``s = 4``.

    With ``fixed_h1`` given, a rule that forces a height-one element outside it
    raises :class:`InconsistentLevelsError`.
    """
    fixed = None if fixed_h1 is None else frozenset(_to_masks(fixed_h1, 2))
    a, b, _ = _close(_to_masks(h1, 2), _to_masks(h2, 4), fixed)
    return (
        frozenset(_support(m, _N4) for m in a),
        frozenset(_support(m, _N4) for m in b),
    )


def _fixed_point(h1: FrozenSet[int], h2: Set[int]) -> FrozenSet[int]:
    cur1, cur2 = set(h1), set(h2)
    while True:
        cur1, cur2, grew = _close(cur1, cur2, h1)
        if not grew:
            return frozenset(cur2)


@dataclass(frozen=True)
class SupportHypergraph:
    """4-uniform hypergraph of height-two supports."""

    blocks: FrozenSet[Support]

    def __len__(self) -> int:
        return len(self.blocks)

    def is_complement_closed(self, n: int = _N4) -> bool:
        full = frozenset(range(n))
        return all(full - a in self.blocks for a in self.blocks)


def _orbit_key(graph: SupportGraph, mask: int) -> Tuple:
    a = _support(mask, graph.n)
    return tuple(sorted((len(c), len(a.intersection(c))) for c in graph.components()))


def _closed_families(graph: SupportGraph) -> List[FrozenSet[int]]:
    """Every closed, consistent H2 family up to automorphisms of ``graph``.

    Starts from the closure of the empty family and adds one 4-set at a time.
    The first step only tries one 4-set per orbit of the graph's automorphism
    group, which keeps every family up to relabelling.
    """
    h1 = frozenset(_mask(e, _N4) for e in graph.edges)
    try:
        root = _fixed_point(h1, set())
    except InconsistentLevelsError:
        return []
    seen = {root}
    stack = [root]
    first = True
    while stack:
        fam = stack.pop()
        tried: Set[Tuple] = set()
        for a in _QUADS:
            if a in fam:
                continue
            if first:
                key = _orbit_key(graph, a)
                if key in tried:
                    continue
                tried.add(key)
            try:
                nxt = _fixed_point(h1, set(fam) | {a})
            except InconsistentLevelsError:
                continue
            if nxt not in seen:
                seen.add(nxt)
                stack.append(nxt)
        first = False
    return sorted(seen, key=lambda f: (len(f), sorted(f, reverse=True)))


def reconstruct_group(levels: Sequence[Iterable[Support]], s: int) -> SimplexGroup:
    """Group generated by ``H_1, ..., H_{s//2}`` and the all-half element.

    ``levels[i - 1]`` holds ``H_i``.  Upper levels are ``x + H_i``; the union
    must be closed under addition.
    """
    n = 2 * s
    if len(levels) != s // 2:
        raise ValueError(f"expected {s // 2} level sets for s = {s}")
    full = (1 << n) - 1
    masks = {0, full}
    for i, level in enumerate(levels, start=1):
        for a in level:
            if len(a) != 2 * i:
                raise ShapeError(f"height-{i} support {sorted(a)} has size {len(a)}")
            m = _mask(a, n)
            masks.update((m, m ^ full))
    for a, b in combinations(masks, 2):
        if a ^ b not in masks:
            raise ClosureError("level sets are not closed under addition")
    return SimplexGroup(n, 2, [[(m >> (n - 1 - i)) & 1 for i in range(n)] for m in masks])


def admissible_H2_sets(graph: SupportGraph) -> List[SupportHypergraph]:
    """Closed H2 families for ``H_1 = E(graph)`` whose group is consistent.

    Families that give permutation-equivalent groups are reported once.
    """
    if graph.n != _N4:
        raise ValueError("H2 analysis is for graphs on 8 vertices")
    out: Dict[CanonicalCode, SupportHypergraph] = {}
    h1 = [frozenset(e) for e in graph.edges]
    for fam in _closed_families(graph):
        h2 = [_support(m, _N4) for m in fam]
        try:
            group = reconstruct_group([h1, h2], 4)
        except ClosureError:
            continue
        out.setdefault(canonical_code(group_to_code(group)), SupportHypergraph(frozenset(h2)))
    return sorted(out.values(), key=lambda h: (len(h), sorted(sorted(a) for a in h.blocks)))


# ---------------------------------------------------------------- classification


@dataclass(frozen=True)
class ExtremalClass:
    """One unimodular class of extremal simplices for a fixed degree."""

    type_id: int
    s: int
    code: CanonicalCode
    group: SimplexGroup
    simplex: LatticeSimplex
    hstar: HStarPolynomial
    graph: SupportGraph

    @property
    def label(self) -> str:
        return self.graph.label


@lru_cache(maxsize=None)
def _code_classes(s: int) -> Dict[CanonicalCode, SimplexGroup]:
    return _classes(code_to_group(c) for c in enumerate_escc(2 * s))


@lru_cache(maxsize=None)
def _level_classes(s: int) -> Dict[CanonicalCode, SimplexGroup]:
    if s not in SECTION4_RANGE:
        raise ValueError(f"the case-analysis route covers s in {SECTION4_RANGE}")
    groups = []
    for g in admissible_graphs(s):
        h1 = [frozenset(e) for e in g.edges]
        if s < 4:
            try:
                groups.append(reconstruct_group([h1], s))
            except ClosureError:
                continue
        else:
            for h2 in admissible_H2_sets(g):
                groups.append(reconstruct_group([h1, h2.blocks], s))
    return _classes(groups)


def _classes(groups: Iterable[SimplexGroup]) -> Dict[CanonicalCode, SimplexGroup]:
    out: Dict[CanonicalCode, SimplexGroup] = {}
    for g in groups:
        canon = canonical_code(group_to_code(g))
        out.setdefault(canon, code_to_group(canon.code()))
    return out


def _build(s: int, classes: Dict[CanonicalCode, SimplexGroup]) -> Tuple[ExtremalClass, ...]:
    rows = []
    for canon, group in classes.items():
        levels = build_height_levels(group, s)
        graph = graph_of_H1(levels[1], 2 * s) if s >= 1 else SupportGraph(0, frozenset())
        rows.append((canon, group, hstar_from_group(group), graph))
    rows.sort(key=lambda r: (r[2].coefficients, r[3].partition(), r[0].codewords))
    return tuple(
        ExtremalClass(i, s, canon, group, simplex_from_group(group), h, graph)
        for i, (canon, group, h, graph) in enumerate(rows, start=1)
    )


def classify_extremal(s: int, route: str = "code") -> Tuple[ExtremalClass, ...]:
    """All extremal classes of degree ``s``; ``route`` is code, section4 or both.

    The class lists behind each route are cached per ``s``.
    """
    if not 1 <= s <= MAX_S:
        raise ValueError(f"s must be in [1, {MAX_S}]")
    if route == "code":
        return _build(s, _code_classes(s))
    if route == "section4":
        return _build(s, _level_classes(s))
    if route == "both":
        by_code = _code_classes(s)
        by_levels = _level_classes(s)
        if set(by_code) != set(by_levels):
            only_c = [c.generators for c in by_code if c not in by_levels]
            only_l = [c.generators for c in by_levels if c not in by_code]
            raise RouteDisagreementError(
                f"code route only: {only_c}; case-analysis route only: {only_l}"
            )
        return _build(s, by_code)
    raise ValueError(f"unknown route {route!r}")


def code_of_class(cls: ExtremalClass) -> BinaryCode:
    return cls.code.code()
