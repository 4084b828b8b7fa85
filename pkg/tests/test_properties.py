"""Randomised invariants, 1000 cases each."""

from __future__ import annotations

from hypothesis import assume, given, settings, strategies as st

from gorcodes.codes import BinaryCode, code_to_group, group_to_code, weight
from gorcodes.correspondence import canonical_group, groups_equivalent, simplex_from_group
from gorcodes.extremal import build_height_levels, classify_extremal
from gorcodes.linalg import determinant
from gorcodes.simplex import LatticeSimplex, group_of_simplex, hstar, pyramid

CASES = settings(max_examples=1000)

CLASSES = [c for s in (2, 3, 4) for c in classify_extremal(s)]


@st.composite
def simplices(draw, max_dim=4, bound=3):
    d = draw(st.integers(1, max_dim))
    verts = draw(
        st.lists(st.lists(st.integers(-bound, bound), min_size=d, max_size=d), min_size=d + 1, max_size=d + 1)
    )
    assume(determinant([v + [1] for v in verts]) != 0)
    return LatticeSimplex(verts)


@st.composite
def even_codes(draw):
    n = draw(st.integers(1, 10))
    words = draw(st.lists(st.integers(0, (1 << n) - 1), max_size=5))
    return BinaryCode(n, [w for w in words if weight(w) % 2 == 0])


@CASES
@given(simplices())
def test_group_round_trip(simplex):
    g = group_of_simplex(simplex)
    assert group_of_simplex(simplex_from_group(g)) == g


@CASES
@given(even_codes())
def test_code_group_round_trips(code):
    g = code_to_group(code)
    assert group_to_code(g) == code
    assert code_to_group(group_to_code(g)) == g
    assert len(g) == 2 ** code.dimension


@CASES
@given(st.one_of(simplices(max_dim=5, bound=2).map(group_of_simplex), st.sampled_from(CLASSES).map(lambda c: c.group)), st.randoms())
def test_canonical_group_permutation_invariant(group, rnd):
    order = list(range(group.length))
    rnd.shuffle(order)
    moved = group.permuted(order)
    form = canonical_group(group)
    assert canonical_group(moved) == form
    assert canonical_group(form.as_group()) == form
    assert groups_equivalent(group, moved)


@CASES
@given(simplices())
def test_pyramid_preserves_hstar(simplex):
    assert hstar(pyramid(simplex)) == hstar(simplex)


@CASES
@given(st.sampled_from(CLASSES), st.randoms())
def test_extremal_level_structure(cls, rnd):
    s = cls.s
    order = list(range(2 * s))
    rnd.shuffle(order)
    levels = build_height_levels(cls.group.permuted(order), s)
    sizes = levels.sizes()
    assert all(sizes[i] == sizes[s - i] for i in range(s + 1))
    assert sizes[s] == 1 and levels[s] == (frozenset(range(2 * s)),)
    assert all(len(a) == 2 * k for k in range(s + 1) for a in levels[k])
