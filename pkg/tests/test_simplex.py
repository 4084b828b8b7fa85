from __future__ import annotations

from fractions import Fraction as F
from itertools import product

import pytest

from gorcodes.simplex import (
    DegenerateSimplexError,
    GroupElement,
    HStarPolynomial,
    IntegralityError,
    LatticeSimplex,
    NotGorensteinError,
    SimplexGroup,
    degree_and_codegree,
    group_of_simplex,
    height,
    hstar,
    hstar_from_group,
    interior_point_data,
    is_gorenstein,
    is_pyramid,
    pyramid,
    top_element_support_check,
)
from gorcodes.tables import ALL_ROWS, TABLE_DEGREE_3, TABLE_DEGREE_4
from oracles import group_by_membership

SEGMENT2 = LatticeSimplex([[0], [2]])
UNIT_SEGMENT = LatticeSimplex([[0], [1]])
D6_3 = TABLE_DEGREE_3[5].simplex()
D1_3 = TABLE_DEGREE_3[0].simplex()
D19_4 = TABLE_DEGREE_4[18].simplex()


def as_fraction_set(group: SimplexGroup):
    return {tuple(F(a, group.denominator) for a in v) for v in group.vectors}


def test_degenerate_simplex_rejected():
    with pytest.raises(DegenerateSimplexError):
        LatticeSimplex([[0, 0], [1, 1], [2, 2]])


def test_dimension_zero_rejected():
    with pytest.raises(ValueError):
        LatticeSimplex([[]])


def test_group_of_segment_matches_membership_oracle():
    expected = group_by_membership([[0], [2]])
    assert expected == {(0, 0), (F(1, 2), F(1, 2))}
    assert as_fraction_set(group_of_simplex(SEGMENT2)) == expected


def test_unimodular_simplex_has_trivial_group():
    g = group_of_simplex(LatticeSimplex([[0, 0, 0], [1, 0, 0], [0, 1, 0], [0, 0, 1]]))
    assert g.vectors == ((0, 0, 0, 0),)


def test_doubled_simplex_group_is_even_half_vectors():
    g = group_of_simplex(D6_3)
    assert len(g) == 32
    evens = {tuple(F(b, 2) for b in bits) for bits in product((0, 1), repeat=6) if sum(bits) % 2 == 0}
    assert as_fraction_set(g) == evens


@pytest.mark.parametrize(
    "verts",
    [[[0, 0], [3, 1], [1, 2]], [[0, 0], [2, 0], [0, 2]], [[1, 0, 0], [0, 2, 0], [0, 0, 1], [1, 1, 2]]],
)
def test_group_matches_membership_oracle(verts):
    assert as_fraction_set(group_of_simplex(LatticeSimplex(verts))) == group_by_membership(verts)


def test_heights():
    assert height(GroupElement((0,) * 6, 1)) == 0
    assert height(GroupElement((1,) * 6, 2)) == 3
    assert height(GroupElement((3, 3, 2, 2, 2, 0), 4)) == 3
    with pytest.raises(IntegralityError):
        height(GroupElement((1, 0), 2))


def test_hstar_from_group_examples(example_group):
    assert hstar_from_group(SimplexGroup(2, 1, [(0, 0)])) == HStarPolynomial([1])
    assert hstar_from_group(example_group) == HStarPolynomial([1, 1, 5, 1])
    assert hstar_from_group(SimplexGroup(2, 2, [(0, 0), (1, 1)])) == HStarPolynomial([1, 1])


def test_is_pyramid(example_group):
    assert is_pyramid(SimplexGroup(3, 1, [(0, 0, 0)])) == 0
    assert is_pyramid(example_group) is None
    assert is_pyramid(group_of_simplex(D1_3)) is None


def test_pyramid_definition_and_hstar():
    assert pyramid(SEGMENT2).vertices == ((0, 0), (2, 0), (0, 1))
    for row in ALL_ROWS:
        assert hstar(pyramid(row.simplex())) == hstar(row.simplex())


def test_is_gorenstein():
    assert is_gorenstein(HStarPolynomial([1, 3, 3, 1]))
    assert not is_gorenstein(HStarPolynomial([1, 1, 5, 1]))
    assert is_gorenstein(HStarPolynomial([1, 28, 70, 28, 1]))


def test_degree_and_codegree():
    assert degree_and_codegree(HStarPolynomial([1]), 1) == (0, 2)
    assert degree_and_codegree(HStarPolynomial([1, 0, 0, 1]), 5) == (3, 3)
    assert degree_and_codegree(hstar(D19_4), 7) == (4, 4)


def test_hstar_polynomial_text_round_trip():
    for row in ALL_ROWS:
        assert HStarPolynomial.parse(str(row.hstar)) == row.hstar
    assert str(HStarPolynomial([1, 15, 15, 1])) == "1+15t+15t^2+t^3"


def test_interior_point_data_doubled_simplex():
    data = interior_point_data(D6_3, 3)
    assert data.point == (1, 1, 1, 1, 1)
    assert data.barycentric == (F(1, 2),) * 6
    assert not data.pyramid_witness and data.strictly_inside_unit


def test_interior_point_data_segment():
    # the coefficients sum to r = 2; the segment is a pyramid over a point
    data = interior_point_data(UNIT_SEGMENT, 2)
    assert data.point == (1,) and data.barycentric == (1, 1)
    assert data.pyramid_witness


def test_interior_point_data_flags_pyramid():
    data = interior_point_data(pyramid(SEGMENT2), 2)
    assert data.pyramid_witness


def test_interior_point_data_rejects_wrong_codegree():
    with pytest.raises(NotGorensteinError):
        interior_point_data(D6_3, 1)


def test_top_element_support(example_group):
    assert top_element_support_check(group_of_simplex(D1_3), 3)
    assert not top_element_support_check(example_group, 3)
    assert top_element_support_check(SimplexGroup(1, 1, [(0,)]), 0)
    with pytest.raises(ValueError):
        top_element_support_check(example_group, 2)


@pytest.mark.parametrize("row", ALL_ROWS, ids=lambda r: r.name)
def test_table_simplex_invariants(row):
    simplex = row.simplex()
    group = group_of_simplex(simplex)
    h = hstar_from_group(group)
    assert h == row.hstar
    assert h.volume == len(group) == simplex.normalized_volume()
    group.validate()
    assert is_pyramid(group) is None
    assert top_element_support_check(group, row.s)
    data = interior_point_data(simplex, row.s)
    assert data.strictly_inside_unit


def test_negation_height_relation(example_group):
    n = example_group.length
    for v in example_group.vectors:
        if all(v):
            neg = example_group.neg(v)
            assert sum(neg) // example_group.denominator == n - sum(v) // example_group.denominator
