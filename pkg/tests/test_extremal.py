from __future__ import annotations

from collections import Counter
from itertools import combinations

import pytest

from gorcodes.codes import group_to_code
from gorcodes.extremal import (
    InconsistentLevelsError,
    NotExtremalError,
    ShapeError,
    SupportGraph,
    admissible_graphs,
    admissible_H2_sets,
    build_height_levels,
    classify_extremal,
    closure_check_graph,
    graph_of_H1,
    hypergraph_closure_step,
    reconstruct_group,
)
from gorcodes.simplex import HStarPolynomial, hstar_from_group, group_of_simplex
from gorcodes.tables import TABLE_DEGREE_3, TABLE_DEGREE_4
from oracles import clique_union_graphs_brute


def fs(*coords):
    """1-based coordinates to a 0-based support."""
    return frozenset(c - 1 for c in coords)


def levels_of(row):
    return build_height_levels(group_of_simplex(row.simplex()), row.s)


def by_label(s):
    return {g.label: g for g in admissible_graphs(s)}


# the 14 sets of the largest edgeless family, 1-based
B0 = [fs(*map(int, w)) for w in
      "1234 1256 1278 1357 1368 1458 1467 5678 3478 3456 2468 2457 2367 2358".split()]


def test_height_levels_examples():
    assert levels_of(TABLE_DEGREE_3[0]).sizes() == (1, 0, 0, 1)
    assert levels_of(TABLE_DEGREE_3[5]).sizes() == (1, 15, 15, 1)
    assert levels_of(TABLE_DEGREE_4[9]).sizes() == (1, 4, 6, 4, 1)


def test_height_levels_reject_non_extremal(example_group):
    with pytest.raises(NotExtremalError):
        build_height_levels(example_group, 3)


def test_graph_of_H1():
    assert graph_of_H1([], 6).edges == frozenset()
    assert graph_of_H1(levels_of(TABLE_DEGREE_3[3])[1], 6).label == "3K2"
    assert graph_of_H1(levels_of(TABLE_DEGREE_4[18])[1], 8).label == "K8"
    with pytest.raises(ShapeError):
        graph_of_H1([fs(1, 2, 3)], 6)


def test_graph_labels():
    assert SupportGraph.from_partition((4, 2, 2)).label == "K4⊔2K2"
    assert SupportGraph.from_partition((1, 1, 1, 1)).label == "∅"
    assert SupportGraph.from_partition((3, 3, 1, 1)).label == "2K3"


def test_closure_check_graph():
    assert not closure_check_graph(SupportGraph.from_partition((2, 2, 1, 1)), 3)
    assert closure_check_graph(SupportGraph.from_partition((2, 2, 2)), 3)
    path = SupportGraph(6, frozenset({(0, 1), (1, 2)}))
    assert not closure_check_graph(path, 3)


def test_admissible_graphs_small():
    assert {g.label for g in admissible_graphs(2)} == {"∅", "2K2", "K4"}


def test_admissible_graphs_match_brute_force():
    for s in (2, 3):
        assert {g.partition() for g in admissible_graphs(s)} == clique_union_graphs_brute(s)


def test_admissible_graphs_listed():
    assert sorted(g.label for g in admissible_graphs(3)) == sorted(["∅", "K2", "K3", "3K2", "K4⊔K2", "K6"])
    assert sorted(g.label for g in admissible_graphs(4)) == sorted(
        ["∅", "K2", "2K2", "4K2", "K3", "K3⊔K2", "2K3", "K4", "K4⊔2K2", "2K4", "K5", "K6⊔K2", "K8"]
    )


def test_closure_step_two_edges():
    h1, h2 = hypergraph_closure_step([fs(1, 2), fs(3, 4)], [])
    assert fs(1, 2, 3, 4) in h2
    h1, h2 = hypergraph_closure_step(h1, h2)
    assert {fs(1, 2, 3, 4), fs(5, 6, 7, 8)} <= h2


def test_closure_step_triangle_forces_missing_edge():
    tri = [fs(1, 2), fs(1, 3), fs(2, 3)]
    h1, _ = hypergraph_closure_step(tri, [fs(1, 2, 4, 5)])
    assert fs(4, 5) in h1
    with pytest.raises(InconsistentLevelsError):
        hypergraph_closure_step(tri, [fs(1, 2, 4, 5)], fixed_h1=tri)


def test_closure_step_empty_fixed_point():
    assert hypergraph_closure_step([], []) == (frozenset(), frozenset())


@pytest.mark.parametrize(
    "label, sizes",
    [
        ("∅", [0, 2, 6, 14]),
        ("K2", [0, 4]),
        ("2K2", [2, 10]),
        ("K3", [0]),
        ("4K2", [6, 22]),
        ("K3⊔K2", [6]),
        ("2K3", [18]),
        ("K4", [2]),
        ("K4⊔2K2", [14]),
        ("2K4", [38]),
        ("K5", [10]),
        ("K6⊔K2", [30]),
        ("K8", [70]),
    ],
)
def test_admissible_H2_sets(label, sizes):
    sets = admissible_H2_sets(by_label(4)[label])
    assert [len(h) for h in sets] == sizes
    for h in sets:
        assert h.is_complement_closed()


def test_K4_family_is_the_two_blocks():
    (h,) = admissible_H2_sets(by_label(4)["K4"])
    assert h.blocks == {fs(1, 2, 3, 4), fs(5, 6, 7, 8)}


def test_K8_family_is_everything():
    (h,) = admissible_H2_sets(by_label(4)["K8"])
    assert h.blocks == {frozenset(c) for c in combinations(range(8), 4)}


def test_reconstruct_group_examples():
    k6 = [frozenset(e) for e in combinations(range(6), 2)]
    assert len(reconstruct_group([k6], 3)) == 32
    g = reconstruct_group([[], []], 4)
    assert len(g) == 2 and hstar_from_group(g) == HStarPolynomial([1, 0, 0, 0, 1])
    g = reconstruct_group([[], B0], 4)
    assert len(g) == 16 and hstar_from_group(g) == HStarPolynomial([1, 0, 14, 0, 1])


def test_reconstruct_group_rejects_unclosed():
    with pytest.raises(ValueError):
        reconstruct_group([[fs(1, 2), fs(2, 3)]], 3)


def test_fourteen_set_family_equivalent_to_table():
    g = reconstruct_group([[], B0], 4)
    canon = group_to_code(g)
    table = group_to_code(group_of_simplex(TABLE_DEGREE_4[3].simplex()))
    from gorcodes.codes import codes_equivalent

    assert codes_equivalent(canon, table)


def test_classify_degree_three():
    classes = classify_extremal(3, "both")
    assert len(classes) == 6
    assert Counter(str(c.hstar) for c in classes) == Counter(
        ["1+t^3", "1+t+t^2+t^3", "1+3t+3t^2+t^3", "1+3t+3t^2+t^3", "1+7t+7t^2+t^3", "1+15t+15t^2+t^3"]
    )


def test_classify_degree_four_labels():
    classes = classify_extremal(4, "both")
    assert len(classes) == 19
    assert Counter(c.label for c in classes) == Counter(r.graph for r in TABLE_DEGREE_4)
    assert Counter(c.hstar for c in classes) == Counter(r.hstar for r in TABLE_DEGREE_4)


def test_classify_degree_two():
    assert len(classify_extremal(2, "code")) == len(classify_extremal(2, "section4")) == 3


def test_classify_rejects_bad_input():
    with pytest.raises(ValueError):
        classify_extremal(4, "magic")
    with pytest.raises(ValueError):
        classify_extremal(5, "section4")
    with pytest.raises(ValueError):
        classify_extremal(0)


@pytest.mark.parametrize("s", [2, 3, 4])
def test_level_structure_of_classes(s):
    for c in classify_extremal(s):
        levels = build_height_levels(c.group, s)
        sizes = levels.sizes()
        assert sizes == sizes[::-1] and sizes[s] == 1
        assert levels[s] == (frozenset(range(2 * s)),)
        for k in range(s + 1):
            assert all(len(a) == 2 * k for a in levels[k])
        assert c.graph.is_union_of_cliques()
