from __future__ import annotations

import random

import pytest

from gorcodes.codes import (
    BinaryCode,
    NotHalfIntegralError,
    canonical_code,
    code_to_group,
    codes_equivalent,
    echelon_subspaces,
    enumerate_escc,
    group_to_code,
    hstar_from_code,
    is_even,
    is_self_complementary,
    weight_distribution,
    word_to_str,
)
from gorcodes.simplex import HStarPolynomial, IntegralityError, SimplexGroup, group_of_simplex, hstar_from_group
from gorcodes.tables import TABLE_DEGREE_3, TABLE_DEGREE_4
from oracles import code_classes_brute, permute_word

ONES6 = BinaryCode.from_strings(["111111"])
EVEN8 = BinaryCode(8, [(1 << 7) | (1 << (6 - i)) for i in range(7)])
EVEN6 = BinaryCode(6, [(1 << 5) | (1 << (4 - i)) for i in range(5)])


def test_weight_distributions():
    assert weight_distribution(BinaryCode(6)) == (1, 0, 0, 0, 0, 0, 0)
    assert weight_distribution(ONES6) == (1, 0, 0, 0, 0, 0, 1)
    assert weight_distribution(EVEN8)[::2] == (1, 28, 70, 28, 1)


def test_predicates():
    assert is_even(ONES6) and is_self_complementary(ONES6)
    assert not is_even(BinaryCode.from_strings(["111000"]))
    assert is_even(EVEN8) and is_self_complementary(EVEN8)


def test_string_form():
    assert word_to_str(0b110000, 6) == "110000"
    assert BinaryCode.from_strings(["110000", "001100"]).generator_strings() == ["110000", "001100"]
    with pytest.raises(ValueError):
        BinaryCode.from_strings(["1102"])


def test_code_to_group():
    assert code_to_group(BinaryCode.from_strings(["11"])) == SimplexGroup(2, 2, [(0, 0), (1, 1)])
    assert hstar_from_group(code_to_group(ONES6)) == HStarPolynomial([1, 0, 0, 1])
    g = code_to_group(EVEN6)
    assert len(g) == 32
    assert g == group_of_simplex(TABLE_DEGREE_3[5].simplex())
    with pytest.raises(IntegralityError):
        code_to_group(BinaryCode.from_strings(["111000"]))


def test_group_to_code(example_group):
    assert group_to_code(SimplexGroup(2, 2, [(0, 0), (1, 1)])) == BinaryCode.from_strings(["11"])
    assert group_to_code(group_of_simplex(TABLE_DEGREE_4[18].simplex())) == EVEN8
    with pytest.raises(NotHalfIntegralError):
        group_to_code(example_group)


def test_hstar_from_code():
    assert hstar_from_code(BinaryCode.from_strings(["11111111"])) == HStarPolynomial([1, 0, 0, 0, 1])
    assert str(hstar_from_code(EVEN6)) == "1+15t+15t^2+t^3"
    assert hstar_from_code(BinaryCode.from_strings(["11"])) == HStarPolynomial([1, 1])


def test_canonical_code_examples():
    rng = random.Random(3)
    for code in (EVEN6, ONES6, BinaryCode.from_strings(["110000", "001100", "111111"])):
        perm = list(range(6))
        rng.shuffle(perm)
        moved = BinaryCode(6, [permute_word(w, 6, perm) for w in code.generators])
        assert canonical_code(moved) == canonical_code(code)
    three_k2 = group_to_code(group_of_simplex(TABLE_DEGREE_3[3].simplex()))
    k3 = group_to_code(group_of_simplex(TABLE_DEGREE_3[2].simplex()))
    assert canonical_code(three_k2) != canonical_code(k3)
    assert not codes_equivalent(three_k2, k3)
    assert canonical_code(BinaryCode(5)).codewords == (0,)


def test_echelon_subspaces_counts():
    # Gaussian binomial sums: number of subspaces of F_2^m
    assert [sum(1 for _ in echelon_subspaces(m)) for m in range(5)] == [1, 2, 5, 16, 67]
    seen = set()
    for rows in echelon_subspaces(4):
        span = frozenset(BinaryCode(4, rows).codewords)
        assert span not in seen
        seen.add(span)


def test_enumerate_small_lengths_against_brute_force():
    assert len(enumerate_escc(2)) == code_classes_brute(2) == 1
    assert len(enumerate_escc(4)) == code_classes_brute(4) == 3


def test_enumerate_length_six_brute_force():
    assert len(enumerate_escc(6)) == code_classes_brute(6) == 6


def test_enumerate_headline_counts():
    assert len(enumerate_escc(6)) == 6
    assert len(enumerate_escc(8)) == 19


def test_enumerate_bad_lengths():
    for n in (3, 0, 12):
        with pytest.raises(ValueError):
            enumerate_escc(n)


def test_enumerated_codes_invariants():
    for n in (2, 4, 6, 8):
        codes = enumerate_escc(n)
        assert len({canonical_code(c) for c in codes}) == len(codes)
        for c in codes:
            assert is_even(c) and is_self_complementary(c)
            w = weight_distribution(c)
            assert w == w[::-1]
            assert len(c) == 2 ** c.dimension
            assert hstar_from_code(c) == hstar_from_group(code_to_group(c))
            assert group_to_code(code_to_group(c)) == c
