from __future__ import annotations

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from qsymfun.weyl import (
    BudgetExceeded,
    falling,
    factorial_identity_check,
    genseries_check,
    mweyl_coord,
    mweyl_coords_closed,
    mweyl_coords_functions,
    mweyl_factorial_identity_check,
    mweyl_normal_order,
    mweyl_reorder,
    normal_coord,
    normal_coords_closed,
    normal_coords_flows,
    normal_coords_pairings,
    normal_order,
    normal_order_letters,
    reorder_yx,
    rising,
    word_letters,
)

words = st.lists(st.tuples(st.integers(0, 3), st.integers(0, 3)), min_size=1, max_size=3)


def test_factorials():
    assert falling(5, 2) == 20 and falling(2, 3) == 0
    assert rising(2, 3) == 24 and rising(0, 0) == 1


def test_defining_relation():
    assert reorder_yx(1, 1) == {(1, 1, 0): 1, (0, 0, 1): 1}
    assert normal_order([(0, 1), (1, 0)]) == {(1, 1, 0): 1, (0, 0, 1): 1}


def test_reorder_examples():
    assert reorder_yx(0, 3) == {(3, 0, 0): 1}
    assert reorder_yx(2, 2) == {(2, 2, 0): 1, (1, 1, 1): 4, (0, 0, 2): 2}


def test_normal_order_examples():
    assert normal_order([(1, 1), (1, 1)]) == {(2, 2, 0): 1, (1, 1, 1): 1}
    assert normal_order([]) == {(0, 0, 0): 1}


def test_coordinate_examples():
    assert normal_coords_closed([(0, 1), (1, 0)], 1) == 1
    assert normal_coords_closed([(0, 2), (2, 0)], 1) == 4
    assert normal_coords_pairings([(0, 1), (1, 0)], 1) == 1
    assert normal_coords_pairings([(1, 0), (0, 1)], 1) == 0
    assert normal_coords_pairings([(1, 1), (1, 1)], 1) == 1
    assert normal_coords_flows([(0, 1), (1, 0)], 1) == 1
    A = [(1, 1)] * 3
    assert normal_coords_flows(A, 2) == normal_coords_pairings(A, 2) == normal_coord(A, 2)


def test_empty_pairing_and_flow():
    for A in ([(2, 3)], [(1, 2), (3, 0)]):
        assert normal_coords_closed(A, 0) == normal_coords_pairings(A, 0) == normal_coords_flows(A, 0) == 1


def test_budget_is_enforced():
    with pytest.raises(BudgetExceeded):
        normal_coords_pairings([(3, 3)] * 3, 2, budget=5)


def test_genseries_small():
    assert genseries_check(1, 3, 3, 2) == []
    assert genseries_check(2, 2, 2, 2) == []


def test_mweyl_examples():
    assert mweyl_reorder(1, 1) == {(1, 1, 0): 1, (2, 0, 1): 1}
    assert mweyl_reorder(1, 2) == {(2, 1, 0): 1, (3, 0, 1): 2}
    assert mweyl_reorder(0, 4) == {(4, 0, 0): 1}
    assert mweyl_normal_order([(0, 1), (2, 0)]) == {(2, 1, 0): 1, (3, 0, 1): 2}
    assert mweyl_normal_order([]) == {(0, 0, 0): 1}
    assert mweyl_coords_closed([(0, 2), (1, 0)], 2) == 2 == mweyl_coord([(0, 2), (1, 0)], 2)
    assert mweyl_coords_functions([(0, 1), (2, 0)], 1) == 2
    assert mweyl_coords_functions([(1, 0), (0, 1)], 1) == 0


def test_letters_helpers():
    assert word_letters([(2, 1), (0, 1)]) == "xxyy"
    assert normal_order_letters("yx") == normal_order([(0, 1), (1, 0)])


@settings(max_examples=60, deadline=None)
@given(words, st.integers(0, 4))
def test_four_coordinate_methods_agree(A, k):
    v = normal_coord(A, k)
    assert normal_coords_closed(A, k) == v
    assert normal_coords_pairings(A, k) == v
    assert normal_coords_flows(A, k) == v


@settings(max_examples=60, deadline=None)
@given(words, st.integers(0, 4))
def test_mweyl_methods_agree(A, k):
    v = mweyl_coord(A, k)
    assert mweyl_coords_closed(A, k) == v
    assert mweyl_coords_functions(A, k) == v


@settings(max_examples=30, deadline=None)
@given(st.lists(st.tuples(st.integers(0, 2), st.integers(0, 2)), min_size=1, max_size=3), st.integers(0, 10))
def test_factorial_identities(A, t):
    lhs, rhs = factorial_identity_check(A, t)
    assert lhs == rhs
    lhs, rhs = mweyl_factorial_identity_check(A, t)
    assert lhs == rhs


@settings(max_examples=40, deadline=None)
@given(words, words)
def test_normal_order_is_multiplicative_on_concatenation(A, B):
    # (AB) normal-ordered equals normal-ordering A, B, then the product of the results
    left = normal_order(A + B)
    out = {}
    for (a1, b1, k1), c1 in normal_order(A).items():
        for (a2, b2, k2), c2 in normal_order(B).items():
            for (a, b, k), c in normal_order([(a1, b1), (a2, b2)]).items():
                key = (a, b, k + k1 + k2)
                out[key] = out.get(key, 0) + c * c1 * c2
    assert left == {k: v for k, v in out.items() if v}
