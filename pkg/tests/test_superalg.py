from __future__ import annotations

from itertools import permutations

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from qsymfun.oracles import odd_oracle_product
from qsymfun.superalg import (
    clifford_product,
    ext_product,
    koszul_sign,
    koszul_sign_formula,
    mask,
    members,
    odd_class,
    odd_sym_product,
    rewrite_word,
)

subsets = st.integers(0, 15)


def test_exterior_signs():
    assert ext_product(mask([1]), mask([2])) == (1, mask([1, 2]))
    assert ext_product(mask([2]), mask([1])) == (-1, mask([1, 2]))
    assert ext_product(mask([1]), mask([1])) is None


def test_clifford_relations():
    assert clifford_product(mask([1]), mask([1])) == (1, 0)
    assert clifford_product(mask([1]), mask([2])) == (1, mask([1, 2]))
    assert clifford_product(mask([1, 2]), mask([2])) == (1, mask([1]))


def test_mask_members_inverse():
    assert members(mask([3, 1])) == [1, 3]


def _apply(prod, x, y):
    if x is None:
        return None
    r = prod(x[1], y)
    return None if r is None else (x[0] * r[0], r[1])


@given(subsets, subsets, subsets)
def test_products_associative(I, J, K):
    for prod in (ext_product, clifford_product):
        left = _apply(prod, prod(I, J), K)
        jk = prod(J, K)
        right = None if jk is None else _apply(prod, (1, I), jk[1])
        if right is not None:
            right = (right[0] * jk[0], right[1])
        assert left == right


@given(st.lists(st.integers(1, 4), max_size=6))
def test_rewriting_matches_pairwise_products(word):
    acc = (1, 0)
    for g in word:
        acc = _apply(ext_product, acc, mask([g]))
        if acc is None:
            break
    assert rewrite_word(word) == acc


def test_koszul_examples():
    assert koszul_sign((0, 0), (0, 0), (1, 0)) == 1
    assert koszul_sign((0, 1), (1, 0), (0, 1)) == -1


@settings(max_examples=60)
@given(st.integers(1, 4).flatmap(lambda n: st.tuples(
    st.lists(st.integers(0, 1), min_size=n, max_size=n),
    st.lists(st.integers(0, 1), min_size=n, max_size=n),
    st.permutations(list(range(n))))))
def test_koszul_formula_matches_reordering(args):
    a, b, sigma = args
    assert koszul_sign(a, b, sigma) == koszul_sign_formula(a, b, sigma)


def test_odd_sym_one_slot_is_exterior_product():
    s, k = ext_product(mask([1]), mask([2]))
    assert odd_sym_product((mask([1]),), (mask([2]),)) == odd_class((k,), s)


def test_nilpotent_slots_vanish():
    one = mask([1])
    assert odd_sym_product((one, one), (one, mask([1, 2]))).terms == {}


def test_odd_product_matches_signed_oracle():
    for I in permutations([mask([1]), mask([2]), mask([1, 2])], 2):
        for J in permutations([0, mask([2]), mask([1])], 2):
            assert odd_sym_product(I, J, 2) == odd_oracle_product(I, J, 2)


def test_generator_out_of_range():
    with pytest.raises(ValueError):
        odd_sym_product((mask([3]),), (0,), 2)
