from __future__ import annotations

import json
from fractions import Fraction

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from qsymfun.coeff import HPoly
from qsymfun.perm import parse_group_spec, subgroups_from_generators, symmetric_group, trivial_group
from qsymfun.sympow import (
    BasedAlgebra,
    SymElement,
    basis_class,
    boolean_algebra,
    boolean_product,
    boolean_product_direct,
    canonicalize,
    classical_sym_product,
    exterior_algebra,
    matrix_units,
    oracle_product,
    permutation_action,
    polya_product,
    truncated_polynomial,
    truncated_weyl,
)

POLY = truncated_polynomial(1, 6)


def x(e):
    return POLY.index[(e,)]


def poly_class(*exps, K=None):
    K = K or symmetric_group(len(exps))
    return basis_class(tuple(x(e) for e in exps), K, POLY)


def test_canonicalize_examples():
    assert canonicalize((3, 1, 2), symmetric_group(3)) == ((1, 2, 3), 1)
    assert canonicalize((1, 1), symmetric_group(2), (1, 1))[1] == 0
    assert canonicalize((2, 1), trivial_group(2)) == ((2, 1), 1)


def test_trivial_group_is_componentwise():
    K = trivial_group(2)
    got = polya_product([poly_class(1, 2, K=K), poly_class(2, 0, K=K)], K, POLY)
    assert got == poly_class(3, 2, K=K)


@pytest.mark.parametrize("a,b,c,d", [(1, 0, 1, 0), (2, 1, 0, 1), (1, 2, 2, 0)])
def test_two_slot_product_rule(a, b, c, d):
    K = symmetric_group(2)
    got = polya_product([poly_class(a, b), poly_class(c, d)], K, POLY)
    want = poly_class(a + c, b + d).scale(Fraction(1, 2)) + poly_class(a + d, b + c).scale(Fraction(1, 2))
    assert got == want


def test_three_factor_product_matches_oracle():
    K = symmetric_group(2)
    f = [poly_class(1, 0)] * 3
    assert polya_product(f, K, POLY) == oracle_product(f, permutation_action(K, POLY), POLY)


def test_single_factor_is_itself():
    K = symmetric_group(3)
    c = poly_class(2, 1, 0)
    assert polya_product([c], K, POLY) == c


def test_classical_product_example():
    got = classical_sym_product(((1,), (0,)), ((1,), (0,)))
    assert got == SymElement({((0,), (2,)): HPoly.const(Fraction(1, 2)), ((1,), (1,)): HPoly.const(Fraction(1, 2))})


def test_family_b_agrees_with_a_on_even_rows():
    A, C = ((2,), (0,)), ((2,), (4,))
    assert classical_sym_product(A, C, "B") == classical_sym_product(A, C, "A")
    assert classical_sym_product(A, C, "D") == classical_sym_product(A, C, "A")
    with pytest.raises(ValueError):
        classical_sym_product(((1,), (1,)), C, "B")


def test_boolean_examples():
    assert boolean_product(1, 1, 2) == {1: Fraction(1, 2), 2: Fraction(1, 2)}
    assert boolean_product(0, 3, 5) == {3: 1}
    assert boolean_product(4, 2, 4) == {4: 1}


@pytest.mark.parametrize("n", range(1, 7))
def test_boolean_formula_matches_enumeration(n):
    for a in range(n + 1):
        for b in range(n + 1):
            assert boolean_product(a, b, n) == boolean_product_direct(a, b, n)
            assert sum(boolean_product(a, b, n).values()) == 1


def test_boolean_polya_product_matches_closed_form():
    alg = boolean_algebra()
    K = symmetric_group(2)
    e = basis_class((1, 0), K, alg)
    got = polya_product([e, e], K, alg)
    want = basis_class((1, 0), K, alg).scale(Fraction(1, 2)) + basis_class((1, 1), K, alg).scale(Fraction(1, 2))
    assert got == want


def test_graded_odd_square_class_vanishes():
    alg = exterior_algebra(1)
    K = symmetric_group(2)
    odd = alg.index[1] if hasattr(alg, "index") and alg.index else 1
    assert basis_class((odd, odd), K, alg) == SymElement()


def test_algebra_json_round_trip():
    alg = truncated_weyl(1, 2)
    back = BasedAlgebra.from_json(json.dumps(alg.to_json()))
    for s in range(alg.dim):
        for t in range(alg.dim):
            assert back.mul(s, t) == alg.mul(s, t)


def test_malformed_algebra_rejected():
    with pytest.raises(ValueError):
        BasedAlgebra.from_json({"table": []})
    with pytest.raises(ValueError):
        BasedAlgebra.from_json({"dim": 2, "table": [{"s": 0, "t": 5, "terms": []}]})


def test_matrix_units_associative():
    matrix_units([2, 1]).check_axioms()


def test_polya_agrees_with_oracle_for_all_s3_subgroups():
    alg = truncated_polynomial(2, 2)
    small = [l for l, nm in enumerate(alg.names) if sum(nm) <= 1]
    for K in subgroups_from_generators(3):
        act = permutation_action(K, alg)
        for s in small:
            for t in small:
                f = [basis_class((s, t, small[0]), K, alg), basis_class((t, t, s), K, alg)]
                assert polya_product(f, K, alg) == oracle_product(f, act, alg)


@settings(max_examples=25, deadline=None)
@given(st.lists(st.tuples(st.integers(0, 2), st.integers(0, 2)), min_size=2, max_size=3))
def test_polya_weyl_matches_oracle(pairs):
    alg = truncated_weyl(1, 8)
    K = parse_group_spec("Sn", 2)
    f = [basis_class(tuple(alg.index[(a, b, 0)] for a, b in [p, (0, 0)]), K, alg) for p in pairs]
    assert polya_product(f, K, alg) == oracle_product(f, permutation_action(K, alg), alg)
