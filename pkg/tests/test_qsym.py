from __future__ import annotations

from fractions import Fraction

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from qsymfun.coeff import HPoly, GaussRat
from qsymfun.oracles import dihedral_oracle_star, dihedral_symmetrize, msymweyl_oracle, symweyl_oracle, weyl_oracle_star, zm_oracle_star
from qsymfun.qsym import (
    QSymElement,
    dihedral_star,
    is_admissible,
    msymweyl_multiproduct,
    msymweyl_multiproduct_direct,
    mweyl_star,
    qclass,
    qsym_star_A,
    qsym_star_BD,
    star,
    symweyl_multiproduct,
    symweyl_multiproduct_direct,
    wreath_zm_star,
)
from qsymfun.weyl import mweyl_normal_order

half = Fraction(1, 2)


def el(d):
    return QSymElement({k: v if isinstance(v, HPoly) else HPoly.const(v) for k, v in d.items()})


def test_ordered_product_needs_no_correction():
    assert qsym_star_A(((1, 0),), ((0, 1),)) == el({((1, 1),): 1})


def test_defining_relation_via_star():
    assert qsym_star_A(((0, 1),), ((1, 0),)) == el({((1, 1),): 1, ((0, 0),): HPoly({1: 1})})


def test_two_slot_average():
    got = qsym_star_A(((1, 0), (0, 0)), ((0, 1), (0, 0)))
    assert got == el({((0, 0), (1, 1)): half, ((0, 1), (1, 0)): half})


def test_type_b_and_d_match_type_a():
    A, C = ((1, 1), (0, 2)), ((2, 0), (1, 1))
    assert qsym_star_BD(A, C, "B") == qsym_star_A(A, C)
    assert qsym_star_BD(A, C, "D") == qsym_star_A(A, C)
    with pytest.raises(ValueError):
        qsym_star_BD(((1, 0),), ((1, 1),), "B")


def test_complex_relation():
    # zb z = z zb - 2i h  in the cyclic quotient with m = 1
    got = wreath_zm_star(((0, 1),), ((1, 0),), 1)
    assert got == el({((1, 1),): 1, ((0, 0),): HPoly({1: GaussRat(0, -2)})})


def test_zm_matches_character_oracle():
    A, C = ((0, 2), (0, 0)), ((2, 0), (0, 0))
    assert wreath_zm_star(A, C, 2) == zm_oracle_star(A, C, 2)


def test_zm_admissibility():
    assert is_admissible(((1, 1),), "zm", 3)
    assert not is_admissible(((1, 0),), "zm", 2)
    with pytest.raises(ValueError):
        wreath_zm_star(((1, 0),), ((0, 0),), 2)


def test_dihedral_unit_and_small_case():
    A = ((1, 0), (0, 1))
    assert dihedral_star(A, ((0, 0), (0, 0)), 1) == dihedral_star(((0, 0), (0, 0)), A, 1)
    assert dihedral_star(((1, 0),), ((1, 0),), 1) == el({((0, 2),): half, ((1, 1),): half})


@pytest.mark.parametrize("A,C", [(((1, 0), (0, 1)), ((0, 1), (0, 0))), (((1, 1), (0, 0)), ((2, 0), (0, 1)))])
def test_dihedral_matches_oracle_after_symmetrizing(A, C):
    raw, _ = dihedral_oracle_star(A, C, 1)
    ours = dihedral_star(A, C, 1)
    D = 8
    assert dihedral_symmetrize(ours, D) == dihedral_symmetrize(raw, D)


def test_multiproduct_examples():
    assert symweyl_multiproduct([((2, 1),)]) == el({((2, 1),): 1})
    two = [((1, 0),), ((0, 1),)]
    assert symweyl_multiproduct(two) == qsym_star_A(*two)
    three = [((0, 1), (1, 0))] * 3
    assert symweyl_multiproduct(three) == symweyl_multiproduct_direct(three) == symweyl_oracle(three)


def test_mweyl_examples():
    nf = mweyl_normal_order([(0, 1), (2, 0)])
    want = QSymElement()
    for (a, b, k), c in nf.items():
        want.add_term(((a, b),), HPoly({k: c}))
    assert msymweyl_multiproduct([((0, 1),), ((2, 0),)]) == want
    assert mweyl_star(((0, 1),), ((2, 0),)) == el({((2, 1),): 1, ((3, 0),): HPoly({1: 2})})
    f = [((0, 1), (1, 0)), ((1, 0), (0, 1))]
    assert msymweyl_multiproduct(f) == msymweyl_multiproduct_direct(f) == msymweyl_oracle(f)


rows1 = st.tuples(st.integers(0, 2), st.integers(0, 2))
rows2 = st.tuples(rows1, rows1)


@settings(max_examples=25, deadline=None)
@given(rows2, rows2)
def test_type_a_matches_symmetrized_oracle(A, C):
    assert qsym_star_A(A, C) == weyl_oracle_star(A, C)


@settings(max_examples=20, deadline=None)
@given(rows2, rows2, rows2)
def test_star_is_associative(A, B, C):
    X, Y, Z = qclass(A), qclass(B), qclass(C)
    assert star(star(X, Y), Z) == star(X, star(Y, Z))


def _poisson(f, g):
    (a1, b1), (a2, b2) = f, g
    out = {}
    if b1 and a2:
        out[(a1 + a2 - 1, b1 + b2 - 1)] = out.get((a1 + a2 - 1, b1 + b2 - 1), 0) + b1 * a2
    if b2 and a1:
        out[(a1 + a2 - 1, b1 + b2 - 1)] = out.get((a1 + a2 - 1, b1 + b2 - 1), 0) - b2 * a1
    return {k: v for k, v in out.items() if v}


@pytest.mark.parametrize("f", [(a, b) for a in range(4) for b in range(4) if a + b <= 3])
@pytest.mark.parametrize("g", [(a, b) for a in range(4) for b in range(4) if a + b <= 3])
def test_first_order_commutator_is_poisson_bracket(f, g):
    diff = star(qclass((f,)), qclass((g,))) + star(qclass((g,)), qclass((f,))).scale(-1)
    first = {rows[0]: c.coeffs.get(1) for rows, c in diff.terms.items() if c.coeffs.get(1)}
    assert first == _poisson(f, g)
