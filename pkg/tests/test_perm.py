from __future__ import annotations

from fractions import Fraction
from itertools import product
from math import comb, factorial

import pytest
from hypothesis import given
from hypothesis import strategies as st

from qsymfun.perm import (
    compose,
    cycle_index,
    cycle_type,
    enumerate_group,
    identity,
    inverse,
    parse_cycles,
    parse_group_spec,
    subgroups_from_generators,
    sym_dimension,
    symmetric_group,
    trivial_group,
)

perms = st.integers(1, 5).flatmap(lambda n: st.permutations(list(range(n))).map(tuple))


def test_s3_from_transposition_and_three_cycle():
    G = enumerate_group(3, [parse_cycles("(1 2)", 3), parse_cycles("(1 2 3)", 3)])
    assert G.order == 6


def test_no_generators_gives_identity():
    assert enumerate_group(4, []).order == 1


def test_klein_four_group():
    G = parse_group_spec('gens:"(1 2)(3 4),(1 3)(2 4)"', 4)
    assert G.order == 4
    assert sorted(cycle_type(g) for g in G) == sorted([(4, 0, 0, 0)] + [(0, 2, 0, 0)] * 3)


def test_cycle_index_small_groups():
    assert cycle_index(symmetric_group(2)) == {(2, 0): Fraction(1, 2), (0, 1): Fraction(1, 2)}
    assert cycle_index(trivial_group(3)) == {(3, 0, 0): 1}
    ci = cycle_index(symmetric_group(3))
    assert ci == {(3, 0, 0): Fraction(1, 6), (1, 1, 0): Fraction(1, 2), (0, 0, 1): Fraction(1, 3)}


def test_sym_dimension_examples():
    assert sym_dimension(2, symmetric_group(2)) == 3
    assert sym_dimension(4, symmetric_group(2)) == 10
    assert sym_dimension(3, trivial_group(4)) == 81


def _orbit_count(d, K):
    seen, count = set(), 0
    for t in product(range(d), repeat=K.degree if hasattr(K, "degree") else len(next(iter(K)))):
        if t in seen:
            continue
        count += 1
        for g in K:
            seen.add(tuple(t[g.index(i)] for i in range(len(t))))
    return count


@pytest.mark.parametrize("d", [1, 2, 3])
@pytest.mark.parametrize("n", [1, 2, 3, 4])
def test_sym_dimension_matches_multisets(d, n):
    assert sym_dimension(d, symmetric_group(n)) == comb(d + n - 1, n)


def test_sym_dimension_matches_orbit_enumeration():
    for K in subgroups_from_generators(3):
        for d in (1, 2, 3):
            assert sym_dimension(d, K) == _orbit_count(d, K)


def test_group_spec_errors():
    with pytest.raises(ValueError):
        parse_group_spec("bogus", 3)
    with pytest.raises(ValueError):
        parse_cycles("(1 5)", 3)


@given(perms)
def test_inverse_and_identity(p):
    n = len(p)
    assert compose(p, inverse(p)) == identity(n)
    assert compose(identity(n), p) == tuple(p)


@given(st.integers(1, 4))
def test_cycle_index_sums_to_one(n):
    ci = cycle_index(symmetric_group(n))
    assert sum(ci.values()) == 1
    assert symmetric_group(n).order == factorial(n)
