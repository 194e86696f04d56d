"""Scalars: Gaussian rationals and polynomials in h."""

from __future__ import annotations

from fractions import Fraction

import pytest
from hypothesis import given
from hypothesis import strategies as st

from qsymfun.coeff import HBAR, I, GaussRat, HPoly, LinComb, as_hpoly, hp_add, hp_div_nat, hp_mul, parse_hpoly

fracs = st.builds(Fraction, st.integers(-40, 40), st.integers(1, 12))
gauss = st.builds(GaussRat, fracs, fracs)
hpolys = st.dictionaries(st.integers(0, 4), gauss, max_size=4).map(HPoly)


def test_additive_inverse_cancels():
    assert hp_add(HBAR, HBAR * -1).is_zero()


def test_disjoint_degrees_add():
    assert hp_add(HPoly.const(1), HBAR) == HPoly({0: 1, 1: 1})


def test_like_degrees_merge():
    p = HPoly({2: GaussRat(0, 2)})
    q = HPoly({2: 3})
    assert hp_add(p, q) == HPoly({2: GaussRat(3, 2)})


def test_products():
    assert hp_mul(HBAR, HBAR) == HPoly({2: 1})
    m2i = GaussRat(0, -2)
    assert m2i * m2i == GaussRat(-4)
    assert hp_mul(HPoly({0: 1, 1: 1}), HPoly({0: 1, 1: -1})) == HPoly({0: 1, 2: -1})


def test_division_by_natural():
    assert hp_div_nat(HPoly({1: 6}), 3) == HPoly({1: 2})
    assert hp_div_nat(HPoly(), 5).is_zero()
    assert hp_div_nat(HPoly.const(1), 2) == HPoly.const(Fraction(1, 2))
    with pytest.raises((ValueError, ZeroDivisionError)):
        hp_div_nat(HPoly.const(1), 0)


def test_i_squared():
    assert I * I == GaussRat(-1)


def test_printing():
    assert str(HPoly({0: 1, 1: GaussRat(0, 2)})) == "1+2i*h"
    assert str(HPoly()) == "0"
    assert str(GaussRat(Fraction(1, 2), -3)) == "1/2-3i"


@pytest.mark.parametrize("text", ["1+h", "(3+2i)*h^2", "-2i", "0", "h", "-h", "2i*h", "1/2-3i*h^4"])
def test_parse_hpoly_inverts_str(text):
    p = parse_hpoly(text)
    assert parse_hpoly(str(p)) == p


def test_json_round_trip():
    p = HPoly({0: GaussRat(Fraction(-7, 3), 1), 3: 10**30})
    data = p.to_json()
    assert all(isinstance(v, str) for e in data for k, v in e.items() if k != "hbar_deg")
    assert HPoly.from_json(data) == p


def test_lincomb_drops_zero_terms():
    L = LinComb()
    L.add_term("a", HPoly.const(1))
    L.add_term("a", HPoly.const(-1))
    assert L == LinComb()
    assert as_hpoly(3) == HPoly.const(3)


@given(gauss, gauss, gauss)
def test_gauss_field_laws(a, b, c):
    assert (a + b) + c == a + (b + c)
    assert a * (b + c) == a * b + a * c
    assert (a * b).conjugate() == a.conjugate() * b.conjugate()
    if not a.is_zero():
        assert (b / a) * a == b


@given(gauss)
def test_gauss_parse_round_trip(a):
    assert GaussRat.parse(str(a)) == a


@given(hpolys, hpolys, hpolys)
def test_hpoly_ring_laws(p, q, r):
    assert hp_mul(p, hp_mul(q, r)) == hp_mul(hp_mul(p, q), r)
    assert hp_mul(p, hp_add(q, r)) == hp_add(hp_mul(p, q), hp_mul(p, r))
    assert hp_mul(p, q) == hp_mul(q, p)


@given(hpolys)
def test_hpoly_str_round_trip(p):
    assert parse_hpoly(str(p)) == p
    assert HPoly.from_json(p.to_json()) == p
