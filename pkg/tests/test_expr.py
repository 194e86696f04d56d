from __future__ import annotations

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from qsymfun import expr as ex
from qsymfun.coeff import GaussRat, HPoly
from qsymfun.qsym import QSymElement, dihedral_reduce, star


def test_word_grammar():
    (t,) = ex.parse("x^2 y . x")
    assert ex.weyl_word(t.slots[0]) == [(2, 1), (1, 0)]


def test_qsym_slots():
    el = ex.to_qsym(ex.parse("[x1 y1 | x2]"), m=2)
    ((rows, c),) = el.terms.items()
    assert c == HPoly.const(1)
    # rows are (a_1, a_2, b_1, b_2) per slot
    assert rows == ((0, 1, 0, 0), (1, 0, 1, 0))


def test_qsym_m1_rows():
    el = ex.to_qsym(ex.parse("[x1 y1 | x2]"))
    assert set(el.terms) == {((1, 0), (1, 1))}


@pytest.mark.parametrize("text,col", [("x^", 3), ("[x | y", 7), ("x $", 3), ("2 +", 4)])
def test_error_positions(text, col):
    with pytest.raises(ex.ParseError) as info:
        ex.parse(text)
    assert info.value.col == col
    assert info.value.line == 1


def test_error_on_second_line():
    with pytest.raises(ex.ParseError) as info:
        ex.parse("x y\n + ^")
    assert info.value.line == 2


def test_unknown_variable_for_dialect():
    with pytest.raises(ex.ParseError):
        ex.to_weyl(ex.parse("x z"))
    with pytest.raises(ex.ParseError):
        ex.to_odd(ex.parse("th4"), 3)


def test_weyl_dialect_prints_normal_order():
    assert ex.format_weyl(ex.to_weyl(ex.parse("y . x"))) == "h + x y"
    assert ex.format_weyl(ex.to_weyl(ex.parse("y x - x y"))) == "h"
    assert ex.format_weyl(ex.to_weyl(ex.parse("y . x"), mweyl=True)) == "x y + h x^2"


def test_gaussian_coefficient_printing():
    assert ex.format_coeff_terms([(HPoly({0: GaussRat(1, -2), 1: 1}), "a")]) == "a - 2i a + h a"


def _round_trip_qsym(el, m=1, kind="A"):
    text = ex.format_qsym(el, m, kind != "A")
    back = ex.to_qsym(ex.parse(text), m, kind)
    return back == el, text


def test_zm_round_trip():
    el = star(ex.to_qsym(ex.parse("[zb | 1]"), 1, "zm"), ex.to_qsym(ex.parse("[z | zb]"), 1, "zm"), "zm", 1)
    ok, text = _round_trip_qsym(el, 1, "zm")
    assert ok, text


def test_dihedral_input_is_reduced():
    el = ex.to_qsym(ex.parse("[z^2 | zb]"), 1, "dihedral")
    assert el == dihedral_reduce(el)


def test_odd_round_trip():
    el = ex.to_odd(ex.parse("[th1 th2 | th3] - 2 [th3 | th2 th1]"), 3)
    assert ex.to_odd(ex.parse(ex.format_odd(el)), 3) == el


def test_boolean_round_trip():
    el = ex.to_boolean(ex.parse("1/2 [e | 1 | e] + 3 [1 | 1 | 1]"))
    assert ex.to_boolean(ex.parse(ex.format_boolean(el, 3))) == el


exps = st.integers(0, 3)
monos = st.tuples(exps, exps)
terms = st.lists(st.tuples(st.integers(-5, 5).filter(bool), st.integers(0, 2), st.tuples(monos, monos)), min_size=1, max_size=4)


def _build(ts):
    el = QSymElement()
    for c, h, rows in ts:
        el.add_term(tuple(sorted(rows)), HPoly({h: c}))
    return el


@settings(max_examples=60, deadline=None)
@given(terms)
def test_qsym_print_parse_identity(ts):
    el = _build(ts)
    ok, text = _round_trip_qsym(el)
    assert ok, text


@settings(max_examples=60, deadline=None)
@given(st.lists(monos, min_size=1, max_size=3))
def test_weyl_print_parse_identity(word):
    text = " . ".join(f"x^{a} y^{b}" for a, b in word)
    el = ex.to_weyl(ex.parse(text))
    assert ex.to_weyl(ex.parse(ex.format_weyl(el))) == el
