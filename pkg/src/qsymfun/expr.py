"""Expression language for the command line.

Grammar::

    element  := ['-'] term (('+' | '-') term)*
    term     := [number ['i'] | 'i'] ['*'] factor* ['[' word ('|' word)* ']']
    word     := '1' | factor (['.'] factor)*
    factor   := var ['^' nat] | var '(' args ')'
    var      := [a-z]+[0-9]*
    number   := nat ['/' nat]

``h`` anywhere in a term is the deformation parameter.  Without brackets
the factors of a term form a single tensor slot.  Dialects decide what the
words mean:

* ``weyl``/``mweyl``: letters ``x``, ``y`` in order (noncommutative);
* ``qsym``: per slot, letters ``x``/``y`` (or ``x1..xm``, ``y1..ym``), or
  ``z``/``zb`` for the complex variants, normal ordered on input;
* ``odd``: ``th1..thm`` (anticommuting);
* ``boolean``: ``e`` (idempotent) or ``1``;
* ``sympow``: ``e<k>``, the ``k``-th basis label of a based algebra;
* ``schur``: ``e(r, s..; t, u..)`` for the elementary map ``E_{r s}^{t u}``.
"""

from __future__ import annotations

import re
from dataclasses import dataclass, field
from fractions import Fraction

from .coeff import GaussRat, HPoly, LinComb
from .qsym import QSymElement, canonical_rows, dihedral_reduce
from .weyl import mweyl_normal_order, normal_order

__all__ = [
    "ParseError",
    "Factor",
    "Term",
    "parse",
    "weyl_word",
    "to_weyl",
    "to_qsym",
    "to_odd",
    "to_boolean",
    "to_sympow",
    "to_schur",
    "format_coeff_terms",
    "format_weyl",
    "format_qsym",
    "format_odd",
    "format_boolean",
    "format_sympow",
    "format_schur",
]

DIALECTS = ("weyl", "mweyl", "qsym", "odd", "boolean", "sympow", "schur")


class ParseError(ValueError):
    """Syntax or vocabulary error with a 1-based line/column position."""

    def __init__(self, message: str, line: int = 1, col: int = 1):
        super().__init__(f"{message} at line {line}, column {col}")
        self.message = message
        self.line = line
        self.col = col


_TOKEN = re.compile(
    r"(?P<ws>[ \t\r\n]+)|(?P<num>\d+(?:/\d+)?)|(?P<var>[a-z]+[0-9]*)|(?P<op>[\^.|\[\]+\-*(),;])"
)


@dataclass
class Tok:
    kind: str
    text: str
    line: int
    col: int


def _tokenize(text: str) -> list[Tok]:
    toks = []
    pos, line, lstart = 0, 1, 0
    while pos < len(text):
        m = _TOKEN.match(text, pos)
        if not m:
            raise ParseError(f"unexpected character {text[pos]!r}", line, pos - lstart + 1)
        kind = m.lastgroup
        if kind == "ws":
            for k, ch in enumerate(m.group(), start=pos):
                if ch == "\n":
                    line += 1
                    lstart = k + 1
        else:
            toks.append(Tok(kind, m.group(), line, pos - lstart + 1))
        pos = m.end()
    toks.append(Tok("eof", "", line, pos - lstart + 1))
    return toks


@dataclass
class Factor:
    var: str
    exp: int = 1
    args: tuple | None = None
    line: int = 1
    col: int = 1

    def error(self, message: str) -> ParseError:
        return ParseError(message, self.line, self.col)


@dataclass
class Term:
    coeff: GaussRat
    hdeg: int = 0
    slots: list = field(default_factory=list)  # list of lists of Factor


class _Parser:
    def __init__(self, text: str):
        self.toks = _tokenize(text)
        self.i = 0

    @property
    def cur(self) -> Tok:
        return self.toks[self.i]

    def take(self) -> Tok:
        t = self.toks[self.i]
        self.i += 1
        return t

    def expect(self, text: str) -> Tok:
        t = self.cur
        if t.text != text:
            raise ParseError(f"expected {text!r}, found {t.text or 'end of input'!r}", t.line, t.col)
        return self.take()

    def fail(self, what: str):
        t = self.cur
        raise ParseError(f"expected {what}, found {t.text or 'end of input'!r}", t.line, t.col)

    def nat(self) -> int:
        t = self.cur
        if t.kind != "num" or "/" in t.text:
            self.fail("a natural number")
        self.take()
        return int(t.text)

    def element(self) -> list[Term]:
        terms = []
        sign = 1
        if self.cur.text == "-":
            self.take()
            sign = -1
        while True:
            terms.append(self.term(sign))
            if self.cur.text == "+":
                self.take()
                sign = 1
            elif self.cur.text == "-":
                self.take()
                sign = -1
            elif self.cur.kind == "eof":
                return terms
            else:
                self.fail("'+', '-' or end of input")

    def _starts_factor(self) -> bool:
        return self.cur.kind == "var" and self.cur.text != "i"

    def term(self, sign: int) -> Term:
        coeff = GaussRat(sign)
        seen = False
        if self.cur.kind == "num":
            coeff = coeff * Fraction(self.take().text)
            seen = True
        if self.cur.kind == "var" and self.cur.text == "i":
            self.take()
            coeff = coeff * GaussRat(0, 1)
            seen = True
        if seen and self.cur.text == "*":
            self.take()
        factors = []
        while self._starts_factor():
            factors.append(self.factor())
            if self.cur.text in (".", "*") and self.toks[self.i + 1].kind == "var":
                self.take()
        hdeg = sum(f.exp for f in factors if f.var == "h")
        rest = [f for f in factors if f.var != "h"]
        if self.cur.text == "[":
            if rest:
                raise rest[0].error("only h may precede a bracketed tensor")
            self.take()
            slots = [self.word()]
            while self.cur.text == "|":
                self.take()
                slots.append(self.word())
            self.expect("]")
            return Term(coeff, hdeg, slots)
        if not seen and not factors:
            self.fail("a term")
        return Term(coeff, hdeg, [rest])

    def word(self) -> list[Factor]:
        if self.cur.kind == "num" and self.cur.text == "1":
            self.take()
            return []
        if not self._starts_factor():
            self.fail("a monomial or '1'")
        out = [self.factor()]
        while True:
            if self.cur.text in (".", "*"):
                self.take()
                if not self._starts_factor():
                    self.fail("a factor")
                out.append(self.factor())
            elif self._starts_factor():
                out.append(self.factor())
            else:
                return out

    def factor(self) -> Factor:
        t = self.take()
        f = Factor(t.text, 1, None, t.line, t.col)
        if self.cur.text == "(":
            self.take()
            args: list = [[]]
            while True:
                args[-1].append(self.nat())
                if self.cur.text == ",":
                    self.take()
                elif self.cur.text == ";":
                    self.take()
                    args.append([])
                else:
                    break
            self.expect(")")
            f.args = tuple(tuple(a) for a in args)
        if self.cur.text == "^":
            self.take()
            f.exp = self.nat()
        return f


def parse(text: str) -> list[Term]:
    """Parse an element into terms; raises :class:`ParseError`."""
    return _Parser(text).element()


# ---------------------------------------------------------------------------
# dialects
# ---------------------------------------------------------------------------


def _hp(t: Term) -> HPoly:
    return HPoly({t.hdeg: t.coeff})


def _single_slot(t: Term) -> list[Factor]:
    if len(t.slots) != 1:
        raise ParseError("this dialect takes a single tensor slot", *_pos(t))
    return t.slots[0]


def weyl_word(factors: list[Factor], x: str = "x", y: str = "y") -> list[tuple[int, int]]:
    """Letters in order to blocks ``x^{a_1} y^{b_1} x^{a_2} ...``."""
    blocks: list[list[int]] = []
    for f in factors:
        if f.args is not None:
            raise f.error("unexpected arguments")
        if f.var == x:
            if not blocks or blocks[-1][1]:
                blocks.append([0, 0])
            blocks[-1][0] += f.exp
        elif f.var == y:
            if not blocks:
                blocks.append([0, 0])
            blocks[-1][1] += f.exp
        else:
            raise f.error(f"unknown variable {f.var!r} (expected {x} or {y})")
    return [tuple(b) for b in blocks]


def to_weyl(terms: list[Term], mweyl: bool = False) -> LinComb:
    """Normal form as a combination keyed by ``(a, b)`` with HPoly coefficients."""
    out = LinComb()
    order = mweyl_normal_order if mweyl else normal_order
    for t in terms:
        for (a, b, k), c in order(weyl_word(_single_slot(t))).items():
            out.add_term((a, b), HPoly({t.hdeg + k: t.coeff * c}))
    return out


_QVAR = re.compile(r"(x|y|z|zb)(\d*)")


def _slot_rows(factors, m: int, slot: int, complex_: bool):
    """Normal-ordered expansion of one slot: ``{row: HPoly}``."""
    xs, ys = ("z", "zb") if complex_ else ("x", "y")
    per_pair: list[list[Factor]] = [[] for _ in range(m)]
    for f in factors:
        mm = _QVAR.fullmatch(f.var)
        if not mm or mm.group(1) not in (xs, ys) or f.args is not None:
            raise f.error(f"unknown variable {f.var!r} (expected {xs}, {ys} with optional index)")
        idx = mm.group(2)
        if m == 1:
            # single pair: the index may name the pair or the slot
            if idx and int(idx) not in (1, slot):
                raise f.error(f"variable {f.var!r} does not belong to slot {slot}")
            q = 0
        else:
            if not idx or not 1 <= int(idx) <= m:
                raise f.error(f"variable {f.var!r} needs an index in 1..{m}")
            q = int(idx) - 1
        per_pair[q].append(Factor("x" if mm.group(1) == xs else "y", f.exp, None, f.line, f.col))
    weight = GaussRat(0, -2) if complex_ else GaussRat(1)
    acc = {((), ()): HPoly.const(1)}
    for q in range(m):
        nf = normal_order(weyl_word(per_pair[q]))
        new: dict = {}
        for (aa, bb), c in acc.items():
            for (a, b, k), v in nf.items():
                key = (aa + (a,), bb + (b,))
                p = c * HPoly({k: weight**k * v})
                new[key] = new[key] + p if key in new else p
        acc = new
    return {aa + bb: c for (aa, bb), c in acc.items() if c}


def to_qsym(terms: list[Term], m: int = 1, kind: str = "A") -> QSymElement:
    """Classes of exponent matrices.  ``kind`` ``zm``/``dihedral`` switch to
    ``z, zb``; ``dihedral`` also reduces to canonical form."""
    complex_ = kind in ("zm", "dihedral")
    if complex_ and m != 1:
        raise ValueError("the complex variants use one variable pair per slot")
    out = QSymElement()
    n = None
    for t in terms:
        if n is None:
            n = len(t.slots)
        elif len(t.slots) != n:
            raise ParseError(f"all terms need {n} tensor slots", *_pos(t))
        acc = {(): _hp(t)}
        for j, word in enumerate(t.slots, start=1):
            rows = _slot_rows(word, m, j, complex_)
            acc = {key + (r,): c * v for key, c in acc.items() for r, v in rows.items()}
        for key, c in acc.items():
            out.add_term(canonical_rows(key), c)
    if kind == "dihedral":
        out = dihedral_reduce(out)
    return out


def _pos(t: Term):
    for w in t.slots:
        for f in w:
            return f.line, f.col
    return 1, 1


_TH = re.compile(r"th(\d+)")


def to_odd(terms: list[Term], m: int) -> LinComb:
    from .superalg import odd_class, rewrite_word

    out = LinComb()
    n = None
    for t in terms:
        if n is None:
            n = len(t.slots)
        elif len(t.slots) != n:
            raise ParseError(f"all terms need {n} tensor slots", *_pos(t))
        masks = []
        sign = 1
        for word in t.slots:
            letters = []
            for f in word:
                mm = _TH.fullmatch(f.var)
                if not mm or f.args is not None or not 1 <= int(mm.group(1)) <= m:
                    raise f.error(f"unknown variable {f.var!r} (expected th1..th{m})")
                letters += [int(mm.group(1))] * f.exp
            # each slot is sorted in place; no factor crosses another slot
            r = rewrite_word(letters)
            if r is None:
                sign = 0
                break
            sign *= r[0]
            masks.append(r[1])
        if sign:
            for key, c in odd_class(tuple(masks), 1).terms.items():
                out.add_term(key, _hp(t) * c * sign)
    return out


def to_boolean(terms: list[Term]) -> LinComb:
    """Classes ``[a]``: ``a`` is the number of slots holding ``e``."""
    out = LinComb()
    n = None
    for t in terms:
        if n is None:
            n = len(t.slots)
        elif len(t.slots) != n:
            raise ParseError(f"all terms need {n} tensor slots", *_pos(t))
        a = 0
        for word in t.slots:
            for f in word:
                if f.var != "e" or f.args is not None:
                    raise f.error(f"unknown variable {f.var!r} (expected e)")
            a += bool(word)
        out.add_term(a, _hp(t))
    return out


_LABEL = re.compile(r"e(\d+)")


def to_sympow(terms: list[Term], alg, action) -> LinComb:
    """Classes in ``(A^{(x)n})_K``; each slot word is multiplied out in ``alg``."""
    from .sympow import SymElement, _classes

    tensors: dict = {}
    n = action.n
    for t in terms:
        if len(t.slots) != n:
            raise ParseError(f"terms need {n} tensor slots", *_pos(t))
        acc = {(): _hp(t)}
        for word in t.slots:
            if alg.unit is None and not word:
                raise ParseError("this algebra has no unit label", *_pos(t))
            vec = {alg.unit: HPoly.const(1)} if not word else None
            for f in word:
                mm = _LABEL.fullmatch(f.var)
                if not mm or f.args is not None or int(mm.group(1)) >= alg.dim:
                    raise f.error(f"unknown label {f.var!r} (expected e0..e{alg.dim - 1})")
                lab = {int(mm.group(1)): HPoly.const(1)}
                for _ in range(f.exp):
                    vec = lab if vec is None else alg.mul_vec(vec, lab)
            acc = {key + (l,): c * v for key, c in acc.items() for l, v in vec.items()}
        for key, c in acc.items():
            tensors[key] = tensors[key] + c if key in tensors else c
    out = SymElement()
    _classes(action, {k: c for k, c in tensors.items() if c}, out)
    return out


def to_schur(terms: list[Term], m, par_src, par_tgt) -> LinComb:
    from .schur import SchurElement, elem_trans, schur_class

    k = len(m)
    out = SchurElement()
    for t in terms:
        slots = []
        for word in t.slots:
            if len(word) != 1 or word[0].var != "e" or word[0].args is None or word[0].exp != 1:
                f = word[0] if word else None
                raise ParseError("each slot must be one e(r, s..; t, u..)", *((f.line, f.col) if f else _pos(t)))
            f = word[0]
            if len(f.args) != 2 or any(len(a) != k + 1 for a in f.args):
                raise f.error(f"e(...) needs {k + 1} numbers on each side of ';'")
            (r, *s), (tt, *u) = f.args
            slots.append(elem_trans(r, s, tt, u, m))
        out = out + schur_class(slots, m, par_src, par_tgt, _hp(t))
    return out


# ---------------------------------------------------------------------------
# printing
# ---------------------------------------------------------------------------


def _coeff_parts(c: GaussRat):
    if c.re:
        yield GaussRat(c.re)
    if c.im:
        yield GaussRat(0, c.im)


def format_coeff_terms(items) -> str:
    """``items``: ``[(HPoly, body)]`` with ``body`` the printed monomial
    (``""`` for the unit).  Gaussian coefficients are split into a real and
    an imaginary term so that every printed term is re-parseable."""
    parts = []
    for poly, body in items:
        for d, c in poly.items():
            for part in _coeff_parts(c):
                neg = part.re < 0 or part.im < 0
                mag = -part if neg else part
                h = "" if d == 0 else ("h" if d == 1 else f"h^{d}")
                bits = []
                if mag != 1 or (not h and not body):
                    bits.append(str(mag))
                if h:
                    bits.append(h)
                if body:
                    bits.append(body)
                parts.append(("-" if neg else "+", " ".join(bits)))
    if not parts:
        return "0"
    out = ("-" if parts[0][0] == "-" else "") + parts[0][1]
    for sgn, s in parts[1:]:
        out += f" {sgn} {s}"
    return out


def _mono(*pairs) -> str:
    bits = [v if e == 1 else f"{v}^{e}" for v, e in pairs if e]
    return " ".join(bits) if bits else "1"


def format_weyl(el: LinComb) -> str:
    items = []
    for (a, b), c in el.sorted_items():
        body = _mono(("x", a), ("y", b))
        items.append((c, "" if body == "1" else body))
    return format_coeff_terms(items)


def format_qsym(el: LinComb, m: int = 1, complex_: bool = False) -> str:
    xs, ys = ("z", "zb") if complex_ else ("x", "y")
    items = []
    for rows, c in el.sorted_items():
        slots = []
        for r in rows:
            if m == 1:
                slots.append(_mono((xs, r[0]), (ys, r[1])))
            else:
                slots.append(_mono(*[(f"{xs}{q + 1}", r[q]) for q in range(m)], *[(f"{ys}{q + 1}", r[m + q]) for q in range(m)]))
        items.append((c, "[" + " | ".join(slots) + "]"))
    return format_coeff_terms(items)


def format_odd(el: LinComb) -> str:
    from .superalg import members

    items = []
    for masks, c in el.sorted_items():
        slots = [" ".join(f"th{q}" for q in members(I)) or "1" for I in masks]
        items.append((c, "[" + " | ".join(slots) + "]"))
    return format_coeff_terms(items)


def format_boolean(el: LinComb, n: int) -> str:
    items = []
    for a, c in el.sorted_items():
        items.append((c, "[" + " | ".join(["e"] * a + ["1"] * (n - a)) + "]"))
    return format_coeff_terms(items)


def format_sympow(el: LinComb, unit=None) -> str:
    items = []
    for labels, c in el.sorted_items():
        items.append((c, "[" + " | ".join("1" if l == unit else f"e{l}" for l in labels) + "]"))
    return format_coeff_terms(items)


def format_schur(el: LinComb) -> str:
    items = []
    for tup, c in el.sorted_items():
        slots = []
        for e in tup:
            zero = ",".join(["0"] * len(e.d))
            slots.append(f"e({e.r},{zero};{e.t},{','.join(map(str, e.d))})")
        items.append((c, "[" + " | ".join(slots) + "]"))
    return format_coeff_terms(items)
