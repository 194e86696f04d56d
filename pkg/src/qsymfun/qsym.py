"""Star products on coinvariants of Weyl-type algebras.

An exponent matrix is a tuple of ``n`` rows; each row is
``(a_1..a_m, b_1..b_m)`` and stands for ``x^a y^b`` in one tensor slot
(``z^a zb^b`` for the complex variants, where ``m = 1``).  A
:class:`QSymElement` maps canonical matrices to HPoly coefficients.
"""

from __future__ import annotations

import heapq
import itertools
from collections.abc import Sequence
from fractions import Fraction
from functools import lru_cache
from math import comb, factorial

from .coeff import GaussRat, HPoly, LinComb
from .weyl import (
    falling,
    mweyl_coords_closed,
    normal_coords_closed,
    rising,
)

__all__ = [
    "QSymElement",
    "as_matrix",
    "canonical_rows",
    "dihedral_reduce",
    "dihedral_star_elements",
    "reflect",
    "qclass",
    "qsym_star_A",
    "qsym_star_BD",
    "wreath_zm_star",
    "dihedral_star",
    "mweyl_star",
    "star",
    "symweyl_multiproduct",
    "symweyl_multiproduct_direct",
    "msymweyl_multiproduct",
    "msymweyl_multiproduct_direct",
    "check_admissible",
    "is_admissible",
]

MINUS_2I = GaussRat(0, -2)


class QSymElement(LinComb):
    """Linear combination of canonical exponent matrices."""


def as_matrix(rows) -> tuple:
    rows = tuple(tuple(int(x) for x in r) for r in rows)
    if not rows:
        raise ValueError("exponent matrix needs at least one row")
    w = len(rows[0])
    if w % 2 or w == 0 or any(len(r) != w for r in rows):
        raise ValueError("rows must all have the same even length 2m")
    if any(x < 0 for r in rows for x in r):
        raise ValueError("exponents must be natural numbers")
    return rows


def canonical_rows(rows) -> tuple:
    return tuple(sorted(rows))


def qclass(rows, coeff=1, kind: str = "A") -> QSymElement:
    rows = as_matrix(rows)
    out = QSymElement()
    out.add_term(canonical_rows(rows), HPoly.const(coeff) if not isinstance(coeff, HPoly) else coeff)
    if kind == "dihedral":
        return dihedral_reduce(out)
    return out


def _shape(A, C):
    A, C = as_matrix(A), as_matrix(C)
    if len(A) != len(C) or len(A[0]) != len(C[0]):
        raise ValueError("exponent matrices must have equal shapes")
    return A, C, len(A), len(A[0]) // 2


def _slot_terms(arow, crow, m, weight):
    """Normal ordering of ``(x^a y^b)(x^c y^d)`` in one slot:
    ``[(row, hbar_deg, coeff)]`` from ``y^b x^c = sum C(b,I)(c)_I x^{c-I} y^{b-I} h^I``."""
    a, b = arow[:m], arow[m:]
    c, d = crow[:m], crow[m:]
    out = []
    for I in itertools.product(*(range(min(b[q], c[q]) + 1) for q in range(m))):
        coef = 1
        for q in range(m):
            coef *= comb(b[q], I[q]) * falling(c[q], I[q])
        s = sum(I)
        row = tuple(a[q] + c[q] - I[q] for q in range(m)) + tuple(b[q] + d[q] - I[q] for q in range(m))
        out.append((row, s, weight(s) * coef if weight else coef))
    return out


def _sigma_average(A, C, slot_fn, key_fn, scale) -> QSymElement:
    """``scale * sum_sigma prod_j slot_fn(A_j, C_{sigma^-1(j)})`` with keys canonicalized."""
    n = len(A)
    out = QSymElement()
    for sigma in itertools.permutations(range(n)):
        sC = [None] * n
        for i, s in enumerate(sigma):
            sC[s] = C[i]
        per_slot = [slot_fn(A[j], sC[j]) for j in range(n)]
        for combo in itertools.product(*per_slot):
            rows = key_fn(tuple(r for r, _, _ in combo))
            h = sum(k for _, k, _ in combo)
            c = scale
            for _, _, x in combo:
                c = c * x
            out.add_term(rows, HPoly({h: c}))
    return out


def qsym_star_A(A, C) -> QSymElement:
    """``A * C = (1/n!) sum_{sigma, I} C(b,I) (sigma(c))_I class(A + sigma(C) - (I,I)) h^|I|``."""
    A, C, n, m = _shape(A, C)
    return _sigma_average(A, C, lambda r, s: _slot_terms(r, s, m, None), canonical_rows, Fraction(1, factorial(n)))


def is_admissible(rows, kind: str, m_cyc: int = 1) -> bool:
    rows = as_matrix(rows)
    if kind == "A":
        return True
    if kind == "B":
        return all(sum(r) % 2 == 0 for r in rows)
    if kind == "D":
        return len({sum(r) % 2 for r in rows}) <= 1
    if kind in ("zm", "dihedral"):
        if len(rows[0]) != 2:
            raise ValueError("complex variants use one variable pair per slot")
        return all((r[1] - r[0]) % m_cyc == 0 for r in rows)
    raise ValueError(f"unknown type {kind!r}")


def check_admissible(rows, kind: str, m_cyc: int = 1):
    if not is_admissible(rows, kind, m_cyc):
        what = {
            "B": "every row must have even total degree",
            "D": "all rows must share the same total-degree parity",
        }.get(kind, f"every row (a,b) needs b - a divisible by {m_cyc}")
        raise ValueError(f"inadmissible monomial for type {kind}: {what}")


def qsym_star_BD(A, C, family: str) -> QSymElement:
    """Star product in the ``B_n`` or ``D_n`` quotient: the type ``A`` formula
    on admissible monomials."""
    if family not in ("B", "D"):
        raise ValueError("family must be B or D")
    check_admissible(A, family)
    check_admissible(C, family)
    return qsym_star_A(A, C)


def wreath_zm_star(A, C, m_cyc: int) -> QSymElement:
    """``(1/n!) sum (-2i)^|I| C(b,I)(sigma(c))_I class(A + sigma(C) - (I,I)) h^|I|``
    on ``Z_m``-admissible monomials (``b - a`` divisible by ``m_cyc`` per row)."""
    if m_cyc < 1:
        raise ValueError("m_cyc must be positive")
    A, C, n, m = _shape(A, C)
    check_admissible(A, "zm", m_cyc)
    check_admissible(C, "zm", m_cyc)
    return _sigma_average(
        A, C, lambda r, s: _slot_terms(r, s, 1, lambda j: MINUS_2I**j), canonical_rows, Fraction(1, factorial(n))
    )


def _rho_row(row, weighted: bool):
    """Reflection of one slot: ``z^a zb^b -> zb^a z^b``, normal ordered as
    ``sum_j C(a,j) (b)_j w^j h^j z^{b-j} zb^{a-j}``."""
    a, b = row
    out = []
    for j in range(min(a, b) + 1):
        c = comb(a, j) * falling(b, j)
        out.append(((b - j, a - j), j, MINUS_2I**j * c if weighted else c))
    return out


def _flip(p: HPoly) -> HPoly:
    """``p(h) -> p(-h)``."""
    return HPoly({d: (-c if d % 2 else c) for d, c in p.items()})


def reflect(el: LinComb, weighted: bool = True) -> QSymElement:
    """The global reflection ``z_j <-> zb_j`` (all slots at once) with
    ``h -> -h``, an automorphism of the tensor power of the Weyl algebra."""
    out = QSymElement()
    for rows, coeff in el.terms.items():
        base = _flip(coeff)
        for combo in itertools.product(*(_rho_row(r, weighted) for r in rows)):
            key = canonical_rows(tuple(r for r, _, _ in combo))
            h = sum(k for _, k, _ in combo)
            c = 1
            for _, _, x in combo:
                c = c * x
            out.add_term(key, base.shift(h) * c)
    return out


def _swap_key(rows) -> tuple:
    return canonical_rows(tuple((r[1], r[0]) for r in rows))


def dihedral_reduce(el: LinComb, weighted: bool = True) -> QSymElement:
    """Canonical form in the coinvariants of the global reflection.

    Kept basis: ``h^k Z^A`` with ``A`` lexicographically below its swap, and
    ``h^{2j} Z^A`` for swap-symmetric ``A``.  Other terms are rewritten with
    ``class(X) = class(rho X)``; every rewrite lowers the ``z``-degree of the
    correction terms, so the process terminates.
    """
    work: dict = {}
    heap: list = []

    def push(key, x):
        if key in work:
            work[key] = work[key] + x
        else:
            work[key] = x
            heapq.heappush(heap, (-sum(map(sum, key[0])), key))

    for rows, c in el.terms.items():
        for d, x in c.items():
            push((canonical_rows(rows), d), x)
    out: dict = {}
    while heap:
        # highest z-degree first: rewrites only create lower-degree corrections
        _, key = heapq.heappop(heap)
        c = work.pop(key)
        if not c:
            continue
        rows, d = key
        swapped = _swap_key(rows)
        if swapped > rows or (swapped == rows and d % 2 == 0):
            slot = out.setdefault(rows, {})
            slot[d] = slot.get(d, 0) + c
            continue
        sign = -1 if d % 2 else 1
        symmetric = swapped == rows
        for combo in itertools.product(*(_rho_rows_cached(r, weighted) for r in rows)):
            h = sum(k for _, k, _ in combo)
            if symmetric and h == 0:
                continue
            x = 1
            for _, _, y in combo:
                x = x * y
            krows = canonical_rows(tuple(r for r, _, _ in combo))
            if symmetric:
                # odd d: class(h^d Z^A) = -1/2 h^d class(lower)
                push((krows, d + h), c * x * Fraction(-1, 2))
            else:
                # class(h^d Z^A) = (-1)^d h^d (Z^{A'} + lower)
                push((krows, d + h), c * x * sign)
    res = QSymElement()
    for rows, coeffs in out.items():
        p = HPoly(coeffs)
        if p:
            res.terms[rows] = p
    return res


@lru_cache(maxsize=None)
def _rho_rows_cached(row, weighted):
    return tuple(_rho_row(row, weighted))


def dihedral_star(A, C, m_cyc: int, weighted: bool = True) -> QSymElement:
    """Product in the coinvariants of ``<rho> x (Z_m^n x| S_n)``, ``rho`` the
    global reflection ``z <-> zb`` with ``h -> -h``:

    half the ``Z_m`` product with ``C`` plus half the product with
    ``rho(C) = zb^c z^d``, whose reordering gives ``C(b+c, I) (d)_I`` and
    exponents ``A + (sigma(d), sigma(c)) - (I,I)``; the result is brought to
    canonical form by :func:`dihedral_reduce`.

    ``weighted`` includes the ``(-2i)^|I|`` factor of ``z zb - zb z = 2i h``.
    """
    if m_cyc < 1:
        raise ValueError("m_cyc must be positive")
    A, C, n, m = _shape(A, C)
    check_admissible(A, "dihedral", m_cyc)
    check_admissible(C, "dihedral", m_cyc)
    return dihedral_reduce(_dihedral_raw(A, C, HPoly.const(1), weighted), weighted)


def _dihedral_raw(A, C, coeff: HPoly, weighted: bool) -> QSymElement:
    """Unreduced two-family sum for monomial ``A`` and ``coeff * C``."""
    n = len(A)
    w = (lambda j: MINUS_2I**j) if weighted else None
    scale = Fraction(1, 2 * factorial(n))
    direct = _sigma_average(A, C, lambda r, s: _slot_terms(r, s, 1, w), canonical_rows, scale)

    def reflected(arow, crow):
        # z^a zb^b . zb^c z^d = z^a (zb^{b+c} z^d)
        a, b = arow
        c, d = crow
        out = []
        for I in range(min(b + c, d) + 1):
            coef = comb(b + c, I) * falling(d, I)
            out.append(((a + d - I, b + c - I), I, w(I) * coef if w else coef))
        return out

    return direct.scale(coeff) + _sigma_average(A, C, reflected, canonical_rows, scale).scale(_flip(coeff))


def dihedral_star_elements(X: LinComb, Y: LinComb, m_cyc: int, weighted: bool = True) -> QSymElement:
    """Extension of :func:`dihedral_star` to combinations.  The product is
    only ``C[h^2]``-bilinear: a coefficient ``q(h)`` of ``Y`` enters the
    reflected family as ``q(-h)``."""
    raw = QSymElement()
    for ka, ca in X.terms.items():
        check_admissible(ka, "dihedral", m_cyc)
        for kc, cc in Y.terms.items():
            check_admissible(kc, "dihedral", m_cyc)
            raw = raw + _dihedral_raw(ka, kc, cc, weighted).scale(ca)
    return dihedral_reduce(raw, weighted)


def mweyl_star(A, C) -> QSymElement:
    """Binary product in ``Sym^n(MW)``:
    ``(1/n!) sum C(b,I) (sigma(c))^(I) class(a + sigma(c) + I, b + sigma(d) - I) h^|I|``."""
    A, C, n, m = _shape(A, C)
    if m != 1:
        raise ValueError("the M-Weyl product uses one variable pair per slot")

    def slot(arow, crow):
        (a, b), (c, d) = arow, crow
        return [((a + c + I, b + d - I), I, comb(b, I) * rising(c, I)) for I in range(b + 1) if comb(b, I) * rising(c, I)]

    return _sigma_average(A, C, slot, canonical_rows, Fraction(1, factorial(n)))


_BINARY = {
    "A": lambda A, C, m_cyc: qsym_star_A(A, C),
    "B": lambda A, C, m_cyc: qsym_star_BD(A, C, "B"),
    "D": lambda A, C, m_cyc: qsym_star_BD(A, C, "D"),
    "zm": lambda A, C, m_cyc: wreath_zm_star(A, C, m_cyc),
    "dihedral": lambda A, C, m_cyc: dihedral_star(A, C, m_cyc),
    "mweyl": lambda A, C, m_cyc: mweyl_star(A, C),
}


def star(X: QSymElement, Y: QSymElement, kind: str = "A", m_cyc: int = 1) -> QSymElement:
    """Bilinear extension of the binary product of type ``kind``."""
    if kind == "dihedral":
        return dihedral_star_elements(X, Y, m_cyc)
    try:
        fn = _BINARY[kind]
    except KeyError:
        raise ValueError(f"unknown type {kind!r}") from None
    out = QSymElement()
    for ka, ca in X.terms.items():
        for kc, cc in Y.terms.items():
            p = fn(ka, kc, m_cyc)
            out = out + p.scale(ca * cc)
    return out


def _factor_classes(A) -> list[tuple]:
    """``A[i][j] = (a, b)``: factor ``i`` has ``x^a y^b`` in slot ``j``."""
    rows = [tuple(tuple(int(x) for x in pair) for pair in factor) for factor in A]
    if not rows:
        raise ValueError("need at least one factor")
    n = len(rows[0])
    if n == 0 or any(len(r) != n for r in rows) or any(len(p) != 2 for r in rows for p in r):
        raise ValueError("factors must be equal-length lists of exponent pairs")
    return rows


def symweyl_multiproduct(A) -> QSymElement:
    """Product of ``m`` classes in ``Sym^n(W)`` by iterating the binary star."""
    rows = _factor_classes(A)
    acc = qclass(rows[0])
    for r in rows[1:]:
        acc = star(acc, qclass(r), "A")
    return acc


def _direct(A, coords, shape_sign: int) -> QSymElement:
    rows = _factor_classes(A)
    m = len(rows)
    n = len(rows[0])
    out = QSymElement()
    scale = Fraction(1, factorial(n) ** (m - 1))
    perms = list(itertools.permutations(range(n)))
    for sigmas in itertools.product(perms, repeat=m - 1):
        sigmas = (tuple(range(n)),) + sigmas
        # slot j receives factor i's tensor entry sigma_i^{-1}(j)
        words = []
        for j in range(n):
            word = []
            for i, s in enumerate(sigmas):
                word.append(rows[i][s.index(j)])
            words.append(word)
        per_slot = []
        for word in words:
            ta = sum(a for a, _ in word)
            tb = sum(b for _, b in word)
            opts = []
            for k in range(tb + 1):
                c = coords(word, k)
                if c:
                    opts.append(((ta + shape_sign * k, tb - k), k, c))
            per_slot.append(opts)
        for combo in itertools.product(*per_slot):
            key = canonical_rows(tuple(r for r, _, _ in combo))
            h = sum(k for _, k, _ in combo)
            c = scale
            for _, _, x in combo:
                c *= x
            out.add_term(key, HPoly({h: c}))
    return out


def symweyl_multiproduct_direct(A) -> QSymElement:
    """``(n!)^{m-1} prod_i class_i = sum_{sigma in {id} x S_n^{m-1}} sum_k
    prod_j N(A_j^sigma, k_j) class(prod_j X_j^{|A_j^sigma| - (k_j, k_j)}) h^|k|``,
    with each slot's coefficient from the closed normal-coordinate formula."""
    return _direct(A, normal_coords_closed, -1)


def msymweyl_multiproduct(A) -> QSymElement:
    """Product of ``m`` classes in ``Sym^n(MW)`` by iterating the binary product."""
    rows = _factor_classes(A)
    acc = qclass(rows[0])
    for r in rows[1:]:
        acc = star(acc, qclass(r), "mweyl")
    return acc


def msymweyl_multiproduct_direct(A) -> QSymElement:
    """Direct sum with exponent shape ``|A_j^sigma| + (k_j, -k_j)`` and
    M-Weyl normal coordinates per slot."""
    return _direct(A, mweyl_coords_closed, +1)
