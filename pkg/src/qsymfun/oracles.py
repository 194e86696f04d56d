"""Independent reference computations for the closed product formulas.

Every function here goes through :func:`sympow.oracle_product`: the
class product is evaluated by brute force as a group average of explicit
basis-tensor products in a truncated based algebra, then ``h`` labels are
folded into the scalar.  Nothing below reuses the closed formulas.
"""

from __future__ import annotations

from fractions import Fraction
from functools import lru_cache

from .coeff import HPoly, LinComb
from .perm import symmetric_group
from .sympow import (
    BasedAlgebra,
    GroupAction,
    SymElement,
    collapse_hbar,
    exterior_algebra,
    oracle_product,
    permutation_action,
    truncated_complex_weyl,
    truncated_mweyl,
    truncated_weyl,
)

__all__ = [
    "weyl_oracle_star",
    "zm_oracle_star",
    "dihedral_oracle_star",
    "dihedral_symmetrize",
    "symweyl_oracle",
    "msymweyl_oracle",
    "odd_oracle_product",
]


# algebra construction dominates small oracle calls
truncated_weyl = lru_cache(maxsize=None)(truncated_weyl)
truncated_complex_weyl = lru_cache(maxsize=None)(truncated_complex_weyl)
truncated_mweyl = lru_cache(maxsize=None)(truncated_mweyl)
exterior_algebra = lru_cache(maxsize=None)(exterior_algebra)


def _degree(rows) -> int:
    return max(sum(r) for r in rows)


def _labelled(rows, alg: BasedAlgebra, coeff=1) -> SymElement:
    el = SymElement()
    el.add_term(tuple(alg.index[tuple(r) + (0,)] for r in rows), HPoly.const(coeff))
    return el


def _collapse(el: SymElement, alg: BasedAlgebra, m: int = 1) -> LinComb:
    out = collapse_hbar(el, alg, m)
    return LinComb({k: c for k, c in out.terms.items() if c})


def weyl_oracle_star(A, C) -> LinComb:
    """``S_n``-averaged product of two classes of ``W_m^{(x)n}``."""
    A = [tuple(r) for r in A]
    C = [tuple(r) for r in C]
    m = len(A[0]) // 2
    alg = truncated_weyl(m, _degree(A) + _degree(C))
    K = symmetric_group(len(A))
    res = oracle_product([_labelled(A, alg), _labelled(C, alg)], permutation_action(K, alg), alg)
    return _collapse(res, alg, m)


def _zm_action(n: int, m_cyc: int, alg: BasedAlgebra) -> GroupAction:
    gens = [tuple(1 if i == j else 0 for i in range(n)) for j in range(n)]
    return GroupAction(
        symmetric_group(n),
        char_modulus=m_cyc,
        char_gens=gens,
        weight=lambda l: alg.names[l][0] - alg.names[l][1],
        name=f"Z{m_cyc} wreath S{n}",
    )


def _zm_raw(X: SymElement, Y: SymElement, n: int, m_cyc: int, alg: BasedAlgebra) -> SymElement:
    return oracle_product([X, Y], _zm_action(n, m_cyc, alg), alg)


def zm_oracle_star(A, C, m_cyc: int) -> LinComb:
    """Product in the coinvariants of ``Z_m^n x| S_n`` acting on
    ``C<z, zb>^{(x)n}``, ``Z_m`` rotating ``z`` by ``zeta`` and ``zb`` by
    ``zeta^-1``; the rotation part is averaged as a character indicator."""
    alg = truncated_complex_weyl(_degree(A) + _degree(C))
    res = _zm_raw(_labelled(A, alg), _labelled(C, alg), len(A), m_cyc, alg)
    return _collapse(res, alg)


def _reflect_tensor(el: SymElement, alg: BasedAlgebra) -> SymElement:
    """Apply the global reflection ``z <-> zb``, ``h -> -h`` by substituting
    letters and multiplying out in ``alg``: ``z^a zb^b h^k`` becomes
    ``(-1)^k zb^a . z^b h^k`` computed as a product of two basis elements."""
    idx = alg.index
    out = SymElement()
    for rep, c in el.terms.items():
        per_slot = []
        for l in rep:
            a, b, k = alg.names[l]
            terms = alg.mul(idx[(0, a, 0)], idx[(b, 0, 0)])
            # shift h labels by k
            shifted = []
            for lab, s in terms:
                x, y, j = alg.names[lab]
                shifted.append((idx[(x, y, j + k)], -s if k % 2 else s))
            per_slot.append(shifted)
        acc = [((), c)]
        for opts in per_slot:
            acc = [(t + (lab,), cc * s) for t, cc in acc for lab, s in opts]
        for t, cc in acc:
            out.add_term(t, cc)
    return out


def dihedral_oracle_star(A, C, m_cyc: int) -> tuple[LinComb, BasedAlgebra]:
    """Unreduced group average over ``<rho> x (Z_m^n x| S_n)``:
    ``1/2 [A . C] + 1/2 [A . rho C]`` in the rotation-permutation
    coinvariants, with ``rho`` applied by letter substitution."""
    alg = truncated_complex_weyl(_degree(A) + _degree(C))
    n = len(A)
    X, Y = _labelled(A, alg), _labelled(C, alg)
    res = _zm_raw(X, Y, n, m_cyc, alg).scale(Fraction(1, 2)) + _zm_raw(X, _reflect_tensor(Y, alg), n, m_cyc, alg).scale(
        Fraction(1, 2)
    )
    return _collapse(res, alg), alg


def dihedral_symmetrize(el: LinComb, D: int) -> LinComb:
    """``P(X) = (X + rho X) / 2`` on classes of sorted rows ``(a, b)``.

    Two elements agree in the reflection coinvariants iff their images
    under ``P`` agree, so this gives a comparison independent of any choice
    of canonical representatives.  ``rho`` is evaluated in the truncated
    algebra of weighted degree ``D``.
    """
    alg = truncated_complex_weyl(D)
    idx = alg.index
    lab = SymElement()
    for rows, c in el.terms.items():
        for d, x in c.items():
            # put the scalar h^d in the first slot's label
            t = (idx[tuple(rows[0]) + (d,)],) + tuple(idx[tuple(r) + (0,)] for r in rows[1:])
            lab.add_term(t, HPoly.const(x))
    total = lab + _reflect_tensor(lab, alg)
    return _collapse(total.scale(Fraction(1, 2)), alg)


def _factor_rows(A):
    return [tuple(tuple(p) for p in f) for f in A]


def _multi_oracle(A, alg_fn, labeller):
    rows = _factor_rows(A)
    n = len(rows[0])
    D = sum(max(sum(p) for p in f) for f in rows)
    alg = alg_fn(D)
    K = symmetric_group(n)
    factors = [labeller(f, alg) for f in rows]
    return oracle_product(factors, permutation_action(K, alg), alg), alg


def symweyl_oracle(A) -> LinComb:
    """Product of classes ``A[i]`` (lists of ``(a, b)`` pairs) in ``Sym^n(W)``."""
    res, alg = _multi_oracle(A, lambda D: truncated_weyl(1, D), _labelled)
    return _collapse(res, alg)


def msymweyl_oracle(A) -> LinComb:
    """Product of classes in ``Sym^n(MW)``; ``h`` is a scalar in the
    truncated M-Weyl algebra, so no collapsing is needed."""

    def lab(f, alg):
        el = SymElement()
        el.add_term(tuple(alg.index[tuple(p)] for p in f), HPoly.const(1))
        return el

    res, alg = _multi_oracle(A, truncated_mweyl, lab)
    out = LinComb()
    for rep, c in res.terms.items():
        out.add_term(tuple(sorted(alg.names[l] for l in rep)), c)
    return LinComb({k: c for k, c in out.terms.items() if c})


def odd_oracle_product(Itup, Jtup, m: int) -> SymElement:
    """Graded ``S_n``-average over the exterior algebra on ``m`` generators."""
    alg = exterior_algebra(m)
    K = symmetric_group(len(Itup))
    act = permutation_action(K, alg)
    X, Y = SymElement(), SymElement()
    X.add_term(tuple(Itup), HPoly.const(1))
    Y.add_term(tuple(Jtup), HPoly.const(1))
    return oracle_product([X, Y], act, alg)
