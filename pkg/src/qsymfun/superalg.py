"""Exterior and Clifford algebras on odd generators, Koszul signs and the
product of symmetric odd functions.

Monomials ``theta_I`` are bitmasks: bit ``q - 1`` set means ``theta_q`` is
present.  ``theta_I`` always denotes the increasing product.
"""

from __future__ import annotations

import itertools
from collections.abc import Sequence
from fractions import Fraction
from functools import lru_cache
from math import factorial

from .coeff import HPoly
from .sympow import SymElement, canonicalize, koszul_perm_sign
from .perm import symmetric_group

__all__ = [
    "mask",
    "members",
    "ext_product",
    "clifford_product",
    "rewrite_word",
    "koszul_sign",
    "koszul_sign_formula",
    "odd_sym_product",
    "odd_class",
]


def mask(indices) -> int:
    """Bitmask of a set of 1-based generator indices."""
    out = 0
    for q in indices:
        if q < 1:
            raise ValueError("generator indices start at 1")
        out |= 1 << (q - 1)
    return out


def members(I: int) -> list[int]:
    return [q + 1 for q in range(I.bit_length()) if I >> q & 1]


def _crossings(I: int, J: int) -> int:
    """``#{(i, j) : i in I, j in J, i > j}``."""
    total = 0
    for j in members(J):
        total += bin(I >> j).count("1")
    return total


def ext_product(I: int, J: int):
    """``theta_I theta_J = c(I,J) theta_{I u J}``; ``None`` when ``I`` and ``J`` meet."""
    if I & J:
        return None
    return (-1 if _crossings(I, J) % 2 else 1), I | J


def clifford_product(I: int, J: int):
    """Product in ``C(m)`` with ``theta_i theta_j + theta_j theta_i = 2 delta_ij``.

    Each ``theta_j`` of ``J`` (in increasing order) moves left past the
    larger elements of ``I`` and then cancels against ``theta_j`` if present.
    """
    return (-1 if _crossings(I, J) % 2 else 1), I ^ J


def rewrite_word(word: Sequence[int], clifford: bool = False):
    """Sort a word of generator indices by adjacent transpositions.

    Returns ``(sign, mask)``, or ``None`` if the word vanishes in the
    exterior algebra.
    """
    w = list(word)
    sign = 1
    changed = True
    while changed:
        changed = False
        p = 0
        while p < len(w) - 1:
            if w[p] > w[p + 1]:
                w[p], w[p + 1] = w[p + 1], w[p]
                sign = -sign
                changed = True
            elif w[p] == w[p + 1]:
                if not clifford:
                    return None
                del w[p : p + 2]
                changed = True
                continue
            p += 1
    return sign, mask(w)


def _check_perm(sigma, n):
    if len(sigma) != n or sorted(sigma) != list(range(n)):
        raise ValueError("sigma must be a permutation of the slots")


def koszul_sign(a_par: Sequence[int], b_par: Sequence[int], sigma: Sequence[int]) -> int:
    """Sign of reordering ``a_1 .. a_n b_1 .. b_n`` into
    ``a_1 b_{sigma^-1(1)} a_2 b_{sigma^-1(2)} ...``.

    Computed by building the rearrangement explicitly and counting
    transpositions of odd pairs.
    """
    n = len(a_par)
    if len(b_par) != n:
        raise ValueError("parity tuples must have equal length")
    _check_perm(sigma, n)
    inv = [0] * n
    for i, s in enumerate(sigma):
        inv[s] = i
    # items 0..n-1 are a_i, n..2n-1 are b_i; target positions
    target = [0] * (2 * n)
    for j in range(n):
        target[j] = 2 * j
        target[n + inv[j]] = 2 * j + 1
    par = list(a_par) + list(b_par)
    return koszul_perm_sign(target, par)


def koszul_sign_formula(a_par, b_par, sigma) -> int:
    """``(-1)^e`` with ``e = sum_{i>j} a_i b_{sigma^-1(j)} +
    sum_{i<j, sigma(i)>sigma(j)} b_i b_j``."""
    n = len(a_par)
    inv = [0] * n
    for i, s in enumerate(sigma):
        inv[s] = i
    e = 0
    for i in range(n):
        for j in range(i):
            e += a_par[i] * b_par[inv[j]]
    for i in range(n):
        for j in range(i + 1, n):
            if sigma[i] > sigma[j]:
                e += b_par[i] * b_par[j]
    return -1 if e % 2 else 1


def _parity(I: int) -> int:
    return bin(I).count("1") % 2


@lru_cache(maxsize=None)
def _canon(t: tuple):
    return canonicalize(t, symmetric_group(len(t)), [_parity(I) for I in t])


def odd_class(tup: Sequence[int], coeff=1) -> SymElement:
    """Canonical class of ``theta_{I_1} (x) ... (x) theta_{I_n}`` under graded
    ``S_n``-symmetry."""
    tup = tuple(tup)
    rep, s = _canon(tup)
    out = SymElement()
    if s:
        out.add_term(rep, HPoly.const(coeff) * s)
    return out


def odd_sym_product(Itup: Sequence[int], Jtup: Sequence[int], m: int | None = None) -> SymElement:
    """``(1/n!) sum_sigma sgn(I,J,sigma) prod_k c(I_k, J_{sigma^-1(k)})
    class(theta_{I_k u J_{sigma^-1(k)}})``."""
    Itup, Jtup = tuple(Itup), tuple(Jtup)
    n = len(Itup)
    if len(Jtup) != n:
        raise ValueError("tuples must have equal length")
    if m is not None:
        for I in Itup + Jtup:
            if I >> m:
                raise ValueError(f"monomial {members(I)} uses a generator beyond {m}")
    ipar = [_parity(I) for I in Itup]
    jpar = [_parity(J) for J in Jtup]
    out = SymElement()
    w = Fraction(1, factorial(n))
    for sigma in itertools.permutations(range(n)):
        inv = [0] * n
        for i, s in enumerate(sigma):
            inv[s] = i
        sign = koszul_sign(ipar, jpar, sigma)
        slots = []
        for k in range(n):
            r = ext_product(Itup[k], Jtup[inv[k]])
            if r is None:
                break
            sign *= r[0]
            slots.append(r[1])
        else:
            t = tuple(slots)
            rep, s = _canon(t)
            if s:
                out.add_term(rep, HPoly.const(w * sign * s))
    return out
