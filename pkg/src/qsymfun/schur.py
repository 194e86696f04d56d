"""Schur categories and the truncated ``gl(infinity)`` model of the Weyl algebra.

Morphisms ``V -> W`` of the Schur category of type ``(m, n)`` are classes of
``n``-fold tensors of elementary maps ``E_{r s}^{t u}`` sending the basis
vector ``(r, s)`` of ``V (+) Z_m`` to ``(t, u)`` of ``W (+) Z_m``, modulo the
diagonal ``Z_m`` shift in each slot and permutation of the slots.
Supervector spaces are described by a tuple of basis parities.
"""

from __future__ import annotations

import itertools
from collections.abc import Sequence
from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache
from math import factorial, prod

from .coeff import HPoly, LinComb, as_hpoly, hp_add, hp_mul
from .perm import symmetric_group
from .superalg import koszul_sign
from .sympow import GroupAction, SymElement, canonicalize, matrix_units, oracle_product
from .weyl import normal_order

__all__ = [
    "ElemTrans",
    "SchurElement",
    "elem_trans",
    "schur_class",
    "schur_compose",
    "schur_identity",
    "schur_oracle_compose",
    "GlInfTrunc",
    "elem_matrix",
    "glinf_identity",
    "weyl_to_glinf",
    "normal_form_to_glinf",
    "glinf_matches_normal_order",
]


@dataclass(frozen=True, order=True)
class ElemTrans:
    """``E_{r s}^{t u}`` normalized by the slot shift: ``s = 0`` and
    ``d = u - s`` (componentwise mod ``m``)."""

    r: int
    t: int
    d: tuple

    def to_json(self) -> dict:
        return {"r": self.r, "s": [0] * len(self.d), "t": self.t, "u": list(self.d)}


def _reduce(v, m) -> tuple:
    v = tuple(int(x) for x in v)
    if len(v) != len(m):
        raise ValueError(f"multi-index {v} does not match m = {tuple(m)}")
    return tuple(x % q for x, q in zip(v, m))


def elem_trans(r: int, s, t: int, u, m: Sequence[int]) -> ElemTrans:
    m = tuple(m)
    s, u = _reduce(s, m), _reduce(u, m)
    return ElemTrans(int(r), int(t), tuple((b - a) % q for a, b, q in zip(s, u, m)))


class SchurElement(LinComb):
    """Combination of canonical tuples of :class:`ElemTrans`."""


def _check_space(par, what):
    par = tuple(int(p) for p in par)
    if any(p not in (0, 1) for p in par):
        raise ValueError(f"parities of {what} must be 0 or 1")
    return par


@lru_cache(maxsize=None)
def _canon(tup: tuple, par_src: tuple, par_tgt: tuple):
    pars = [(par_src[e.r] + par_tgt[e.t]) % 2 for e in tup]
    return canonicalize(tup, symmetric_group(len(tup)), pars)


def _check_elem(e: ElemTrans, m, par_src, par_tgt):
    if not (0 <= e.r < len(par_src) and 0 <= e.t < len(par_tgt)):
        raise ValueError(f"{e} does not fit spaces of dimensions {len(par_src)} -> {len(par_tgt)}")
    if len(e.d) != len(m) or any(not 0 <= x < q for x, q in zip(e.d, m)):
        raise ValueError(f"{e} has a shift outside Z_{tuple(m)}")


def schur_class(tup: Sequence[ElemTrans], m, par_src, par_tgt, coeff=1) -> SchurElement:
    """Canonical class of ``E_1 (x) ... (x) E_n``; zero if the class is its
    own negative."""
    par_src, par_tgt = _check_space(par_src, "source"), _check_space(par_tgt, "target")
    tup = tuple(tup)
    for e in tup:
        _check_elem(e, m, par_src, par_tgt)
    rep, s = _canon(tup, par_src, par_tgt)
    out = SchurElement()
    if s:
        out.add_term(rep, as_hpoly(coeff) * s)
    return out


def schur_identity(par, m, n: int) -> SchurElement:
    """Class of ``id^{(x) n}`` with ``id = sum_{r, s} E_{r s}^{r s}``; each
    shift ``s`` gives the same class, hence the factor ``M^n``."""
    par = _check_space(par, "space")
    m = tuple(m)
    zero = (0,) * len(m)
    M = prod(m)
    out = SchurElement()
    for rs in itertools.product(range(len(par)), repeat=n):
        out = out + schur_class([ElemTrans(r, r, zero) for r in rs], m, par, par, M**n)
    return out


def schur_compose(F: LinComb, G: LinComb, m, n: int, par_v, par_w, par_z) -> SchurElement:
    """``G o F`` for ``F: V -> W`` and ``G: W -> Z``:

    ``(1/(M^n n!)) sum_sigma sgn * prod_k E_{r_{sigma^-1 k}, 0}^{t'_k, d'_k + d_{sigma^-1 k}}``
    over permutations matching the target of ``F``'s slot ``sigma^-1(k)``
    with the source of ``G``'s slot ``k``.  The ``Z_m`` shift aligning the
    two slots is unique, so each matching ``sigma`` contributes once.
    The sign is the Koszul sign of interleaving the two tensors.
    """
    m = tuple(m)
    par_v, par_w, par_z = (_check_space(p, w) for p, w in ((par_v, "V"), (par_w, "W"), (par_z, "Z")))
    scale = Fraction(1, prod(m) ** n * factorial(n))
    out = SchurElement()
    perms = list(itertools.permutations(range(n)))
    for ftup, fc in F.terms.items():
        if len(ftup) != n:
            raise ValueError(f"class {ftup} does not have degree {n}")
        for e in ftup:
            _check_elem(e, m, par_v, par_w)
        fpar = [(par_v[e.r] + par_w[e.t]) % 2 for e in ftup]
        for gtup, gc in G.terms.items():
            if len(gtup) != n:
                raise ValueError(f"class {gtup} does not have degree {n}")
            for e in gtup:
                _check_elem(e, m, par_w, par_z)
            gpar = [(par_w[e.r] + par_z[e.t]) % 2 for e in gtup]
            coeff = hp_mul(fc, gc)
            for sigma in perms:
                inv = [0] * n
                for i, s in enumerate(sigma):
                    inv[s] = i
                if any(ftup[inv[k]].t != gtup[k].r for k in range(n)):
                    continue
                # algebra product G . (sigma F): slot k holds G_k o F_{sigma^-1 k}
                sign = koszul_sign(gpar, fpar, sigma)
                slots = []
                for k in range(n):
                    f, g = ftup[inv[k]], gtup[k]
                    slots.append(ElemTrans(f.r, g.t, tuple((a + b) % q for a, b, q in zip(f.d, g.d, m))))
                rep, s = _canon(tuple(slots), par_v, par_z)
                if s:
                    out.add_term(rep, hp_mul(coeff, HPoly.const(scale * sign * s)))
    return out


def schur_oracle_compose(F: LinComb, G: LinComb, m, n: int, par_v, par_w, par_z) -> SchurElement:
    """Reference for :func:`schur_compose`: the group average in the algebra
    of matrix units of ``U (+) Z_m`` with ``U = V (+) W (+) Z``, the shift
    group ``Z_m`` acting on each slot by relabelling."""
    m = tuple(m)
    par_v, par_w, par_z = tuple(par_v), tuple(par_w), tuple(par_z)
    offs = {"V": 0, "W": len(par_v), "Z": len(par_v) + len(par_w)}
    upar = par_v + par_w + par_z
    shifts = list(itertools.product(*(range(q) for q in m)))
    basis = [(v, z) for v in range(len(upar)) for z in shifts]
    bidx = {b: i for i, b in enumerate(basis)}
    alg = matrix_units(len(basis), [upar[v] for v, _ in basis])
    names = alg.names

    def shifter(c):
        def h(label):
            i, j = names[label]
            (v1, z1), (v2, z2) = basis[i], basis[j]
            z1 = tuple((a + b) % q for a, b, q in zip(z1, c, m))
            z2 = tuple((a + b) % q for a, b, q in zip(z2, c, m))
            return alg.index[(bidx[(v1, z1)], bidx[(v2, z2)])], 1

        return h

    local = [None] + [shifter(c) for c in shifts[1:]]
    action = GroupAction(symmetric_group(n), parity=tuple(alg.parity), local=local, name="shift wreath")
    zero = (0,) * len(m)

    def lift(el, src, tgt):
        out = SymElement()
        for tup, c in el.terms.items():
            labels = []
            for e in tup:
                # E maps (r, 0) to (t, d); as a matrix unit it is E_{target, source}
                row = bidx[(offs[tgt] + e.t, e.d)]
                col = bidx[(offs[src] + e.r, zero)]
                labels.append(alg.index[(row, col)])
            out.add_term(tuple(labels), c)
        return out

    res = oracle_product([lift(G, "W", "Z"), lift(F, "V", "W")], action, alg)
    out = SchurElement()
    for labels, c in res.terms.items():
        slots = []
        for l in labels:
            i, j = names[l]
            (vt, zt), (vs, zs) = basis[i], basis[j]
            slots.append(elem_trans(vs - offs["V"], zs, vt - offs["Z"], zt, m))
        out = out + schur_class(slots, m, par_v, par_z, c)
    return out


# ---------------------------------------------------------------------------
# truncated gl(infinity)
# ---------------------------------------------------------------------------


class GlInfTrunc:
    """``N x N`` truncation of a matrix with HPoly entries, stored sparsely."""

    __slots__ = ("N", "entries")

    def __init__(self, N: int, entries=None):
        if N < 1:
            raise ValueError("truncation size must be positive")
        self.N = N
        self.entries: dict[tuple[int, int], HPoly] = {}
        for (i, j), c in (entries or {}).items():
            if not (0 <= i < N and 0 <= j < N):
                raise ValueError(f"entry ({i}, {j}) outside {N}x{N}")
            c = c if isinstance(c, HPoly) else HPoly.const(c)
            if c:
                self.entries[(i, j)] = c

    def __getitem__(self, ij) -> HPoly:
        return self.entries.get(ij, HPoly())

    def __matmul__(self, other: "GlInfTrunc") -> "GlInfTrunc":
        if self.N != other.N:
            raise ValueError("truncation sizes differ")
        rows: dict[int, list] = {}
        for (l, j), c in other.entries.items():
            rows.setdefault(l, []).append((j, c))
        out: dict = {}
        for (i, l), a in self.entries.items():
            for j, b in rows.get(l, ()):
                p = hp_mul(a, b)
                out[(i, j)] = hp_add(out[(i, j)], p) if (i, j) in out else p
        return GlInfTrunc(self.N, out)

    def __add__(self, other: "GlInfTrunc") -> "GlInfTrunc":
        if self.N != other.N:
            raise ValueError("truncation sizes differ")
        out = dict(self.entries)
        for k, c in other.entries.items():
            out[k] = hp_add(out[k], c) if k in out else c
        return GlInfTrunc(self.N, out)

    def scale(self, c) -> "GlInfTrunc":
        c = c if isinstance(c, HPoly) else HPoly.const(c)
        return GlInfTrunc(self.N, {k: hp_mul(v, c) for k, v in self.entries.items()})

    def respects_filtration(self) -> bool:
        """Entries ``(i, j)`` with ``i < j`` have hbar-order at least ``j - i``."""
        return all(c.order() >= j - i for (i, j), c in self.entries.items() if i < j)

    def restrict(self, size: int) -> dict:
        """Entries of the leading ``size x size`` block."""
        return {k: c for k, c in self.entries.items() if k[0] < size and k[1] < size}

    def agrees_on(self, other: "GlInfTrunc", size: int) -> bool:
        return self.restrict(size) == other.restrict(size)

    def __eq__(self, other):
        if not isinstance(other, GlInfTrunc):
            return NotImplemented
        return self.N == other.N and self.entries == other.entries

    def __repr__(self):
        body = ", ".join(f"{k}: {v}" for k, v in sorted(self.entries.items()))
        return f"GlInfTrunc(N={self.N}, {{{body}}})"


def elem_matrix(a: int, b: int, N: int) -> GlInfTrunc:
    """``E_{a,b}``: entry ``(a + k, b + k)`` equal to ``(b + k)!/k! h^b``."""
    if not (0 <= a < N and 0 <= b < N):
        raise ValueError(f"E_({a},{b}) needs a, b < N = {N}")
    out = {}
    for k in range(N - max(a, b)):
        out[(a + k, b + k)] = HPoly({b: factorial(b + k) // factorial(k)})
    return GlInfTrunc(N, out)


def glinf_identity(N: int) -> GlInfTrunc:
    return elem_matrix(0, 0, N)


def weyl_to_glinf(word, N: int) -> tuple[GlInfTrunc, int]:
    """``rho(x^{a_1} y^{b_1} ...)`` as the product of letter images
    ``rho(x) = E_{1,0}``, ``rho(y) = E_{0,1}``.

    Returns the matrix and the size of the leading block on which it is
    exact, ``N`` minus the number of ``y`` letters.
    """
    word = [(int(a), int(b)) for a, b in word]
    ydeg = sum(b for _, b in word)
    valid = N - ydeg
    if valid < 1:
        raise ValueError(f"truncation N = {N} leaves no exact block for {ydeg} y-letters")
    X, Y = elem_matrix(1, 0, N), elem_matrix(0, 1, N)
    out = glinf_identity(N)
    for a, b in word:
        for _ in range(a):
            out = out @ X
        for _ in range(b):
            out = out @ Y
    return out, valid


def normal_form_to_glinf(nf: dict, N: int) -> GlInfTrunc:
    """``sum c h^k E_{a,b}`` for a normal form ``{(a, b, k): c}``."""
    out = GlInfTrunc(N)
    for (a, b, k), c in sorted(nf.items()):
        if a < N and b < N:
            out = out + elem_matrix(a, b, N).scale(HPoly({k: c}))
    return out


def glinf_matches_normal_order(word, N: int) -> bool:
    """``rho(w)`` agrees with ``rho`` of its normal form on the exact block."""
    M, valid = weyl_to_glinf(word, N)
    return M.agrees_on(normal_form_to_glinf(normal_order(word), N), valid)
