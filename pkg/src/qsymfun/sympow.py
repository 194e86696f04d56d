"""Coinvariant (Polya) symmetric powers of based algebras.

An element of ``P_K(A) = (A^{(x)n})_K`` is a :class:`SymElement`, a linear
combination of canonical orbit representatives (tuples of basis labels).

Two independent product evaluators are provided:

* :func:`polya_product`, the closed ``m``-fold formula
  ``#K^{m-1} prod a_i = sum_{sigma in {id} x K^{m-1}} class(prod_i sigma_i a_i)``;
* :func:`oracle_product`, iterated binary averaging over a full wreath-type
  group ``C . (H^n x| K)``, where ``C`` acts by characters (averaged
  analytically) and ``H`` permutes labels slot by slot.
"""

from __future__ import annotations

import itertools
import json
from collections.abc import Callable, Sequence
from dataclasses import dataclass, field
from fractions import Fraction
from math import comb, factorial

from .coeff import GaussRat, HPoly, LinComb, as_hpoly, hp_add, hp_mul, parse_hpoly
from .perm import PermGroup, symmetric_group, trivial_group
from .weyl import falling, rising

__all__ = [
    "BasedAlgebra",
    "SymElement",
    "GroupAction",
    "permutation_action",
    "koszul_perm_sign",
    "canonicalize",
    "polya_product",
    "oracle_product",
    "classical_sym_product",
    "boolean_product",
    "boolean_product_direct",
    "truncated_polynomial",
    "boolean_algebra",
    "truncated_weyl",
    "truncated_complex_weyl",
    "truncated_mweyl",
    "exterior_algebra",
    "matrix_units",
    "collapse_hbar",
    "basis_class",
]

ONE = HPoly.const(1)


class SymElement(LinComb):
    """Linear combination of canonical representatives."""


# ---------------------------------------------------------------------------
# based algebras
# ---------------------------------------------------------------------------


class BasedAlgebra:
    """Finite-dimensional (super)algebra with basis ``e_0 .. e_{dim-1}``.

    ``e_s e_t = sum_k c(k,s,t) e_k`` with HPoly structure constants, given
    either by an explicit table or by a function ``mul(s, t)`` returning
    ``[(k, coeff), ...]`` (evaluated lazily and cached).
    """

    def __init__(
        self,
        dim: int,
        mul: Callable[[int, int], Sequence] | dict,
        unit: int | None = 0,
        parity: Sequence[int] | None = None,
        names: Sequence | None = None,
        check: bool = True,
    ):
        if dim < 1:
            raise ValueError("dimension must be positive")
        self.dim = dim
        self.unit = unit
        self.parity = tuple(parity) if parity is not None else (0,) * dim
        if len(self.parity) != dim or set(self.parity) - {0, 1}:
            raise ValueError("parity must be a 0/1 list of length dim")
        self.names = list(names) if names is not None else list(range(dim))
        self.index = {nm: i for i, nm in enumerate(self.names)}
        self._cache: dict = {}
        if isinstance(mul, dict):
            table = {}
            for (s, t), terms in mul.items():
                table[(s, t)] = self._normalize(terms)
            self._table = table
            self._fn = None
        else:
            self._table = None
            self._fn = mul
        if unit is not None and not 0 <= unit < dim:
            raise ValueError("unit label out of range")
        if check and dim <= 12:
            self.check_axioms()

    @staticmethod
    def _normalize(terms) -> tuple:
        acc: dict = {}
        for k, c in terms:
            c = as_hpoly(c)
            acc[k] = hp_add(acc[k], c) if k in acc else c
        return tuple(sorted((k, c) for k, c in acc.items() if c))

    def mul(self, s: int, t: int) -> tuple:
        key = (s, t)
        if self._table is not None:
            return self._table.get(key, ())
        hit = self._cache.get(key)
        if hit is None:
            hit = self._normalize(self._fn(s, t))
            self._cache[key] = hit
        return hit

    def mul_vec(self, u: dict, v: dict) -> dict:
        out: dict = {}
        for s, cs in u.items():
            for t, ct in v.items():
                for k, c in self.mul(s, t):
                    p = hp_mul(hp_mul(cs, ct), c)
                    out[k] = hp_add(out[k], p) if k in out else p
        return {k: c for k, c in out.items() if c}

    def check_axioms(self):
        r = range(self.dim)
        if self.unit is not None:
            for s in r:
                e = ((s, ONE),)
                if self.mul(self.unit, s) != e or self.mul(s, self.unit) != e:
                    raise ValueError(f"unit law fails at label {s}")
        for s in r:
            for t in r:
                st = dict(self.mul(s, t))
                for u in r:
                    left = self.mul_vec(st, {u: ONE})
                    right = self.mul_vec({s: ONE}, dict(self.mul(t, u)))
                    if left != right:
                        raise ValueError(f"associativity fails at {(s, t, u)}")
                    for k, _ in self.mul(s, t):
                        if self.parity[k] != (self.parity[s] + self.parity[t]) % 2:
                            raise ValueError(f"parity not additive at {(s, t)}")

    def to_json(self) -> dict:
        table = []
        for s in range(self.dim):
            for t in range(self.dim):
                terms = self.mul(s, t)
                if terms:
                    table.append({"s": s, "t": t, "terms": [{"k": k, "coeff": str(c)} for k, c in terms]})
        return {"dim": self.dim, "unit": self.unit, "parity": list(self.parity), "table": table}

    @classmethod
    def from_json(cls, data: dict | str) -> "BasedAlgebra":
        if isinstance(data, str):
            data = json.loads(data)
        try:
            dim = int(data["dim"])
            table = {}
            for entry in data.get("table", []):
                s, t = int(entry["s"]), int(entry["t"])
                if not (0 <= s < dim and 0 <= t < dim):
                    raise ValueError(f"table entry {(s, t)} out of range")
                terms = []
                for term in entry["terms"]:
                    k = int(term["k"])
                    if not 0 <= k < dim:
                        raise ValueError(f"label {k} out of range")
                    c = term["coeff"]
                    terms.append((k, HPoly.from_json(c) if isinstance(c, list) else parse_hpoly(str(c))))
                table[(s, t)] = terms
            unit = data.get("unit", 0)
            parity = data.get("parity")
        except (KeyError, TypeError) as exc:
            raise ValueError(f"malformed algebra description: {exc}") from exc
        return cls(dim, table, unit=None if unit is None else int(unit), parity=parity)


# ---------------------------------------------------------------------------
# group actions on tensors
# ---------------------------------------------------------------------------


def koszul_perm_sign(sigma: Sequence[int], parities: Sequence[int]) -> int:
    """Sign for moving factor ``i`` to position ``sigma[i]``: one ``-1`` per
    pair of odd factors whose order is reversed."""
    odd = [i for i, p in enumerate(parities) if p]
    inv = 0
    for x, i in enumerate(odd):
        for j in odd[x + 1 :]:
            if sigma[i] > sigma[j]:
                inv += 1
    return -1 if inv % 2 else 1


def _act(sigma, t):
    out = [None] * len(t)
    for i, x in enumerate(t):
        out[sigma[i]] = x
    return tuple(out)


@dataclass
class GroupAction:
    """The group ``C . (H^n x| K)`` acting on basis tensors of ``A^{(x)n}``.

    * ``K`` permutes slots (with Koszul signs from ``parity``);
    * each element of ``local`` maps a label to ``(label', scalar)``;
      ``local[0]`` must be the identity;
    * ``C`` is a subgroup of ``Z_M^n`` generated by ``char_gens``, acting
      on ``e_l`` in slot ``j`` by ``zeta_M^{c_j * weight(l)}``.  Its
      average is the indicator that the character is trivial on ``C``.
    """

    K: PermGroup
    parity: tuple = ()
    local: list = field(default_factory=lambda: [None])
    char_modulus: int = 1
    char_gens: list = field(default_factory=list)
    weight: Callable[[int], int] | None = None
    name: str = ""

    def __post_init__(self):
        self.n = self.K.n
        self._canon: dict = {}

    @property
    def local_order(self) -> int:
        return len(self.local)

    def order_without_characters(self) -> int:
        return self.local_order**self.n * self.K.order

    def char_trivial(self, t: tuple) -> bool:
        if not self.char_gens:
            return True
        w = [self.weight(l) for l in t]
        M = self.char_modulus
        return all(sum(c * x for c, x in zip(gen, w)) % M == 0 for gen in self.char_gens)

    def _local_images(self, label):
        for h in self.local:
            if h is None:
                yield label, 1
            else:
                yield h(label)

    def images(self, t: tuple):
        """All ``(g t, scalar)`` for ``g`` in ``H^n x| K`` (with multiplicity)."""
        per_slot = [list(self._local_images(l)) for l in t]
        for choice in itertools.product(*per_slot):
            labels = tuple(c[0] for c in choice)
            scal = 1
            for c in choice:
                scal *= c[1]
            par = [self.parity[l] for l in labels] if self.parity else None
            for sigma in self.K.elements:
                s = scal
                if par and any(par):
                    s *= koszul_perm_sign(sigma, par)
                yield _act(sigma, labels), s

    def canonicalize(self, t: tuple):
        """``(rep, scalar)`` with ``class(t) = scalar * class(rep)``;
        scalar ``0`` when the class vanishes."""
        hit = self._canon.get(t)
        if hit is not None:
            return hit
        if len(t) != self.n:
            raise ValueError(f"tensor of length {len(t)} for a group of degree {self.n}")
        if not self.char_trivial(t):
            res = (t, 0)
        else:
            best = None
            scalars = set()
            for img, s in self.images(t):
                if best is None or img < best:
                    best, scalars = img, {s}
                elif img == best:
                    scalars.add(s)
            if len(scalars) > 1:
                res = (best, 0)
            else:
                # class(t) = s^{-1} class(best) for g t = s best
                (s,) = scalars
                res = (best, _inv_scalar(s))
        self._canon[t] = res
        return res


def _inv_scalar(s):
    if s in (1, -1):
        return s
    return GaussRat(1) / GaussRat.coerce(s)


def permutation_action(K: PermGroup, alg: BasedAlgebra | None = None) -> GroupAction:
    parity = alg.parity if alg is not None and any(alg.parity) else ()
    return GroupAction(K, parity=parity, name=K.describe())


def canonicalize(t: Sequence[int], K: PermGroup, parity: Sequence[int] | None = None):
    """Lexicographically least element of the ``K``-orbit of ``t`` and the sign
    relating the two classes (``0`` if the class is its own negative)."""
    t = tuple(t)
    if len(t) != K.n:
        raise ValueError(f"tensor of length {len(t)} for a group of degree {K.n}")
    graded = parity is not None and any(parity)
    if graded and len(parity) != len(t):
        raise ValueError("need one parity per tensor slot")
    # GroupAction looks parities up by label
    act = GroupAction(K, parity=dict(zip(t, parity)) if graded else ())
    return act.canonicalize(t)


# ---------------------------------------------------------------------------
# tensor arithmetic
# ---------------------------------------------------------------------------


def _tensor_mul(alg: BasedAlgebra, X: dict, Y: dict) -> dict:
    """Product in the graded tensor algebra ``A^{(x)n}`` of two combinations
    of basis tensors."""
    graded = any(alg.parity)
    out: dict = {}
    for u, cu in X.items():
        for v, cv in Y.items():
            coeff = hp_mul(cu, cv)
            if graded:
                e = 0
                pu = [alg.parity[l] for l in u]
                pv = [alg.parity[l] for l in v]
                for i in range(len(u)):
                    if pu[i]:
                        e += sum(pv[:i])
                if e % 2:
                    coeff = -coeff
            slots = [alg.mul(a, b) for a, b in zip(u, v)]
            if any(not s for s in slots):
                continue
            for combo in itertools.product(*slots):
                c = coeff
                for _, sc in combo:
                    c = hp_mul(c, sc)
                key = tuple(k for k, _ in combo)
                out[key] = hp_add(out[key], c) if key in out else c
    return {k: c for k, c in out.items() if c}


def _classes(action: GroupAction, tensors: dict, out: SymElement, scale=None):
    for t, c in tensors.items():
        rep, s = action.canonicalize(t)
        if s == 0:
            continue
        c = c * s if s != 1 else c
        if scale is not None:
            c = hp_mul(c, scale)
        out.add_term(rep, c)


def basis_class(rep, K: PermGroup | GroupAction, alg: BasedAlgebra | None = None, coeff=1) -> SymElement:
    """The class of a basis tensor, canonicalized."""
    action = K if isinstance(K, GroupAction) else permutation_action(K, alg)
    out = SymElement()
    _classes(action, {tuple(rep): as_hpoly(coeff)}, out)
    return out


def _check_factors(factors, n):
    for f in factors:
        for rep in f.terms:
            if len(rep) != n:
                raise ValueError(f"representative {rep} does not have degree {n}")


def polya_product(factors: Sequence[SymElement], K: PermGroup, alg: BasedAlgebra) -> SymElement:
    """``prod_i a_i = #K^{-(m-1)} sum_{sigma_2..sigma_m in K}
    class(a_1 (sigma_2 a_2) ... (sigma_m a_m))``, extended bilinearly."""
    if not factors:
        raise ValueError("need at least one factor")
    n = K.n
    _check_factors(factors, n)
    action = permutation_action(K, alg)
    graded = any(alg.parity)
    out = SymElement()
    m = len(factors)
    scale = HPoly.const(Fraction(1, K.order ** (m - 1)))
    # pre-permute each factor's terms under every sigma
    moved = []
    for f in factors[1:]:
        per_sigma = []
        for sigma in K.elements:
            d: dict = {}
            for rep, c in f.terms.items():
                t = _act(sigma, rep)
                if graded:
                    s = koszul_perm_sign(sigma, [alg.parity[l] for l in rep])
                    c = c if s == 1 else -c
                d[t] = hp_add(d[t], c) if t in d else c
            per_sigma.append(d)
        moved.append(per_sigma)
    first = dict(factors[0].terms)
    for choice in itertools.product(*moved):
        acc = first
        for d in choice:
            acc = _tensor_mul(alg, acc, d)
            if not acc:
                break
        _classes(action, acc, out, scale)
    return out


def oracle_product(factors: Sequence[SymElement], action: GroupAction | PermGroup, alg: BasedAlgebra,
                   budget: int = 10**6) -> SymElement:
    """Iterated ``class(a) class(b) = #G^{-1} sum_{g in G} class(a (g b))``.

    Each ``g b`` is expanded as an explicit basis tensor.  The character
    part ``C`` of ``G`` is averaged analytically: its contribution is the
    indicator that the character of ``g b`` is trivial on ``C``.
    """
    if isinstance(action, PermGroup):
        action = permutation_action(action, alg)
    if not factors:
        raise ValueError("need at least one factor")
    _check_factors(factors, action.n)
    order = action.order_without_characters()
    if order > budget:
        raise ValueError(f"group of order {order} exceeds budget {budget}")
    scale = HPoly.const(Fraction(1, order))
    result = SymElement()
    for rep, c in factors[0].terms.items():
        _classes(action, {rep: c}, result)
    for f in factors[1:]:
        nxt = SymElement()
        for brep, bc in f.terms.items():
            images = [(img, s) for img, s in action.images(brep) if action.char_trivial(img)]
            for arep, ac in result.terms.items():
                acc: dict = {}
                base = hp_mul(ac, bc)
                for img, s in images:
                    prod_terms = _tensor_mul(alg, {arep: base}, {img: as_hpoly(s)})
                    for t, c in prod_terms.items():
                        acc[t] = hp_add(acc[t], c) if t in acc else c
                _classes(action, acc, nxt, scale)
        result = nxt
    return result


# ---------------------------------------------------------------------------
# classical symmetric functions and the symmetric Boolean algebra
# ---------------------------------------------------------------------------


def _rows(A) -> tuple:
    return tuple(tuple(int(x) for x in row) for row in A)


def _check_family_rows(rows, family: str):
    if family == "A":
        return
    par = [sum(r) % 2 for r in rows]
    if family == "B":
        if any(par):
            raise ValueError("family B needs every row of even total degree")
    elif family == "D":
        if len(set(par)) > 1:
            raise ValueError("family D needs all rows of the same total-degree parity")
    else:
        raise ValueError(f"unknown family {family!r}")


def classical_sym_product(A, B, family: str = "A") -> SymElement:
    """``X^A X^B = (1/n!) sum_sigma X^{A + sigma(B)}`` in ``C[N^m]^{(x)n}_{S_n}``.

    Classes are keyed by the sorted tuple of rows.
    """
    A, B = _rows(A), _rows(B)
    n = len(A)
    if len(B) != n or len({len(r) for r in A + B}) > 1:
        raise ValueError("exponent matrices must have equal shapes")
    _check_family_rows(A, family)
    _check_family_rows(B, family)
    out = SymElement()
    w = HPoly.const(Fraction(1, factorial(n)))
    for sigma in itertools.permutations(range(n)):
        sB = _act(sigma, B)
        rows = tuple(sorted(tuple(x + y for x, y in zip(ra, rb)) for ra, rb in zip(A, sB)))
        out.add_term(rows, w)
    return out


def boolean_product(a: int, b: int, n: int) -> dict[int, Fraction]:
    """``[a][b] = C(n,b)^{-1} sum_k C(a, b-k) C(n-a, k) [a+k]`` for classes of
    subsets of ``[n]`` under union."""
    if not (0 <= a <= n and 0 <= b <= n):
        raise ValueError("need 0 <= a, b <= n")
    out = {}
    for k in range(0, min(b, n - a) + 1):
        c = Fraction(comb(a, b - k) * comb(n - a, k), comb(n, b))
        if c:
            out[a + k] = c
    return out


def boolean_product_direct(a: int, b: int, n: int) -> dict[int, Fraction]:
    """Average of ``|A u sigma(B)|`` over ``sigma in S_n`` with explicit subsets."""
    if not (0 <= a <= n and 0 <= b <= n):
        raise ValueError("need 0 <= a, b <= n")
    A = set(range(a))
    B = list(range(b))
    counts: dict[int, int] = {}
    total = 0
    for sigma in itertools.permutations(range(n)):
        size = len(A | {sigma[x] for x in B})
        counts[size] = counts.get(size, 0) + 1
        total += 1
    return {k: Fraction(v, total) for k, v in sorted(counts.items())}


# ---------------------------------------------------------------------------
# based-algebra builders
# ---------------------------------------------------------------------------


def _exps(m: int, dmax: int):
    for v in itertools.product(range(dmax + 1), repeat=m):
        if sum(v) <= dmax:
            yield v


def truncated_polynomial(m: int, D: int) -> BasedAlgebra:
    """``C[x_1..x_m] / (monomials of degree > D)``; labels are exponent tuples."""
    names = sorted(_exps(m, D))
    index = {nm: i for i, nm in enumerate(names)}

    def mul(s, t):
        e = tuple(x + y for x, y in zip(names[s], names[t]))
        return [(index[e], 1)] if e in index else []

    return BasedAlgebra(len(names), mul, unit=index[(0,) * m], names=names)


def boolean_algebra() -> BasedAlgebra:
    """Two idempotent basis elements ``e_0 = 1``, ``e_1`` with ``e_1 e_1 = e_1``
    (subsets of a point under union)."""
    table = {(0, 0): [(0, 1)], (0, 1): [(1, 1)], (1, 0): [(1, 1)], (1, 1): [(1, 1)]}
    return BasedAlgebra(2, table, unit=0, names=[(0,), (1,)])


def _weyl_names(m: int, D: int):
    """Labels ``(a_1..a_m, b_1..b_m, k)`` with ``|a| + |b| + 2k <= D``."""
    out = []
    for k in range(D // 2 + 1):
        for ab in _exps(2 * m, D - 2 * k):
            out.append(ab + (k,))
    return sorted(out)


def _weyl_like(m: int, D: int, weight_fn) -> BasedAlgebra:
    names = _weyl_names(m, D)
    index = {nm: i for i, nm in enumerate(names)}

    def mul(s, t):
        A, B = names[s], names[t]
        a, b, k = A[:m], A[m : 2 * m], A[2 * m]
        c, d, l = B[:m], B[m : 2 * m], B[2 * m]
        terms = []
        for I in itertools.product(*(range(min(b[q], c[q]) + 1) for q in range(m))):
            coef = 1
            for q in range(m):
                coef *= comb(b[q], I[q]) * falling(c[q], I[q])
            s_I = sum(I)
            key = (
                tuple(a[q] + c[q] - I[q] for q in range(m))
                + tuple(b[q] + d[q] - I[q] for q in range(m))
                + (k + l + s_I,)
            )
            if key in index:
                terms.append((index[key], weight_fn(s_I) * coef))
        return terms

    return BasedAlgebra(len(names), mul, unit=index[(0,) * (2 * m + 1)], names=names, check=False)


def truncated_weyl(m: int, D: int) -> BasedAlgebra:
    """Weyl algebra in ``m`` variable pairs (``y_q x_q = x_q y_q + h``) with
    ``h`` carried as a basis label of weight 2, truncated at weighted degree
    ``D``.  Products preserve weighted degree, so the truncation is a quotient."""
    return _weyl_like(m, D, lambda j: 1)


def truncated_complex_weyl(D: int) -> BasedAlgebra:
    """``C<z, zb>`` with ``z zb - zb z = 2i h``; labels ``(a, b, k)`` for
    ``z^a zb^b h^k``.  Reordering ``zb^b z^c`` picks up ``(-2i)^j``."""
    w = GaussRat(0, -2)
    return _weyl_like(1, D, lambda j: w**j)


def truncated_mweyl(D: int) -> BasedAlgebra:
    """M-Weyl algebra ``yx = xy + x^2 h`` truncated at ``a + b <= D``; the
    relation preserves ``a + b`` so ``h`` stays a scalar."""
    names = sorted(_exps(2, D))
    index = {nm: i for i, nm in enumerate(names)}

    def mul(s, t):
        (a, b), (c, d) = names[s], names[t]
        terms = []
        for j in range(b + 1):
            coef = comb(b, j) * rising(c, j)
            key = (a + c + j, b + d - j)
            if coef and key in index:
                terms.append((index[key], HPoly({j: coef})))
        return terms

    return BasedAlgebra(len(names), mul, unit=index[(0, 0)], names=names, check=False)


def exterior_algebra(m: int, clifford: bool = False) -> BasedAlgebra:
    """Exterior (or Clifford, ``theta_i^2 = 1``) algebra on ``m`` odd
    generators; labels are bitmasks."""
    from .superalg import clifford_product, ext_product

    names = list(range(1 << m))

    def mul(s, t):
        r = clifford_product(s, t) if clifford else ext_product(s, t)
        if r is None:
            return []
        sign, k = r
        return [(k, sign)]

    parity = [bin(s).count("1") % 2 for s in names]
    return BasedAlgebra(len(names), mul, unit=0, parity=parity, names=names, check=m <= 3)


def matrix_units(dims: Sequence[int], parities: Sequence[int] | None = None, with_unit: bool = False) -> BasedAlgebra:
    """Matrix units ``E_{r,t}`` of ``End(U)``, ``U`` graded with the given
    basis parities; ``E_{r,t} E_{t',u} = delta_{t t'} E_{r,u}``.

    ``dims`` is the total dimension as a one-element list or an int.
    The identity is a sum of units, so there is no unit label unless
    ``dims == 1``.
    """
    d = dims if isinstance(dims, int) else sum(dims)
    par = list(parities) if parities is not None else [0] * d
    names = [(r, t) for r in range(d) for t in range(d)]
    index = {nm: i for i, nm in enumerate(names)}

    def mul(s, t):
        (r1, t1), (r2, t2) = names[s], names[t]
        return [(index[(r1, t2)], 1)] if t1 == r2 else []

    parity = [(par[r] + par[t]) % 2 for r, t in names]
    unit = 0 if d == 1 else None
    return BasedAlgebra(len(names), mul, unit=unit, parity=parity, names=names)


def collapse_hbar(el: SymElement, alg: BasedAlgebra, m: int = 1) -> LinComb:
    """Move per-slot ``h`` labels of a truncated Weyl-type algebra into the
    scalar: ``class(X_1 h^k_1 (x) ...) -> h^{sum k} class(X_1 (x) ...)``.
    Keys of the result are sorted tuples of rows ``(a_1..a_m, b_1..b_m)``."""
    out = LinComb()
    for rep, c in el.terms.items():
        rows = []
        k = 0
        for l in rep:
            nm = alg.names[l]
            rows.append(tuple(nm[: 2 * m]))
            k += nm[2 * m]
        out.add_term(tuple(sorted(rows)), c.shift(k))
    return out
