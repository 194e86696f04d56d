"""Formula-versus-reference sweeps.

Each suite enumerates a small exhaustive range (plus seeded random
instances where the range is too large) and compares closed formulas with
an independent evaluation.  A suite passes iff its mismatch list is empty.
"""

from __future__ import annotations

import itertools
import random
import time
from dataclasses import dataclass, field
from fractions import Fraction
from math import comb

from .coeff import HBAR, HPoly, LinComb
from .oracles import (
    dihedral_oracle_star,
    dihedral_symmetrize,
    msymweyl_oracle,
    odd_oracle_product,
    symweyl_oracle,
    weyl_oracle_star,
    zm_oracle_star,
)
from .perm import enumerate_group, subgroups_from_generators, symmetric_group, act
from .qsym import (
    dihedral_star_elements,
    is_admissible,
    msymweyl_multiproduct,
    msymweyl_multiproduct_direct,
    qclass,
    qsym_star_A,
    qsym_star_BD,
    star,
    symweyl_multiproduct,
    symweyl_multiproduct_direct,
    wreath_zm_star,
)
from .schur import (
    ElemTrans,
    GlInfTrunc,
    elem_matrix,
    glinf_identity,
    normal_form_to_glinf,
    schur_class,
    schur_compose,
    schur_identity,
    schur_oracle_compose,
    weyl_to_glinf,
)
from .superalg import odd_class, odd_sym_product
from .sympow import (
    GroupAction,
    SymElement,
    basis_class,
    boolean_algebra,
    boolean_product,
    boolean_product_direct,
    classical_sym_product,
    collapse_hbar,
    exterior_algebra,
    oracle_product,
    permutation_action,
    polya_product,
    truncated_polynomial,
    truncated_weyl,
)
from .perm import sym_dimension
from .weyl import (
    factorial_identity_check,
    genseries_check,
    mweyl_coord,
    mweyl_coords_closed,
    mweyl_coords_functions,
    mweyl_factorial_identity_check,
    normal_coord,
    normal_coords_closed,
    normal_coords_flows,
    normal_coords_pairings,
    normal_order,
)

__all__ = ["VerifyReport", "SUITES", "run_suite", "suite_names"]


@dataclass
class VerifyReport:
    suite: str
    instances: int = 0
    mismatches: list = field(default_factory=list)
    seconds: float = 0.0

    @property
    def passed(self) -> bool:
        return not self.mismatches

    def check(self, inp, expected, actual):
        self.instances += 1
        if expected != actual:
            self.mismatches.append((str(inp), str(expected), str(actual)))

    def to_json(self, timing: bool = False) -> dict:
        out = {
            "suite": self.suite,
            "instances": self.instances,
            "passed": self.passed,
            "mismatches": [{"input": i, "expected": e, "actual": a} for i, e, a in self.mismatches[:20]],
        }
        if len(self.mismatches) > 20:
            out["mismatch_count"] = len(self.mismatches)
        if timing:
            out["seconds"] = round(self.seconds, 3)
        return out


def _clean(el) -> LinComb:
    return LinComb({k: c for k, c in el.terms.items() if c})


def _words(n: int, emax: int):
    pairs = [(a, b) for a in range(emax + 1) for b in range(emax + 1)]
    return itertools.product(pairs, repeat=n)


# ---------------------------------------------------------------------------
# normal coordinates
# ---------------------------------------------------------------------------


def suite_weyl_coords(rep: VerifyReport, nmax: int = 3, emax: int = 3, **_):
    for n in range(1, nmax + 1):
        for A in _words(n, emax):
            A = list(A)
            for k in range(sum(b for _, b in A) + 1):
                ref = normal_coord(A, k)
                got = (normal_coords_closed(A, k), normal_coords_pairings(A, k), normal_coords_flows(A, k))
                rep.check((A, k), (ref, ref, ref), got)


def suite_genseries(rep: VerifyReport, nmax: int = 3, amax: int = 4, bmax: int = 4, cmax: int = 3, **_):
    bad = genseries_check(nmax, amax, bmax, cmax)
    # one instance per (a, b, c) coefficient compared
    from .weyl import _vectors

    total = sum(1 for _ in _vectors(nmax, amax)) * sum(1 for _ in _vectors(nmax, bmax)) * (cmax + 1)
    rep.instances += total
    for A, c, got, ref in bad:
        rep.mismatches.append((str((A, c)), str(ref), str(got)))


def suite_mweyl_coords(rep: VerifyReport, nmax: int = 3, emax: int = 3, **_):
    for n in range(1, nmax + 1):
        for A in _words(n, emax):
            A = list(A)
            for k in range(sum(b for _, b in A) + 1):
                ref = mweyl_coord(A, k)
                rep.check((A, k), (ref, ref), (mweyl_coords_closed(A, k), mweyl_coords_functions(A, k)))


def suite_factorial(rep: VerifyReport, nmax: int = 3, emax: int = 2, tmax: int = 10, **_):
    for n in range(1, nmax + 1):
        for A in _words(n, emax):
            for t in range(tmax + 1):
                lhs, rhs = factorial_identity_check(A, t)
                rep.check(("weyl", A, t), lhs, rhs)
                lhs, rhs = mweyl_factorial_identity_check(A, t)
                rep.check(("mweyl", A, t), lhs, rhs)


# ---------------------------------------------------------------------------
# Polya products
# ---------------------------------------------------------------------------


def _reps(action, dim, n):
    out = set()
    for t in itertools.product(range(dim), repeat=n):
        r, s = action.canonicalize(t)
        if s:
            out.add(r)
    return sorted(out)


def suite_polya(rep: VerifyReport, nmax: int = 3, random_triples: int = 100, seed: int = 0, **_):
    rng = random.Random(seed)
    groups = subgroups_from_generators(nmax)
    algebras = [
        ("truncated-polynomial", truncated_polynomial(1, 2)),
        ("boolean", boolean_algebra()),
        ("truncated-weyl", truncated_weyl(1, 2)),
    ]
    for name, alg in algebras:
        for K in groups:
            act_ = permutation_action(K, alg)
            reps = _reps(act_, alg.dim, nmax)
            cls = {r: basis_class(r, K, alg) for r in reps}
            for r1 in reps:
                for r2 in reps:
                    f = [cls[r1], cls[r2]]
                    rep.check((name, K.describe(), r1, r2), oracle_product(f, act_, alg), polya_product(f, K, alg))
            for _ in range(random_triples // (len(groups) * len(algebras)) + 1):
                f = [cls[rng.choice(reps)] for _ in range(3)]
                rep.check(
                    (name, K.describe(), [next(iter(x.terms)) for x in f]),
                    oracle_product(f, act_, alg),
                    polya_product(f, K, alg),
                )


# ---------------------------------------------------------------------------
# star products
# ---------------------------------------------------------------------------


def _rowsets(n: int, dmax: int, pred=lambda r: True):
    rows = [r for r in itertools.product(range(dmax + 1), repeat=2) if sum(r) <= dmax and pred(r)]
    return sorted({tuple(sorted(c)) for c in itertools.product(rows, repeat=n)})


def _bd_oracle(A, C, family):
    """Group average over ``(Z_2^n or its even part) x| S_n`` acting by
    ``x -> -x``, ``y -> -y`` in chosen slots, as a character indicator."""
    n = len(A)
    alg = truncated_weyl(1, max(map(sum, A)) + max(map(sum, C)))
    if family == "B":
        gens = [tuple(int(i == j) for i in range(n)) for j in range(n)]
    else:
        gens = [tuple(int(i in (0, j)) for i in range(n)) for j in range(1, n)]
    action = GroupAction(
        symmetric_group(n),
        char_modulus=2,
        char_gens=gens,
        weight=lambda l: alg.names[l][0] + alg.names[l][1],
        name=f"{family}{n}",
    )
    X, Y = SymElement(), SymElement()
    X.add_term(tuple(alg.index[r + (0,)] for r in A), HPoly.const(1))
    Y.add_term(tuple(alg.index[r + (0,)] for r in C), HPoly.const(1))
    return _clean(collapse_hbar(oracle_product([X, Y], action, alg), alg))


def suite_qsym_tt(rep: VerifyReport, nmax: int = 2, dmax: int = 2, **_):
    for n in range(1, nmax + 1):
        S = _rowsets(n, dmax)
        for A in S:
            for C in S:
                got = qsym_star_A(A, C)
                rep.check(("A", A, C), weyl_oracle_star(A, C), _clean(got))
                rep.check(("hbar0", A, C), _clean(classical_sym_product(A, C)), _clean(got.hbar_part(0)))
                for fam in ("B", "D"):
                    if is_admissible(A, fam) and is_admissible(C, fam):
                        val = _clean(qsym_star_BD(A, C, fam))
                        rep.check((fam, A, C), _bd_oracle(A, C, fam), val)
                        rep.check((fam, "diagram", A, C), _clean(got), val)


def _assoc(rep, tag, triples, mul, lift):
    for X, Y, Z in triples:
        a, b, c = lift(X), lift(Y), lift(Z)
        rep.check((tag, X, Y, Z), mul(mul(a, b), c), mul(a, mul(b, c)))


def suite_star_assoc(rep: VerifyReport, random_instances: int = 20, seed: int = 0, **_):
    rng = random.Random(seed)

    def triples(S):
        return list(itertools.product(S, repeat=3))

    def rand(n, dmax, pred, k):
        S = _rowsets(n, dmax, pred)
        return [tuple(rng.choice(S) for _ in range(3)) for _ in range(k)]

    small = _rowsets(1, 3) + _rowsets(2, 1)
    star_a = lambda x, y: _clean(star(x, y, "A"))  # noqa: E731
    _assoc(rep, "A", [t for t in triples(small) if len({len(x) for x in t}) == 1], star_a, qclass)
    _assoc(rep, "A random", rand(2, 3, lambda r: True, random_instances), star_a, qclass)
    for mc in (1, 2, 3):
        pred = lambda r, mc=mc: (r[1] - r[0]) % mc == 0  # noqa: E731
        S = _rowsets(1, 3, pred) + _rowsets(2, 1 if mc == 1 else 2, pred)
        mul = lambda x, y, mc=mc: _clean(star(x, y, "zm", mc))  # noqa: E731
        _assoc(rep, f"zm{mc}", [t for t in triples(S) if len({len(x) for x in t}) == 1], mul, qclass)
        _assoc(rep, f"zm{mc} random", rand(2, 3, pred, random_instances), mul, qclass)
    for mc in (1, 2):
        pred = lambda r, mc=mc: (r[1] - r[0]) % mc == 0  # noqa: E731
        S = _rowsets(1, 3, pred) + _rowsets(2, 1 if mc == 1 else 2, pred)
        mul = lambda x, y, mc=mc: _clean(dihedral_star_elements(x, y, mc))  # noqa: E731
        lift = lambda r: qclass(r, kind="dihedral")  # noqa: E731
        _assoc(rep, f"dihedral{mc}", [t for t in triples(S) if len({len(x) for x in t}) == 1], mul, lift)
        _assoc(rep, f"dihedral{mc} random", rand(2, 2, pred, random_instances), mul, lift)


def suite_wreath_oracle(rep: VerifyReport, nmax: int = 2, dmax: int = 2, **_):
    for mc in (1, 2, 3):
        pred = lambda r, mc=mc: (r[1] - r[0]) % mc == 0  # noqa: E731
        for n in range(1, nmax + 1):
            S = _rowsets(n, dmax, pred)
            for A in S:
                for C in S:
                    rep.check(("zm", mc, A, C), zm_oracle_star(A, C, mc), _clean(wreath_zm_star(A, C, mc)))
                    if mc <= 2:
                        o, _ = dihedral_oracle_star(A, C, mc)
                        f = _clean(star(qclass(A), qclass(C), "dihedral", mc))
                        D = 2 * (2 * dmax) + 2
                        rep.check(("dihedral", mc, A, C), dihedral_symmetrize(o, D), dihedral_symmetrize(f, D))


def suite_symweyl(rep: VerifyReport, mmax: int = 3, nmax: int = 2, emax: int = 2, random_instances: int = 150,
                  seed: int = 0, **_):
    rng = random.Random(seed)
    pairs = [(a, b) for a in range(emax + 1) for b in range(emax + 1)]
    paths = [
        ("W", symweyl_multiproduct, symweyl_multiproduct_direct, symweyl_oracle),
        ("MW", msymweyl_multiproduct, msymweyl_multiproduct_direct, msymweyl_oracle),
    ]
    for m in range(1, mmax + 1):
        for n in range(1, nmax + 1):
            facs = list(itertools.product(pairs, repeat=n))
            if len(facs) ** m > 2000:
                combos = [tuple(rng.choice(facs) for _ in range(m)) for _ in range(random_instances)]
            else:
                combos = list(itertools.product(facs, repeat=m))
            for A in combos:
                for name, it, direct, oracle in paths:
                    x, y = _clean(it(A)), _clean(direct(A))
                    rep.check((name, "iterated-vs-direct", A), x, y)
                    rep.check((name, "oracle", A), oracle(A), x)


def suite_odd_boolean(rep: VerifyReport, mmax: int = 3, nmax: int = 3, bool_n: int = 6, sum_n: int = 8, **_):
    for m in range(1, mmax + 1):
        for n in range(1, nmax + 1):
            reps = sorted({next(iter(c.terms)) for t in itertools.combinations_with_replacement(range(1 << m), n)
                           if (c := odd_class(t))})
            for I in reps:
                for J in reps:
                    rep.check(("odd", m, I, J), _clean(odd_oracle_product(I, J, m)), _clean(odd_sym_product(I, J, m)))
    for n in range(0, bool_n + 1):
        for a in range(n + 1):
            for b in range(n + 1):
                rep.check(("boolean", n, a, b), boolean_product_direct(a, b, n), boolean_product(a, b, n))
    for n in range(0, sum_n + 1):
        for a in range(n + 1):
            for b in range(n + 1):
                rep.check(("boolean-sum", n, a, b), Fraction(1), sum(boolean_product(a, b, n).values()))


def suite_glinf(rep: VerifyReport, N: int = 12, dmax: int = 5, random_products: int = 30, seed: int = 0, **_):
    rng = random.Random(seed)
    pairs = [(a, b) for a in range(dmax + 1) for b in range(dmax + 1) if a + b <= dmax]
    words = [
        list(w)
        for L in range(1, 4)
        for w in itertools.product(pairs, repeat=L)
        if sum(a + b for a, b in w) <= dmax
    ]
    images = {}

    def image(w):
        key = tuple(w)
        if key not in images:
            images[key] = weyl_to_glinf(w, N)
        return images[key]

    for a, b in pairs:
        M, valid = image([(a, b)])
        rep.check(("x^a y^b", a, b), elem_matrix(a, b, N).restrict(valid), M.restrict(valid))
    for w in words:
        M, valid = image(w)
        rep.check(("normal-order", w), normal_form_to_glinf(normal_order(w), N).restrict(valid), M.restrict(valid))
    short = [w for w in words if len(w) <= 2]
    for u in short:
        for v in short:
            if sum(a + b for a, b in u + v) > dmax:
                continue
            Muv, valid = image(u + v)
            rep.check(("multiplicative", u, v), Muv.restrict(valid), (image(u)[0] @ image(v)[0]).restrict(valid))
    X, Y = elem_matrix(1, 0, N), elem_matrix(0, 1, N)
    rep.check("yx = xy + h", (X @ Y + glinf_identity(N).scale(HBAR)).restrict(N - 1), (Y @ X).restrict(N - 1))
    for a in range(5):
        for b in range(5):
            v = N - a - b - 1
            rep.check(("E0a E01", a), elem_matrix(0, a + 1, N).restrict(v), (elem_matrix(0, a, N) @ Y).restrict(v))
            rep.check(("Ea0 E10", a), elem_matrix(a + 1, 0, N).restrict(v), (elem_matrix(a, 0, N) @ X).restrict(v))
            rep.check(("Ea0 E0b", a, b), elem_matrix(a, b, N).restrict(v),
                      (elem_matrix(a, 0, N) @ elem_matrix(0, b, N)).restrict(v))
    for a, b in pairs:
        rep.check(("filtration E", a, b), True, elem_matrix(a, b, N).respects_filtration())
    for _ in range(random_products):
        P, Q = _random_filtered(N, rng), _random_filtered(N, rng)
        rep.check("filtration product", (True, True, True),
                  (P.respects_filtration(), Q.respects_filtration(), (P @ Q).respects_filtration()))


def _random_filtered(N, rng) -> GlInfTrunc:
    entries = {}
    for i in range(N):
        for j in range(N):
            if rng.random() < 0.3:
                low = max(j - i, 0)
                entries[(i, j)] = HPoly({low + e: rng.randint(-3, 3) for e in range(2)})
    return GlInfTrunc(N, entries)


def _schur_classes(n, m, ps, pt):
    es = [
        ElemTrans(r, t, d)
        for r in range(len(ps))
        for t in range(len(pt))
        for d in itertools.product(*(range(q) for q in m))
    ]
    seen, out = set(), []
    for tup in itertools.combinations_with_replacement(es, n):
        c = schur_class(tup, m, ps, pt)
        key = tuple(c.terms)
        if c and key not in seen:
            seen.add(key)
            out.append(c)
    return out


def suite_schur(rep: VerifyReport, nmax: int = 2, random_instances: int = 30, seed: int = 0, **_):
    rng = random.Random(seed)
    spaces = [((0,), (0,), (0,)), ((0, 1), (1,), (0, 1)), ((0, 1), (0, 1), (1, 0)), ((0, 0), (0, 1), (1,))]
    for m in ((1,), (2,), (3,)):
        for n in range(1, nmax + 1):
            for pv, pw, pz in spaces:
                Fs, Gs, Hs = (_schur_classes(n, m, a, b) for a, b in ((pv, pw), (pw, pz), (pz, pv)))
                for F in Fs:
                    rep.check(("unit-left", m, n, F), F, schur_compose(F, schur_identity(pw, m, n), m, n, pv, pw, pw))
                    rep.check(("unit-right", m, n, F), F, schur_compose(schur_identity(pv, m, n), F, m, n, pv, pv, pw))
                pairs = [(F, G) for F in Fs for G in Gs]
                if m == (2,) or len(pairs) <= 40:
                    chosen = pairs
                else:
                    chosen = rng.sample(pairs, 40)
                for F, G in chosen:
                    rep.check(("oracle", m, n, pv, pw, pz, F, G), schur_oracle_compose(F, G, m, n, pv, pw, pz),
                              schur_compose(F, G, m, n, pv, pw, pz))
                for _ in range(random_instances // 4):
                    F, G, H = rng.choice(Fs), rng.choice(Gs), rng.choice(Hs)
                    left = schur_compose(schur_compose(F, G, m, n, pv, pw, pz), H, m, n, pv, pz, pv)
                    right = schur_compose(F, schur_compose(G, H, m, n, pw, pz, pv), m, n, pv, pw, pv)
                    rep.check(("assoc", m, n, F, G, H), left, right)


def _orbit_count(dim, K):
    seen = set()
    count = 0
    for t in itertools.product(range(dim), repeat=K.n):
        if t in seen:
            continue
        count += 1
        for p in K.elements:
            seen.add(act(p, t))
    return count


def suite_dimensions(rep: VerifyReport, dmax: int = 3, nmax: int = 4, mmax: int = 3, **_):
    for n in range(1, nmax + 1):
        for K in subgroups_from_generators(n, 2 if n <= 3 else 1):
            for d in range(1, dmax + 1):
                rep.check(("orbits", K.describe(), d), _orbit_count(d, K), sym_dimension(d, K))
        for d in range(1, dmax + 1):
            rep.check(("multiset", n, d), comb(d + n - 1, n), sym_dimension(d, symmetric_group(n)))
    for m in range(1, mmax + 1):
        C = exterior_algebra(m, clifford=True)
        rep.check(("clifford-dim", m), 2**m, C.dim)
        half = 2 ** (m // 2) if m % 2 == 0 else 2 ** ((m - 1) // 2)
        for n in range(1, 4):
            sym = sym_dimension(C.dim, symmetric_group(n))
            if m % 2 == 0:
                rep.check(("Sym^n C(m) = Schur(n, 2^(m/2))", m, n), _schur_dim(n, half), sym)
            else:
                split = sum(_schur_dim(a, half) * _schur_dim(n - a, half) for a in range(n + 1))
                rep.check(("Sym^n C(m) = sum Schur(a) x Schur(b)", m, n), split, sym)
    for d in range(1, 3):
        for n in range(1, 4):
            rep.check(("Schur(inf) plumbing", d, n), comb(d * d + n - 1, n), sym_dimension(d * d, symmetric_group(n)))


def _schur_dim(n: int, d: int) -> int:
    """``dim End_{S_n}(V^{(x)n})`` for ``dim V = d``: the number of
    ``S_n``-orbits on pairs of ``n``-tuples, counted by enumeration."""
    if n == 0:
        return 1
    return _orbit_count(d * d, symmetric_group(n))


SUITES = {
    "weyl-coords": suite_weyl_coords,
    "genseries": suite_genseries,
    "mweyl-coords": suite_mweyl_coords,
    "factorial": suite_factorial,
    "polya": suite_polya,
    "qsym-tt": suite_qsym_tt,
    "star-assoc": suite_star_assoc,
    "wreath-oracle": suite_wreath_oracle,
    "symweyl": suite_symweyl,
    "odd-boolean": suite_odd_boolean,
    "glinf": suite_glinf,
    "schur": suite_schur,
    "dimensions": suite_dimensions,
}


def suite_names() -> list[str]:
    return list(SUITES)


def run_suite(name: str, **params) -> VerifyReport:
    try:
        fn = SUITES[name]
    except KeyError:
        raise ValueError(f"unknown suite {name!r}; choose from {', '.join(SUITES)}") from None
    rep = VerifyReport(name)
    t0 = time.perf_counter()
    fn(rep, **{k: v for k, v in params.items() if v is not None})
    rep.seconds = time.perf_counter() - t0
    return rep
