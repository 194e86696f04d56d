"""Command-line front end.  Every command prints one JSON object.

Exit codes: 0 success, 1 domain error, 2 parse or usage error.
"""

from __future__ import annotations

import argparse
import json
import sys

from . import expr as ex
from .coeff import LinComb
from .perm import cycle_index, format_cycle_index, parse_group_spec, sym_dimension
from .weyl import (
    BudgetExceeded,
    genseries_check,
    mweyl_coord,
    mweyl_coords_closed,
    mweyl_coords_functions,
    normal_coord,
    normal_coords_closed,
    normal_coords_flows,
    normal_coords_pairings,
)


class UsageError(Exception):
    pass


class _ArgParser(argparse.ArgumentParser):
    def error(self, message):
        raise UsageError(message)


def _terms(el: LinComb, key_fn) -> list[dict]:
    """Terms sorted by hbar degree, then canonical representative."""
    rows = []
    for key, poly in el.terms.items():
        for d, c in poly.items():
            rows.append((d, key, c))
    rows.sort(key=lambda r: (r[0], r[1]))
    out = []
    for d, key, c in rows:
        entry = key_fn(key)
        entry["hbar_deg"] = d
        entry["coeff"] = str(c)
        out.append(entry)
    return out


def _add_exact(obj):
    """Attach the integer-string coefficient form to every term, for --json."""
    from .coeff import HPoly, parse_hpoly

    if isinstance(obj, list):
        for x in obj:
            _add_exact(x)
    elif isinstance(obj, dict):
        if isinstance(obj.get("coeff"), str):
            d = obj.get("hbar_deg", obj.get("h", 0))
            c = parse_hpoly(obj["coeff"]).coeffs[0]
            obj["exact"] = HPoly({d: c}).to_json()
        for v in obj.values():
            if isinstance(v, (list, dict)):
                _add_exact(v)


def _emit(obj) -> str:
    return json.dumps(obj, sort_keys=True, ensure_ascii=True)


# ---------------------------------------------------------------------------
# weyl / mweyl
# ---------------------------------------------------------------------------


def _word_arg(text: str):
    terms = ex.parse(text)
    if len(terms) != 1 or terms[0].coeff != 1 or terms[0].hdeg or len(terms[0].slots) != 1:
        raise ex.ParseError("expected a single monomial word", 1, 1)
    return ex.weyl_word(terms[0].slots[0])


def cmd_weyl(args, mweyl: bool):
    if args.action == "normal-order":
        el = ex.to_weyl(ex.parse(args.expr), mweyl=mweyl)

        def key(k):
            return {"x": k[0], "y": k[1]}

        terms = _terms(el, key)
        for t in terms:
            t["h"] = t.pop("hbar_deg")
        return {"terms": terms, "expr": ex.format_weyl(el)}
    word = _word_arg(args.expr)
    tb = sum(b for _, b in word)
    ks = [args.k] if args.k is not None else list(range(tb + 1))
    rows = []
    for k in ks:
        if mweyl:
            rows.append(
                {
                    "k": k,
                    "rewrite": mweyl_coord(word, k),
                    "closed": mweyl_coords_closed(word, k),
                    "functions": mweyl_coords_functions(word, k, budget=args.budget),
                }
            )
        else:
            rows.append(
                {
                    "k": k,
                    "rewrite": normal_coord(word, k),
                    "closed": normal_coords_closed(word, k),
                    "pairings": normal_coords_pairings(word, k, budget=args.budget),
                    "flows": normal_coords_flows(word, k, budget=args.budget),
                }
            )
    return {"word": [list(p) for p in word], "coords": rows}


def cmd_genseries(args):
    bad = genseries_check(args.n, args.amax, args.bmax, args.cmax)
    return {"n": args.n, "mismatches": [{"word": [list(p) for p in A], "c": c, "series": str(g), "coord": r}
                                        for A, c, g, r in bad]}


# ---------------------------------------------------------------------------
# sympow
# ---------------------------------------------------------------------------


def _builtin_algebra(spec: str):
    from . import sympow as sp

    name, _, rest = spec.partition(":")
    nums = [int(x) for x in rest.split(",")] if rest else []
    table = {
        "poly": lambda m, D: sp.truncated_polynomial(m, D),
        "boolean": lambda: sp.boolean_algebra(),
        "weyl": lambda m, D: sp.truncated_weyl(m, D),
        "complex-weyl": lambda D: sp.truncated_complex_weyl(D),
        "mweyl": lambda D: sp.truncated_mweyl(D),
        "exterior": lambda m: sp.exterior_algebra(m),
        "clifford": lambda m: sp.exterior_algebra(m, clifford=True),
        "units": lambda *d: sp.matrix_units(d),
    }
    if name not in table:
        return None
    try:
        return table[name](*nums)
    except TypeError:
        raise ValueError(f"wrong number of parameters in algebra spec {spec!r}") from None


def _load_algebra(spec: str):
    from .sympow import BasedAlgebra

    alg = _builtin_algebra(spec)
    if alg is not None:
        return alg
    try:
        with open(spec, encoding="utf-8") as fh:
            text = fh.read()
    except OSError as e:
        raise ValueError(f"cannot read algebra file {spec!r}: {e.strerror}") from None
    try:
        data = json.loads(text)
    except json.JSONDecodeError as e:
        raise ex.ParseError(f"invalid JSON in {spec}: {e.msg}", e.lineno, e.colno) from None
    return BasedAlgebra.from_json(data)


def cmd_sympow(args):
    from . import sympow as sp

    if args.action == "boolean":
        res = sp.boolean_product(args.a, args.b, args.n)
        return {"terms": [{"class": k, "coeff": str(v)} for k, v in sorted(res.items())]}
    if args.action == "cycle-index":
        K = parse_group_spec(args.group, args.n)
        ci = cycle_index(K)
        return {
            "group": K.describe(),
            "order": K.order,
            "terms": [{"cycle_type": list(b), "coeff": str(c)} for b, c in ci.items()],
            "expr": format_cycle_index(ci),
        }
    if args.action == "dimension":
        K = parse_group_spec(args.group, args.n)
        return {"group": K.describe(), "dim": args.dim, "dimension": sym_dimension(args.dim, K)}
    # product
    alg = _load_algebra(args.algebra)
    K = parse_group_spec(args.group, args.n)
    action = sp.permutation_action(K, alg)
    factors = [ex.to_sympow(ex.parse(t), alg, action) for t in args.terms]
    if args.method == "oracle":
        res = sp.oracle_product(factors, action, alg, budget=args.budget)
    else:
        res = sp.polya_product(factors, K, alg)
    return {
        "group": K.describe(),
        "terms": _terms(res, lambda k: {"class": list(k)}),
        "expr": ex.format_sympow(res, alg.unit),
    }


# ---------------------------------------------------------------------------
# qsym
# ---------------------------------------------------------------------------


def _parse_type(text: str):
    kind, _, m = text.partition(":")
    if kind not in ("A", "B", "D", "zm", "dihedral", "mweyl"):
        raise ValueError(f"unknown type {text!r}")
    if kind in ("zm", "dihedral"):
        if not m:
            raise ValueError(f"type {kind} needs a modulus, e.g. {kind}:2")
        return kind, int(m)
    if m:
        raise ValueError(f"type {kind} takes no modulus")
    return kind, 1


def cmd_qsym(args):
    from . import qsym as q
    from .oracles import msymweyl_oracle, symweyl_oracle

    if args.action == "star":
        kind, mc = _parse_type(args.type)
        parse_kind = kind if kind in ("zm", "dihedral") else "A"
        X, Y = (ex.to_qsym(ex.parse(t), args.m, parse_kind) for t in (args.left, args.right))
        for el in (X, Y):
            for rows in el.terms:
                if args.n is not None and len(rows) != args.n:
                    raise ValueError(f"expected {args.n} tensor slots, got {len(rows)}")
        res = q.star(X, Y, kind, mc)
        complex_ = kind in ("zm", "dihedral")
        return {
            "type": args.type,
            "terms": _terms(res, lambda k: {"rows": [list(r) for r in k]}),
            "expr": ex.format_qsym(res, args.m, complex_),
        }
    if args.action == "classical":
        from .sympow import classical_sym_product

        X, Y = (ex.to_qsym(ex.parse(t), args.m) for t in (args.left, args.right))
        out = LinComb()
        for ka, ca in X.terms.items():
            for kc, cc in Y.terms.items():
                out = out + classical_sym_product(ka, kc, args.type).scale(ca * cc)
        return {"terms": _terms(out, lambda k: {"rows": [list(r) for r in k]}), "expr": ex.format_qsym(out, args.m)}
    # multiproduct: each factor is a single class of (a, b) rows
    factors = []
    for t in args.terms:
        el = ex.to_qsym(ex.parse(t), 1)
        if len(el.terms) != 1 or next(iter(el.terms.values())) != 1:
            raise ValueError(f"factor {t!r} must be a single normal-ordered monomial class")
        factors.append(next(iter(el.terms)))
    fns = {
        ("weyl", "iterated"): q.symweyl_multiproduct,
        ("weyl", "direct"): q.symweyl_multiproduct_direct,
        ("weyl", "oracle"): symweyl_oracle,
        ("mweyl", "iterated"): q.msymweyl_multiproduct,
        ("mweyl", "direct"): q.msymweyl_multiproduct_direct,
        ("mweyl", "oracle"): msymweyl_oracle,
    }
    res = fns[(args.algebra, args.method)](factors)
    return {"terms": _terms(res, lambda k: {"rows": [list(r) for r in k]}), "expr": ex.format_qsym(res)}


# ---------------------------------------------------------------------------
# super
# ---------------------------------------------------------------------------


def _ints(text: str) -> list[int]:
    try:
        return [int(x) for x in text.split(",") if x.strip()]
    except ValueError:
        raise ex.ParseError(f"expected comma-separated integers, got {text!r}", 1, 1) from None


def cmd_super(args):
    from . import superalg as s

    if args.action in ("ext", "clifford"):
        el_i, el_j = (ex.to_odd(ex.parse(t), args.m) for t in (args.left, args.right))
        out = LinComb()
        for (I,), ci in el_i.terms.items():
            for (J,), cj in el_j.terms.items():
                r = s.ext_product(I, J) if args.action == "ext" else s.clifford_product(I, J)
                if r is not None:
                    out.add_term((r[1],), ci * cj * r[0])
        return {"terms": _terms(out, lambda k: {"mono": s.members(k[0])}), "expr": ex.format_odd(out)}
    if args.action == "koszul":
        a, b, sigma = _ints(args.a), _ints(args.b), [x - 1 for x in _ints(args.sigma)]
        return {"sign": s.koszul_sign(a, b, sigma)}
    X, Y = (ex.to_odd(ex.parse(t), args.m) for t in (args.left, args.right))
    out = LinComb()
    for ka, ca in X.terms.items():
        for kb, cb in Y.terms.items():
            out = out + s.odd_sym_product(ka, kb, args.m).scale(ca * cb)
    return {"terms": _terms(out, lambda k: {"class": [s.members(I) for I in k]}), "expr": ex.format_odd(out)}


# ---------------------------------------------------------------------------
# schur
# ---------------------------------------------------------------------------


def _load_morphism(path: str, m):
    from .coeff import parse_hpoly
    from .schur import SchurElement, elem_trans, schur_class

    try:
        with open(path, encoding="utf-8") as fh:
            data = json.load(fh)
    except OSError as e:
        raise ValueError(f"cannot read {path!r}: {e.strerror}") from None
    except json.JSONDecodeError as e:
        raise ex.ParseError(f"invalid JSON in {path}: {e.msg}", e.lineno, e.colno) from None
    src, tgt = tuple(data.get("source", ())), tuple(data.get("target", ()))
    if not src or not tgt:
        raise ValueError(f"{path}: 'source' and 'target' parity lists are required")
    if "expr" in data:
        return ex.to_schur(ex.parse(data["expr"]), m, src, tgt), src, tgt
    out = SchurElement()
    for term in data.get("terms", []):
        slots = [elem_trans(e["r"], e["s"], e["t"], e["u"], m) for e in term["slots"]]
        out = out + schur_class(slots, m, src, tgt, parse_hpoly(str(term.get("coeff", "1"))))
    return out, src, tgt


def _schur_json(el):
    return _terms(el, lambda k: {"slots": [e.to_json() for e in k]})


def cmd_schur(args):
    from . import schur as sc

    if args.action == "glinf":
        word = _word_arg(args.word)
        M, valid = sc.weyl_to_glinf(word, args.N)
        entries = [
            {"i": i, "j": j, "hbar_deg": d, "coeff": str(c)}
            for (i, j), p in sorted(M.restrict(valid).items())
            for d, c in p.items()
        ]
        return {"N": args.N, "valid": valid, "entries": entries}
    m = tuple(_ints(args.m))
    if not m or any(q < 1 for q in m):
        raise ValueError("--m needs positive moduli")
    if args.action == "identity":
        par = tuple(_ints(args.parity))
        el = sc.schur_identity(par, m, args.n)
        return {"terms": _schur_json(el), "expr": ex.format_schur(el)}
    F, pv, pw = _load_morphism(args.F, m)
    G, pw2, pz = _load_morphism(args.G, m)
    if pw != pw2:
        raise ValueError("target of the first morphism must equal the source of the second")
    fn = sc.schur_oracle_compose if args.method == "oracle" else sc.schur_compose
    el = fn(F, G, m, args.n, pv, pw, pz)
    return {"terms": _schur_json(el), "expr": ex.format_schur(el)}


# ---------------------------------------------------------------------------
# parse / verify
# ---------------------------------------------------------------------------


def cmd_parse(args):
    terms = ex.parse(args.expr)
    d = args.dialect
    if d in ("weyl", "mweyl"):
        el = ex.to_weyl(terms, mweyl=d == "mweyl")
        return {"dialect": d, "expr": ex.format_weyl(el)}
    if d == "qsym":
        kind, _ = _parse_type(args.type) if args.type else ("A", 1)
        kind = kind if kind in ("zm", "dihedral") else "A"
        el = ex.to_qsym(terms, args.m, kind)
        return {"dialect": d, "expr": ex.format_qsym(el, args.m, kind != "A"),
                "terms": _terms(el, lambda k: {"rows": [list(r) for r in k]})}
    if d == "odd":
        el = ex.to_odd(terms, args.m)
        return {"dialect": d, "expr": ex.format_odd(el)}
    if d == "boolean":
        el = ex.to_boolean(terms)
        n = len(terms[0].slots)
        return {"dialect": d, "expr": ex.format_boolean(el, n)}
    if d == "sympow":
        from .sympow import permutation_action

        alg = _load_algebra(args.algebra)
        n = len(terms[0].slots)
        el = ex.to_sympow(terms, alg, permutation_action(parse_group_spec(args.group, n), alg))
        return {"dialect": d, "expr": ex.format_sympow(el, alg.unit)}
    # schur
    m = tuple(_ints(args.mod))
    el = ex.to_schur(terms, m, tuple(_ints(args.source)), tuple(_ints(args.target)))
    return {"dialect": d, "expr": ex.format_schur(el)}


def cmd_verify(args):
    from .verify import run_suite, suite_names

    params = {"nmax": args.nmax, "emax": args.emax, "seed": args.seed}
    for item in args.param or ():
        key, sep, val = item.partition("=")
        if not sep:
            raise UsageError(f"--param expects key=value, got {item!r}")
        try:
            params[key.strip()] = int(val)
        except ValueError:
            raise UsageError(f"--param value must be an integer, got {val!r}") from None
    if args.suite != "all" and args.suite not in suite_names():
        raise UsageError(f"unknown suite {args.suite!r}; choose from all, {', '.join(suite_names())}")
    names = suite_names() if args.suite == "all" else [args.suite]
    reports = [run_suite(n, **params) for n in names]
    if len(reports) == 1:
        return reports[0].to_json(args.timing), 0
    return {"suites": [r.to_json(args.timing) for r in reports], "passed": all(r.passed for r in reports)}, 0


# ---------------------------------------------------------------------------


def build_parser() -> argparse.ArgumentParser:
    p = _ArgParser(prog="qsymfun", description="Exact products in symmetric powers of noncommutative algebras.")
    p.add_argument("--budget", type=int, default=10**7, help="enumeration budget for brute-force evaluators")
    p.add_argument("--json", action="store_true", help="also give each coefficient as integer-string parts")
    p.add_argument("--text", action="store_true", help="print only the result in expression syntax")
    sub = p.add_subparsers(dest="command", required=True, parser_class=_ArgParser)

    for name in ("weyl", "mweyl"):
        w = sub.add_parser(name, help=f"{'M-' if name == 'mweyl' else ''}Weyl algebra normal ordering")
        wsub = w.add_subparsers(dest="action", required=True, parser_class=_ArgParser)
        no = wsub.add_parser("normal-order")
        no.add_argument("expr")
        co = wsub.add_parser("coords")
        co.add_argument("expr")
        co.add_argument("--k", type=int)
        if name == "weyl":
            gs = wsub.add_parser("genseries")
            gs.add_argument("--n", type=int, default=3)
            gs.add_argument("--amax", type=int, default=4)
            gs.add_argument("--bmax", type=int, default=4)
            gs.add_argument("--cmax", type=int, default=3)

    s = sub.add_parser("sympow", help="Polya products and counting")
    ssub = s.add_subparsers(dest="action", required=True, parser_class=_ArgParser)
    pr = ssub.add_parser("product")
    pr.add_argument("--algebra", required=True, help="JSON file or builtin: poly:m,D boolean weyl:m,D ...")
    pr.add_argument("--group", default="Sn")
    pr.add_argument("--n", type=int)
    pr.add_argument("--method", choices=["polya", "oracle"], default="polya")
    pr.add_argument("--terms", nargs="+", required=True)
    bo = ssub.add_parser("boolean")
    bo.add_argument("--n", type=int, required=True)
    bo.add_argument("a", type=int)
    bo.add_argument("b", type=int)
    ci = ssub.add_parser("cycle-index")
    ci.add_argument("--group", required=True)
    ci.add_argument("--n", type=int)
    dm = ssub.add_parser("dimension")
    dm.add_argument("--group", required=True)
    dm.add_argument("--n", type=int)
    dm.add_argument("--dim", type=int, required=True)

    q = sub.add_parser("qsym", help="star products of quantum symmetric functions")
    qsub = q.add_subparsers(dest="action", required=True, parser_class=_ArgParser)
    st = qsub.add_parser("star")
    st.add_argument("--type", default="A", help="A, B, D, zm:<m>, dihedral:<m> or mweyl")
    st.add_argument("--n", type=int)
    st.add_argument("--m", type=int, default=1)
    st.add_argument("left")
    st.add_argument("right")
    cl = qsub.add_parser("classical")
    cl.add_argument("--type", default="A", choices=["A", "B", "D"])
    cl.add_argument("--m", type=int, default=1)
    cl.add_argument("left")
    cl.add_argument("right")
    mp = qsub.add_parser("multiproduct")
    mp.add_argument("--algebra", choices=["weyl", "mweyl"], default="weyl")
    mp.add_argument("--method", choices=["iterated", "direct", "oracle"], default="iterated")
    mp.add_argument("terms", nargs="+")

    su = sub.add_parser("super", help="exterior and Clifford algebras, odd symmetric functions")
    susub = su.add_subparsers(dest="action", required=True, parser_class=_ArgParser)
    for name in ("ext", "clifford", "product"):
        e = susub.add_parser(name)
        e.add_argument("--m", type=int, required=True)
        e.add_argument("left")
        e.add_argument("right")
    ko = susub.add_parser("koszul")
    ko.add_argument("--a", required=True, help="parities, e.g. 1,0")
    ko.add_argument("--b", required=True)
    ko.add_argument("--sigma", required=True, help="1-based images, e.g. 2,1")

    sc = sub.add_parser("schur", help="Schur categories and gl(infinity)")
    scsub = sc.add_subparsers(dest="action", required=True, parser_class=_ArgParser)
    cp = scsub.add_parser("compose")
    cp.add_argument("--m", required=True, help="moduli, e.g. 2,3")
    cp.add_argument("--n", type=int, required=True)
    cp.add_argument("--method", choices=["formula", "oracle"], default="formula")
    cp.add_argument("F")
    cp.add_argument("G")
    idn = scsub.add_parser("identity")
    idn.add_argument("--m", required=True)
    idn.add_argument("--n", type=int, required=True)
    idn.add_argument("--parity", required=True, help="basis parities, e.g. 0,1")
    gl = scsub.add_parser("glinf")
    gl.add_argument("--N", type=int, default=12)
    gl.add_argument("word")

    pa = sub.add_parser("parse", help="parse and print an element in canonical form")
    pa.add_argument("--dialect", required=True, choices=list(ex.DIALECTS))
    pa.add_argument("--m", type=int, default=1, help="variable pairs (qsym) or generators (odd)")
    pa.add_argument("--type", help="qsym type, for z/zb input")
    pa.add_argument("--algebra", help="sympow: algebra file or builtin spec")
    pa.add_argument("--group", default="Sn", help="sympow: slot group")
    pa.add_argument("--mod", default="1", help="schur: moduli")
    pa.add_argument("--source", default="0", help="schur: source parities")
    pa.add_argument("--target", default="0", help="schur: target parities")
    pa.add_argument("expr")

    v = sub.add_parser("verify", help="run a formula-versus-reference suite")
    v.add_argument("suite")
    v.add_argument("--nmax", type=int)
    v.add_argument("--emax", type=int)
    v.add_argument("--seed", type=int)
    v.add_argument("--param", action="append", help="extra integer suite parameter, key=value")
    v.add_argument("--timing", action="store_true", help="include wall-clock seconds (not deterministic)")
    return p


def _dispatch(args):
    c = args.command
    if c in ("weyl", "mweyl"):
        if c == "weyl" and args.action == "genseries":
            return cmd_genseries(args), 0
        return cmd_weyl(args, c == "mweyl"), 0
    if c == "sympow":
        return cmd_sympow(args), 0
    if c == "qsym":
        return cmd_qsym(args), 0
    if c == "super":
        return cmd_super(args), 0
    if c == "schur":
        return cmd_schur(args), 0
    if c == "parse":
        return cmd_parse(args), 0
    return cmd_verify(args)


def run(argv=None) -> tuple[str, int]:
    """Execute a command; returns ``(output, exit_code)``."""
    try:
        args = build_parser().parse_args(argv)
        if args.command == "sympow" and args.action == "product" and args.n is None:
            args.n = len(ex.parse(args.terms[0])[0].slots)
        obj, code = _dispatch(args)
        if isinstance(obj, dict) and obj.get("passed") is False:
            code = 1
        if args.json:
            _add_exact(obj)
        if args.text and isinstance(obj, dict) and "expr" in obj:
            return obj["expr"], code
        return _emit(obj), code
    except ex.ParseError as e:
        return _emit({"error": {"kind": "parse", "message": str(e), "line": e.line, "column": e.col}}), 2
    except UsageError as e:
        return _emit({"error": {"kind": "usage", "message": str(e)}}), 2
    except BudgetExceeded as e:
        return _emit({"error": {"kind": "budget", "message": str(e)}}), 1
    except (ValueError, ArithmeticError, KeyError, TypeError) as e:
        return _emit({"error": {"kind": "domain", "message": str(e)}}), 1


def main(argv=None) -> int:
    out, code = run(argv)
    print(out)
    return code


if __name__ == "__main__":
    sys.exit(main())
