"""Normal ordering in the Weyl algebra ``yx = xy + h`` and the M-Weyl
algebra ``yx = xy + x^2 h``.

A word is a sequence of exponent pairs ``(a_i, b_i)`` standing for the
product ``x^a_1 y^b_1 x^a_2 y^b_2 ...``.  Normal forms are dicts mapping
``(x_exp, y_exp, hbar_deg)`` to integer coefficients.

The iterated two-block rewrite (``normal_order``) is the reference value
for the normal coordinates.  The closed formulas and the combinatorial
counts are checked against it.
"""

from __future__ import annotations

import itertools
from collections.abc import Sequence
from fractions import Fraction
from functools import lru_cache
from math import comb, factorial, prod

__all__ = [
    "BudgetExceeded",
    "falling",
    "rising",
    "reorder_yx",
    "normal_order",
    "normal_order_letters",
    "normal_coord",
    "normal_coords_closed",
    "normal_coords_pairings",
    "normal_coords_flows",
    "genseries_check",
    "mweyl_reorder",
    "mweyl_normal_order",
    "mweyl_normal_order_letters",
    "mweyl_coord",
    "mweyl_coords_closed",
    "mweyl_coords_functions",
    "factorial_identity_check",
    "mweyl_factorial_identity_check",
    "word_letters",
]

Word = Sequence[tuple[int, int]]
NormalForm = dict

DEFAULT_BUDGET = 10**7


class BudgetExceeded(RuntimeError):
    """An enumeration would exceed its explicit budget."""


def falling(m: int, k: int) -> int:
    """``(m)_k = m(m-1)...(m-k+1)``; valid for negative ``m``."""
    out = 1
    for j in range(k):
        out *= m - j
    return out


def rising(m: int, k: int) -> int:
    """``m^(k) = m(m+1)...(m+k-1)``."""
    out = 1
    for j in range(k):
        out *= m + j
    return out


def _check_word(w: Word) -> list[tuple[int, int]]:
    out = []
    for pair in w:
        a, b = pair
        if not (isinstance(a, int) and isinstance(b, int)) or a < 0 or b < 0:
            raise ValueError(f"exponents must be natural numbers, got {pair!r}")
        out.append((a, b))
    return out


def _totals(w: Word) -> tuple[int, int]:
    return sum(a for a, _ in w), sum(b for _, b in w)


def _add(acc: dict, key, c):
    v = acc.get(key, 0) + c
    if v:
        acc[key] = v
    else:
        acc.pop(key, None)


# ---------------------------------------------------------------------------
# Weyl algebra
# ---------------------------------------------------------------------------


def reorder_yx(b: int, a: int) -> NormalForm:
    """``y^b x^a = sum_k C(b,k) (a)_k x^{a-k} y^{b-k} h^k``."""
    if a < 0 or b < 0:
        raise ValueError("exponents must be natural numbers")
    return {(a - k, b - k, k): comb(b, k) * falling(a, k) for k in range(min(a, b) + 1)}


def _mul_monomial(nf: NormalForm, a2: int, b2: int, mweyl: bool) -> NormalForm:
    out: dict = {}
    for (a, b, h), c in nf.items():
        for k in range(min(b, a2) + 1 if not mweyl else b + 1):
            if mweyl:
                coef = comb(b, k) * rising(a2, k)
                key = (a + a2 + k, b + b2 - k, h + k)
            else:
                coef = comb(b, k) * falling(a2, k)
                key = (a + a2 - k, b + b2 - k, h + k)
            if coef:
                _add(out, key, c * coef)
    return out


def normal_order(w: Word) -> NormalForm:
    """Normal form of ``prod_i x^{a_i} y^{b_i}`` in the Weyl algebra."""
    nf: NormalForm = {(0, 0, 0): 1}
    for a, b in _check_word(w):
        nf = _mul_monomial(nf, a, b, mweyl=False)
    return nf


def word_letters(w: Word) -> str:
    return "".join("x" * a + "y" * b for a, b in _check_word(w))


def _letters_nf(letters: str, mweyl: bool) -> NormalForm:
    """Letter-by-letter rewriting of the leftmost ``yx`` until none is left."""
    out: dict = {}
    stack = [(letters, 0, 1)]
    while stack:
        s, h, c = stack.pop()
        pos = s.find("yx")
        if pos < 0:
            _add(out, (s.count("x"), s.count("y"), h), c)
            continue
        head, tail = s[:pos], s[pos + 2 :]
        stack.append((head + "xy" + tail, h, c))
        stack.append((head + ("xx" if mweyl else "") + tail, h + 1, c))
    return out


@lru_cache(maxsize=4096)
def _letters_cached(letters: str, mweyl: bool):
    return tuple(sorted(_letters_nf(letters, mweyl).items()))


def normal_order_letters(letters: str) -> NormalForm:
    """Independent oracle: rewrite a string over ``{x, y}`` one relation at a time."""
    if set(letters) - {"x", "y"}:
        raise ValueError("letters must be x or y")
    return dict(_letters_cached(letters, False))


def normal_coord(A: Word, k: int) -> int:
    """``N(A,k)`` read off the rewriting evaluator."""
    ta, tb = _totals(A)
    return normal_order(A).get((ta - k, tb - k, k), 0)


def _compositions(k: int, parts: int):
    """All ``p`` in ``N^parts`` with ``|p| = k``."""
    if parts == 0:
        if k == 0:
            yield ()
        return
    if parts == 1:
        yield (k,)
        return
    for first in range(k + 1):
        for rest in _compositions(k - first, parts - 1):
            yield (first,) + rest


def normal_coords_closed(A: Word, k: int) -> int:
    """Closed formula: sum over ``p`` in ``N^{n-1}``, ``|p| = k``, of
    ``prod_i C(b_i, p_i) (|a_{>i}| - |p_{>i}|)_{p_i}``."""
    A = _check_word(A)
    n = len(A)
    if n == 0:
        raise ValueError("word must have at least one factor")
    if k < 0:
        return 0
    a = [x for x, _ in A]
    b = [y for _, y in A]
    # suffix sums of a over blocks strictly after i
    a_after = [sum(a[i + 1 :]) for i in range(n)]
    total = 0
    for p in _compositions(k, n - 1):
        term = 1
        p_after = 0
        for i in range(n - 2, -1, -1):
            term *= comb(b[i], p[i]) * falling(a_after[i] - p_after, p[i])
            if not term:
                break
            p_after += p[i]
        total += term
    return total


def _budget_guard(count: int, budget: int, what: str):
    if count > budget:
        raise BudgetExceeded(f"{what}: {count} states exceeds budget {budget}")


def normal_coords_pairings(A: Word, k: int, budget: int = DEFAULT_BUDGET) -> int:
    """Count ``k``-pairings from the x-letters to the y-letters in which an
    x of block ``i`` may only pair with a y of block ``j < i``."""
    A = _check_word(A)
    xs = [i for i, (a, _) in enumerate(A) for _ in range(a)]
    ys = [j for j, (_, b) in enumerate(A) for _ in range(b)]
    if k < 0 or k > min(len(xs), len(ys)):
        return 0
    _budget_guard((len(xs) + 1) << len(ys), budget, "pairing enumeration")

    allowed = [[f for f, j in enumerate(ys) if j < i] for i in xs]

    @lru_cache(maxsize=None)
    def count(e: int, used: int, left: int) -> int:
        if left == 0:
            return 1
        if len(xs) - e < left:
            return 0
        total = count(e + 1, used, left)  # x number e stays unpaired
        for f in allowed[e]:
            if not used >> f & 1:
                total += count(e + 1, used | 1 << f, left - 1)
        return total

    return count(0, 0, k)


def _multinomial(parts) -> int:
    out = factorial(sum(parts))
    for p in parts:
        out //= factorial(p)
    return out


def normal_coords_flows(A: Word, c: int, budget: int = DEFAULT_BUDGET) -> int:
    """Sum over flow matrices ``c_ij`` (y-block ``i`` to x-block ``j``, ``i < j``)
    with total ``c`` of binomial times multinomial weights times ``prod c_ij!``."""
    A = _check_word(A)
    n = len(A)
    if c < 0:
        return 0
    cells = [(i, j) for i in range(n) for j in range(i + 1, n)]
    _budget_guard(comb(c + len(cells) - 1, max(len(cells) - 1, 0)) if cells else 1, budget, "flow enumeration")
    total = 0
    for flow in _compositions(c, len(cells)):
        cm = dict(zip(cells, flow))
        term = 1
        for j in range(n):
            col = [cm[(i, j)] for i in range(j)]
            term *= comb(A[j][0], sum(col)) * _multinomial(col)
        for i in range(n):
            row = [cm[(i, j)] for j in range(i + 1, n)]
            term *= comb(A[i][1], sum(row)) * _multinomial(row)
        for v in flow:
            term *= factorial(v)
        total += term
    return total


# ---------------------------------------------------------------------------
# generating series
# ---------------------------------------------------------------------------


def _series_mul(p: dict, q: dict, bounds) -> dict:
    out: dict = {}
    for e1, c1 in p.items():
        for e2, c2 in q.items():
            e = tuple(x + y for x, y in zip(e1, e2))
            if not _within(e, bounds):
                continue
            _add(out, e, c1 * c2)
    return out


def _within(e, bounds) -> bool:
    n, amax, bmax, cmax = bounds
    return sum(e[:n]) <= amax and sum(e[n : 2 * n]) <= bmax and e[2 * n] <= cmax


def _truncated_exp(linear: dict, bounds) -> dict:
    """``sum_k L^k / k!`` truncated to ``bounds``; ``L`` has no constant term."""
    n = bounds[0]
    one = (0,) * (2 * n + 1)
    result = {one: Fraction(1)}
    power = {one: Fraction(1)}
    k = 0
    while power:
        k += 1
        power = _series_mul(power, linear, bounds)
        power = {e: c / k for e, c in power.items()}
        for e, c in power.items():
            _add(result, e, c)
    return result


def genseries_check(n: int, amax: int, bmax: int, cmax: int) -> list[tuple]:
    """Expand ``exp(u sum_{j<i} s_i t_j + sum t + sum s)`` truncated at
    ``|a| <= amax``, ``|b| <= bmax``, ``u``-degree ``<= cmax``, and compare
    ``a! b!`` times each coefficient with ``N(A, c)``.

    ``s_i`` marks the x-exponent and ``t_j`` the y-exponent of factor ``i``/``j``.
    Returns a list of ``(A, c, series_value, reference)`` mismatches.
    """
    if min(n, amax, bmax, cmax) < 0:
        raise ValueError("bounds must be nonnegative")
    bounds = (n, amax, bmax, cmax)
    lin: dict = {}

    def unit(*idx):
        e = [0] * (2 * n + 1)
        for q in idx:
            e[q] += 1
        return tuple(e)

    for i in range(n):
        lin[unit(i)] = Fraction(1)  # s_i
        lin[unit(n + i)] = Fraction(1)  # t_i
    for i in range(n):
        for j in range(i):
            lin[unit(i, n + j, 2 * n)] = Fraction(1)  # u s_i t_j
    series = _truncated_exp(lin, bounds)

    mismatches = []
    for a in _vectors(n, amax):
        for b in _vectors(n, bmax):
            A = list(zip(a, b))
            for c in range(cmax + 1):
                got = series.get(a + b + (c,), Fraction(0)) * prod(map(factorial, a)) * prod(map(factorial, b))
                ref = normal_coord(A, c)
                if got != ref:
                    mismatches.append((A, c, got, ref))
    return mismatches


def _vectors(n: int, total_max: int):
    for v in itertools.product(range(total_max + 1), repeat=n):
        if sum(v) <= total_max:
            yield v


# ---------------------------------------------------------------------------
# M-Weyl algebra
# ---------------------------------------------------------------------------


def mweyl_reorder(b: int, a: int) -> NormalForm:
    """``y^b x^a = sum_k C(b,k) a^(k) x^{a+k} y^{b-k} h^k``."""
    if a < 0 or b < 0:
        raise ValueError("exponents must be natural numbers")
    out = {}
    for k in range(b + 1):
        c = comb(b, k) * rising(a, k)
        if c:
            out[(a + k, b - k, k)] = c
    return out


def mweyl_normal_order(w: Word) -> NormalForm:
    nf: NormalForm = {(0, 0, 0): 1}
    for a, b in _check_word(w):
        nf = _mul_monomial(nf, a, b, mweyl=True)
    return nf


def mweyl_normal_order_letters(letters: str) -> NormalForm:
    if set(letters) - {"x", "y"}:
        raise ValueError("letters must be x or y")
    return dict(_letters_cached(letters, True))


def mweyl_coord(A: Word, k: int) -> int:
    ta, tb = _totals(A)
    return mweyl_normal_order(A).get((ta + k, tb - k, k), 0)


def mweyl_coords_closed(A: Word, k: int) -> int:
    """Sum over ``p`` in ``N^{n-1}``, ``|p| = k``, of
    ``prod_i C(b_i, p_i) (|a_{>i}| + |p_{>i}|)^(p_i)``."""
    A = _check_word(A)
    n = len(A)
    if n == 0:
        raise ValueError("word must have at least one factor")
    if k < 0:
        return 0
    a = [x for x, _ in A]
    b = [y for _, y in A]
    a_after = [sum(a[i + 1 :]) for i in range(n)]
    total = 0
    for p in _compositions(k, n - 1):
        term = 1
        p_after = 0
        for i in range(n - 2, -1, -1):
            term *= comb(b[i], p[i]) * rising(a_after[i] + p_after, p[i])
            if not term:
                break
            p_after += p[i]
        total += term
    return total


def mweyl_coords_functions(A: Word, k: int, budget: int = DEFAULT_BUDGET) -> int:
    """Count assignments of ``k`` of the y-letters to x-letters, a y of block
    ``j`` going to an x of block ``i > j``, where the y's attached to each x
    form a linearly ordered list.

    Equivalently: functions from the x-letters to sequences of y-letters with
    pairwise disjoint images and total length ``k``.
    """
    A = _check_word(A)
    xs = [i for i, (a, _) in enumerate(A) for _ in range(a)]
    ys = [j for j, (_, b) in enumerate(A) for _ in range(b)]
    if k < 0 or k > len(ys):
        return 0
    _budget_guard((len(ys) + 1) * comb(len(ys) + len(xs), max(len(xs), 1)), budget, "function enumeration")
    allowed = [[e for e, i in enumerate(xs) if i > j] for j in ys]

    @lru_cache(maxsize=None)
    def count(f: int, lengths: tuple, left: int) -> int:
        if left == 0:
            return 1
        if len(ys) - f < left:
            return 0
        total = count(f + 1, lengths, left - 0)  # y number f is not used
        for e in allowed[f]:
            # insert into the list of x number e at any of len+1 positions
            grown = lengths[:e] + (lengths[e] + 1,) + lengths[e + 1 :]
            total += (lengths[e] + 1) * count(f + 1, grown, left - 1)
        return total

    return count(0, (0,) * len(xs), k)


# ---------------------------------------------------------------------------
# factorial identities from the polynomial representations
# ---------------------------------------------------------------------------


def factorial_identity_check(A: Word, t: int) -> tuple[int, int]:
    """Both sides of ``prod_i (t + |a_{>i}| - |b_{>i}|)_{b_i} =
    sum_k N(A,k) (t)_{|b|-k}``, from acting on ``x^t`` by ``x`` and ``d/dx``."""
    A = _check_word(A)
    n = len(A)
    lhs = 1
    for i in range(n):
        a_after = sum(a for a, _ in A[i + 1 :])
        b_after = sum(b for _, b in A[i + 1 :])
        lhs *= falling(t + a_after - b_after, A[i][1])
    _, tb = _totals(A)
    nf = normal_order(A)
    rhs = sum(c * falling(t, tb - h) for (_, _, h), c in nf.items())
    return lhs, rhs


def mweyl_factorial_identity_check(A: Word, t: int) -> tuple[int, int]:
    """Both sides of ``prod_i (t - |a_{>i}| - |b_{>i}|)_{b_i} =
    sum_k (-1)^k N_M(A,k) (t)_{|b|-k}``, from ``x -> x^{-1}``, ``y -> -d/dx``."""
    A = _check_word(A)
    n = len(A)
    lhs = 1
    for i in range(n):
        a_after = sum(a for a, _ in A[i + 1 :])
        b_after = sum(b for _, b in A[i + 1 :])
        lhs *= falling(t - a_after - b_after, A[i][1])
    _, tb = _totals(A)
    nf = mweyl_normal_order(A)
    rhs = sum((-1) ** h * c * falling(t, tb - h) for (_, _, h), c in nf.items())
    return lhs, rhs


def apply_to_power(w: Word, t: int) -> dict[int, int]:
    """Act on ``x^t`` factor by factor with ``x`` = multiplication and
    ``y`` = ``d/dx`` (``h = 1``); returns ``{exponent: coefficient}``."""
    poly = {t: 1}
    for a, b in reversed(_check_word(w)):
        new: dict = {}
        for e, c in poly.items():
            v = c * falling(e, b)
            if v:
                _add(new, e - b + a, v)
        poly = new
    return poly


def apply_normal_form(nf: NormalForm, t: int) -> dict[int, int]:
    out: dict = {}
    for (a, b, _), c in nf.items():
        v = c * falling(t, b)
        if v:
            _add(out, t - b + a, v)
    return out
