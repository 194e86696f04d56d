"""Exact scalars: Gaussian rationals and polynomials in hbar.

Every coefficient produced by the library lives in Q(i)[hbar].  Both types
are immutable, hashable and compare structurally after normalization.
"""

from __future__ import annotations

from fractions import Fraction
from numbers import Rational

__all__ = ["GaussRat", "HPoly", "LinComb", "hp_add", "hp_mul", "hp_div_nat", "as_hpoly", "parse_hpoly", "I", "HBAR"]


def _frac(x) -> Fraction:
    if isinstance(x, Fraction):
        return x
    if isinstance(x, (int, Rational)):
        return Fraction(x)
    raise TypeError(f"not an exact rational: {x!r}")


class GaussRat:
    """A Gaussian rational ``re + im*i`` with exact rational parts."""

    __slots__ = ("re", "im")

    def __init__(self, re=0, im=0):
        self.re = _frac(re)
        self.im = _frac(im)

    @classmethod
    def coerce(cls, x) -> "GaussRat":
        if isinstance(x, GaussRat):
            return x
        if isinstance(x, complex):
            raise TypeError("floating complex numbers are not exact")
        return cls(x)

    def is_zero(self) -> bool:
        return not self.re and not self.im

    def is_real(self) -> bool:
        return not self.im

    def __bool__(self):
        return not self.is_zero()

    def __eq__(self, other):
        if isinstance(other, GaussRat):
            return self.re == other.re and self.im == other.im
        if isinstance(other, (int, Fraction)):
            return not self.im and self.re == other
        return NotImplemented

    def __hash__(self):
        if not self.im:
            return hash(self.re)
        return hash((self.re, self.im))

    def __neg__(self):
        return GaussRat(-self.re, -self.im)

    def __add__(self, other):
        if isinstance(other, (int, Fraction)):
            return GaussRat(self.re + other, self.im)
        if not isinstance(other, GaussRat):
            return NotImplemented
        return GaussRat(self.re + other.re, self.im + other.im)

    __radd__ = __add__

    def __sub__(self, other):
        return self + (-GaussRat.coerce(other))

    def __rsub__(self, other):
        return GaussRat.coerce(other) - self

    def __mul__(self, other):
        if isinstance(other, (int, Fraction)):
            return GaussRat(self.re * other, self.im * other)
        if not isinstance(other, GaussRat):
            return NotImplemented
        a, b, c, d = self.re, self.im, other.re, other.im
        return GaussRat(a * c - b * d, a * d + b * c)

    __rmul__ = __mul__

    def conjugate(self):
        return GaussRat(self.re, -self.im)

    def __truediv__(self, other):
        other = GaussRat.coerce(other)
        norm = other.re * other.re + other.im * other.im
        if not norm:
            raise ZeroDivisionError("division by zero Gaussian rational")
        num = self * other.conjugate()
        return GaussRat(num.re / norm, num.im / norm)

    def __pow__(self, k: int):
        if k < 0:
            return GaussRat(1) / (self ** (-k))
        out = GaussRat(1)
        base = self
        while k:
            if k & 1:
                out = out * base
            base = base * base
            k >>= 1
        return out

    def __repr__(self):
        return f"GaussRat({self})"

    def __str__(self):
        # "3/2", "-2i", "1+2i", "-1/2-3/4i"
        if not self.im:
            return str(self.re)
        im = self.im
        if im == 1:
            ims = "i"
        elif im == -1:
            ims = "-i"
        else:
            ims = f"{im}i"
        if not self.re:
            return ims
        if not ims.startswith("-"):
            ims = "+" + ims
        return f"{self.re}{ims}"

    @classmethod
    def parse(cls, text: str) -> "GaussRat":
        """Inverse of ``str``: accepts ``"3/2"``, ``"-2i"``, ``"1+2i"``, ``"i"``."""
        s = text.strip().replace(" ", "").replace("−", "-")
        if not s:
            raise ValueError("empty coefficient")
        if not s.endswith("i"):
            return cls(Fraction(s))
        body = s[:-1]
        # split at the last sign that is not the leading one
        cut = max(body.rfind("+", 1), body.rfind("-", 1))
        if cut > 0 and body[cut - 1] not in "/":
            re_s, im_s = body[:cut], body[cut:]
        else:
            re_s, im_s = "0", body
        if im_s in ("", "+"):
            im = Fraction(1)
        elif im_s == "-":
            im = Fraction(-1)
        else:
            im = Fraction(im_s)
        return cls(Fraction(re_s), im)


I = GaussRat(0, 1)


class HPoly:
    """Polynomial in hbar with Gaussian-rational coefficients.

    Stored as a sorted tuple of ``(degree, GaussRat)`` pairs with no zero
    coefficient; the zero polynomial is the empty tuple.
    """

    __slots__ = ("_items", "_hash")

    def __init__(self, coeffs=None):
        if coeffs is None:
            items = ()
        else:
            if isinstance(coeffs, dict):
                pairs = coeffs.items()
            else:
                pairs = coeffs
            acc: dict[int, GaussRat] = {}
            for deg, c in pairs:
                if deg < 0:
                    raise ValueError("negative hbar degree")
                c = GaussRat.coerce(c)
                acc[deg] = acc[deg] + c if deg in acc else c
            items = tuple(sorted((d, c) for d, c in acc.items() if c))
        self._items = items
        self._hash = None

    @classmethod
    def _raw(cls, items):
        obj = cls.__new__(cls)
        obj._items = items
        obj._hash = None
        return obj

    @classmethod
    def const(cls, c) -> "HPoly":
        return cls({0: c})

    @classmethod
    def monomial(cls, c, deg: int) -> "HPoly":
        return cls({deg: c})

    @property
    def coeffs(self) -> dict[int, GaussRat]:
        return dict(self._items)

    def items(self):
        return self._items

    def degree(self) -> int:
        return self._items[-1][0] if self._items else -1

    def order(self) -> int:
        """Lowest hbar degree present (``-1`` for zero)."""
        return self._items[0][0] if self._items else -1

    def is_zero(self) -> bool:
        return not self._items

    def __bool__(self):
        return bool(self._items)

    def __getitem__(self, deg: int) -> GaussRat:
        for d, c in self._items:
            if d == deg:
                return c
        return GaussRat(0)

    def __eq__(self, other):
        if isinstance(other, HPoly):
            return self._items == other._items
        if isinstance(other, (int, Fraction, GaussRat)):
            return self._items == HPoly.const(other)._items
        return NotImplemented

    def __hash__(self):
        if self._hash is None:
            self._hash = hash(self._items)
        return self._hash

    def __add__(self, other):
        return hp_add(self, as_hpoly(other))

    __radd__ = __add__

    def __neg__(self):
        return HPoly._raw(tuple((d, -c) for d, c in self._items))

    def __sub__(self, other):
        return hp_add(self, -as_hpoly(other))

    def __rsub__(self, other):
        return hp_add(as_hpoly(other), -self)

    def __mul__(self, other):
        if isinstance(other, (int, Fraction, GaussRat)):
            if not other:
                return HPoly()
            return HPoly._raw(tuple((d, c * other) for d, c in self._items))
        if not isinstance(other, HPoly):
            return NotImplemented
        return hp_mul(self, other)

    __rmul__ = __mul__

    def __truediv__(self, d):
        if isinstance(d, int):
            return hp_div_nat(self, d)
        d = GaussRat.coerce(d)
        return HPoly._raw(tuple((k, c / d) for k, c in self._items))

    def shift(self, k: int) -> "HPoly":
        """Multiply by ``hbar**k``."""
        return HPoly._raw(tuple((d + k, c) for d, c in self._items))

    def evaluate(self, hbar):
        out = GaussRat(0)
        for d, c in self._items:
            out = out + c * (GaussRat.coerce(hbar) ** d)
        return out

    def normalized(self) -> "HPoly":
        return HPoly(self._items)

    def to_json(self) -> list[dict]:
        return [
            {
                "hbar_deg": d,
                "re_num": str(c.re.numerator),
                "re_den": str(c.re.denominator),
                "im_num": str(c.im.numerator),
                "im_den": str(c.im.denominator),
            }
            for d, c in self._items
        ]

    @classmethod
    def from_json(cls, data: list[dict]) -> "HPoly":
        return cls(
            {
                int(e["hbar_deg"]): GaussRat(
                    Fraction(int(e["re_num"]), int(e["re_den"])),
                    Fraction(int(e["im_num"]), int(e["im_den"])),
                )
                for e in data
            }
        )

    def __repr__(self):
        return f"HPoly({self})"

    def __str__(self):
        if not self._items:
            return "0"
        parts = []
        for d, c in self._items:
            cs = str(c)
            if c.im and c.re:
                cs = f"({cs})"
            if d == 0:
                parts.append(cs)
            else:
                h = "h" if d == 1 else f"h^{d}"
                if c == 1:
                    parts.append(h)
                elif c == -1:
                    parts.append("-" + h)
                else:
                    parts.append(f"{cs}*{h}")
        out = parts[0]
        for p in parts[1:]:
            out += p if p.startswith("-") else "+" + p
        return out


HBAR = HPoly({1: 1})


def as_hpoly(x) -> HPoly:
    if isinstance(x, HPoly):
        return x
    return HPoly.const(x)


def hp_add(p: HPoly, q: HPoly) -> HPoly:
    if not p._items:
        return q
    if not q._items:
        return p
    acc = dict(p._items)
    for d, c in q._items:
        if d in acc:
            s = acc[d] + c
            if s:
                acc[d] = s
            else:
                del acc[d]
        else:
            acc[d] = c
    return HPoly._raw(tuple(sorted(acc.items())))


def hp_mul(p: HPoly, q: HPoly) -> HPoly:
    if not p._items or not q._items:
        return HPoly()
    acc: dict[int, GaussRat] = {}
    for d1, c1 in p._items:
        for d2, c2 in q._items:
            d = d1 + d2
            acc[d] = acc[d] + c1 * c2 if d in acc else c1 * c2
    return HPoly._raw(tuple(sorted((d, c) for d, c in acc.items() if c)))


def hp_div_nat(p: HPoly, d: int) -> HPoly:
    if not isinstance(d, int) or d < 1:
        raise ValueError(f"divisor must be a positive integer, got {d!r}")
    if d == 1:
        return p
    return HPoly._raw(tuple((k, c * Fraction(1, d)) for k, c in p._items))


def parse_hpoly(text: str) -> HPoly:
    """Inverse of ``str(HPoly)``: ``"1+h"``, ``"(3+2i)*h^2"``, ``"-2i"``, ``"0"``."""
    s = text.strip().replace(" ", "").replace("−", "-")
    if not s:
        raise ValueError("empty coefficient")
    # split at top-level + or - (not inside parentheses, not leading, not after '/')
    parts, depth, start = [], 0, 0
    for pos, ch in enumerate(s):
        if ch == "(":
            depth += 1
        elif ch == ")":
            depth -= 1
        elif ch in "+-" and depth == 0 and pos > start and s[pos - 1] not in "/*^":
            parts.append(s[start:pos])
            start = pos
    parts.append(s[start:])
    out = HPoly()
    for part in parts:
        sign = 1
        body = part
        if body.startswith("+"):
            body = body[1:]
        if body.startswith("-") and (body[1:2] in ("(", "h")):
            sign, body = -1, body[1:]
        deg = 0
        if "h" in body:
            head, _, hpart = body.rpartition("h")
            deg = 1
            if hpart.startswith("^"):
                deg = int(hpart[1:])
            elif hpart:
                raise ValueError(f"cannot parse {part!r}")
            head = head.rstrip("*")
            coef = GaussRat(1) if not head else GaussRat.parse(head.strip("()"))
        else:
            coef = GaussRat.parse(body.strip("()"))
        out = out + HPoly({deg: coef * sign})
    return out


class LinComb:
    """Finite linear combination ``sum c_key * key`` with HPoly coefficients.

    Keys are hashable and totally ordered; zero coefficients are never stored.
    """

    __slots__ = ("terms",)

    def __init__(self, terms=None):
        self.terms: dict = {}
        if terms:
            items = terms.items() if isinstance(terms, dict) else terms
            for k, c in items:
                self.add_term(k, c)

    def add_term(self, key, c):
        c = as_hpoly(c)
        if not c:
            return
        old = self.terms.get(key)
        if old is None:
            self.terms[key] = c
            return
        s = hp_add(old, c)
        if s:
            self.terms[key] = s
        else:
            del self.terms[key]

    def copy(self) -> "LinComb":
        out = type(self)()
        out.terms = dict(self.terms)
        return out

    def __add__(self, other: "LinComb"):
        out = self.copy()
        for k, c in other.terms.items():
            out.add_term(k, c)
        return out

    def __sub__(self, other: "LinComb"):
        return self + other.scale(-1)

    def scale(self, c) -> "LinComb":
        out = type(self)()
        c = as_hpoly(c)
        if not c:
            return out
        for k, v in self.terms.items():
            p = hp_mul(v, c)
            if p:
                out.terms[k] = p
        return out

    def __eq__(self, other):
        if not isinstance(other, LinComb):
            return NotImplemented
        return self.terms == other.terms

    def __hash__(self):
        return hash(frozenset(self.terms.items()))

    def __len__(self):
        return len(self.terms)

    def __bool__(self):
        return bool(self.terms)

    def __iter__(self):
        return iter(self.sorted_items())

    def sorted_items(self):
        return sorted(self.terms.items(), key=lambda kv: kv[0])

    def coeff(self, key) -> HPoly:
        return self.terms.get(key, HPoly())

    def hbar_part(self, deg: int) -> "LinComb":
        out = type(self)()
        for k, v in self.terms.items():
            c = v[deg]
            if c:
                out.terms[k] = HPoly({0: c})
        return out

    def __repr__(self):
        body = ", ".join(f"{k}: {v}" for k, v in self.sorted_items())
        return f"{type(self).__name__}({{{body}}})"
