"""Finite permutation groups, cycle indices and the signed/wreath families.

Permutations are tuples of 0-based images.  ``p[i]`` is the image of ``i``.
Composition ``compose(p, q)`` is ``p after q``.  A permutation acts on a
tuple by moving the entry in position ``i`` to position ``p[i]``, i.e.
``act(p, t)[j] = t[p^{-1}(j)]``.
"""

from __future__ import annotations

import itertools
import math
import re
from collections import deque
from dataclasses import dataclass
from fractions import Fraction

__all__ = [
    "Perm",
    "PermGroup",
    "SignedWreathGroup",
    "compose",
    "inverse",
    "identity",
    "act",
    "cycles",
    "cycle_type",
    "perm_from_cycles",
    "parse_cycles",
    "enumerate_group",
    "symmetric_group",
    "trivial_group",
    "cycle_index",
    "sym_dimension",
    "subgroups_from_generators",
    "parse_group_spec",
]

Perm = tuple


def identity(n: int) -> Perm:
    return tuple(range(n))


def compose(p: Perm, q: Perm) -> Perm:
    """``p o q``: first apply ``q``, then ``p``."""
    return tuple(p[i] for i in q)


def inverse(p: Perm) -> Perm:
    inv = [0] * len(p)
    for i, j in enumerate(p):
        inv[j] = i
    return tuple(inv)


def act(p: Perm, t: tuple) -> tuple:
    out = [None] * len(t)
    for i, x in enumerate(t):
        out[p[i]] = x
    return tuple(out)


def check_perm(images, n: int | None = None) -> Perm:
    p = tuple(int(i) for i in images)
    if n is not None and len(p) != n:
        raise ValueError(f"permutation {p} does not have degree {n}")
    if sorted(p) != list(range(len(p))):
        raise ValueError(f"not a bijection of 0..{len(p) - 1}: {p}")
    return p


def cycles(p: Perm) -> list[tuple[int, ...]]:
    seen = [False] * len(p)
    out = []
    for start in range(len(p)):
        if seen[start]:
            continue
        cyc = []
        i = start
        while not seen[i]:
            seen[i] = True
            cyc.append(i)
            i = p[i]
        out.append(tuple(cyc))
    return out


def cycle_type(p: Perm) -> tuple[int, ...]:
    """``b`` with ``b[s-1]`` the number of ``s``-cycles, ``s = 1..n``."""
    b = [0] * len(p)
    for c in cycles(p):
        b[len(c) - 1] += 1
    return tuple(b)


def perm_from_cycles(cycs, n: int) -> Perm:
    """Build a permutation from 1-based disjoint cycles."""
    images = list(range(n))
    used = set()
    for c in cycs:
        c = [int(x) - 1 for x in c]
        for x in c:
            if not 0 <= x < n:
                raise ValueError(f"point {x + 1} outside 1..{n}")
            if x in used:
                raise ValueError(f"point {x + 1} appears twice")
            used.add(x)
        for a, b in zip(c, c[1:] + c[:1]):
            images[a] = b
    return tuple(images)


_CYCLE_RE = re.compile(r"\(([^()]*)\)")


def parse_cycles(text: str, n: int) -> Perm:
    """Parse ``"(1 2)(3 4)"``; ``"()"`` or ``""`` is the identity."""
    text = text.strip()
    stripped = _CYCLE_RE.sub("", text).strip()
    if stripped:
        raise ValueError(f"cannot parse cycle notation {text!r}")
    cycs = []
    for body in _CYCLE_RE.findall(text):
        pts = body.replace(",", " ").split()
        if pts:
            cycs.append(pts)
    return perm_from_cycles(cycs, n)


def format_cycles(p: Perm) -> str:
    parts = ["(" + " ".join(str(i + 1) for i in c) + ")" for c in cycles(p) if len(c) > 1]
    return "".join(parts) or "()"


@dataclass(frozen=True)
class PermGroup:
    """An explicitly enumerated subgroup of ``S_n``."""

    n: int
    elements: tuple[Perm, ...]

    @property
    def order(self) -> int:
        return len(self.elements)

    def __len__(self):
        return len(self.elements)

    def __iter__(self):
        return iter(self.elements)

    def __contains__(self, p):
        return tuple(p) in self._set

    @property
    def _set(self):
        s = self.__dict__.get("_cached_set")
        if s is None:
            s = frozenset(self.elements)
            object.__setattr__(self, "_cached_set", s)
        return s

    def is_trivial(self) -> bool:
        return len(self.elements) == 1

    def describe(self) -> str:
        if len(self.elements) == math.factorial(self.n):
            return f"S{self.n}"
        if self.is_trivial():
            return "trivial"
        return "<" + ",".join(format_cycles(p) for p in self.elements if p != identity(self.n)) + ">"


def enumerate_group(n: int, gens) -> PermGroup:
    """Breadth-first closure of ``gens`` inside ``S_n``."""
    gens = [check_perm(g, n) for g in gens]
    e = identity(n)
    seen = {e}
    queue = deque([e])
    while queue:
        g = queue.popleft()
        for s in gens:
            h = compose(s, g)
            if h not in seen:
                seen.add(h)
                queue.append(h)
    return PermGroup(n, tuple(sorted(seen)))


def symmetric_group(n: int) -> PermGroup:
    return PermGroup(n, tuple(itertools.permutations(range(n))))


def trivial_group(n: int) -> PermGroup:
    return PermGroup(n, (identity(n),))


def subgroups_from_generators(n: int, max_gens: int = 2) -> list[PermGroup]:
    """Every distinct subgroup of ``S_n`` generated by at most ``max_gens`` elements."""
    elems = list(itertools.permutations(range(n)))
    found: dict[tuple, PermGroup] = {}
    for k in range(max_gens + 1):
        for gens in itertools.combinations(elems, k):
            g = enumerate_group(n, gens)
            found.setdefault(g.elements, g)
    return sorted(found.values(), key=lambda g: (g.order, g.elements))


def cycle_index(K: PermGroup) -> dict[tuple[int, ...], Fraction]:
    """Cycle index of ``K`` as ``{(b_1..b_n): coefficient}`` for monomials
    ``x_1^b_1 ... x_n^b_n``."""
    counts: dict[tuple[int, ...], int] = {}
    for k in K.elements:
        b = cycle_type(k)
        counts[b] = counts.get(b, 0) + 1
    order = len(K.elements)
    return {b: Fraction(c, order) for b, c in sorted(counts.items(), reverse=True)}


def format_cycle_index(ci: dict[tuple[int, ...], Fraction]) -> str:
    terms = []
    for b, c in ci.items():
        mono = " ".join(
            f"x{s + 1}" + (f"^{e}" if e > 1 else "") for s, e in enumerate(b) if e
        )
        terms.append(f"{c} {mono}" if c != 1 else mono)
    return " + ".join(terms)


def sym_dimension(dim_a: int, K: PermGroup) -> int:
    """``dim (A^{(x)n})_K``: the cycle index evaluated at ``x_s = dim_a``."""
    if dim_a < 0:
        raise ValueError("dimension must be nonnegative")
    total = Fraction(0)
    for b, c in cycle_index(K).items():
        total += c * dim_a ** sum(b)
    if total.denominator != 1:
        raise ArithmeticError(f"cycle index evaluated to non-integer {total}")
    return int(total)


def parse_group_spec(spec: str, n: int | None = None) -> PermGroup:
    """``"S3"``, ``"Sn"`` (needs ``n``), ``"trivial"`` or ``'gens:(1 2),(1 2 3)'``."""
    s = spec.strip()
    m = re.fullmatch(r"S(\d+|n)", s)
    if m:
        deg = n if m.group(1) == "n" else int(m.group(1))
        if deg is None:
            raise ValueError("group 'Sn' requires a degree")
        if n is not None and deg != n:
            raise ValueError(f"group {s} does not have degree {n}")
        return symmetric_group(deg)
    if s == "trivial":
        if n is None:
            raise ValueError("group 'trivial' requires a degree")
        return trivial_group(n)
    if s.startswith("gens:"):
        if n is None:
            raise ValueError("generator spec requires a degree")
        body = s[5:].strip().strip('"').strip("'")
        gens = [parse_cycles(g, n) for g in re.findall(r"\([^()]*\)(?:\([^()]*\))*", body)]
        return enumerate_group(n, gens)
    raise ValueError(f"unknown group spec {spec!r}")


# ---------------------------------------------------------------------------
# signed / wreath families
# ---------------------------------------------------------------------------

_FAMILIES = ("A", "B", "D", "zm", "dihedral")


@dataclass(frozen=True)
class SignedWreathGroup:
    """Descriptor for ``G^n x| S_n`` families acting slotwise.

    Local elements are encoded as small integers:

    * ``A``: only ``0``;
    * ``B``/``D``: ``t in {0, 1}`` standing for the sign ``(-1)^t``
      (``D`` keeps only tuples with an even number of ones);
    * ``zm``: rotation ``k in Z_m``;
    * ``dihedral``: rotation ``k in Z_m`` per slot; the reflection is a
      single global flag shared by all slots, so ``elements`` yields
      ``(r, local_tuple)`` in place of ``local_tuple``.
    """

    family: str
    n: int
    m: int = 1

    def __post_init__(self):
        if self.family not in _FAMILIES:
            raise ValueError(f"unknown family {self.family!r}")
        if self.n < 0 or self.m < 1:
            raise ValueError("bad degree")

    def local_elements(self) -> list:
        if self.family == "A":
            return [0]
        if self.family in ("B", "D"):
            return [0, 1]
        if self.family == "zm":
            return list(range(self.m))
        return list(range(self.m))

    def order(self) -> int:
        n = self.n
        if self.family == "A":
            return math.factorial(n)
        if self.family == "B":
            return 2**n * math.factorial(n)
        if self.family == "D":
            return 2 ** max(n - 1, 0) * math.factorial(n)
        if self.family == "zm":
            return self.m**n * math.factorial(n)
        return 2 * self.m**n * math.factorial(n)

    def elements(self):
        """Yield ``(local_tuple, perm)`` pairs; the group acts on a tensor
        ``b`` by ``(g, s) b = (g_1 b_{s^-1(1)}, ..., g_n b_{s^-1(n)})``."""
        locs = self.local_elements()
        flags = (0, 1) if self.family == "dihedral" else (None,)
        for s in itertools.permutations(range(self.n)):
            for r in flags:
                for g in itertools.product(locs, repeat=self.n):
                    if self.family == "D" and sum(g) % 2:
                        continue
                    yield (g if r is None else (r, g)), s

    def is_diagonal(self) -> bool:
        """True when ``G^n`` is a full product acting by characters only."""
        return self.family in ("A", "B", "zm")

    def __str__(self):
        if self.family in ("zm", "dihedral"):
            return f"{self.family}:{self.m}(n={self.n})"
        return f"{self.family}{self.n}"
