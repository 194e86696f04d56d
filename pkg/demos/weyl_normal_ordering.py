"""Normal ordering in the Weyl algebra, four ways.

Run: python3 demos/weyl_normal_ordering.py
"""

from __future__ import annotations

from qsymfun.schur import elem_matrix, weyl_to_glinf
from qsymfun.weyl import (
    mweyl_normal_order,
    normal_coord,
    normal_coords_closed,
    normal_coords_flows,
    normal_coords_pairings,
    normal_order,
)


def show(nf):
    terms = sorted(nf.items(), key=lambda kv: (kv[0][2], kv[0]))
    return " + ".join(f"{c} h^{k} x^{a} y^{b}" for (a, b, k), c in terms)


print("y x in normal order:", show(normal_order([(0, 1), (1, 0)])))
print("y^2 x^2 in normal order:", show(normal_order([(0, 2), (2, 0)])))
print("same in the M-Weyl algebra (yx = xy + x^2 h):", show(mweyl_normal_order([(0, 2), (2, 0)])))

# The coefficient of h^k is a count.  Four independent routes give it.
word = [(1, 2), (2, 1), (1, 1)]
print(f"\nnormal coordinates of the word {word}:")
print(" k  rewrite closed pairings flows")
for k in range(5):
    row = (normal_coord(word, k), normal_coords_closed(word, k), normal_coords_pairings(word, k), normal_coords_flows(word, k))
    print(f"{k:2d}  {row[0]:7d} {row[1]:6d} {row[2]:8d} {row[3]:5d}")

# A faithful matrix picture: x acts as a shift, y as h times a weighted shift.
N = 8
M, valid = weyl_to_glinf([(0, 1), (1, 0)], N)
print(f"\nmatrix of y x, top-left {valid}x{valid} block (entries are polynomials in h):")
for i in range(valid):
    print("  ", [str(M.entries.get((i, j), 0)) for j in range(valid)])
print("x^2 y maps to E_{2,1}:", weyl_to_glinf([(2, 1)], N)[0].agrees_on(elem_matrix(2, 1, N), N - 2))
