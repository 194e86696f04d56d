"""Signs: exterior and Clifford algebras, odd symmetric functions, Schur categories.

Run: python3 demos/odd_and_schur.py
"""

from __future__ import annotations

from qsymfun.expr import format_odd, format_schur
from qsymfun.schur import elem_trans, schur_class, schur_compose, schur_identity, schur_oracle_compose
from qsymfun.superalg import clifford_product, ext_product, mask, odd_sym_product

t1, t2, t12 = mask([1]), mask([2]), mask([1, 2])
print("th2 th1 in the exterior algebra:", ext_product(t2, t1))
print("th1 th1 in the exterior algebra:", ext_product(t1, t1))
print("th1 th2 . th2 in the Clifford algebra:", clifford_product(t12, t2))

print("\n[th1 | th2] * [th2 | th1] =", format_odd(odd_sym_product((t1, t2), (t2, t1), 2)))
print("[th1 | th1] * [1 | 1]   =", format_odd(odd_sym_product((t1, t1), (0, 0), 2)), "(odd class equal to its own negative)")

# Schur category: maps between superspaces, with a Z_2 shift per slot.
m, n = (2,), 2
V, W = (0, 1), (1,)
F = schur_class([elem_trans(0, (0,), 0, (1,), m), elem_trans(1, (0,), 0, (0,), m)], m, V, W)
G = schur_class([elem_trans(0, (0,), 1, (0,), m), elem_trans(0, (1,), 0, (0,), m)], m, W, V, 2)
GF = schur_compose(F, G, m, n, V, W, V)
print("\nG o F =", format_schur(GF))
print("matches the matrix-unit oracle:", GF == schur_oracle_compose(F, G, m, n, V, W, V))
print("identity is a unit:", schur_compose(GF, schur_identity(V, m, n), m, n, V, V, V) == GF)
