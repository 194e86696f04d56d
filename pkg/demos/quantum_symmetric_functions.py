"""Star products on symmetric functions in 2n variables.

Run: python3 demos/quantum_symmetric_functions.py
"""

from __future__ import annotations

from qsymfun.expr import format_qsym, parse, to_qsym
from qsymfun.qsym import qclass, star


def q(text, kind="A"):
    return to_qsym(parse(text), 1, kind)


def show(el, complex_=False):
    return format_qsym(el, 1, complex_)


print("type A, n = 1:   y * x =", show(star(q("y1"), q("x1"))))
print("type A, n = 2:   [y | 1] * [x | 1] =", show(star(q("[y | 1]"), q("[x | 1]"))))
print("type B agrees with A on even rows:",
      star(q("[x y | 1]"), q("[y^2 | x^2]"), "B") == star(q("[x y | 1]"), q("[y^2 | x^2]"), "A"))

# z = x + iy style coordinates; the cyclic group rotates z and zb oppositely.
print("\ncyclic, m = 1:    zb * z =", show(star(q("zb", "zm"), q("z", "zm"), "zm", 1), True))
print("cyclic, m = 2:    [zb^2 | 1] * [z^2 | 1] =", show(star(q("[zb^2 | 1]", "zm"), q("[z^2 | 1]", "zm"), "zm", 2), True))
print("dihedral, m = 1:  z * z =", show(star(q("z", "dihedral"), q("z", "dihedral"), "dihedral", 1), True))

# Associativity and the classical limit on a sample.
X, Y, Z = qclass(((1, 2), (0, 1))), qclass(((2, 0), (1, 1))), qclass(((0, 1), (1, 0)))
print("\n(X*Y)*Z == X*(Y*Z):", star(star(X, Y), Z) == star(X, star(Y, Z)))
comm = star(X, Y) + star(Y, X).scale(-1)
print("X*Y - Y*X starts at order h:", all(0 not in c.coeffs for c in comm.terms.values()))
