"""Products in symmetric powers: closed average versus brute force.

Run: python3 demos/polya_products.py
"""

from __future__ import annotations

import time

from qsymfun.perm import cycle_index, format_cycle_index, parse_group_spec, sym_dimension, symmetric_group
from qsymfun.sympow import (
    basis_class,
    boolean_product,
    oracle_product,
    permutation_action,
    polya_product,
    truncated_weyl,
)

# Counting first: the cycle index gives dimensions of symmetric powers.
for spec, n in [("Sn", 3), ('gens:"(1 2)(3 4),(1 3)(2 4)"', 4)]:
    K = parse_group_spec(spec, n)
    print(f"{K.describe()}: cycle index {format_cycle_index(cycle_index(K))}")
    print("  dims of Sym over a 2-, 3-, 4-dimensional algebra:", [sym_dimension(d, K) for d in (2, 3, 4)])

# Boolean algebra: sets under union.  [a] * [b] spreads over sizes max(a,b)..a+b.
print("\nBoolean classes, n = 6:")
for a, b in [(1, 1), (2, 3), (3, 3)]:
    print(f"  [{a}] * [{b}] =", {k: str(v) for k, v in boolean_product(a, b, 6).items()})

# Truncated Weyl algebra: the closed averaged formula against the group average.
alg = truncated_weyl(1, 6)
K = symmetric_group(3)
lab = lambda a, b: alg.index[(a, b, 0)]
f = basis_class((lab(0, 1), lab(1, 0), lab(0, 0)), K, alg)
g = basis_class((lab(1, 0), lab(0, 1), lab(1, 1)), K, alg)
t0 = time.perf_counter()
fast = polya_product([f, g], K, alg)
t1 = time.perf_counter()
slow = oracle_product([f, g], permutation_action(K, alg), alg)
t2 = time.perf_counter()
print(f"\nclosed formula: {len(fast.terms)} classes in {1e3 * (t1 - t0):.1f} ms")
print(f"group average : {len(slow.terms)} classes in {1e3 * (t2 - t1):.1f} ms")
print("equal:", fast == slow)
