"""Pushing lambda * T / |Omega| toward 1 with penalized balls.

No open set attains the product bound, but a unit ball carrying a
constant penalty c on a thin outer shell of width delta drives the
product past any target below 1: the eigenvalue grows like c while the
torsion lower bound keeps the full deleted-ball contribution.
"""

import shapelab as sl

print("product lower bounds on the unit disk (d = 2):")
print(f"{'c':>14} {'delta':>7} {'bound':>14}")
for c, delta, value in sl.product_table(2):
    print(f"{c:14.0e} {delta:7} {value:14.10f}")

print("\nlarge-c limit is (1 - delta)^(2d):")
for d in (2, 3):
    for delta in (0.2, 0.1):
        v = sl.product_bound(sl.RelaxedParams(d, 1e12, delta))
        print(f"  d={d} delta={delta}: {v!r} vs {(1 - delta) ** (2 * d)!r}")

print("\nchoose parameters for a requested target:")
for target in (0.9, 0.99, 0.999):
    p = sl.sup_demonstration(2, target)
    print(f"  target {target}: delta={p.delta:.6f} c={p.c:.3e} "
          f"-> {sl.product_bound(p):.6f}")
