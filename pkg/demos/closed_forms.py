"""Closed-form spectra: balls, boxes, unions, and the functional F_q.

Everything here is exact (Bessel zeros, separable eigenvalues) or a
series with a certified tail, so it runs in milliseconds and is the
reference layer the grid solver is checked against.
"""

import math

import shapelab as sl

print("== balls ==")
for d in (1, 2, 3, 4):
    spec = sl.BallSpec(d, 1.0)
    r = sl.ball_spectrum(spec)
    print(f"d={d}: lambda={r.lambda_:.12f}  T={r.torsion:.12f}  |B|={r.measure:.12f}")

# F_1 = lambda T / |Omega| is scale invariant; on balls it has the same
# value at every radius, and equals lambda(B_1) / (d (d + 2)).
print("\n== scale invariance of F_1 on balls ==")
for radius in (0.3, 1.0, 7.5):
    r = sl.ball_spectrum(sl.BallSpec(2, radius))
    print(f"radius {radius:4}: F_1 = {sl.f_q(r, 1.0, 2).value!r}")
print(f"lambda(B_1)/8  = {sl.ball_lambda(2) / 8.0!r}")

print("\n== rectangles ==")
for sides in ((1.0, 1.0), (2.0, 1.0), (10.0, 1.0)):
    r = sl.rect_spectrum(sl.RectSpec(sides))
    print(f"{sides}: lambda={r.lambda_:.9f}  T={r.torsion:.9f} "
          f"(series tail <= {r.err_estimate:.1e})")

print("\n== unions ==")
# the eigenvalue of a disjoint union is the minimum over parts,
# the torsion the sum, so unions trace out the whole diagram band
u = sl.union_spectrum(sl.IntervalUnionSpec((1.0, 1.0)))
pt = sl.normalized_coords(u, 1)
print(f"two unit intervals: x={pt.x!r} y={pt.y!r} (touches the ceiling)")

u = sl.union_spectrum(sl.BallUnionSpec(3, (1.0, 0.5)))
pt = sl.normalized_coords(u, 3)
print(f"ball + half ball in d=3: x={pt.x:.6f} y={pt.y:.6f}")

print("\n== q sweep on the unit square ==")
r = sl.rect_spectrum(sl.RectSpec((1.0, 1.0)))
for q in (0.5, 1.0, 2.0):
    v = sl.f_q(r, q, 2)
    print(f"q={q}: F_q(square) = {v.value:.9f}")
print(f"pi^2/12 (thin slab limit for F_1) = {math.pi ** 2 / 12:.9f}")
