"""Two-sided torsion bounds for product cylinders A x (0, h).

The torsion of a cylinder has no closed form in general, but it is
bracketed by three computable bounds built from the cross-section data
(measure, perimeter, inradius).  On strips the double-series value is
known, so the brackets can be watched doing their job.
"""

import math

import shapelab as sl

print("strips L x 1 (cross-section is an interval of length L):")
for length in (5.0, 10.0, 20.0):
    spec = sl.CylinderSpec(dim=2, cross_measure=length, height=1.0,
                           cross_perimeter=2.0, smooth_radius=0.5 * length)
    series, tail = sl.rect_torsion_series(length, 1.0)
    t1 = sl.upper_bound_t1(spec)
    t2 = sl.lower_bound_t2(spec)
    bracket = sl.torsion_bracket(spec)
    width_rel = bracket.width / series
    print(f"  L={length:4}: series={series:.9f}  bracket=({bracket.lower:.6f},"
          f" {bracket.upper:.6f})  rel width {width_rel:.3f}")
    assert bracket.contains(series, slack=tail)

print("\nthe bracket tightens as the cylinder flattens (d = 3 slabs):")
for h in (0.2, 0.1, 0.05, 0.02):
    spec = sl.CylinderSpec(dim=3, cross_measure=1.0, height=h,
                           cross_perimeter=4.0, smooth_radius=0.5)
    b = sl.torsion_bracket(spec)
    print(f"  h={h:5}: ({b.lower:.3e}, {b.upper:.3e})  "
          f"rel width {b.width / b.upper:.3f}")

print("\neigenvalue splits exactly: lambda(A x (0,h)) = pi^2/h^2 + lambda(A)")
spec = sl.CylinderSpec(dim=3, cross_measure=math.pi, height=0.25,
                       cross_lambda=sl.ball_lambda(2))
print(f"  disk x (0, 1/4): {sl.cylinder_lambda(spec)!r}")
