"""Thin domains over a convex base: the h^3 / h ratio and its floor.

A thin domain of width profile eps * h over a (d-1)-dimensional convex
base has, to leading order in eps,

    lambda ~ pi^2 / eps^2,    T ~ eps^3 / 12 * integral(h^3),

so F_1 tends to pi^2/12 times the ratio integral(h^3) / (sup h)^2 /
integral(h).  Over concave h the ratio lives in [6/((d+1)(d+2)), 1],
with cones at the floor and constants at the cap.
"""

import shapelab as sl

print("sharp floors by dimension:")
for d in (2, 3, 4):
    print(f"  d={d}: 6/((d+1)(d+2)) = {sl.sharp_lower_ratio(d)!r}")

print("\ncones attain the floor (odd grids center the peak on a cell):")
cones = [
    ("interval", sl.ConvexBase.interval(1.0), 511),
    ("square", sl.ConvexBase.polygon([(0, 0), (1, 0), (1, 1), (0, 1)]), 255),
    ("disk", sl.ConvexBase.disk(0.0, 0.0, 1.0), 255),
]
for name, base, n in cones:
    cone = sl.cone_function(base, grid_n=n)
    print(f"  cone over {name}: ratio = {sl.ratio_h3_h1(cone):.6f} "
          f"(floor {sl.sharp_lower_ratio(base.dim_base + 1)})")

print("\nrandom concave profiles stay inside the bracket:")
base = sl.ConvexBase.interval(1.0)
worst = 1.0
for seed in range(8):
    profile = sl.random_concave_profile(base, seed, grid_n=257)
    r = sl.ratio_h3_h1(profile)
    worst = min(worst, r)
    print(f"  seed {seed}: ratio = {r:.4f}")
print(f"  minimum seen {worst:.4f} >= 0.5")

print("\nsymmetrization: rearranging h radially preserves the integrals")
profile = sl.random_concave_profile(base, seed=5, grid_n=512)
sym = sl.radial_rearrangement(profile)
for p in (1, 3):
    a, b = profile.integral(p), sym.integral(p)
    print(f"  integral h^{p}: {a:.6f} -> {b:.6f} (rel change {abs(a-b)/a:.1e})")

print("\nleading-order values for a cone at shrinking thickness:")
cone = sl.cone_function(base, grid_n=511)
for eps in (0.2, 0.1, 0.05):
    ta = sl.thin_asymptotics(cone, eps)
    print(f"  eps={eps}: lambda~{ta.lambda_approx:9.3f}  "
          f"T~{ta.torsion_approx:.3e}  F_1~{ta.f1_approx:.6f}")
