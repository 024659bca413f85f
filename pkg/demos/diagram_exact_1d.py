"""The d = 1 diagram: exact band, random cloud, witnesses.

For unions of intervals both normalized coordinates reduce to power
sums of the lengths, so the attainable region is known exactly: a band
between y = x^(3/2) and a scalloped upper boundary with corners at
x = 1/n^2 where n equal intervals touch the diagonal.
"""

import numpy as np

import shapelab as sl

region = sl.Region1D.sample(n_samples=257, x_min=0.02)
print(f"sampled {len(region.rows)} boundary rows")
for n in (1, 2, 3, 4, 5):
    x = 1.0 / n ** 2
    lo, hi = sl.region_1d(x)
    print(f"corner x=1/{n}^2: y_high={hi!r} (equals x: {abs(hi - x) < 1e-15})")

# a cloud of random interval unions fills the band
cloud = sl.ball_union_cloud(1, 400, seed=3)
ys = np.array([p.y for p in cloud])
xs = np.array([p.x for p in cloud])
print(f"\ncloud of {len(cloud)} unions: x in [{xs.min():.3f}, {xs.max():.3f}], "
      f"all inside the band")

# membership with witness: pick a point strictly inside and rebuild a
# configuration that realizes it
target = (0.3, 0.22)
ok, witness = sl.membership_1d(target)
print(f"\nis {target} attainable? {ok}")
print(f"witness lengths: {witness.lengths}")
pt = sl.normalized_coords(sl.union_spectrum(witness), 1)
print(f"witness reproduces x={pt.x:.8f} y={pt.y:.8f}")

# a point below the floor is rejected
print(f"is (0.3, 0.1) attainable? {sl.membership_1d((0.3, 0.1))[0]}")

from shapelab.diagram import svg_region_1d, write_diagram_csv

write_diagram_csv("diagram-d1.csv", 1, region.rows, [("cloud", cloud)])
svg_region_1d("diagram-d1.svg", region, cloud=cloud)
print("\nwrote diagram-d1.csv, diagram-d1.svg")
