"""Run every named inequality suite at desk scale and print a summary.

Grid-based suites run here at resolution 64 to stay fast; the shipped
acceptance tests run the raster corpus at 256.  Exit status mirrors the
CLI: nonzero if any case fails.
"""

import sys
import time

import shapelab as sl

failures = 0
for name in sl.suite_names():
    t0 = time.perf_counter()
    cases = sl.run_suite(name, grid_n=64, seed=0, samples=200)
    dt = time.perf_counter() - t0
    n_pass = sum(c.passed for c in cases)
    flag = "ok " if n_pass == len(cases) else "FAIL"
    print(f"{flag} {name:16} {n_pass}/{len(cases)} in {dt:5.1f}s")
    for c in cases:
        if not c.passed:
            failures += 1
            print(f"     failed: {c.name}: {c.detail}")

sys.exit(1 if failures else 0)
