"""Desk-scale acceptance battery.

Each test prints an ACCEPTANCE line with the measured quantities before
asserting, so a failing run still reports what was actually achieved.
Budgets are wall-clock seconds on one core.
"""

import math
import time

import numpy as np
import pytest

from shapelab import rasters
from shapelab.closed_form import (
    ball_lambda,
    ball_spectrum,
    rect_lambda,
    rect_spectrum,
    rect_torsion_series,
    union_spectrum,
)
from shapelab.cylinder_bounds import lower_bound_t2, torsion_bracket, two_sided_t3, upper_bound_t1
from shapelab.diagram import membership_1d, region_1d
from shapelab.domains import (
    BallSpec,
    BallUnionSpec,
    CylinderSpec,
    IntervalUnionSpec,
    RectSpec,
)
from shapelab.fd_solver import SolveOptions, spectrum_of_grid
from shapelab.functional import QClass, f_q, g_q, normalized_coords, regime_table
from shapelab.relaxed_q1 import RelaxedParams, product_bound, sup_demonstration
from shapelab.suites import run_suite

PI2_12 = math.pi ** 2 / 12.0


def test_disk_eigenvalue_at_unit_radius():
    t0 = time.perf_counter()
    value = ball_lambda(2)
    elapsed = time.perf_counter() - t0
    print(f"ACCEPTANCE 1: lambda(disk)={value!r} in {elapsed:.2e}s")
    assert value == pytest.approx(5.783, abs=5e-4)
    assert elapsed < 1.0


def test_unit_square_grid_agrees_with_series():
    t0 = time.perf_counter()
    spec = rasters.rect_mask(1.0, 1.0, 256)
    result = spectrum_of_grid(spec, richardson=True)
    elapsed = time.perf_counter() - t0
    lam_exact = rect_lambda(RectSpec((1.0, 1.0)))
    tor_exact, _tail = rect_torsion_series(1.0, 1.0)
    lam_rel = abs(result.lambda_ - lam_exact) / lam_exact
    tor_rel = abs(result.torsion - tor_exact) / tor_exact
    print(f"ACCEPTANCE 2: grid 1/256 lambda rel {lam_rel:.2e} "
          f"torsion rel {tor_rel:.2e} in {elapsed:.1f}s")
    assert lam_rel < 5e-3
    assert tor_rel < 1e-2
    assert elapsed < 30.0


def test_strip_torsion_brackets_contain_series_value():
    t0 = time.perf_counter()
    for length in (5.0, 10.0, 20.0):
        spec = CylinderSpec(dim=2, cross_measure=length, height=1.0,
                            cross_perimeter=2.0, smooth_radius=0.5 * length)
        series, tail = rect_torsion_series(length, 1.0)
        t1 = upper_bound_t1(spec)
        t2 = lower_bound_t2(spec)
        t3 = two_sided_t3(spec)
        combined = torsion_bracket(spec)
        print(f"ACCEPTANCE 3: strip {length}x1 series={series:.9f} "
              f"in [{t2:.6f}, {t1:.6f}], t3=[{t3.lower:.6f}, {t3.upper:.6f}]")
        assert t2 - tail <= series <= t1 + tail
        assert t3.contains(series, slack=tail)
        assert combined.contains(series, slack=tail)
        assert combined.width <= t3.width + 1e-15
    elapsed = time.perf_counter() - t0
    assert elapsed < 5.0


def test_raster_corpus_product_stays_below_one(corpus_run):
    results, elapsed = corpus_run
    assert len(results) == 25
    worst_margin = math.inf
    worst_name = None
    for name, spec, result in results:
        value = f_q(result, 1.0, 2).value
        margin = 1.0 - value
        if margin < worst_margin:
            worst_margin, worst_name = margin, name
        assert value < 1.0, name
        assert margin >= result.err_estimate, (name, margin, result.err_estimate)
    print(f"ACCEPTANCE 4: 25 domains at grid 256 in {elapsed:.0f}s, "
          f"worst product margin {worst_margin:.3f} ({worst_name})")
    assert elapsed < 300.0


def test_torsion_floor_on_corpus_and_exact_families(corpus_run):
    results, _elapsed = corpus_run
    worst = math.inf
    for name, spec, result in results:
        pt = normalized_coords(result, 2)
        slack = 2.0 * result.err_estimate
        worst = min(worst, pt.y - pt.x ** 2)
        assert pt.y >= pt.x ** 2 * (1.0 - slack), (name, pt.x, pt.y)
    closed = [
        (ball_spectrum(BallSpec(1, 1.0)), 1),
        (ball_spectrum(BallSpec(2, 1.3)), 2),
        (ball_spectrum(BallSpec(3, 0.8)), 3),
        (ball_spectrum(BallSpec(4, 1.0)), 4),
        (rect_spectrum(RectSpec((1.0, 1.0))), 2),
        (rect_spectrum(RectSpec((2.0, 1.0))), 2),
        (rect_spectrum(RectSpec((3.0, 0.5))), 2),
        (union_spectrum(IntervalUnionSpec((1.0,))), 1),
        (union_spectrum(IntervalUnionSpec((1.0, 0.5))), 1),
        (union_spectrum(IntervalUnionSpec((1.0, 1.0, 0.3))), 1),
        (union_spectrum(BallUnionSpec(2, (1.0, 0.7))), 2),
        (union_spectrum(BallUnionSpec(3, (1.0, 1.0, 0.4))), 3),
    ]
    for result, d in closed:
        pt = normalized_coords(result, d)
        assert pt.y >= pt.x ** ((d + 2.0) / 2.0) - 1e-12
    print(f"ACCEPTANCE 5: grid floor margin >= {worst:.3f}; "
          f"{len(closed)} exact families on or above the curve to 1e-12")


def test_random_interval_unions_fill_the_band():
    rng = np.random.default_rng(0)
    n = 100_000
    counts = rng.integers(1, 7, size=n)
    t0 = time.perf_counter()
    pts = []
    for i in range(n):
        lengths = rng.uniform(0.1, 1.0, size=counts[i])
        s = lengths.sum()
        x = float((lengths.max() / s) ** 2)
        y = float((lengths ** 3).sum() / s ** 3)
        lo, hi = region_1d(min(x, 1.0))
        assert x <= 1.0 + 1e-12
        assert lo - 1e-12 <= y <= hi + 1e-12
        pts.append((x, y))
    worst = 0.0
    sub = pts[:: n // 2000]
    for x, y in sub:
        ok, witness = membership_1d((min(x, 1.0), y))
        assert ok, (x, y)
        arr = np.asarray(witness.lengths)
        s, m = arr.sum(), arr.max()
        worst = max(worst, abs((m / s) ** 2 - x),
                    abs(float((arr ** 3).sum()) / s ** 3 - y))
    elapsed = time.perf_counter() - t0
    print(f"ACCEPTANCE 6: {n} configs inside the band, {len(sub)} witnesses "
          f"round-trip to {worst:.1e} in {elapsed:.1f}s")
    assert worst <= 1e-6
    assert elapsed < 10.0


def test_touching_configurations_reach_the_ceiling():
    configs = [
        ((1.0, 1.0), 0.25),
        ((1.0, 1.0, 1.0), 1.0 / 9.0),
        ((1.0, math.sqrt(2.0) - 1.0), 0.5),
    ]
    for lengths, x_target in configs:
        pt = normalized_coords(union_spectrum(IntervalUnionSpec(lengths)), 1)
        _lo, hi = region_1d(min(pt.x, 1.0))
        print(f"ACCEPTANCE 7: {lengths} -> x={pt.x!r} y={pt.y!r} ceiling={hi!r}")
        assert pt.x == pytest.approx(x_target, abs=1e-12)
        assert pt.y == pytest.approx(hi, abs=1e-12)


def test_thin_rectangles_approach_the_slab_limit():
    opts = SolveOptions(cg_tol=1e-8, eig_tol=1e-6)
    values = []
    for eps in (0.2, 0.1, 0.05):
        spec = rasters.rect_mask(1.0, eps, 320)
        result = spectrum_of_grid(spec, opts=opts, richardson=False)
        value = f_q(result, 1.0, 2).value
        exact = f_q(rect_spectrum(RectSpec((1.0, eps))), 1.0, 2).value
        assert value == pytest.approx(exact, abs=5e-3)
        values.append(value)
    gap = abs(values[-1] - PI2_12)
    print(f"ACCEPTANCE 8: F1 = {values} increasing toward {PI2_12:.6f}, "
          f"final gap {gap:.4f}")
    assert values[0] < values[1] < values[2] < PI2_12
    assert gap < 0.05


def test_concave_profile_ratio_bounds_hold_in_bulk():
    cases = run_suite("pconvthin", seed=0)
    for case in cases:
        print(f"ACCEPTANCE 9: {case.name}: {case.detail}")
        assert case.passed, (case.name, case.detail)
    assert len(cases) >= 9


def test_penalized_balls_push_the_product_toward_one():
    for d in (2, 3):
        params = sup_demonstration(d, 0.99)
        value = product_bound(params)
        print(f"ACCEPTANCE 10: d={d} c={params.c:.3e} delta={params.delta} "
              f"product={value!r}")
        assert value > 0.99
        for delta in (0.2, 0.1):
            limit = (1.0 - delta) ** (2 * d)
            got = product_bound(RelaxedParams(d, 1e12, delta))
            assert got == pytest.approx(limit, abs=1e-9)
            assert got < limit


def test_peak_ratio_regimes_across_q():
    # q below one: equal families grow without bound, like N^(2-2q)
    for q in (0.5, 0.9):
        sizes = (10, 100, 1000, 10_000)
        vals = [g_q((1.0,) * n, q) for n in sizes]
        for n, v in zip(sizes, vals):
            assert v == pytest.approx(n ** (2.0 - 2.0 * q), rel=1e-12)
        assert all(a < b for a, b in zip(vals, vals[1:]))
    # q = 1: the maximum is 1, attained by every equal family of any size,
    # and only by equal families; unequal entries fall strictly below
    rng = np.random.default_rng(7)
    for n in (1, 2, 7, 100):
        assert g_q((0.37,) * n, 1.0) == pytest.approx(1.0, rel=1e-12)
    worst_unequal = 0.0
    for _ in range(200):
        a = tuple(rng.uniform(0.1, 1.0, size=rng.integers(2, 9)))
        v = g_q(a, 1.0)
        assert v <= 1.0 + 1e-12
        if max(a) - min(a) > 1e-6:
            worst_unequal = max(worst_unequal, v)
    assert worst_unequal < 1.0
    # q above one: equal families collapse like N^(2-2q) and a swarm of
    # small entries under one peak collapses as well
    assert g_q((1.0,) * 100, 2.0) == pytest.approx(1e-4, rel=1e-12)
    swarm = (1.0,) + (1e-3,) * 100_000
    assert g_q(swarm, 2.0) < 0.01
    for q in (0.5, 0.9, 1.0, 2.0):
        assert g_q((0.8,), q) == pytest.approx(1.0, rel=1e-12)
    classes = [regime_table(q, 2).q_class for q in (0.5, 0.9, 1.0, 2.0)]
    print(f"ACCEPTANCE 11: q classes {[c.name for c in classes]}, "
          f"worst unequal G_1 {worst_unequal:.4f}")
    assert classes == [QClass.BALL_REGIME, QClass.INTERMEDIATE,
                       QClass.UNIT, QClass.ABOVE_ONE]
