"""Attainable-region machinery for the normalized (x, y) diagram.

For unions of intervals (d = 1) the region is known exactly: with
s = x^(-1/2), the attainable torsion ratios at eigenvalue ratio x are
x^(3/2) <= y <= x^(3/2) (floor(s) + (s - floor(s))^3).  The reduction goes
through a small combinatorial fact about sequences in [0, 1]: a target
pair (sum, sum of p-th powers) = (B + 1, A + 1) with largest entry 1 is
attainable iff A <= floor(B) + (B - floor(B))^p.  For d >= 2 the same
construction on unions of balls yields an inner region, bounded below by
the Kohler-Jobin curve y = x^((d+2)/2).
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from typing import NamedTuple

import numpy as np

from ._svg import Canvas
from .closed_form import ball_lambda, union_spectrum
from .domains import BallUnionSpec, IntervalUnionSpec
from .errors import FeasibilityError, ValidationError
from .functional import DiagramPoint, normalized_coords


def _check_AB(A: float, B: float, p: float) -> None:
    if not (math.isfinite(p) and p > 1.0):
        raise ValidationError(f"power p must be finite and > 1, got {p!r}")
    if not (math.isfinite(A) and math.isfinite(B)) or A < 0.0 or B < 0.0:
        raise ValidationError("A and B must be finite and nonnegative")


def max_power_sum(B: float, p: float) -> float:
    """Largest attainable sum of p-th powers: floor(B) + frac(B)^p."""
    n = math.floor(B)
    return n + (B - n) ** p


def feasible_AB(A: float, B: float, p: float) -> bool:
    """Can entries in [0, 1] sum to B with p-th powers summing to A?

    Feasible iff 0 <= A <= floor(B) + (B - floor(B))^p; the lower edge is
    only approached (finitely many entries always have positive power sum
    unless B = 0), the upper edge is attained by saturated entries.
    """
    _check_AB(A, B, p)
    return A <= max_power_sum(B, p)


def _split_sum(B: float, u: float, p: float) -> tuple[int, float, float]:
    """Power sum of the water-filling family: m entries u plus remainder r.

    m = floor(B/u) and r = B - m u < u, so the family is sorted and sums
    to B exactly.  The power sum m u^p + r^p is continuous and increasing
    in u, which is what the bisection in realize_AB relies on.
    """
    m = int(B // u)
    r = B - m * u
    if r >= u:  # float division edge
        m += 1
        r = B - m * u
    if r < 0.0:
        m -= 1
        r = B - m * u
    return m, r, m * u ** p + r ** p


def realize_AB(A: float, B: float, p: float, eps: float = 1e-9) -> np.ndarray:
    """Entries in [0, 1] with sum within eps of B and power sum within eps of A.

    Walks the one-parameter family (u, u, ..., u, r) from the equal-split
    end (u small) to the saturated end (u = 1): the entry size u is the
    bisection variable and the number of full entries grows as u shrinks.
    """
    _check_AB(A, B, p)
    if not 0.0 < eps < 1.0:
        raise ValidationError(f"eps must be in (0, 1), got {eps!r}")
    if A > max_power_sum(B, p):
        raise FeasibilityError(
            f"A={A!r} exceeds the attainable maximum {max_power_sum(B, p)!r} at B={B!r}")
    if B == 0.0:
        return np.empty(0)
    if A <= eps * 0.5:
        # equal split small enough that the power sum itself is below eps
        n = max(1, math.ceil((B ** p / (0.5 * eps)) ** (1.0 / (p - 1.0))))
        return np.full(n, B / n)

    u_hi = min(1.0, B)
    m, r, s_hi = _split_sum(B, u_hi, p)
    if A >= s_hi:
        return _assemble(m, u_hi, r)

    u_lo = 0.5 * u_hi
    for _ in range(200):
        if _split_sum(B, u_lo, p)[2] <= A:
            break
        u_lo *= 0.5
    else:
        raise FeasibilityError("could not bracket the target power sum")

    for _ in range(160):
        u = 0.5 * (u_lo + u_hi)
        m, r, s = _split_sum(B, u, p)
        if abs(s - A) <= 0.25 * eps:
            return _assemble(m, u, r)
        if s < A:
            u_lo = u
        else:
            u_hi = u
        if u_hi - u_lo <= 1e-17 * u_hi:
            break
    m, r, s = _split_sum(B, u_hi, p)
    if abs(s - A) <= eps:
        return _assemble(m, u_hi, r)
    raise FeasibilityError("bisection failed to reach the requested tolerance")


def _assemble(m: int, u: float, r: float) -> np.ndarray:
    if r > 1e-300:
        out = np.empty(m + 1)
        out[:m] = u
        out[m] = r
        return out
    return np.full(m, u)


def _bounds_1d(x: np.ndarray) -> tuple[np.ndarray, np.ndarray]:
    s = 1.0 / np.sqrt(x)
    s3 = s * s * s
    n = np.floor(s)
    frac = s - n
    return 1.0 / s3, (n + frac ** 3) / s3


def region_1d(x: float) -> tuple[float, float]:
    """(y_low, y_high) of the attainable band over unions of intervals."""
    if not (isinstance(x, (int, float)) and math.isfinite(x)) or not 0.0 < x <= 1.0:
        raise ValidationError(f"x must lie in (0, 1], got {x!r}")
    lo, hi = _bounds_1d(np.asarray([float(x)]))
    return float(lo[0]), float(hi[0])


class RegionBoundsD(NamedTuple):
    """Bounds at fixed x for d >= 2: ball unions fill [outer_low, inner_high]."""

    inner_high: float
    outer_low: float


def region_bounds_d(x: float, d: int) -> RegionBoundsD:
    """Ball-union envelope and Kohler-Jobin floor at eigenvalue ratio x.

    Every y in [outer_low, inner_high] is attained by a union of balls;
    no domain at all dips below outer_low = x^((d+2)/2).
    """
    if not (isinstance(d, int) and d >= 2):
        raise ValidationError(f"d must be an integer >= 2 (d=1 has region_1d), got {d!r}")
    if not (isinstance(x, (int, float)) and math.isfinite(x)) or not 0.0 < x <= 1.0:
        raise ValidationError(f"x must lie in (0, 1], got {x!r}")
    x = float(x)
    p = (d + 2.0) / d
    outer_low = x ** ((d + 2.0) / 2.0)
    s = x ** (-d / 2.0)
    n = math.floor(s)
    inner_high = (n + (s - n) ** p) * outer_low
    return RegionBoundsD(inner_high=min(inner_high, 1.0), outer_low=outer_low)


def membership_1d(point, eps: float = 1e-6):
    """Decide whether (x, y) is attainable for d = 1 and build a witness.

    Returns (True, IntervalUnionSpec) with the witness reproducing (x, y)
    within eps through its own spectrum, or (False, None).  The witness
    normalizes the longest interval to 1; the remaining lengths solve
    sum = x^(-1/2) - 1 and cube sum = y x^(-3/2) - 1.
    """
    if isinstance(point, DiagramPoint):
        x, y = point.x, point.y
    else:
        x, y = float(point[0]), float(point[1])
    if not (0.0 < x <= 1.0 and 0.0 < y <= 1.0):
        return False, None
    y_low, y_high = region_1d(x)
    # coordinates computed in floats from a genuine configuration can land
    # a few ulp outside the band; the construction clamps back onto it
    if not y_low - 1e-9 <= y <= y_high + 1e-9:
        return False, None
    s = 1.0 / math.sqrt(x)
    B = s - 1.0
    A = min(max(y * s ** 3 - 1.0, 0.0), max_power_sum(B, 3.0))
    rest = realize_AB(A, B, 3.0, eps=0.25 * eps)
    lengths = (1.0, *(float(v) for v in rest if v > 0.0))
    return True, IntervalUnionSpec(lengths)


@dataclass(frozen=True)
class Region1D:
    """Sampled attainable band: rows of (x, y_low, y_high), x ascending."""

    rows: np.ndarray

    def __post_init__(self):
        rows = np.asarray(self.rows, dtype=float)
        if rows.ndim != 2 or rows.shape[1] != 3 or rows.shape[0] == 0:
            raise ValidationError("Region1D rows must be a nonempty (k, 3) array")
        x = rows[:, 0]
        if np.any(x <= 0.0) or np.any(x > 1.0) or np.any(np.diff(x) <= 0.0):
            raise ValidationError("x samples must be strictly increasing in (0, 1]")
        lo, hi = _bounds_1d(x)
        if not (np.allclose(rows[:, 1], lo, rtol=0.0, atol=1e-12)
                and np.all(rows[:, 1] <= rows[:, 2] + 1e-15)):
            raise ValidationError("rows do not satisfy the d=1 band formulas")
        object.__setattr__(self, "rows", rows)

    @classmethod
    def sample(cls, n_samples: int = 513, x_min: float = 0.01) -> "Region1D":
        """Sample the band uniformly in s = x^(-1/2).

        Uniform-in-s spacing concentrates samples near x = 0 where the
        upper boundary has corners, and the integers s = n (i.e. the
        corner abscissae x = 1/n^2) are inserted exactly.
        """
        if n_samples < 2 or not 0.0 < x_min < 1.0:
            raise ValidationError("need n_samples >= 2 and x_min in (0, 1)")
        s_max = x_min ** -0.5
        s = np.linspace(1.0, s_max, n_samples)
        corners = np.arange(2.0, math.floor(s_max) + 1.0)
        s = np.unique(np.concatenate([s, corners]))
        x = np.sort(1.0 / (s * s))
        lo, hi = _bounds_1d(x)
        return cls(np.column_stack([x, lo, hi]))


def sample_bounds_d(d: int, n_samples: int = 513, x_min: float = 0.01) -> np.ndarray:
    """Rows (x, outer_low, inner_high) for the d >= 2 bounds, x ascending."""
    if not (isinstance(d, int) and d >= 2):
        raise ValidationError(f"d must be an integer >= 2, got {d!r}")
    if n_samples < 2 or not 0.0 < x_min < 1.0:
        raise ValidationError("need n_samples >= 2 and x_min in (0, 1)")
    t_max = x_min ** (-d / 2.0)  # sample uniformly in t = x^(-d/2), corners at integer t
    t = np.unique(np.concatenate([
        np.linspace(1.0, t_max, n_samples),
        np.arange(2.0, math.floor(t_max) + 1.0),
    ]))
    x = np.sort(t ** (-2.0 / d))
    rows = np.empty((x.size, 3))
    for i, xi in enumerate(x):
        hi, lo = region_bounds_d(float(xi), d)
        rows[i] = (xi, lo, hi)
    return rows


def ball_union_cloud(d: int, n_points: int, seed: int = 0) -> list[DiagramPoint]:
    """Random disjoint-ball configurations mapped to diagram points.

    Each draw keeps one unit ball and appends a geometrically decaying
    tail of smaller radii, which spreads points across the whole band
    between the Kohler-Jobin floor and the saturated upper envelope.
    """
    if not (isinstance(d, int) and d >= 1):
        raise ValidationError(f"d must be a positive integer, got {d!r}")
    if n_points < 1:
        raise ValidationError("n_points must be >= 1")
    rng = np.random.default_rng(seed)
    points = []
    for _ in range(n_points):
        extra = min(int(rng.geometric(0.30)) - 1, 24)
        decay = rng.uniform(0.35, 0.97)
        radii = [1.0]
        scale = 1.0
        for _k in range(extra):
            scale *= decay
            radii.append(scale * rng.uniform(0.25, 1.0))
        if d == 1:
            spec = IntervalUnionSpec(tuple(2.0 * r for r in radii))
        else:
            spec = BallUnionSpec(d, tuple(radii))
        points.append(normalized_coords(union_spectrum(spec), d, source=spec))
    return points


def _num(v) -> str:
    return repr(float(v))


def write_diagram_csv(path, dim: int, rows: np.ndarray, point_groups=()) -> None:
    """CSV with columns x, y, y_low, y_high, kind (schema header line).

    Boundary rows carry kind="bounds" with y set to the attainable upper
    value; each (kind, points) group contributes one row per point with
    the band evaluated at the point's own x.
    """
    lines = ["# schema=1", "x,y,y_low,y_high,kind"]
    for x, lo, hi in np.asarray(rows, dtype=float):
        lines.append(f"{_num(x)},{_num(hi)},{_num(lo)},{_num(hi)},bounds")
    for kind, points in point_groups:
        for pt in points:
            # points may sit a few ulp past x = 1 after an exact
            # cancellation; the band is evaluated at the clamped abscissa
            xq = min(float(pt.x), 1.0)
            if dim == 1:
                lo, hi = region_1d(xq)
            else:
                hi, lo = region_bounds_d(xq, dim)
            lines.append(f"{_num(pt.x)},{_num(pt.y)},{_num(lo)},{_num(hi)},{kind}")
    with open(path, "w", encoding="utf-8", newline="\n") as fh:
        fh.write("\n".join(lines) + "\n")


def upper_guide(d: int, x) -> np.ndarray:
    """Dashed diagram guide from the product bound lambda T < |Omega|.

    In normalized coordinates the product bound reads y < x d(d+2) / j^2
    where j^2 is the unit-ball eigenvalue; capped at the torsion bound 1.
    """
    slope = d * (d + 2.0) / ball_lambda(d)
    return np.minimum(1.0, slope * np.asarray(x, dtype=float))


def svg_region_1d(path, region: Region1D, cloud=()) -> None:
    """Filled d=1 band with its corner points and an optional point cloud."""
    c = Canvas(title="attainable (x, y) region for unions of intervals")
    x = region.rows[:, 0]
    lo = region.rows[:, 1]
    hi = region.rows[:, 2]
    c.band(x, lo, hi, fill="#9ecae1")
    c.polyline(x, lo, stroke="#08519c", width=1.6)
    c.polyline(x, hi, stroke="#08519c", width=1.6)
    n_max = int(math.floor(x[0] ** -0.5))
    for n in range(1, n_max + 1):
        corner = 1.0 / (n * n)
        if corner >= x[0] - 1e-15:
            c.dot(corner, corner, r=3.0, fill="#08306b", opacity=1.0)
    for pt in cloud:
        c.dot(pt.x, pt.y, r=1.6, fill="#d1495b", opacity=0.6)
    c.axes("x (eigenvalue ratio)", "y (torsion ratio)")
    entries = [("attainable band", "#9ecae1", "fill"),
               ("corners x = 1/n^2", "#08306b", "dot")]
    if len(tuple(cloud)):
        entries.append(("interval-union samples", "#d1495b", "dot"))
    c.legend(entries)
    c.write(path)


def svg_region_d(path, d: int, rows: np.ndarray, cloud=(), overlays=()) -> None:
    """d >= 2 figure: Kohler-Jobin floor, ball-union band, dashed guide.

    overlays: sequence of (label, color, points) for extra point sets,
    e.g. grid-computed domains.
    """
    c = Canvas(title=f"diagram bounds for d = {d}")
    rows = np.asarray(rows, dtype=float)
    x = rows[:, 0]
    lo = rows[:, 1]
    hi = rows[:, 2]
    c.band(x, lo, hi, fill="#a1d99b")
    c.polyline(x, lo, stroke="#00441b", width=1.8)
    c.polyline(x, hi, stroke="#238b45", width=1.2)
    c.polyline(x, upper_guide(d, x), stroke="#636363", width=1.4, dash="6,4")
    for pt in cloud:
        c.dot(pt.x, pt.y, r=1.6, fill="#d1495b", opacity=0.55)
    palette = ("#6a51a3", "#e6550d", "#31a354", "#756bb1")
    for i, (label, color, points) in enumerate(overlays):
        col = color or palette[i % len(palette)]
        for pt in points:
            c.dot(pt.x, pt.y, r=3.0, fill=col, opacity=0.95)
    c.axes("x (eigenvalue ratio)", "y (torsion ratio)")
    entries = [("ball-union band", "#a1d99b", "fill"),
               ("lower bound x^((d+2)/2)", "#00441b", "line"),
               ("product-bound guide", "#636363", "dash")]
    if len(tuple(cloud)):
        entries.append(("ball-union samples", "#d1495b", "dot"))
    for i, (label, color, _pts) in enumerate(overlays):
        entries.append((label, color or palette[i % len(palette)], "dot"))
    c.legend(entries)
    c.write(path)
