"""Concave thickness profiles on convex bases and their thin-domain limits.

A thin domain of thickness scale eps over a base A with concave profile h
has, to first order, eigenvalue pi^2/(eps sup h)^2 and torsion
(eps^3/12) int h^3.  The scale-invariant combination lambda T / measure
then converges to (pi^2/12) int h^3 / (sup^2 int h), so everything about
the limit is captured by the ratio int h^3 / (sup^2 int h).  For concave
h this ratio lies in [6/((d+1)(d+2)), 1]: the slab h = const sits at the
top, cone functions sit exactly at the bottom.
"""

from __future__ import annotations

import math
from dataclasses import dataclass, field
from typing import NamedTuple

import numpy as np

from .domains import ThinSpec
from .errors import GeometryError, ValidationError

_COVER_TOL = 1e-9


def sharp_lower_ratio(d: int) -> float:
    """Smallest value of int h^3 / (sup^2 int h) over concave profiles.

    d is the ambient dimension (base dimension + 1); cone functions
    attain it: 1/2 for d = 2 and 3/10 for d = 3.
    """
    if not (isinstance(d, int) and d >= 2):
        raise ValidationError(f"ambient dimension must be an integer >= 2, got {d!r}")
    return 6.0 / ((d + 1.0) * (d + 2.0))


@dataclass(frozen=True)
class ConvexBase:
    """Convex base set: interval [0, L], convex polygon, or disk.

    Polygons are stored counter-clockwise with collinear vertices removed;
    clockwise input is reversed rather than rejected.
    """

    kind: str
    data: tuple

    @classmethod
    def interval(cls, length: float) -> "ConvexBase":
        length = float(length)
        if not math.isfinite(length) or length <= 0.0:
            raise GeometryError(f"interval length must be positive, got {length!r}")
        return cls("interval", (length,))

    @classmethod
    def polygon(cls, vertices) -> "ConvexBase":
        verts = np.asarray(vertices, dtype=float)
        if verts.ndim != 2 or verts.shape[1] != 2 or verts.shape[0] < 3:
            raise GeometryError("polygon needs at least three 2-d vertices")
        if not np.all(np.isfinite(verts)):
            raise GeometryError("polygon vertices must be finite")
        area2 = float(np.sum(verts[:, 0] * np.roll(verts[:, 1], -1)
                             - np.roll(verts[:, 0], -1) * verts[:, 1]))
        if area2 < 0.0:
            verts = verts[::-1]
            area2 = -area2
        if area2 <= 0.0:
            raise GeometryError("polygon has zero area")
        scale = float(np.abs(verts).max()) + 1.0
        kept = []
        n = verts.shape[0]
        for k in range(n):
            prev = verts[(k - 1) % n]
            cur = verts[k]
            nxt = verts[(k + 1) % n]
            cross = ((cur[0] - prev[0]) * (nxt[1] - prev[1])
                     - (cur[1] - prev[1]) * (nxt[0] - prev[0]))
            if cross > 1e-12 * scale * scale:
                kept.append((float(cur[0]), float(cur[1])))
            elif cross < -1e-12 * scale * scale:
                raise GeometryError("polygon is not convex")
        if len(kept) < 3:
            raise GeometryError("polygon degenerates after removing collinear vertices")
        return cls("polygon", tuple(kept))

    @classmethod
    def disk(cls, cx: float, cy: float, r: float) -> "ConvexBase":
        r = float(r)
        if not math.isfinite(r) or r <= 0.0:
            raise GeometryError(f"disk radius must be positive, got {r!r}")
        return cls("disk", (float(cx), float(cy), r))

    @property
    def dim_base(self) -> int:
        return 1 if self.kind == "interval" else 2

    @property
    def vertices(self) -> np.ndarray:
        if self.kind != "polygon":
            raise ValidationError("vertices only exist for polygon bases")
        return np.asarray(self.data, dtype=float)

    @property
    def measure(self) -> float:
        if self.kind == "interval":
            return self.data[0]
        if self.kind == "polygon":
            v = self.vertices
            return 0.5 * float(np.sum(v[:, 0] * np.roll(v[:, 1], -1)
                                      - np.roll(v[:, 0], -1) * v[:, 1]))
        return math.pi * self.data[2] ** 2

    def bbox(self) -> tuple[float, ...]:
        if self.kind == "interval":
            return (0.0, self.data[0])
        if self.kind == "polygon":
            v = self.vertices
            return (float(v[:, 0].min()), float(v[:, 1].min()),
                    float(v[:, 0].max()), float(v[:, 1].max()))
        cx, cy, r = self.data
        return (cx - r, cy - r, cx + r, cy + r)

    def shape_for(self, grid_n: int):
        """Sample-array shape so square cells of side max-span/grid_n cover the box."""
        if not (isinstance(grid_n, int) and grid_n >= 2):
            raise ValidationError(f"grid_n must be an integer >= 2, got {grid_n!r}")
        if self.kind == "interval":
            return grid_n
        x0, y0, x1, y1 = self.bbox()
        span = max(x1 - x0, y1 - y0)
        cell = span / grid_n
        nx = int(math.ceil((x1 - x0) / cell - 1e-12))
        ny = int(math.ceil((y1 - y0) / cell - 1e-12))
        return ny, nx

    def grid_for_shape(self, shape):
        """(centers, mask, cell measure) for a sample array of this shape.

        Cell side is max-bbox-span / max(shape); the grid is anchored at the
        bbox corner and must cover the box, matching the thin-domain spec
        sampling convention.
        """
        if self.kind == "interval":
            n = int(shape)
            if n < 2:
                raise ValidationError("interval profiles need at least 2 samples")
            length = self.data[0]
            cell = length / n
            x = (np.arange(n) + 0.5) * cell
            return (x,), np.ones(n, dtype=bool), cell
        ny, nx = (int(v) for v in shape)
        if ny < 2 or nx < 2:
            raise ValidationError("2-d profiles need at least 2 samples per axis")
        x0, y0, x1, y1 = self.bbox()
        span = max(x1 - x0, y1 - y0)
        cell = span / max(ny, nx)
        if nx * cell < (x1 - x0) * (1.0 - _COVER_TOL) or ny * cell < (y1 - y0) * (1.0 - _COVER_TOL):
            raise ValidationError(f"sample shape {(ny, nx)} does not cover the base box")
        xs = x0 + (np.arange(nx) + 0.5) * cell
        ys = y0 + (np.arange(ny) + 0.5) * cell
        X, Y = np.meshgrid(xs, ys)
        return (X, Y), self._mask_points(X, Y), cell * cell

    def _mask_points(self, X, Y) -> np.ndarray:
        if self.kind == "disk":
            cx, cy, r = self.data
            return (X - cx) ** 2 + (Y - cy) ** 2 <= r * r
        v = self.vertices
        scale = float(np.abs(v).max()) + 1.0
        inside = np.ones(X.shape, dtype=bool)
        n = v.shape[0]
        for k in range(n):
            ax, ay = v[k]
            bx, by = v[(k + 1) % n]
            inside &= (bx - ax) * (Y - ay) - (by - ay) * (X - ax) >= -1e-12 * scale * scale
        return inside

    def support_min(self, g) -> float:
        """Minimum of the linear form g . x over the base."""
        if self.kind == "interval":
            return min(0.0, float(g[0]) * self.data[0])
        if self.kind == "polygon":
            return float((self.vertices @ np.asarray(g, dtype=float)).min())
        cx, cy, r = self.data
        g = np.asarray(g, dtype=float)
        return float(g[0] * cx + g[1] * cy - r * math.hypot(g[0], g[1]))

    def contains_strict(self, point) -> bool:
        if self.kind == "interval":
            p = float(point[0]) if np.ndim(point) else float(point)
            return 0.0 < p < self.data[0]
        px, py = (float(v) for v in point)
        if self.kind == "disk":
            cx, cy, r = self.data
            return math.hypot(px - cx, py - cy) < r * (1.0 - 1e-12)
        v = self.vertices
        scale = float(np.abs(v).max()) + 1.0
        n = v.shape[0]
        for k in range(n):
            ax, ay = v[k]
            bx, by = v[(k + 1) % n]
            if (bx - ax) * (py - ay) - (by - ay) * (px - ax) <= 1e-12 * scale * scale:
                return False
        return True

    def default_peak(self):
        if self.kind == "interval":
            return (0.5 * self.data[0],)
        if self.kind == "polygon":
            v = self.vertices
            return (float(v[:, 0].mean()), float(v[:, 1].mean()))
        return (self.data[0], self.data[1])


def _concavity_defect(h: np.ndarray, mask: np.ndarray) -> float:
    """Largest violation of the midpoint inequality over in-base triples."""
    worst = 0.0
    if h.ndim == 1:
        trip = mask[:-2] & mask[1:-1] & mask[2:]
        if trip.any():
            d = 0.5 * (h[:-2] + h[2:]) - h[1:-1]
            worst = float(d[trip].max(initial=0.0))
        return worst
    n0, n1 = h.shape
    for di, dj in ((0, 1), (1, 0), (1, 1), (1, -1)):
        c = (slice(1, n0 - 1), slice(1, n1 - 1))
        p = (slice(1 + di, n0 - 1 + di), slice(1 + dj, n1 - 1 + dj))
        m = (slice(1 - di, n0 - 1 - di), slice(1 - dj, n1 - 1 - dj))
        trip = mask[c] & mask[p] & mask[m]
        if trip.any():
            d = 0.5 * (h[p] + h[m]) - h[c]
            worst = max(worst, float(d[trip].max(initial=0.0)))
    return worst


@dataclass(eq=False)
class ConcaveProfile:
    """Nonnegative concave thickness samples over a convex base.

    h holds cell-center samples (zeros outside the base); concavity is
    certified discretely by the midpoint inequality over all in-base
    triples along grid axes and diagonals, within tol times max(1, sup).
    """

    base: ConvexBase
    h: np.ndarray
    tol: float = 1e-9
    mask: np.ndarray = field(init=False, repr=False)
    cell: float = field(init=False)
    sup_norm: float = field(init=False)

    def __post_init__(self):
        if not isinstance(self.base, ConvexBase):
            raise ValidationError("profile base must be a ConvexBase")
        if not 0.0 < float(self.tol) < 1.0:
            raise ValidationError(f"concavity tolerance must be in (0, 1), got {self.tol!r}")
        h = np.array(self.h, dtype=float)
        expected_ndim = 1 if self.base.kind == "interval" else 2
        if h.ndim != expected_ndim:
            raise ValidationError(
                f"profile on a {self.base.kind} base needs a {expected_ndim}-d sample array")
        shape = h.shape[0] if expected_ndim == 1 else h.shape
        _, mask, cell = self.base.grid_for_shape(shape)
        if not np.all(np.isfinite(h)) or np.any(h[mask] < 0.0):
            raise ValidationError("profile samples must be finite and nonnegative")
        h[~mask] = 0.0
        sup = float(h.max())
        if sup <= 0.0:
            raise ValidationError("profile must be positive somewhere on the base")
        defect = _concavity_defect(h, mask)
        if defect > self.tol * max(1.0, sup):
            raise ValidationError(
                f"midpoint concavity fails by {defect:.3e} (tolerance {self.tol:.1e})")
        self.h = h
        self.mask = mask
        self.cell = cell
        self.sup_norm = sup

    def centers(self):
        pts, _, _ = self.base.grid_for_shape(
            self.h.shape[0] if self.h.ndim == 1 else self.h.shape)
        return pts

    def integral(self, power: float = 1.0) -> float:
        """Midpoint quadrature of h^power over the base."""
        if power == 1.0:
            return float(self.h.sum()) * self.cell
        return float((self.h ** power).sum()) * self.cell

    def to_thin_spec(self, eps: float) -> ThinSpec:
        if self.base.kind == "interval":
            data = self.base.data[0]
        elif self.base.kind == "polygon":
            data = self.base.vertices
        else:
            data = self.base.data
        return ThinSpec(self.base.kind, data, self.h.copy(), eps)

    @classmethod
    def from_thin_spec(cls, spec: ThinSpec, tol: float = 1e-9) -> "ConcaveProfile":
        if spec.base_kind == "interval":
            base = ConvexBase.interval(spec.base)
        elif spec.base_kind == "polygon":
            base = ConvexBase.polygon(spec.base)
        else:
            base = ConvexBase.disk(*spec.base)
        return cls(base, spec.h, tol=tol)


def profile_from_spec(spec: ThinSpec, tol: float = 1e-9) -> ConcaveProfile:
    return ConcaveProfile.from_thin_spec(spec, tol=tol)


def cone_function(base: ConvexBase, peak=None, grid_n: int = 256) -> ConcaveProfile:
    """Smallest concave profile equal to 1 at peak and 0 on the boundary.

    Its super-level set at height sigma is the homothet
    sigma peak + (1 - sigma) base, which is what makes its h^3 / h ratio
    the extreme case.  peak defaults to the base midpoint/centroid.
    """
    if peak is None:
        peak = base.default_peak()
    if base.kind == "interval":
        p = float(peak[0]) if np.ndim(peak) else float(peak)
        length = base.data[0]
        if not 0.0 < p < length:
            raise GeometryError(f"peak {p!r} is not strictly inside [0, {length}]")
        (x,), _mask, _cell = base.grid_for_shape(base.shape_for(grid_n))
        h = np.minimum(x / p, (length - x) / (length - p))
        return ConcaveProfile(base, np.maximum(h, 0.0))
    peak = tuple(float(v) for v in peak)
    if not base.contains_strict(peak):
        raise GeometryError(f"peak {peak!r} is not strictly inside the base")
    (X, Y), mask, _cell = base.grid_for_shape(base.shape_for(grid_n))
    if base.kind == "polygon":
        v = base.vertices
        n = v.shape[0]
        h = np.full(X.shape, np.inf)
        for k in range(n):
            ax, ay = v[k]
            bx, by = v[(k + 1) % n]
            ex, ey = bx - ax, by - ay
            norm = math.hypot(ex, ey)
            nx, ny = -ey / norm, ex / norm  # inward for counter-clockwise edges
            d_peak = nx * (peak[0] - ax) + ny * (peak[1] - ay)
            h = np.minimum(h, (nx * (X - ax) + ny * (Y - ay)) / d_peak)
        h = np.minimum(h, 1.0)
    else:
        cx, cy, r = base.data
        vx = X - cx
        vy = Y - cy
        wx, wy = peak[0] - cx, peak[1] - cy
        w2 = wx * wx + wy * wy
        if w2 < 1e-30 * r * r:
            h = 1.0 - np.sqrt(vx * vx + vy * vy) / r
        else:
            a2 = w2 - r * r  # negative: peak is interior
            b_half = vx * wx + vy * wy - r * r
            disc = b_half ** 2 - a2 * (vx * vx + vy * vy - r * r)
            h = (b_half + np.sqrt(np.maximum(disc, 0.0))) / a2
        h = np.clip(h, 0.0, 1.0)
    h = np.where(mask, np.maximum(h, 0.0), 0.0)
    return ConcaveProfile(base, h)


class ThinAsymptotics(NamedTuple):
    lambda_approx: float
    torsion_approx: float
    f1_approx: float


def thin_asymptotics(profile: ConcaveProfile, eps: float) -> ThinAsymptotics:
    """First-order eigenvalue, torsion and F_1 of the eps-thin domain."""
    eps = float(eps)
    if not math.isfinite(eps) or eps <= 0.0:
        raise ValidationError(f"eps must be positive, got {eps!r}")
    ih = profile.integral(1.0)
    if ih <= 0.0:
        raise ValidationError("degenerate profile: integral of h vanishes")
    ih3 = profile.integral(3.0)
    sup = profile.sup_norm
    lam = math.pi ** 2 / (eps * sup) ** 2
    torsion = eps ** 3 / 12.0 * ih3
    f1 = math.pi ** 2 / 12.0 * ih3 / (sup * sup * ih)
    return ThinAsymptotics(lam, torsion, f1)


def asymptotics_of_spec(spec: ThinSpec, tol: float = 1e-9) -> ThinAsymptotics:
    return thin_asymptotics(profile_from_spec(spec, tol=tol), spec.eps)


def ratio_h3_h1(profile: ConcaveProfile) -> float:
    """int h^3 / (sup^2 int h); the sup-normalization makes it scale-free.

    Up to quadrature error the value lies in [sharp_lower_ratio(d), 1]
    with d = dim_base + 1; the top is only reached by constant profiles.
    """
    ih = profile.integral(1.0)
    if ih <= 0.0:
        raise ValidationError("degenerate profile: integral of h vanishes")
    return profile.integral(3.0) / (profile.sup_norm ** 2 * ih)


def _upper_hull(xs: np.ndarray, ys: np.ndarray) -> tuple[np.ndarray, np.ndarray]:
    """Concave majorant nodes of the points (xs ascending)."""
    hx: list[float] = []
    hy: list[float] = []
    for x, y in zip(xs, ys):
        while len(hx) >= 2:
            cross = ((hx[-1] - hx[-2]) * (y - hy[-2])
                     - (hy[-1] - hy[-2]) * (x - hx[-2]))
            if cross >= 0.0:  # middle node on or below the chord: drop it
                hx.pop()
                hy.pop()
            else:
                break
        hx.append(float(x))
        hy.append(float(y))
    return np.asarray(hx), np.asarray(hy)


def radial_rearrangement(profile: ConcaveProfile) -> ConcaveProfile:
    """Radially decreasing profile on an equal-measure ball base.

    Super-level-set measures are preserved by construction: sorted sample
    values are placed at the radii enclosing the same measure.  The node
    sequence is replaced by its concave majorant before resampling; the
    majorant stays within one cell of the exact rearrangement and makes
    the output certifiably concave (the exact rearrangement of a concave
    profile is concave, so this only removes quantization jitter).
    """
    m = profile.base.dim_base
    if m == 1:
        # one-dimensional sorted samples quantize quantile positions at
        # whole cells, and the one-sided hull turns that jitter into an
        # integral bias; supersampling the piecewise-linear interpolant
        # shrinks the jitter well below the preservation tolerance
        refine = 8
        (x_all,) = profile.centers()
        x_in = x_all[profile.mask]
        h_in = profile.h[profile.mask]
        n_in = h_in.size
        offsets = ((np.arange(refine) + 0.5) / refine - 0.5) * profile.cell
        x_fine = (x_in[:, None] + offsets[None, :]).ravel()
        vals = np.sort(np.interp(x_fine, x_in, h_in))[::-1]
        sub = profile.cell / refine
        mu = np.arange(1, vals.size + 1, dtype=float) * sub
        total = n_in * profile.cell
        out_base = ConvexBase.interval(total)
        radii = 0.5 * mu
        (x,), out_mask, _ = out_base.grid_for_shape(n_in)
        rho = np.abs(x - 0.5 * total)
    else:
        vals = np.sort(profile.h[profile.mask])[::-1]
        mu = np.arange(1, vals.size + 1, dtype=float) * profile.cell
        area = vals.size * profile.cell
        out_base = ConvexBase.disk(0.0, 0.0, math.sqrt(area / math.pi))
        radii = np.sqrt(mu / math.pi)
        n_out = max(profile.h.shape)
        (X, Y), out_mask, _ = out_base.grid_for_shape((n_out, n_out))
        rho = np.hypot(X, Y)
    hull_x, hull_y = _upper_hull(np.concatenate([[0.0], radii]),
                                 np.concatenate([[vals[0]], vals]))
    hstar = np.interp(rho, hull_x, hull_y)
    hstar = np.where(out_mask, hstar, 0.0)
    return ConcaveProfile(out_base, hstar, tol=1e-6)


def random_concave_profile(base: ConvexBase, seed: int, grid_n: int = 128,
                           k_range: tuple[int, int] = (3, 12),
                           max_tries: int = 100) -> ConcaveProfile:
    """Minimum of a few random affine functions, capped at 1.

    Each affine is shifted so its minimum over the base is nonnegative:
    capping from below would break concavity, shifting does not.  Draws
    with nearly vanishing mass (mean below 1% of the sup) are rejected
    and redrawn.
    """
    rng = np.random.default_rng(seed)
    m = base.dim_base
    if m == 1:
        (coords,), mask, cell = base.grid_for_shape(base.shape_for(grid_n))
        pts = coords[:, None]
    else:
        (X, Y), mask, cell = base.grid_for_shape(base.shape_for(grid_n))
        pts = np.stack([X, Y], axis=-1)
    bb = base.bbox()
    if m == 1:
        scale = bb[1] - bb[0]
    else:
        scale = math.hypot(bb[2] - bb[0], bb[3] - bb[1])
    area = float(mask.sum()) * cell
    for _ in range(max_tries):
        k = int(rng.integers(k_range[0], k_range[1] + 1))
        h = np.full(pts.shape[:-1], np.inf)
        for _j in range(k):
            g = rng.normal(0.0, 1.5 / scale, size=m)
            offset = rng.uniform(0.0, 0.9) - base.support_min(g)
            h = np.minimum(h, pts @ g + offset)
        h = np.minimum(h, 1.0)
        h = np.where(mask, h, 0.0)
        sup = float(h.max())
        if sup <= 0.0:
            continue
        if float(h.sum()) * cell >= 0.01 * area * sup:
            return ConcaveProfile(base, h)
    raise ValidationError("could not draw a non-degenerate concave profile")


def is_radially_affine(profile: ConcaveProfile, tol: float = 1e-2) -> bool:
    """Does h look like a + b|x - center| on its base (cone signature)?"""
    if profile.base.kind == "interval":
        (x,) = profile.centers()
        rho = np.abs(x - 0.5 * profile.base.data[0])
        vals = profile.h
        keep = profile.mask
    elif profile.base.kind == "disk":
        X, Y = profile.centers()
        cx, cy, _ = profile.base.data
        rho = np.hypot(X - cx, Y - cy)
        vals = profile.h
        keep = profile.mask
    else:
        raise ValidationError("radial-affinity test needs an interval or disk base")
    A = np.column_stack([np.ones(keep.sum()), rho[keep]])
    coef, *_ = np.linalg.lstsq(A, vals[keep], rcond=None)
    resid = np.abs(A @ coef - vals[keep]).max()
    return bool(resid <= tol * max(profile.sup_norm, 1e-300))


# ---------------------------------------------------------------------------
# profile CSV round-trip

def write_profile_csv(profile: ConcaveProfile, path) -> None:
    lines = ["# schema=1"]
    if profile.base.kind == "interval":
        lines.append(f"# base=interval {float(profile.base.data[0])!r}")
        lines.append(f"# shape={profile.h.shape[0]}")
    elif profile.base.kind == "polygon":
        verts = ";".join(f"{float(vx)!r},{float(vy)!r}" for vx, vy in profile.base.data)
        lines.append(f"# base=polygon {verts}")
        lines.append(f"# shape={profile.h.shape[0]},{profile.h.shape[1]}")
    else:
        cx, cy, r = (float(v) for v in profile.base.data)
        lines.append(f"# base=disk {cx!r},{cy!r},{r!r}")
        lines.append(f"# shape={profile.h.shape[0]},{profile.h.shape[1]}")
    lines.append(f"# tol={profile.tol!r}")
    if profile.h.ndim == 1:
        (x,) = profile.centers()
        lines.append("i,x,h")
        for i, (xi, hi) in enumerate(zip(x, profile.h)):
            lines.append(f"{i},{float(xi)!r},{float(hi)!r}")
    else:
        X, Y = profile.centers()
        lines.append("i,j,x,y,h")
        for i in range(profile.h.shape[0]):
            for j in range(profile.h.shape[1]):
                lines.append(
                    f"{i},{j},{float(X[i, j])!r},{float(Y[i, j])!r},"
                    f"{float(profile.h[i, j])!r}")
    with open(path, "w", encoding="utf-8", newline="\n") as fh:
        fh.write("\n".join(lines) + "\n")


def read_profile_csv(path) -> ConcaveProfile:
    base = None
    shape = None
    tol = 1e-9
    rows = []
    with open(path, "r", encoding="utf-8") as fh:
        for raw in fh:
            line = raw.strip()
            if not line:
                continue
            if line.startswith("#"):
                body = line[1:].strip()
                if body.startswith("base="):
                    kind, _, rest = body[5:].partition(" ")
                    if kind == "interval":
                        base = ConvexBase.interval(float(rest))
                    elif kind == "polygon":
                        verts = [tuple(float(v) for v in pair.split(","))
                                 for pair in rest.split(";")]
                        base = ConvexBase.polygon(verts)
                    elif kind == "disk":
                        cx, cy, r = (float(v) for v in rest.split(","))
                        base = ConvexBase.disk(cx, cy, r)
                    else:
                        raise ValidationError(f"unknown base kind {kind!r} in {path}")
                elif body.startswith("shape="):
                    shape = tuple(int(v) for v in body[6:].split(","))
                elif body.startswith("tol="):
                    tol = float(body[4:])
                continue
            if line[0].isalpha():  # column header row
                continue
            rows.append(line.split(","))
    if base is None or shape is None:
        raise ValidationError(f"profile file {path} is missing base or shape headers")
    if len(shape) == 1:
        h = np.zeros(shape[0])
        for parts in rows:
            h[int(parts[0])] = float(parts[2])
    else:
        h = np.zeros(shape)
        for parts in rows:
            h[int(parts[0]), int(parts[1])] = float(parts[4])
    return ConcaveProfile(base, h, tol=tol)
