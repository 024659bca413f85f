"""Domain descriptions and their measures.

Every shape the package can evaluate is described by one of the small
dataclasses below.  They are plain data: geometry checks happen at
construction time, all numerics live in the solver modules.  A tagged JSON
encoding (kind field plus variant fields) round-trips each spec; raster
masks are run-length encoded per row.
"""

from __future__ import annotations

import json
import math
from dataclasses import dataclass, field
from typing import Sequence, Union

import numpy as np

from .errors import ValidationError

MAX_DIM = 8


def unit_ball_volume(dim: int) -> float:
    """Volume of the unit ball in R^dim."""
    if not isinstance(dim, int) or dim < 1:
        raise ValidationError(f"dimension must be a positive integer, got {dim!r}")
    return math.pi ** (dim / 2.0) / math.gamma(dim / 2.0 + 1.0)


def _check_positive(name: str, value: float) -> float:
    value = float(value)
    if not math.isfinite(value) or value <= 0.0:
        raise ValidationError(f"{name} must be positive and finite, got {value!r}")
    return value


def _check_dim(dim: int, low: int = 1) -> int:
    if not isinstance(dim, (int, np.integer)) or not low <= int(dim) <= MAX_DIM:
        raise ValidationError(f"dimension must be an integer in [{low}, {MAX_DIM}], got {dim!r}")
    return int(dim)


@dataclass(frozen=True)
class BallSpec:
    """Ball of given radius in R^dim (an interval of length 2r when dim = 1)."""

    dim: int
    radius: float

    def __post_init__(self):
        object.__setattr__(self, "dim", _check_dim(self.dim))
        object.__setattr__(self, "radius", _check_positive("radius", self.radius))


@dataclass(frozen=True)
class RectSpec:
    """Open box with the given side lengths."""

    sides: tuple[float, ...]

    def __post_init__(self):
        sides = tuple(float(s) for s in self.sides)
        if not 1 <= len(sides) <= MAX_DIM:
            raise ValidationError(f"rectangle needs 1..{MAX_DIM} sides, got {len(sides)}")
        for s in sides:
            _check_positive("side", s)
        object.__setattr__(self, "sides", sides)

    @property
    def dim(self) -> int:
        return len(self.sides)


@dataclass(frozen=True)
class IntervalUnionSpec:
    """Disjoint union of open intervals, described by their lengths."""

    lengths: tuple[float, ...]

    def __post_init__(self):
        lengths = tuple(float(v) for v in self.lengths)
        if not lengths:
            raise ValidationError("interval union needs at least one length")
        for v in lengths:
            if not math.isfinite(v) or v < 0.0:
                raise ValidationError(f"interval lengths must be nonnegative, got {v!r}")
        if max(lengths) <= 0.0:
            raise ValidationError("interval union needs a positive longest interval")
        object.__setattr__(self, "lengths", lengths)

    @property
    def dim(self) -> int:
        return 1


@dataclass(frozen=True)
class BallUnionSpec:
    """Disjoint union of balls in R^dim, dim >= 2 (use intervals for dim 1)."""

    dim: int
    radii: tuple[float, ...]

    def __post_init__(self):
        object.__setattr__(self, "dim", _check_dim(self.dim, low=2))
        radii = tuple(float(v) for v in self.radii)
        if not radii:
            raise ValidationError("ball union needs at least one radius")
        for v in radii:
            if not math.isfinite(v) or v < 0.0:
                raise ValidationError(f"radii must be nonnegative, got {v!r}")
        if max(radii) <= 0.0:
            raise ValidationError("ball union needs a positive largest radius")
        object.__setattr__(self, "radii", radii)


@dataclass(frozen=True)
class CylinderSpec:
    """Product A x (0, height) with cross-section data given numerically.

    cross_measure is the (dim-1)-volume of A and is always required.  The
    perimeter of A, the radius of a ball contained in A, and the first
    Dirichlet eigenvalue of A are optional; operations that need a missing
    field raise MissingDataError.
    """

    dim: int
    cross_measure: float
    height: float
    cross_perimeter: float | None = None
    smooth_radius: float | None = None
    cross_lambda: float | None = None

    def __post_init__(self):
        object.__setattr__(self, "dim", _check_dim(self.dim, low=2))
        object.__setattr__(self, "cross_measure", _check_positive("cross_measure", self.cross_measure))
        object.__setattr__(self, "height", _check_positive("height", self.height))
        for name in ("cross_perimeter", "smooth_radius", "cross_lambda"):
            v = getattr(self, name)
            if v is None:
                continue
            v = float(v)
            if name == "cross_perimeter":
                if not math.isfinite(v) or v < 0.0:
                    raise ValidationError(f"cross_perimeter must be nonnegative, got {v!r}")
            else:
                _check_positive(name, v)
            object.__setattr__(self, name, v)


@dataclass
class GridSpec:
    """Rasterized planar domain: boolean cell mask plus uniform spacing.

    True cells are interior.  The outermost ring of the array must be
    False so the five-point stencil never reaches outside the mask.
    """

    mask: np.ndarray
    spacing: float

    def __post_init__(self):
        mask = np.asarray(self.mask)
        if mask.dtype != np.bool_:
            raise ValidationError("grid mask must be a boolean array")
        if mask.ndim != 2:
            raise ValidationError(f"grid mask must be 2-d, got ndim={mask.ndim}")
        if mask.shape[0] < 3 or mask.shape[1] < 3:
            raise ValidationError("grid mask must be at least 3x3 to hold a border ring")
        if not mask.any():
            raise ValidationError("grid mask must contain at least one interior cell")
        ring = np.concatenate([mask[0, :], mask[-1, :], mask[:, 0], mask[:, -1]])
        if ring.any():
            raise ValidationError("grid mask border ring must be all False")
        self.mask = mask
        self.spacing = _check_positive("spacing", self.spacing)

    @property
    def dim(self) -> int:
        return 2

    @property
    def cell_count(self) -> int:
        return int(self.mask.sum())


@dataclass
class ThinSpec:
    """Thin domain over a convex base: profile samples h plus thickness eps.

    The base is an interval [0, length], a convex polygon, or a disk.  For
    an interval base h holds samples at the midpoints of len(h) equal
    cells; for a 2-d base h is sampled on a square-cell grid covering the
    base's bounding box, with zeros outside the base.
    """

    base_kind: str
    base: Union[float, np.ndarray, tuple[float, float, float]]
    h: np.ndarray
    eps: float

    def __post_init__(self):
        if self.base_kind not in ("interval", "polygon", "disk"):
            raise ValidationError(f"unknown thin base kind {self.base_kind!r}")
        h = np.asarray(self.h, dtype=float)
        if self.base_kind == "interval":
            self.base = _check_positive("base length", self.base)
            if h.ndim != 1 or h.size < 2:
                raise ValidationError("interval-base profile needs a 1-d sample array")
        elif self.base_kind == "polygon":
            verts = np.asarray(self.base, dtype=float)
            if verts.ndim != 2 or verts.shape[1] != 2 or verts.shape[0] < 3:
                raise ValidationError("polygon base needs at least three 2-d vertices")
            self.base = verts
            if h.ndim != 2:
                raise ValidationError("polygon-base profile needs a 2-d sample array")
        else:
            cx, cy, r = (float(v) for v in self.base)
            _check_positive("disk radius", r)
            self.base = (cx, cy, r)
            if h.ndim != 2:
                raise ValidationError("disk-base profile needs a 2-d sample array")
        if not np.all(np.isfinite(h)) or np.any(h < 0.0):
            raise ValidationError("profile samples must be finite and nonnegative")
        if h.max() <= 0.0:
            raise ValidationError("profile must be positive somewhere")
        self.h = h
        self.eps = _check_positive("eps", self.eps)

    @property
    def dim(self) -> int:
        return 2 if self.base_kind == "interval" else 3

    def cell_area(self) -> float:
        """Area (length for interval bases) of one sample cell."""
        if self.base_kind == "interval":
            return float(self.base) / self.h.shape[0]
        if self.base_kind == "polygon":
            verts = self.base
            span = float(max(verts[:, 0].max() - verts[:, 0].min(),
                             verts[:, 1].max() - verts[:, 1].min()))
        else:
            span = 2.0 * self.base[2]
        cell = span / max(self.h.shape)
        return cell * cell

    def integral_h(self) -> float:
        return float(self.h.sum()) * self.cell_area()


DomainSpec = Union[BallSpec, RectSpec, IntervalUnionSpec, BallUnionSpec,
                   CylinderSpec, GridSpec, ThinSpec]


def dimension(spec: DomainSpec) -> int:
    return spec.dim


def measure(spec: DomainSpec) -> float:
    """Lebesgue measure of the domain described by spec."""
    if isinstance(spec, BallSpec):
        return unit_ball_volume(spec.dim) * spec.radius ** spec.dim
    if isinstance(spec, RectSpec):
        return float(np.prod(spec.sides))
    if isinstance(spec, IntervalUnionSpec):
        return float(sum(spec.lengths))
    if isinstance(spec, BallUnionSpec):
        w = unit_ball_volume(spec.dim)
        return w * float(sum(r ** spec.dim for r in spec.radii))
    if isinstance(spec, CylinderSpec):
        return spec.cross_measure * spec.height
    if isinstance(spec, GridSpec):
        return spec.cell_count * spec.spacing ** 2
    if isinstance(spec, ThinSpec):
        return spec.eps * spec.integral_h()
    raise ValidationError(f"unknown domain spec {type(spec).__name__}")


def scale(spec: DomainSpec, t: float) -> DomainSpec:
    """Homothety x -> t x of the domain (raster and thin kinds excluded)."""
    t = _check_positive("scale factor", t)
    if isinstance(spec, BallSpec):
        return BallSpec(spec.dim, t * spec.radius)
    if isinstance(spec, RectSpec):
        return RectSpec(tuple(t * s for s in spec.sides))
    if isinstance(spec, IntervalUnionSpec):
        return IntervalUnionSpec(tuple(t * v for v in spec.lengths))
    if isinstance(spec, BallUnionSpec):
        return BallUnionSpec(spec.dim, tuple(t * v for v in spec.radii))
    if isinstance(spec, CylinderSpec):
        return CylinderSpec(
            dim=spec.dim,
            cross_measure=spec.cross_measure * t ** (spec.dim - 1),
            height=spec.height * t,
            cross_perimeter=None if spec.cross_perimeter is None
            else spec.cross_perimeter * t ** (spec.dim - 2),
            smooth_radius=None if spec.smooth_radius is None else spec.smooth_radius * t,
            cross_lambda=None if spec.cross_lambda is None else spec.cross_lambda / t ** 2,
        )
    if isinstance(spec, GridSpec):
        return GridSpec(spec.mask.copy(), spec.spacing * t)
    raise ValidationError(f"scaling is not defined for {type(spec).__name__}")


# ---------------------------------------------------------------------------
# run-length encoding for raster masks

def rle_encode_rows(mask: np.ndarray) -> list[list[int]]:
    """Encode each row as run lengths of alternating values, starting False."""
    rows = []
    for row in np.asarray(mask, dtype=bool):
        runs = []
        current = False
        count = 0
        for v in row:
            if v == current:
                count += 1
            else:
                runs.append(count)
                current = not current
                count = 1
        runs.append(count)
        rows.append(runs)
    return rows


def rle_decode_rows(rows: Sequence[Sequence[int]], width: int) -> np.ndarray:
    """Inverse of rle_encode_rows for rows of the given width."""
    out = np.zeros((len(rows), width), dtype=bool)
    for i, runs in enumerate(rows):
        pos = 0
        value = False
        for count in runs:
            count = int(count)
            if count < 0 or pos + count > width:
                raise ValidationError(f"run-length row {i} does not fit width {width}")
            out[i, pos:pos + count] = value
            pos += count
            value = not value
        if pos != width:
            raise ValidationError(f"run-length row {i} covers {pos} of {width} cells")
    return out


# ---------------------------------------------------------------------------
# JSON encoding

def to_json_dict(spec: DomainSpec) -> dict:
    """Tagged JSON-compatible dict for spec."""
    if isinstance(spec, BallSpec):
        return {"kind": "ball", "dim": spec.dim, "radius": spec.radius}
    if isinstance(spec, RectSpec):
        return {"kind": "rect", "sides": list(spec.sides)}
    if isinstance(spec, IntervalUnionSpec):
        return {"kind": "intervals", "lengths": list(spec.lengths)}
    if isinstance(spec, BallUnionSpec):
        return {"kind": "balls", "dim": spec.dim, "radii": list(spec.radii)}
    if isinstance(spec, CylinderSpec):
        out = {"kind": "cylinder", "dim": spec.dim,
               "cross_measure": spec.cross_measure, "height": spec.height}
        for name in ("cross_perimeter", "smooth_radius", "cross_lambda"):
            v = getattr(spec, name)
            if v is not None:
                out[name] = v
        return out
    if isinstance(spec, GridSpec):
        return {"kind": "grid", "spacing": spec.spacing,
                "shape": list(spec.mask.shape),
                "rows": rle_encode_rows(spec.mask)}
    if isinstance(spec, ThinSpec):
        out = {"kind": "thin", "eps": spec.eps, "h": spec.h.tolist()}
        if spec.base_kind == "interval":
            out["base"] = {"kind": "interval", "length": spec.base}
        elif spec.base_kind == "polygon":
            out["base"] = {"kind": "polygon", "vertices": spec.base.tolist()}
        else:
            cx, cy, r = spec.base
            out["base"] = {"kind": "disk", "center": [cx, cy], "radius": r}
        return out
    raise ValidationError(f"unknown domain spec {type(spec).__name__}")


def from_json_dict(data: dict) -> DomainSpec:
    """Parse the tagged dict produced by to_json_dict."""
    if not isinstance(data, dict) or "kind" not in data:
        raise ValidationError("domain JSON must be an object with a 'kind' field")
    kind = data["kind"]
    try:
        if kind == "ball":
            return BallSpec(int(data["dim"]), float(data["radius"]))
        if kind == "rect":
            return RectSpec(tuple(data["sides"]))
        if kind == "intervals":
            return IntervalUnionSpec(tuple(data["lengths"]))
        if kind == "balls":
            return BallUnionSpec(int(data["dim"]), tuple(data["radii"]))
        if kind == "cylinder":
            return CylinderSpec(
                dim=int(data["dim"]),
                cross_measure=float(data["cross_measure"]),
                height=float(data["height"]),
                cross_perimeter=_opt_float(data.get("cross_perimeter")),
                smooth_radius=_opt_float(data.get("smooth_radius")),
                cross_lambda=_opt_float(data.get("cross_lambda")),
            )
        if kind == "grid":
            shape = data["shape"]
            mask = rle_decode_rows(data["rows"], int(shape[1]))
            if mask.shape[0] != int(shape[0]):
                raise ValidationError("grid row count does not match declared shape")
            return GridSpec(mask, float(data["spacing"]))
        if kind == "thin":
            base = data["base"]
            bk = base["kind"]
            if bk == "interval":
                return ThinSpec("interval", float(base["length"]),
                                np.asarray(data["h"], dtype=float), float(data["eps"]))
            if bk == "polygon":
                return ThinSpec("polygon", np.asarray(base["vertices"], dtype=float),
                                np.asarray(data["h"], dtype=float), float(data["eps"]))
            if bk == "disk":
                cx, cy = base["center"]
                return ThinSpec("disk", (float(cx), float(cy), float(base["radius"])),
                                np.asarray(data["h"], dtype=float), float(data["eps"]))
            raise ValidationError(f"unknown thin base kind {bk!r}")
    except (KeyError, TypeError, IndexError) as exc:
        raise ValidationError(f"malformed domain JSON for kind {kind!r}: {exc}") from exc
    raise ValidationError(f"unknown domain kind {kind!r}")


def _opt_float(v):
    return None if v is None else float(v)


def to_json(spec: DomainSpec) -> str:
    return json.dumps(to_json_dict(spec), sort_keys=True)


def from_json(text: str) -> DomainSpec:
    try:
        data = json.loads(text)
    except json.JSONDecodeError as exc:
        raise ValidationError(f"domain JSON does not parse: {exc}") from exc
    return from_json_dict(data)
