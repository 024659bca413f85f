"""Mask constructors for the raster solver, plus a fixed verification corpus.

Masks mark cells whose centers lie inside the target shape.  Every builder
returns a GridSpec with a false border ring.  grid_n is cells per unit
length, so spacing = 1 / grid_n.
"""

from __future__ import annotations

import numpy as np

from .domains import GridSpec
from .errors import ValidationError


def _to_grid(mask: np.ndarray, spacing: float) -> GridSpec:
    padded = np.zeros((mask.shape[0] + 2, mask.shape[1] + 2), dtype=bool)
    padded[1:-1, 1:-1] = mask
    return GridSpec(padded, spacing)


def rect_mask(width: float, height: float, grid_n: int) -> GridSpec:
    """Axis-aligned rectangle; sides are rounded to whole cells."""
    s = 1.0 / grid_n
    nx = max(1, round(width / s))
    ny = max(1, round(height / s))
    return _to_grid(np.ones((ny, nx), dtype=bool), s)


def _center_grid(extent: float, grid_n: int):
    s = 1.0 / grid_n
    n = int(np.ceil(extent / s)) + 1
    coords = (np.arange(n) + 0.5) * s - 0.5 * n * s
    return s, coords


def disk_mask(radius: float, grid_n: int) -> GridSpec:
    """Disk of the given radius centered on the grid."""
    if radius <= 0:
        raise ValidationError("disk radius must be positive")
    s, c = _center_grid(2.0 * radius, grid_n)
    xx, yy = np.meshgrid(c, c)
    return _to_grid(xx ** 2 + yy ** 2 < radius ** 2, s)


def lshape_mask(size: float, grid_n: int, notch: float = 0.5) -> GridSpec:
    """Square of the given size with the upper-right notch removed."""
    s = 1.0 / grid_n
    n = max(2, round(size / s))
    k = max(1, round(size * notch / s))
    mask = np.ones((n, n), dtype=bool)
    mask[n - k:, n - k:] = False
    return _to_grid(mask, s)


def blob_mask(seed: int, grid_n: int, base_radius: float = 0.75) -> GridSpec:
    """Star-shaped region with a smooth random boundary r(theta)."""
    rng = np.random.default_rng(seed)
    modes = np.arange(2, 6)
    amp = rng.uniform(-0.12, 0.12, size=modes.size) / np.sqrt(modes)
    phase = rng.uniform(0.0, 2.0 * np.pi, size=modes.size)
    r_max = base_radius * (1.0 + np.abs(amp).sum())
    s, c = _center_grid(2.0 * r_max, grid_n)
    xx, yy = np.meshgrid(c, c)
    theta = np.arctan2(yy, xx)
    rr = np.sqrt(xx ** 2 + yy ** 2)
    boundary = base_radius * (1.0 + sum(
        a * np.cos(k * theta + p) for a, k, p in zip(amp, modes, phase)))
    return _to_grid(rr < boundary, s)


def pair_mask(first: GridSpec, second: GridSpec, gap_cells: int = 3) -> GridSpec:
    """Disjoint side-by-side union of two masks (shared spacing)."""
    if abs(first.spacing - second.spacing) > 1e-15:
        raise ValidationError("paired masks need equal spacing")
    a, b = first.mask, second.mask
    rows = max(a.shape[0], b.shape[0])
    cols = a.shape[1] + gap_cells + b.shape[1]
    mask = np.zeros((rows, cols), dtype=bool)
    mask[:a.shape[0], :a.shape[1]] = a
    mask[:b.shape[0], a.shape[1] + gap_cells:] = b
    return GridSpec(mask, first.spacing)


def corpus(grid_n: int) -> list[tuple[str, GridSpec]]:
    """Fixed family of 25 raster domains used by the verification suites."""
    domains: list[tuple[str, GridSpec]] = []
    for side in (1.0, 0.8, 0.65):
        domains.append((f"square-{side}", rect_mask(side, side, grid_n)))
    for w, h in ((1.6, 0.625), (1.25, 0.8), (2.0, 0.5)):
        domains.append((f"rect-{w}x{h}", rect_mask(w, h, grid_n)))
    for r in (0.564, 0.4, 0.7, 0.5):
        domains.append((f"disk-{r}", disk_mask(r, grid_n)))
    for size, notch in ((1.0, 0.5), (0.9, 0.4), (1.2, 0.6)):
        domains.append((f"lshape-{size}", lshape_mask(size, grid_n, notch)))
    for seed in range(1, 9):
        domains.append((f"blob-{seed}", blob_mask(seed, grid_n)))
    domains.append(("pair-squares", pair_mask(rect_mask(1.0, 1.0, grid_n),
                                              rect_mask(0.6, 0.6, grid_n))))
    domains.append(("pair-equal", pair_mask(rect_mask(0.7, 0.7, grid_n),
                                            rect_mask(0.7, 0.7, grid_n))))
    domains.append(("pair-square-disk", pair_mask(rect_mask(0.8, 0.8, grid_n),
                                                  disk_mask(0.45, grid_n))))
    domains.append(("pair-disks", pair_mask(disk_mask(0.5, grid_n),
                                            disk_mask(0.35, grid_n))))
    if len(domains) != 25:
        raise AssertionError("verification corpus must hold 25 domains")
    return domains
