"""Finite-difference torsion and eigenvalue solver on raster masks.

The discrete operator is the five-point Laplacian on the true cells of a
GridSpec mask.  The homogeneous Dirichlet condition is imposed on the cell
faces between true and false cells by ghost reflection (the ghost value is
the negative of the interior value), which keeps the eigenvalue and torsion
of axis-aligned rectangles second-order accurate while staircase boundaries
of curved domains contribute an O(spacing) offset.  The operator is
symmetric positive definite; the only linear kernel is unpreconditioned
conjugate gradients, and the smallest eigenvalue comes from inverse power
iteration reusing that kernel, seeded with the torsion function.
"""

from __future__ import annotations

import logging
import math
from dataclasses import dataclass

import numpy as np

from .closed_form import Provenance, SpectralResult
from .domains import GridSpec
from .errors import IterationLimitError, ValidationError

log = logging.getLogger("shapelab.fd")

_OUTER_CAP = 500  # inverse-iteration steps; each one is a full linear solve


@dataclass(frozen=True)
class SolveOptions:
    """Tolerances for the linear and eigenvalue iterations.

    cg_tol bounds the linear residual relative to the right-hand side.
    eig_tol bounds the Rayleigh residual |A u - lambda u| / (lambda |u|);
    by the quadratic error bound for Rayleigh quotients the eigenvalue
    itself is then far more accurate than eig_tol.  max_iter caps each
    conjugate-gradient call.
    """

    cg_tol: float = 1e-10
    eig_tol: float = 1e-9
    max_iter: int = 50000

    def __post_init__(self):
        for name in ("cg_tol", "eig_tol"):
            v = float(getattr(self, name))
            if not 0.0 < v < 1.0:
                raise ValidationError(f"{name} must lie in (0, 1), got {v!r}")
            object.__setattr__(self, name, v)
        if int(self.max_iter) < 1:
            raise ValidationError(f"max_iter must be >= 1, got {self.max_iter!r}")
        object.__setattr__(self, "max_iter", int(self.max_iter))


@dataclass
class GridField:
    """Scalar field on a raster grid: full array, zero outside the mask."""

    values: np.ndarray
    spacing: float
    mask: np.ndarray

    def integral(self) -> float:
        return float(self.values.sum()) * self.spacing ** 2


class _Stencil:
    """Preassembled five-point operator for one mask."""

    def __init__(self, grid: GridSpec):
        mask = grid.mask
        m = mask.astype(np.float64)
        false_nb = np.zeros_like(m)
        false_nb[1:-1, 1:-1] = (4.0
                                - m[:-2, 1:-1] - m[2:, 1:-1]
                                - m[1:-1, :-2] - m[1:-1, 2:])
        # ghost reflection adds one to the diagonal per false neighbor
        self.diag = (4.0 + false_nb) * m
        self.mask = mask
        self.maskf = m
        self.inv_s2 = 1.0 / grid.spacing ** 2
        self.spacing = grid.spacing
        self._nb = np.zeros_like(m)

    def apply(self, v: np.ndarray, out: np.ndarray | None = None) -> np.ndarray:
        nb = self._nb
        nb[1:-1, 1:-1] = v[:-2, 1:-1]
        nb[1:-1, 1:-1] += v[2:, 1:-1]
        nb[1:-1, 1:-1] += v[1:-1, :-2]
        nb[1:-1, 1:-1] += v[1:-1, 2:]
        if out is None:
            out = np.empty_like(v)
        np.multiply(self.diag, v, out=out)
        out -= nb
        out *= self.inv_s2
        out *= self.maskf
        return out

    def quadratic_form(self, v: np.ndarray) -> float:
        """v' A v, the discrete gradient energy of v over the mask."""
        return float(np.vdot(v, self.apply(v)))


def _cg(stencil: _Stencil, b: np.ndarray, x0: np.ndarray, rel_tol: float,
        max_iter: int) -> tuple[np.ndarray, float, int]:
    """Unpreconditioned CG; returns (solution, relative residual, iterations)."""
    b_norm = math.sqrt(float(np.vdot(b, b)))
    if b_norm == 0.0:
        return np.zeros_like(b), 0.0, 0
    target = rel_tol * b_norm
    x = x0.copy()
    ap = np.empty_like(b)
    total = 0
    for _restart in range(4):
        r = b - stencil.apply(x)
        rs = float(np.vdot(r, r))
        if math.sqrt(rs) <= target:
            return x, math.sqrt(rs) / b_norm, total
        p = r.copy()
        while total < max_iter:
            stencil.apply(p, out=ap)
            alpha = rs / float(np.vdot(p, ap))
            x += alpha * p
            r -= alpha * ap
            rs_new = float(np.vdot(r, r))
            total += 1
            if math.sqrt(rs_new) <= target:
                break
            p *= rs_new / rs
            p += r
            rs = rs_new
        # recurrence residual met the target (or budget ran out); confirm
        # against the true residual and restart if rounding drifted
        true_r = b - stencil.apply(x)
        true_norm = math.sqrt(float(np.vdot(true_r, true_r)))
        if true_norm <= 1.25 * target or total >= max_iter:
            if true_norm > 1.25 * target:
                raise IterationLimitError(
                    f"conjugate gradients stopped at relative residual "
                    f"{true_norm / b_norm:.3e} after {total} iterations",
                    residual=true_norm / b_norm)
            return x, true_norm / b_norm, total
    return x, true_norm / b_norm, total


def solve_torsion(grid: GridSpec, opts: SolveOptions | None = None) -> tuple[GridField, float]:
    """Solve -Lap w = 1 on the mask; returns (field, integral of w)."""
    opts = opts or SolveOptions()
    st = _Stencil(grid)
    b = st.maskf.copy()
    x0 = np.zeros_like(b)
    w, relres, iters = _cg(st, b, x0, opts.cg_tol, opts.max_iter)
    log.debug("torsion solve: %d cells, %d iterations, residual %.2e",
              grid.cell_count, iters, relres)
    field = GridField(values=w, spacing=grid.spacing, mask=grid.mask)
    return field, field.integral()


def _inverse_power(st: _Stencil, seed: np.ndarray, opts: SolveOptions) -> tuple[np.ndarray, float, float]:
    """Smallest eigenpair of the stencil by inverse power iteration."""
    u = seed / math.sqrt(float(np.vdot(seed, seed)))
    au = np.empty_like(u)
    lam = 0.0
    rel_res = math.inf
    for outer in range(_OUTER_CAP):
        st.apply(u, out=au)
        lam = float(np.vdot(u, au))
        res = au - lam * u
        rel_res = math.sqrt(float(np.vdot(res, res))) / lam
        if rel_res <= opts.eig_tol:
            log.debug("inverse iteration converged: %d steps, lambda %.10g, residual %.2e",
                      outer, lam, rel_res)
            return u, lam, rel_res
        inner_tol = max(1e-13, min(opts.cg_tol, 0.02 * rel_res, 0.1))
        y, _, _ = _cg(st, u, u / lam, inner_tol, opts.max_iter)
        u = y / math.sqrt(float(np.vdot(y, y)))
    raise IterationLimitError(
        f"inverse power iteration still at residual {rel_res:.3e} "
        f"after {_OUTER_CAP} steps", residual=rel_res)


def solve_lambda(grid: GridSpec, opts: SolveOptions | None = None) -> tuple[GridField, float]:
    """Smallest Dirichlet eigenvalue on the mask; eigenfunction has unit
    discrete L2 norm."""
    opts = opts or SolveOptions()
    st = _Stencil(grid)
    seed, _ = solve_torsion(grid, opts)
    u, lam, _ = _inverse_power(st, seed.values, opts)
    u = u / (grid.spacing * math.sqrt(float(np.vdot(u, u))))
    return GridField(values=u, spacing=grid.spacing, mask=grid.mask), lam


def coarsen_mask(grid: GridSpec) -> GridSpec | None:
    """Halved-resolution raster: a coarse cell is true when all four fine
    cells under it are true.  None when nothing survives."""
    mask = grid.mask
    h = (mask.shape[0] // 2) * 2
    w = (mask.shape[1] // 2) * 2
    blocks = mask[:h, :w].reshape(h // 2, 2, w // 2, 2)
    coarse = blocks.all(axis=(1, 3))
    padded = np.zeros((coarse.shape[0] + 2, coarse.shape[1] + 2), dtype=bool)
    padded[1:-1, 1:-1] = coarse
    if not padded.any():
        return None
    return GridSpec(padded, grid.spacing * 2.0)


def spectrum_of_grid(grid: GridSpec, opts: SolveOptions | None = None,
                     richardson: bool = False) -> SpectralResult:
    """Eigenvalue, torsion and measure of the raster domain.

    With richardson=True the same problem is solved at doubled spacing and
    err_estimate is the larger relative change, a conservative estimate for
    first-order staircase error.  Otherwise err_estimate is the a-priori
    guess spacing / sqrt(measure).
    """
    opts = opts or SolveOptions()
    if log.isEnabledFor(logging.DEBUG):
        log.debug("grid has %d connected component(s)", component_count(grid))
    st = _Stencil(grid)
    w, torsion = solve_torsion(grid, opts)
    _, lam, _ = _inverse_power(st, w.values, opts)
    area = grid.cell_count * grid.spacing ** 2
    err = grid.spacing / math.sqrt(area)
    if richardson:
        coarse = coarsen_mask(grid)
        if coarse is not None:
            seed_c, torsion_c = solve_torsion(coarse, opts)
            _, lam_c, _ = _inverse_power(_Stencil(coarse), seed_c.values, opts)
            err = max(abs(lam - lam_c) / lam, abs(torsion - torsion_c) / torsion)
    return SpectralResult(lambda_=lam, torsion=torsion, measure=area,
                          provenance=Provenance.GRID, err_estimate=err)


def label_components(mask: np.ndarray) -> tuple[np.ndarray, int]:
    """4-connected component labels (0 outside, 1..count inside)."""
    labels = np.zeros(mask.shape, dtype=np.int32)
    remaining = mask.copy()
    count = 0
    grow = np.zeros_like(mask)
    while remaining.any():
        count += 1
        seed = np.unravel_index(int(np.argmax(remaining)), mask.shape)
        comp = np.zeros_like(mask)
        comp[seed] = True
        frontier = comp.copy()
        while True:
            grow[:] = False
            grow[1:-1, 1:-1] = (frontier[:-2, 1:-1] | frontier[2:, 1:-1]
                                | frontier[1:-1, :-2] | frontier[1:-1, 2:])
            grow &= remaining
            grow &= ~comp
            if not grow.any():
                break
            comp |= grow
            frontier, grow = grow, frontier
        labels[comp] = count
        remaining &= ~comp
    return labels, count


def component_count(grid: GridSpec) -> int:
    return label_components(grid.mask)[1]


def energy_identity_defect(grid: GridSpec, field: GridField) -> float:
    """Relative defect of torsion = -2 * energy for a computed field."""
    st = _Stencil(grid)
    s2 = grid.spacing ** 2
    t = field.integral()
    energy = 0.5 * s2 * st.quadratic_form(field.values) - s2 * float(field.values.sum())
    return abs(t + 2.0 * energy) / abs(t)


def dual_quotient(grid: GridSpec, v: np.ndarray) -> float:
    """(integral v)^2 over gradient energy, a lower bound for torsion."""
    st = _Stencil(grid)
    v = np.where(grid.mask, v, 0.0)
    s2 = grid.spacing ** 2
    denom = st.quadratic_form(v) * s2
    if denom <= 0.0:
        raise ValidationError("test function must have positive gradient energy")
    return (float(v.sum()) * s2) ** 2 / denom


def rayleigh_quotient(grid: GridSpec, v: np.ndarray) -> float:
    """Discrete Rayleigh quotient of a test function on the mask."""
    st = _Stencil(grid)
    v = np.where(grid.mask, v, 0.0)
    vv = float(np.vdot(v, v))
    if vv <= 0.0:
        raise ValidationError("test function must be nonzero on the mask")
    return st.quadratic_form(v) / vv


def export_field_csv(field: GridField, path) -> None:
    """Write (i, j, value) rows for mask cells."""
    idx = np.argwhere(field.mask)
    with open(path, "w", encoding="utf-8") as fh:
        fh.write("# schema=1\n")
        fh.write("i,j,value\n")
        for i, j in idx:
            fh.write(f"{i},{j},{float(field.values[i, j])!r}\n")


def read_pbm(path, spacing: float) -> GridSpec:
    """Read a P1 portable bitmap as a mask (1 = interior cell)."""
    with open(path, "r", encoding="utf-8") as fh:
        tokens = []
        for line in fh:
            line = line.split("#", 1)[0]
            tokens.extend(line.split())
    if not tokens or tokens[0] != "P1":
        raise ValidationError("not a P1 portable bitmap")
    try:
        width, height = int(tokens[1]), int(tokens[2])
        bits = [int(t) for t in tokens[3:3 + width * height]]
    except (IndexError, ValueError) as exc:
        raise ValidationError(f"malformed P1 bitmap: {exc}") from exc
    if len(bits) != width * height or any(b not in (0, 1) for b in bits):
        raise ValidationError("P1 bitmap payload does not match its header")
    mask = np.array(bits, dtype=bool).reshape(height, width)
    ring = np.concatenate([mask[0, :], mask[-1, :], mask[:, 0], mask[:, -1]])
    if ring.any():
        padded = np.zeros((height + 2, width + 2), dtype=bool)
        padded[1:-1, 1:-1] = mask
        mask = padded
    return GridSpec(mask, spacing)


def write_pbm(grid: GridSpec, path) -> None:
    """Write the mask as a P1 portable bitmap (1 = interior cell)."""
    mask = grid.mask
    with open(path, "w", encoding="utf-8") as fh:
        fh.write("P1\n")
        fh.write(f"{mask.shape[1]} {mask.shape[0]}\n")
        for row in mask:
            fh.write(" ".join("1" if v else "0" for v in row))
            fh.write("\n")
