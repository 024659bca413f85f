"""Command-line front end.

Subcommands: eval, diagram, verify, thin, relaxed, sweep.  All output is
deterministic for a fixed seed and config: no timestamps, sorted JSON
keys, worker results re-ordered by input index.  Exit codes: 0 success,
2 usage or config error, 3 numerical failure (solver or failing suite).
"""

from __future__ import annotations

import argparse
import json
import logging
import math
import os
import sys
from concurrent.futures import ProcessPoolExecutor

import numpy as np

from . import rasters
from .closed_form import ball_spectrum, rect_spectrum, union_spectrum
from .diagram import (Region1D, ball_union_cloud, sample_bounds_d,
                      svg_region_1d, svg_region_d, write_diagram_csv)
from .domains import (BallSpec, BallUnionSpec, GridSpec, IntervalUnionSpec,
                      RectSpec, from_json_dict)
from .errors import IterationLimitError, ShapelabError, ValidationError
from .fd_solver import spectrum_of_grid
from .functional import f_q, normalized_coords
from .relaxed_q1 import product_bound, product_table, sup_demonstration
from .suites import run_suite, suite_names
from .thin_convex import (ConvexBase, cone_function, random_concave_profile,
                          ratio_h3_h1, read_profile_csv, sharp_lower_ratio,
                          thin_asymptotics)

log = logging.getLogger("shapelab")

_LOG_LEVELS = {"error": logging.ERROR, "info": logging.INFO, "debug": logging.DEBUG}


def _num(v) -> str:
    return repr(float(v))


def _write_text(path: str | None, text: str) -> None:
    if path is None:
        sys.stdout.write(text)
        if not text.endswith("\n"):
            sys.stdout.write("\n")
    else:
        with open(path, "w", encoding="utf-8", newline="\n") as fh:
            fh.write(text)
        log.info("wrote %s", path)


def _parse_domain(text: str, grid_n: int, dim: int):
    """Accept a JSON object, a JSON file path, or a compact shorthand."""
    text = text.strip()
    if text.startswith("{"):
        return from_json_dict(json.loads(text))
    if os.path.exists(text):
        with open(text, "r", encoding="utf-8") as fh:
            return from_json_dict(json.load(fh))
    kind, _, arg = text.partition(":")
    if kind == "ball":
        return BallSpec(dim, float(arg) if arg else 1.0)
    if kind == "rect":
        sides = tuple(float(s) for s in arg.split("x"))
        return RectSpec(sides)
    if kind == "intervals":
        return IntervalUnionSpec(tuple(float(s) for s in arg.split(",")))
    if kind == "balls":
        return BallUnionSpec(dim, tuple(float(s) for s in arg.split(",")))
    if kind == "square":
        return rasters.rect_mask(1.0, 1.0, grid_n)
    if kind == "disk":
        return rasters.disk_mask(float(arg) if arg else 1.0, grid_n)
    if kind == "lshape":
        return rasters.lshape_mask(1.0, grid_n)
    if kind == "blob":
        return rasters.blob_mask(int(arg) if arg else 1, grid_n)
    raise ValidationError(f"cannot parse domain {text!r}")


def _spectrum_for(spec, grid_n: int):
    if isinstance(spec, BallSpec):
        return ball_spectrum(spec), spec.dim
    if isinstance(spec, RectSpec):
        return rect_spectrum(spec), len(spec.sides)
    if isinstance(spec, (IntervalUnionSpec, BallUnionSpec)):
        return union_spectrum(spec), spec.dim
    if isinstance(spec, GridSpec):
        return spectrum_of_grid(spec, richardson=True), 2
    raise ValidationError(
        f"eval does not support {type(spec).__name__}; "
        "use the thin subcommand for thin domains and verify cylinder-bounds "
        "for cylinder brackets")


def _eval_record(spec, q: float, grid_n: int) -> dict:
    result, dim = _spectrum_for(spec, grid_n)
    value = f_q(result, q, dim)
    point = normalized_coords(result, dim)
    return {
        "dim": dim,
        "q": q,
        "lambda": result.lambda_,
        "torsion": result.torsion,
        "measure": result.measure,
        "provenance": result.provenance.value,
        "err_estimate": result.err_estimate,
        "f_q": value.value,
        "x": point.x,
        "y": point.y,
    }


_EVAL_COLUMNS = ("dim", "q", "lambda", "torsion", "measure", "provenance",
                 "err_estimate", "f_q", "x", "y")


def _record_csv(columns, records) -> str:
    lines = ["# schema=1", ",".join(columns)]
    for rec in records:
        cells = []
        for col in columns:
            v = rec[col]
            if v is None:
                cells.append("")
            elif isinstance(v, str):
                cells.append(v)
            elif isinstance(v, (int, np.integer)) and not isinstance(v, bool):
                cells.append(str(int(v)))
            else:
                cells.append(_num(v))
        lines.append(",".join(cells))
    return "\n".join(lines) + "\n"


def _record_json(payload) -> str:
    return json.dumps(payload, sort_keys=True, indent=2) + "\n"


def cmd_eval(args) -> int:
    if args.domain is None or args.q is None:
        log.error("eval needs --domain and --q")
        return 2
    spec = _parse_domain(args.domain, args.grid, args.dim)
    record = _eval_record(spec, args.q, args.grid)
    if args.format == "svg":
        log.error("eval emits csv or json, not svg")
        return 2
    if args.format == "csv":
        _write_text(args.out, _record_csv(_EVAL_COLUMNS, [record]))
    else:
        _write_text(args.out, _record_json(record))
    return 0


def cmd_diagram(args) -> int:
    if args.dim not in (1, 2, 3):
        log.error("diagram supports dim 1, 2, 3; got %d", args.dim)
        return 2
    base = args.out or f"diagram-d{args.dim}"
    root, ext = os.path.splitext(base)
    if ext in (".csv", ".svg"):
        base = root
    csv_path, svg_path = base + ".csv", base + ".svg"
    cloud = ball_union_cloud(args.dim, args.points, seed=args.seed) if args.points else []
    groups = [("unions", "#1f6fb2", cloud)] if cloud else []
    if args.dim == 1:
        region = Region1D.sample()
        write_diagram_csv(csv_path, 1, region.rows,
                          [(label, pts) for label, _c, pts in groups])
        svg_region_1d(svg_path, region, cloud=cloud)
    else:
        rows = sample_bounds_d(args.dim)
        overlays = list(groups)
        if args.overlay_grid_domains:
            if args.dim != 2:
                log.error("--overlay-grid-domains needs dim=2 (grid solver is planar)")
                return 2
            pts = []
            for name, spec in rasters.corpus(args.grid):
                if not (name.startswith("lshape") or name.startswith("blob")):
                    continue
                res = spectrum_of_grid(spec, richardson=True)
                pts.append(normalized_coords(res, 2, source=name))
            overlays.append(("grid domains", "#c23b22", pts))
        write_diagram_csv(csv_path, args.dim, rows,
                          [(label, pts) for label, _c, pts in overlays])
        svg_region_d(svg_path, args.dim, rows, overlays=overlays)
    sys.stdout.write(csv_path + "\n" + svg_path + "\n")
    return 0


def cmd_verify(args) -> int:
    if args.suite is None:
        log.error("verify needs --suite (one of: %s)", ", ".join(suite_names()))
        return 2
    if args.suite not in suite_names():
        log.error("unknown suite %r (one of: %s)", args.suite, ", ".join(suite_names()))
        return 2
    cases = run_suite(args.suite, grid_n=args.grid, seed=args.seed,
                      samples=args.samples)
    n_pass = 0
    for case in cases:
        tag = "PASS" if case.passed else "FAIL"
        n_pass += case.passed
        sys.stdout.write(f"{tag}  {case.suite}  {case.name}  {case.detail}\n")
    sys.stdout.write(f"{n_pass}/{len(cases)} cases passed\n")
    return 0 if n_pass == len(cases) else 3


def _parse_base(text: str) -> ConvexBase:
    kind, _, arg = text.partition(":")
    if kind == "interval":
        return ConvexBase.interval(float(arg) if arg else 1.0)
    if kind == "disk":
        cx, cy, r = (float(s) for s in arg.split(","))
        return ConvexBase.disk(cx, cy, r)
    if kind == "polygon":
        pts = [tuple(float(c) for c in pair.split(",")) for pair in arg.split(";")]
        return ConvexBase.polygon(pts)
    raise ValidationError(f"cannot parse base {text!r}")


def cmd_thin(args) -> int:
    if args.profile is not None:
        profile = read_profile_csv(args.profile)
    else:
        if args.base is None:
            log.error("thin needs --base or --profile")
            return 2
        base = _parse_base(args.base)
        if args.random:
            profile = random_concave_profile(base, args.seed, grid_n=args.grid)
        else:
            peak = None
            if args.peak:
                vals = tuple(float(s) for s in args.peak.split(","))
                peak = vals[0] if len(vals) == 1 else vals
            profile = cone_function(base, peak=peak, grid_n=args.grid)
    d = profile.base.dim_base + 1
    ratio = ratio_h3_h1(profile)
    rows = []
    for eps in (float(s) for s in args.eps.split(",")):
        asym = thin_asymptotics(profile, eps)
        rows.append({"eps": eps, "lambda_approx": asym.lambda_approx,
                     "torsion_approx": asym.torsion_approx,
                     "f1_approx": asym.f1_approx})
    payload = {"dim": d, "ratio_h3_h1": ratio,
               "sharp_low": sharp_lower_ratio(d), "sharp_high": 1.0,
               "rows": rows}
    if args.format == "svg":
        log.error("thin emits csv or json, not svg")
        return 2
    if args.format == "csv":
        cols = ("eps", "lambda_approx", "torsion_approx", "f1_approx")
        header = (f"# schema=1\n# dim={d} ratio={_num(ratio)} "
                  f"sharp=[{_num(payload['sharp_low'])},1.0]\n")
        body = _record_csv(cols, rows).split("\n", 1)[1]
        _write_text(args.out, header + body)
    else:
        _write_text(args.out, _record_json(payload))
    return 0


def cmd_relaxed(args) -> int:
    if args.dim < 2:
        log.error("relaxed family needs dim >= 2")
        return 2
    if args.target is not None:
        params = sup_demonstration(args.dim, args.target)
        payload = {"dim": params.d, "c": params.c, "delta": params.delta,
                   "product_bound": product_bound(params), "target": args.target}
        _write_text(args.out, _record_json(payload))
        return 0
    rows = [{"c": c, "delta": delta, "product_bound": v}
            for c, delta, v in product_table(args.dim)]
    if args.format == "json":
        _write_text(args.out, _record_json({"dim": args.dim, "rows": rows}))
    else:
        _write_text(args.out, _record_csv(("c", "delta", "product_bound"), rows))
    return 0


def _sweep_one(task) -> dict:
    dim, q, seed, idx = task
    rng = np.random.default_rng((seed, idx))
    count = 1 + int(rng.integers(0, 4))
    radii = [1.0] + list(rng.uniform(0.2, 1.0, size=count - 1))
    if dim == 1:
        spec = IntervalUnionSpec(tuple(2.0 * r for r in radii))
    else:
        spec = BallUnionSpec(dim, tuple(radii))
    result = union_spectrum(spec)
    point = normalized_coords(result, dim)
    value = f_q(result, q, dim)
    return {"index": idx, "dim": dim, "parts": count, "q": q,
            "lambda": result.lambda_, "torsion": result.torsion,
            "measure": result.measure, "f_q": value.value,
            "x": point.x, "y": point.y}


_SWEEP_COLUMNS = ("index", "dim", "parts", "q", "lambda", "torsion",
                  "measure", "f_q", "x", "y")


def cmd_sweep(args) -> int:
    tasks = [(args.dim, args.q if args.q is not None else 1.0, args.seed, i)
             for i in range(args.count)]
    if args.jobs > 1:
        with ProcessPoolExecutor(max_workers=args.jobs) as pool:
            records = list(pool.map(_sweep_one, tasks, chunksize=64))
    else:
        records = [_sweep_one(t) for t in tasks]
    records.sort(key=lambda r: r["index"])
    if args.format == "json":
        _write_text(args.out, _record_json({"rows": records}))
    elif args.format == "svg":
        log.error("sweep emits csv or json, not svg")
        return 2
    else:
        _write_text(args.out, _record_csv(_SWEEP_COLUMNS, records))
    worst = min((r["y"] - r["x"] ** ((args.dim + 2.0) / 2.0) for r in records),
                default=math.inf)
    log.info("sweep of %d configs, worst Kohler-Jobin margin %.3e",
             len(records), worst)
    return 0


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="shapelab",
        description="spectral shape functionals: eigenvalues, torsion, diagrams")
    sub = parser.add_subparsers(dest="command", required=True)

    def common(p, *, dim_default=2):
        p.add_argument("--dim", type=int, default=dim_default)
        p.add_argument("--grid", type=int, default=128,
                       help="grid resolution, 32..2048")
        p.add_argument("--seed", type=int, default=0)
        p.add_argument("--out", type=str, default=None)
        p.add_argument("--format", choices=("csv", "json", "svg"), default="json")

    p_eval = sub.add_parser("eval", help="evaluate lambda, T, F_q on one domain")
    common(p_eval)
    p_eval.add_argument("--domain", type=str, default=None,
                        help="JSON, file path, or shorthand like ball:1, "
                             "rect:2x1, intervals:1,0.5, balls:1,0.5, square, "
                             "disk, lshape, blob:3")
    p_eval.add_argument("--q", type=float, default=None)

    p_diag = sub.add_parser("diagram", help="emit diagram CSV and SVG")
    common(p_diag, dim_default=1)
    p_diag.add_argument("--points", type=int, default=2000,
                        help="random union cloud size (0 disables)")
    p_diag.add_argument("--overlay-grid-domains", action="store_true",
                        help="overlay solved L-shape and blob rasters (dim=2)")

    p_verify = sub.add_parser("verify", help="run a named inequality suite")
    common(p_verify)
    p_verify.add_argument("--suite", type=str, default=None,
                          choices=suite_names())
    p_verify.add_argument("--samples", type=int, default=None)

    p_thin = sub.add_parser("thin", help="thin-domain profiles and asymptotics")
    common(p_thin)
    p_thin.add_argument("--base", type=str, default=None,
                        help="interval:L, disk:cx,cy,r, or polygon:x,y;x,y;...")
    p_thin.add_argument("--peak", type=str, default=None,
                        help="cone peak coordinates")
    p_thin.add_argument("--random", action="store_true",
                        help="random concave profile instead of the cone")
    p_thin.add_argument("--profile", type=str, default=None,
                        help="read an existing profile CSV")
    p_thin.add_argument("--eps", type=str, default="0.2,0.1,0.05")

    p_rel = sub.add_parser("relaxed", help="relaxed near-extremal family table")
    common(p_rel)
    p_rel.add_argument("--target", type=float, default=None)

    p_sweep = sub.add_parser("sweep", help="random closed-form domain sweep")
    common(p_sweep)
    p_sweep.add_argument("--count", type=int, default=1000)
    p_sweep.add_argument("--q", type=float, default=1.0)
    p_sweep.add_argument("--jobs", type=int, default=1)

    return parser


_COMMANDS = {
    "eval": cmd_eval,
    "diagram": cmd_diagram,
    "verify": cmd_verify,
    "thin": cmd_thin,
    "relaxed": cmd_relaxed,
    "sweep": cmd_sweep,
}


def main(argv=None) -> int:
    level_name = os.environ.get("SHAPELAB_LOG", "error")
    if level_name not in _LOG_LEVELS:
        sys.stderr.write(f"SHAPELAB_LOG must be one of {sorted(_LOG_LEVELS)}, "
                         f"got {level_name!r}\n")
        return 2
    logging.basicConfig(level=_LOG_LEVELS[level_name],
                        format="%(levelname)s %(name)s: %(message)s")
    parser = build_parser()
    args = parser.parse_args(argv)
    if hasattr(args, "grid") and not 32 <= args.grid <= 2048:
        log.error("grid must be in [32, 2048], got %d", args.grid)
        return 2
    try:
        return _COMMANDS[args.command](args)
    except IterationLimitError as exc:
        log.error("solver failed to converge: %s", exc)
        return 3
    except ShapelabError as exc:
        log.error("%s", exc)
        return 2
    except (ValueError, OSError, json.JSONDecodeError) as exc:
        log.error("%s", exc)
        return 2


def entry() -> None:
    sys.exit(main())


if __name__ == "__main__":
    entry()
