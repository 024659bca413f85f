"""Spectral shape functionals on analytic and rasterized domains.

The library computes the first Dirichlet eigenvalue, torsional rigidity,
and the scale-invariant functional F_q built from them, exactly where a
closed form exists and by finite differences on planar rasters.  On top
of that sit the diagram of normalized (eigenvalue, torsion) pairs, thin
convex-domain asymptotics, and batteries of inequality checks.
"""

from .closed_form import (Provenance, SpectralResult, ball_lambda,
                          ball_spectrum, ball_torsion_function, bessel_j,
                          cylinder_lambda, first_bessel_zero, rect_lambda,
                          rect_spectrum, rect_torsion_series, union_spectrum)
from .cylinder_bounds import (TorsionBracket, lower_bound_t2, torsion_bracket,
                              two_sided_t3, upper_bound_t1)
from .diagram import (DiagramPoint, Region1D, ball_union_cloud, feasible_AB,
                      max_power_sum, membership_1d, realize_AB, region_1d,
                      region_bounds_d, sample_bounds_d)
from .domains import (BallSpec, BallUnionSpec, CylinderSpec, GridSpec,
                      IntervalUnionSpec, RectSpec, ThinSpec, from_json,
                      from_json_dict, to_json, to_json_dict,
                      unit_ball_volume)
from .errors import (FeasibilityError, GeometryError, IterationLimitError,
                     MissingDataError, ShapelabError, ValidationError)
from .fd_solver import (GridField, SolveOptions, component_count,
                        energy_identity_defect, rayleigh_quotient,
                        solve_lambda, solve_torsion, spectrum_of_grid)
from .functional import (FunctionalValue, RegimeBounds, f_q, f_q_ball,
                         f_q_raw, g_q, inradius_ratio_bounds,
                         normalized_coords, regime_table)
from .relaxed_q1 import (RelaxedParams, lambda_c, product_bound,
                         product_table, sup_demonstration, t_c_lower)
from .suites import CaseResult, run_suite, suite_names
from .thin_convex import (ConcaveProfile, ConvexBase, ThinAsymptotics,
                          cone_function, radial_rearrangement,
                          random_concave_profile, ratio_h3_h1,
                          sharp_lower_ratio, thin_asymptotics)

__version__ = "0.1.0"

__all__ = [
    "__version__",
    # errors
    "ShapelabError", "ValidationError", "GeometryError", "FeasibilityError",
    "MissingDataError", "IterationLimitError",
    # domains
    "BallSpec", "RectSpec", "IntervalUnionSpec", "BallUnionSpec",
    "CylinderSpec", "GridSpec", "ThinSpec", "unit_ball_volume",
    "to_json", "to_json_dict", "from_json", "from_json_dict",
    # closed forms
    "Provenance", "SpectralResult", "bessel_j", "first_bessel_zero",
    "ball_lambda", "ball_spectrum", "ball_torsion_function", "rect_lambda",
    "rect_torsion_series", "rect_spectrum", "union_spectrum",
    "cylinder_lambda",
    # cylinder brackets
    "TorsionBracket", "upper_bound_t1", "lower_bound_t2", "two_sided_t3",
    "torsion_bracket",
    # grid solver
    "GridField", "SolveOptions", "solve_torsion", "solve_lambda",
    "spectrum_of_grid", "component_count", "energy_identity_defect",
    "rayleigh_quotient",
    # functionals
    "FunctionalValue", "f_q_raw", "f_q", "f_q_ball", "g_q",
    "normalized_coords", "RegimeBounds", "regime_table",
    "inradius_ratio_bounds",
    # diagram
    "DiagramPoint", "Region1D", "region_1d", "region_bounds_d",
    "max_power_sum", "feasible_AB", "realize_AB", "membership_1d",
    "ball_union_cloud", "sample_bounds_d",
    # thin convex domains
    "ConvexBase", "ConcaveProfile", "ThinAsymptotics", "cone_function",
    "thin_asymptotics", "ratio_h3_h1", "sharp_lower_ratio",
    "radial_rearrangement", "random_concave_profile",
    # relaxed family
    "RelaxedParams", "lambda_c", "t_c_lower", "product_bound",
    "sup_demonstration", "product_table",
    # suites
    "CaseResult", "run_suite", "suite_names",
]
