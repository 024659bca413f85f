"""Product bound for the relaxed problem with uniform density on the ball.

Adding the measure c dx to the unit ball shifts the eigenvalue to
c + lambda(B) while the torsion only degrades like (delta^-2 + c)^-1
against plateau test functions.  The product lambda_c T_c / |B| therefore
approaches 1 along c -> infinity, delta -> 0, showing the q = 1
functional has supremum 1 even though no single domain attains it.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

from .closed_form import ball_lambda
from .domains import unit_ball_volume
from .errors import FeasibilityError, ValidationError


@dataclass(frozen=True)
class RelaxedParams:
    """Density strength c >= 0 and plateau margin delta in (0, 1)."""

    d: int
    c: float
    delta: float

    def __post_init__(self):
        if not (isinstance(self.d, int) and 2 <= self.d <= 8):
            raise ValidationError(f"d must be an integer in [2, 8], got {self.d!r}")
        c = float(self.c)
        if not math.isfinite(c) or c < 0.0:
            raise ValidationError(f"c must be finite and nonnegative, got {self.c!r}")
        delta = float(self.delta)
        if not 0.0 < delta < 1.0:
            raise ValidationError(f"delta must lie in (0, 1), got {self.delta!r}")
        object.__setattr__(self, "c", c)
        object.__setattr__(self, "delta", delta)


def lambda_c(params: RelaxedParams) -> float:
    """Relaxed eigenvalue on the unit ball: the density adds c."""
    return params.c + ball_lambda(params.d)


def t_c_lower(params: RelaxedParams) -> float:
    """Torsion lower bound from the plateau test function.

    The function equal to one on the (1 - delta)-ball with a linear skirt
    gives energy delta^-2 + c against mass omega_d (1 - delta)^(2d) after
    Cauchy-Schwarz, hence this bound.
    """
    d = params.d
    return (unit_ball_volume(d) * (1.0 - params.delta) ** (2 * d)
            / (params.delta ** -2 + params.c))


def product_bound(params: RelaxedParams) -> float:
    """Lower bound for lambda_c T_c / |B_1|: (c + j^2)(1-delta)^(2d)/(delta^-2 + c)."""
    d = params.d
    return ((params.c + ball_lambda(d)) * (1.0 - params.delta) ** (2 * d)
            / (params.delta ** -2 + params.c))


def sup_demonstration(d: int, target: float) -> RelaxedParams:
    """Parameters whose product bound exceeds target < 1.

    Starts from delta = (1 - target^(1/(2d)))/2 with c = delta^-4, which
    makes (1-delta)^(2d) overshoot the target while delta^-2/c = delta^2
    stays negligible, then halves delta until the bound verifies.
    """
    if not (isinstance(d, int) and 2 <= d <= 8):
        raise ValidationError(f"d must be an integer in [2, 8], got {d!r}")
    target = float(target)
    if not 0.0 < target < 1.0:
        raise ValidationError(f"target must lie in (0, 1), got {target!r}")
    delta = 0.5 * (1.0 - target ** (1.0 / (2.0 * d)))
    for _ in range(80):
        params = RelaxedParams(d, delta ** -4, delta)
        if product_bound(params) > target:
            return params
        delta *= 0.5
    raise FeasibilityError(f"no parameters found for target {target!r}")


def product_table(d: int, deltas=(0.2, 0.1, 0.05, 0.01),
                  cs=(1e2, 1e4, 1e6, 1e9, 1e12)) -> list[tuple[float, float, float]]:
    """Rows (c, delta, product_bound) over a small parameter lattice."""
    rows = []
    for delta in deltas:
        for c in cs:
            params = RelaxedParams(d, float(c), float(delta))
            rows.append((params.c, params.delta, product_bound(params)))
    return rows
