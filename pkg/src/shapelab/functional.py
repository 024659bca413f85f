"""The scale-invariant functional F_q and its one-dimensional reduction G_q.

F_q(Omega) = lambda(Omega) * T(Omega)^q / |Omega|^((d q + 2 q - 2) / d) is
invariant under dilation.  On unions of intervals it reduces, after
normalizing the longest interval to 1, to
G_q(a) = (sum a_k^3)^q / ((max a_k)^2 (sum a_k)^(3q - 2)).
This module also classifies the infimum and supremum of F_q by regime and
evaluates the explicit inradius-over-diameter bounds for extremal domains.
"""

from __future__ import annotations

import enum
import math
from dataclasses import dataclass

import numpy as np

from .closed_form import Provenance, SpectralResult, ball_lambda
from .domains import unit_ball_volume
from .errors import ValidationError

CONVEX_SUP_F1 = math.pi ** 2 / 12.0  # conjectured sharp constant, any d


def convex_inf_f1(dim: int) -> float:
    """Conjectured sharp lower constant for F_1 on convex domains."""
    return CONVEX_SUP_F1 * 6.0 / ((dim + 1) * (dim + 2))


@dataclass(frozen=True)
class FunctionalValue:
    """F_q together with the inputs it was computed from."""

    value: float
    lambda_: float
    torsion: float
    measure: float
    q: float
    dim: int

    def __post_init__(self):
        expected = f_q_raw(self.lambda_, self.torsion, self.measure, self.q, self.dim)
        if not math.isfinite(self.value) or abs(self.value - expected) > 1e-12 * max(1.0, abs(expected)):
            raise ValidationError("stored F_q does not match its inputs")


@dataclass(frozen=True)
class DiagramPoint:
    """Normalized diagram coordinates in (0, 1]^2 plus provenance.

    slack widens the upper bound checks for inexact sources; it is wired
    to the originating result's err_estimate.  source optionally keeps
    the domain description the point came from.
    """

    x: float
    y: float
    provenance: Provenance
    slack: float = 0.0
    source: object | None = None

    def __post_init__(self):
        tol = 1e-9 + 3.0 * self.slack
        for name, v in (("x", self.x), ("y", self.y)):
            if not math.isfinite(v) or v <= 0.0 or v > 1.0 + tol:
                raise ValidationError(f"diagram coordinate {name} = {v!r} outside (0, 1]")


def f_q_raw(lambda_: float, torsion: float, measure: float, q: float, dim: int) -> float:
    """F_q from raw ingredients."""
    if lambda_ <= 0.0 or torsion <= 0.0 or measure <= 0.0:
        raise ValidationError("F_q needs positive lambda, torsion and measure")
    exponent = (dim * q + 2.0 * q - 2.0) / dim
    return lambda_ * torsion ** q / measure ** exponent


def f_q(result: SpectralResult, q: float, dim: int) -> FunctionalValue:
    """F_q of a computed spectrum."""
    value = f_q_raw(result.lambda_, result.torsion, result.measure, q, dim)
    return FunctionalValue(value=value, lambda_=result.lambda_, torsion=result.torsion,
                           measure=result.measure, q=q, dim=dim)


def f_q_ball(q: float, dim: int) -> float:
    """F_q of any ball: j^2 (d(d+2))^-q omega_d^(2(1-q)/d)."""
    if not 1 <= dim <= 8:
        raise ValidationError(f"dimension must lie in [1, 8], got {dim}")
    j2 = ball_lambda(dim)
    w = unit_ball_volume(dim)
    return j2 * (dim * (dim + 2.0)) ** (-q) * w ** (2.0 * (1.0 - q) / dim)


def normalized_coords(result: SpectralResult, dim: int, source=None) -> DiagramPoint:
    """Diagram coordinates x (eigenvalue ratio) and y (torsion ratio).

    x compares lambda against the ball of the same volume, y compares
    torsion likewise; both equal 1 exactly on balls.
    """
    w = unit_ball_volume(dim)
    x = w ** (2.0 / dim) * ball_lambda(dim) / (result.measure ** (2.0 / dim) * result.lambda_)
    ball_torsion = w / (dim * (dim + 2.0))
    y = w ** ((dim + 2.0) / dim) * result.torsion / (result.measure ** ((dim + 2.0) / dim) * ball_torsion)
    return DiagramPoint(x=x, y=y, provenance=result.provenance,
                        slack=result.err_estimate or 0.0, source=source)


def g_q(a, q: float) -> float:
    """One-dimensional functional G_q of interval lengths a."""
    a = np.asarray(a, dtype=float)
    if a.ndim != 1 or a.size == 0:
        raise ValidationError("G_q needs a nonempty 1-d sequence of lengths")
    if not np.all(np.isfinite(a)) or np.any(a < 0.0):
        raise ValidationError("interval lengths must be finite and nonnegative")
    peak = float(a.max())
    if peak <= 0.0:
        raise ValidationError("G_q needs a positive longest interval")
    b = a / peak  # scale invariance; normalizing first keeps powers tame
    s1 = float(b.sum())
    s3 = float((b ** 3).sum())
    return s3 ** q / s1 ** (3.0 * q - 2.0)


class QClass(str, enum.Enum):
    BALL_REGIME = "ball_regime"       # 0 < q <= 2/(d+2)
    INTERMEDIATE = "intermediate"     # 2/(d+2) < q < 1
    UNIT = "unit"                     # q = 1
    ABOVE_ONE = "above_one"           # q > 1


class InfKind(str, enum.Enum):
    ATTAINED_BALL = "attained_ball"
    ZERO = "zero"
    POSITIVE_UNKNOWN = "positive_unknown"


class SupKind(str, enum.Enum):
    INFINITE = "infinite"
    ONE = "one"
    FINITE_BOUND = "finite_bound"
    BELOW_ONE = "below_one"


@dataclass(frozen=True)
class RegimeBounds:
    """Classification of inf/sup of F_q over a domain class.

    inf_value and sup_value are numeric bounds where known (None when the
    side is 0 or infinite); conjectural marks values that rest on the
    sharp-constant conjecture for convex domains.
    """

    q: float
    dim: int
    convex: bool
    q_class: QClass
    inf_kind: InfKind
    sup_kind: SupKind
    inf_value: float | None
    sup_value: float | None
    conjectural: bool


def regime_table(q: float, dim: int, convex: bool = False) -> RegimeBounds:
    """Known behavior of inf and sup of F_q in the given regime."""
    if not (isinstance(dim, int) and 1 <= dim <= 8):
        raise ValidationError(f"dimension must be an integer in [1, 8], got {dim!r}")
    q = float(q)
    if not math.isfinite(q) or q <= 0.0:
        raise ValidationError(f"q must be positive, got {q!r}")
    q_star = 2.0 / (dim + 2.0)
    scale_const = (dim * (dim + 2.0) * unit_ball_volume(dim) ** (2.0 / dim))

    if q <= q_star:
        q_class = QClass.BALL_REGIME
    elif q < 1.0:
        q_class = QClass.INTERMEDIATE
    elif q == 1.0:
        q_class = QClass.UNIT
    else:
        q_class = QClass.ABOVE_ONE

    if not convex:
        if q_class is QClass.BALL_REGIME:
            return RegimeBounds(q, dim, convex, q_class, InfKind.ATTAINED_BALL,
                                SupKind.INFINITE, f_q_ball(q, dim), None, False)
        if q_class is QClass.INTERMEDIATE:
            return RegimeBounds(q, dim, convex, q_class, InfKind.ZERO,
                                SupKind.INFINITE, None, None, False)
        if q_class is QClass.UNIT:
            return RegimeBounds(q, dim, convex, q_class, InfKind.ZERO,
                                SupKind.ONE, None, 1.0, False)
        return RegimeBounds(q, dim, convex, q_class, InfKind.ZERO,
                            SupKind.FINITE_BOUND, None, scale_const ** (1.0 - q), False)

    if q_class is QClass.BALL_REGIME:
        # the ball is convex, so the unrestricted minimum is attained here too
        return RegimeBounds(q, dim, convex, q_class, InfKind.ATTAINED_BALL,
                            SupKind.INFINITE, f_q_ball(q, dim), None, False)
    if q_class is QClass.INTERMEDIATE:
        return RegimeBounds(q, dim, convex, q_class, InfKind.POSITIVE_UNKNOWN,
                            SupKind.INFINITE,
                            convex_inf_f1(dim) * scale_const ** (1.0 - q), None, True)
    if q_class is QClass.UNIT:
        return RegimeBounds(q, dim, convex, q_class, InfKind.POSITIVE_UNKNOWN,
                            SupKind.BELOW_ONE, convex_inf_f1(dim), CONVEX_SUP_F1, True)
    return RegimeBounds(q, dim, convex, q_class, InfKind.ZERO,
                        SupKind.FINITE_BOUND, None,
                        CONVEX_SUP_F1 * scale_const ** (1.0 - q), True)


def inradius_ratio_bounds(q: float, dim: int) -> tuple[float | None, float | None]:
    """Inradius/diameter lower bounds for extremal domains of F_q.

    Returns (max_case, min_case): the first applies to maximizers (q > 1),
    the second to minimizers (q < 1).  The side without a bound is None;
    q = 1 has neither and is rejected.
    """
    if not (isinstance(dim, int) and 1 <= dim <= 8):
        raise ValidationError(f"dimension must be an integer in [1, 8], got {dim!r}")
    q = float(q)
    if not math.isfinite(q) or q <= 0.0:
        raise ValidationError(f"q must be positive, got {q!r}")
    if q == 1.0:
        raise ValidationError("no inradius bound is available at q = 1")
    j = math.sqrt(ball_lambda(dim))
    if q > 1.0:
        w_prev = unit_ball_volume(dim - 1) if dim >= 2 else 1.0  # omega_0 = 1
        prefactor = w_prev * math.pi ** dim / (dim * unit_ball_volume(dim) * 2.0 ** dim)
        value = (prefactor
                 * (dim * (dim + 2.0)) ** (dim * q / (2.0 * (1.0 - q)))
                 * j ** (dim / (q - 1.0)))
        return value, None
    value = (math.pi * 2.0 ** ((5.0 * q - 4.0) / (2.0 * (1.0 - q)))
             * j ** (1.0 / (q - 1.0)))
    return None, value
