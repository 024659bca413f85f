"""Torsion bounds for product cylinders A x (0, h).

The slab estimate |A| h^3 / 12 is an upper bound for any cross-section.
Subtracting an explicit perimeter correction gives a lower bound, and for
cross-sections containing a ball of radius R there is a two-sided bracket
around a sharper centered value.  All constants are explicit; zeta(5) is
pinned to its 16-digit value so results do not depend on any special
function library.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

from .domains import CylinderSpec
from .errors import MissingDataError, ValidationError

ZETA5 = 1.036927755143370


@dataclass(frozen=True)
class TorsionBracket:
    """Interval certified to contain a torsional rigidity."""

    lower: float
    upper: float

    def __post_init__(self):
        if not (math.isfinite(self.lower) and math.isfinite(self.upper)):
            raise ValidationError("bracket endpoints must be finite")
        if self.lower > self.upper:
            raise ValidationError(f"bracket lower {self.lower} exceeds upper {self.upper}")

    @property
    def width(self) -> float:
        return self.upper - self.lower

    def contains(self, value: float, slack: float = 0.0) -> bool:
        return self.lower - slack <= value <= self.upper + slack


def upper_bound_t1(spec: CylinderSpec) -> float:
    """Slab upper bound |A| h^3 / 12."""
    return spec.cross_measure * spec.height ** 3 / 12.0


def lower_bound_t2(spec: CylinderSpec) -> float:
    """Slab bound minus the perimeter correction of order h^4.

    Can be negative for squat cylinders, where it is valid but vacuous.
    """
    if spec.cross_perimeter is None:
        raise MissingDataError("lower torsion bound needs cross_perimeter")
    d, h = spec.dim, spec.height
    correction = 31.0 * 2.0 ** ((d - 4) / 2.0) * ZETA5 / math.pi ** 4
    return upper_bound_t1(spec) - correction * spec.cross_perimeter * h ** 4


def two_sided_t3(spec: CylinderSpec) -> TorsionBracket:
    """Bracket around the h^4-corrected value, for smooth cross-sections.

    Needs both the perimeter and the radius R of a ball contained in the
    cross-section; the half-width scales like h^5 / R^2.
    """
    if spec.cross_perimeter is None:
        raise MissingDataError("two-sided torsion bound needs cross_perimeter")
    if spec.smooth_radius is None:
        raise MissingDataError("two-sided torsion bound needs smooth_radius")
    d, h = spec.dim, spec.height
    center = (upper_bound_t1(spec)
              - 31.0 * ZETA5 / (4.0 * math.pi ** 5) * spec.cross_perimeter * h ** 4)
    half_width = 10.0 ** (d - 2) * spec.cross_measure * h ** 5 / (12.0 * spec.smooth_radius ** 2)
    return TorsionBracket(center - half_width, center + half_width)


def torsion_bracket(spec: CylinderSpec) -> TorsionBracket:
    """Best combined bracket from whichever bounds the given cylinder carries data for."""
    upper = upper_bound_t1(spec)
    lower = 0.0
    if spec.cross_perimeter is not None:
        lower = max(lower, lower_bound_t2(spec))
        if spec.smooth_radius is not None:
            t3 = two_sided_t3(spec)
            lower = max(lower, t3.lower)
            upper = min(upper, t3.upper)
    return TorsionBracket(min(lower, upper), upper)
