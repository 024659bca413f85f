"""Exact spectra: Bessel zeros, ball and box formulas, series torsion.

The frozen constants were computed independently with 30-digit arithmetic
and are cross-checked here against scipy.special, which the library itself
never imports.
"""

import math

import numpy as np
import pytest
import scipy.optimize
import scipy.special
from hypothesis import given
from hypothesis import strategies as st

from shapelab.closed_form import (
    Provenance,
    SpectralResult,
    ball_lambda,
    ball_spectrum,
    ball_torsion_function,
    bessel_j,
    cylinder_lambda,
    first_bessel_zero,
    rect_lambda,
    rect_spectrum,
    rect_torsion_series,
    union_spectrum,
)
from shapelab.domains import BallSpec, BallUnionSpec, CylinderSpec, IntervalUnionSpec, RectSpec
from shapelab.errors import MissingDataError, ValidationError

# first positive zero of J_nu, frozen from high-precision evaluation
FIRST_ZEROS = {
    -0.5: 1.5707963267948966,
    -0.25: 2.0062996717894504,
    0.0: 2.4048255576957728,
    0.25: 2.7808877239949776,
    0.5: 3.1415926535897932,
    1.0: 3.8317059702075123,
    1.5: 4.4934094579090642,
    2.0: 5.1356223018406826,
    2.5: 5.7634591968945498,
    3.0: 6.3801618959239835,
    3.5: 6.98793200050052,
    4.0: 7.5883424345038044,
}

J0_SQUARED = 5.7831859629467845

# double sine series for box torsion at the default 199 terms
RECT_TORSION_199 = {
    (1.0, 1.0): 0.0351442503263,
    (2.0, 1.0): 0.114340821524,
    (5.0, 1.0): 0.364145722887,
    (10.0, 1.0): 0.780810906501,
    (20.0, 1.0): 1.61413285903,
}


class TestBesselZeros:
    @pytest.mark.parametrize("nu,expected", sorted(FIRST_ZEROS.items()))
    def test_frozen_table(self, nu, expected):
        assert first_bessel_zero(nu).value == pytest.approx(expected, rel=0, abs=1e-12)

    @pytest.mark.parametrize("nu,expected", sorted(FIRST_ZEROS.items()))
    def test_is_a_root(self, nu, expected):
        z = first_bessel_zero(nu).value
        assert abs(bessel_j(nu, z)) < 1e-10

    @pytest.mark.parametrize("n", [0, 1, 2, 3, 4])
    def test_integer_orders_against_scipy(self, n):
        expected = scipy.special.jn_zeros(n, 1)[0]
        assert first_bessel_zero(float(n)).value == pytest.approx(expected, rel=1e-11)

    @pytest.mark.parametrize("nu", [-0.5, -0.25, 0.25, 1.5, 2.5, 3.5])
    def test_fractional_orders_against_scipy(self, nu):
        guess = FIRST_ZEROS[nu]
        root = scipy.optimize.brentq(
            lambda x: scipy.special.jv(nu, x), guess - 0.4, guess + 0.4, xtol=1e-13)
        assert first_bessel_zero(nu).value == pytest.approx(root, rel=1e-11)

    @given(st.floats(-0.5, 3.9), st.floats(0.01, 0.1))
    def test_strictly_increasing_in_order(self, nu, step):
        assert first_bessel_zero(nu).value < first_bessel_zero(nu + step).value

    def test_order_range(self):
        with pytest.raises(ValidationError):
            first_bessel_zero(-0.6)
        with pytest.raises(ValidationError):
            first_bessel_zero(4.5)


class TestBesselFunction:
    @pytest.mark.parametrize("nu", [-0.5, -0.25, 0.5, 1.3, 2.7, 4.0])
    def test_matches_scipy_on_a_grid(self, nu):
        xs = np.linspace(0.2, 12.0, 15)
        ours = np.array([bessel_j(nu, x) for x in xs])
        ref = scipy.special.jv(nu, xs)
        assert np.allclose(ours, ref, rtol=0, atol=1e-9)

    def test_half_order_is_elementary(self):
        # J_{1/2}(x) = sqrt(2/(pi x)) sin x
        for x in (0.5, 1.0, 2.0, 3.0):
            expected = math.sqrt(2.0 / (math.pi * x)) * math.sin(x)
            assert bessel_j(0.5, x) == pytest.approx(expected, rel=1e-10)


class TestBallSpectrum:
    def test_lambda_known_dimensions(self):
        assert ball_lambda(1) == pytest.approx(math.pi**2 / 4.0, rel=1e-12)
        assert ball_lambda(2) == pytest.approx(J0_SQUARED, rel=1e-12)
        assert ball_lambda(3) == pytest.approx(math.pi**2, rel=1e-12)
        assert ball_lambda(4) == pytest.approx(FIRST_ZEROS[1.0] ** 2, rel=1e-12)

    def test_lambda_radius_scaling(self):
        assert ball_lambda(2, 2.0) == pytest.approx(J0_SQUARED / 4.0, rel=1e-12)

    def test_torsion_known_dimensions(self):
        assert ball_spectrum(BallSpec(1, 1.0)).torsion == pytest.approx(2.0 / 3.0, rel=1e-12)
        assert ball_spectrum(BallSpec(2, 1.0)).torsion == pytest.approx(math.pi / 8.0, rel=1e-12)
        assert ball_spectrum(BallSpec(3, 1.0)).torsion == pytest.approx(4.0 * math.pi / 45.0, rel=1e-12)

    @given(st.integers(1, 8), st.floats(0.1, 10.0), st.floats(1.1, 5.0))
    def test_scaling_laws(self, d, r, t):
        base = ball_spectrum(BallSpec(d, r))
        scaled = ball_spectrum(BallSpec(d, r * t))
        assert scaled.lambda_ == pytest.approx(base.lambda_ / t**2, rel=1e-10)
        assert scaled.torsion == pytest.approx(base.torsion * t ** (d + 2), rel=1e-10)
        assert scaled.measure == pytest.approx(base.measure * t**d, rel=1e-10)

    def test_torsion_function_profile(self):
        # u(x) = (R^2 - |x|^2) / (2 d), maximal at the center, zero on the rim
        spec = BallSpec(2, 1.0)
        assert ball_torsion_function(spec, (0.0, 0.0)) == pytest.approx(0.25, rel=1e-12)
        assert ball_torsion_function(spec, (1.0, 0.0)) == pytest.approx(0.0, abs=1e-14)
        assert ball_torsion_function(spec, (0.6, 0.8)) == pytest.approx(0.0, abs=1e-14)

    def test_validation(self):
        with pytest.raises(ValidationError):
            ball_lambda(0)
        with pytest.raises(ValidationError):
            ball_lambda(2, -1.0)


class TestRectSpectrum:
    def test_lambda_values(self):
        assert rect_lambda((1.0, 1.0)) == pytest.approx(2.0 * math.pi**2, rel=1e-13)
        assert rect_lambda((2.0, 1.0)) == pytest.approx(1.25 * math.pi**2, rel=1e-13)
        assert rect_lambda((1.0, 2.0, 4.0)) == pytest.approx(1.3125 * math.pi**2, rel=1e-13)

    @pytest.mark.parametrize("sides,expected", sorted(RECT_TORSION_199.items()))
    def test_torsion_series_frozen(self, sides, expected):
        value, tail = rect_torsion_series(*sides)
        assert value == pytest.approx(expected, rel=1e-10)
        length, height = sides
        bound = (4.0 / (3.0 * math.pi**4)
                 * (length**3 * height + length * height**3) / 199**3)
        assert 0.0 < tail <= bound * (1.0 + 1e-12)

    def test_torsion_tail_bounds_truncation(self):
        v199, tail199 = rect_torsion_series(1.0, 1.0, terms=199)
        v799, _ = rect_torsion_series(1.0, 1.0, terms=799)
        assert v799 > v199  # all series terms are positive
        assert v799 - v199 <= tail199

    def test_torsion_symmetric_in_sides(self):
        a, _ = rect_torsion_series(3.0, 1.2)
        b, _ = rect_torsion_series(1.2, 3.0)
        assert a == pytest.approx(b, rel=1e-11)

    def test_spectrum_carries_series_tail(self):
        res = rect_spectrum(RectSpec((1.0, 1.0)))
        assert res.provenance is Provenance.SERIES
        # err_estimate is relative: the series tail over the value itself
        _value, tail = rect_torsion_series(1.0, 1.0)
        assert res.err_estimate == pytest.approx(tail / res.torsion, rel=1e-12)
        assert res.err_estimate < 2e-7
        assert res.measure == pytest.approx(1.0, rel=1e-14)

    @given(st.floats(1.0, 10.0), st.floats(0.1, 1.0), st.floats(1.05, 2.0))
    def test_torsion_grows_with_length(self, length, height, factor):
        small, _ = rect_torsion_series(length, height)
        big, _ = rect_torsion_series(length * factor, height)
        assert big > small


class TestUnionSpectrum:
    def test_intervals(self):
        res = union_spectrum(IntervalUnionSpec((1.0,)))
        assert res.lambda_ == pytest.approx(math.pi**2, rel=1e-13)
        assert res.torsion == pytest.approx(1.0 / 12.0, rel=1e-13)
        assert res.measure == pytest.approx(1.0, rel=1e-14)

    def test_disjoint_union_combines(self):
        res = union_spectrum(IntervalUnionSpec((1.0, 0.5, 0.25)))
        # lowest mode lives on the longest part; torsion adds up
        assert res.lambda_ == pytest.approx(math.pi**2, rel=1e-13)
        expected_t = (1.0**3 + 0.5**3 + 0.25**3) / 12.0
        assert res.torsion == pytest.approx(expected_t, rel=1e-13)

    def test_ball_union(self):
        res = union_spectrum(BallUnionSpec(2, (1.0, 0.5)))
        assert res.lambda_ == pytest.approx(J0_SQUARED, rel=1e-12)
        expected_t = (math.pi / 8.0) * (1.0 + 0.5**4)
        assert res.torsion == pytest.approx(expected_t, rel=1e-12)
        assert res.measure == pytest.approx(math.pi * 1.25, rel=1e-13)


class TestCylinderLambda:
    def test_splits_into_height_and_cross_modes(self):
        lam_a = 19.0
        spec = CylinderSpec(dim=3, cross_measure=1.0, height=0.5, cross_lambda=lam_a)
        assert cylinder_lambda(spec) == pytest.approx(math.pi**2 / 0.25 + lam_a, rel=1e-13)

    def test_requires_cross_eigenvalue(self):
        with pytest.raises(MissingDataError):
            cylinder_lambda(CylinderSpec(dim=3, cross_measure=1.0, height=0.5))


class TestSpectralResultGuard:
    def test_exact_results_must_respect_product_bound(self):
        with pytest.raises(ValidationError):
            SpectralResult(lambda_=10.0, torsion=1.0, measure=1.0,
                           provenance=Provenance.CLOSED_FORM)

    def test_grid_results_are_not_guarded(self):
        # discretization noise may push the product past one; keep the data
        res = SpectralResult(lambda_=10.0, torsion=1.0, measure=1.0,
                             provenance=Provenance.GRID, err_estimate=0.5)
        assert res.lambda_ == 10.0

    def test_rejects_nonpositive_entries(self):
        with pytest.raises(ValidationError):
            SpectralResult(lambda_=-1.0, torsion=0.1, measure=1.0,
                           provenance=Provenance.GRID)
