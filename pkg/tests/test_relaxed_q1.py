"""Penalized ball family driving the q = 1 functional toward its supremum."""

import pytest

from shapelab.domains import unit_ball_volume
from shapelab.errors import ValidationError
from shapelab.relaxed_q1 import (
    RelaxedParams,
    lambda_c,
    product_bound,
    product_table,
    sup_demonstration,
    t_c_lower,
)

# frozen from 30-digit evaluation at d = 2, delta = 0.1
FROZEN_PRODUCTS = {
    1e4: 0.649979638447,
    1e6: 0.656038190529,
    1e12: 0.656099999938,
}


class TestFrozenValues:
    @pytest.mark.parametrize("c", sorted(FROZEN_PRODUCTS))
    def test_product_bound(self, c):
        value = product_bound(RelaxedParams(2, c, 0.1))
        assert value == pytest.approx(FROZEN_PRODUCTS[c], rel=1e-10)

    @pytest.mark.parametrize("d", [2, 3])
    def test_large_c_limit(self, d):
        value = product_bound(RelaxedParams(d, 1e12, 0.1))
        assert value == pytest.approx(0.9 ** (2 * d), abs=1e-9)


class TestStructure:
    def test_product_is_the_ball_functional_of_the_pieces(self):
        for d in (2, 3, 4):
            for c in (0.0, 1e3, 1e8):
                p = RelaxedParams(d, c, 0.15)
                expected = lambda_c(p) * t_c_lower(p) / unit_ball_volume(d)
                assert product_bound(p) == pytest.approx(expected, rel=1e-12)

    def test_penalty_raises_the_eigenvalue_linearly(self):
        base = lambda_c(RelaxedParams(2, 0.0, 0.1))
        assert lambda_c(RelaxedParams(2, 50.0, 0.1)) == pytest.approx(base + 50.0, rel=1e-12)

    @pytest.mark.parametrize("d", [2, 3])
    @pytest.mark.parametrize("delta", [0.2, 0.1, 0.05, 0.01])
    def test_monotone_in_c_below_the_limit(self, d, delta):
        cs = (1e2, 1e4, 1e6, 1e9, 1e12)
        values = [product_bound(RelaxedParams(d, c, delta)) for c in cs]
        assert all(a < b for a, b in zip(values, values[1:]))
        limit = (1.0 - delta) ** (2 * d)
        assert all(v < limit for v in values)
        assert values[-1] == pytest.approx(limit, rel=1e-6)

    def test_everything_stays_below_one(self):
        for d in (2, 3):
            for c, delta, value in product_table(d):
                assert 0.0 < value < 1.0


class TestSupDemonstration:
    @pytest.mark.parametrize("d", [2, 3, 5])
    @pytest.mark.parametrize("target", [0.5, 0.9, 0.99, 0.999])
    def test_exceeds_target(self, d, target):
        params = sup_demonstration(d, target)
        assert params.d == d
        assert 0.0 < params.delta < 1.0
        assert product_bound(params) > target

    def test_deterministic(self):
        assert sup_demonstration(2, 0.99) == sup_demonstration(2, 0.99)

    def test_target_range(self):
        with pytest.raises(ValidationError):
            sup_demonstration(2, 0.0)
        with pytest.raises(ValidationError):
            sup_demonstration(2, 1.0)


class TestProductTable:
    def test_rows_match_direct_evaluation(self):
        rows = product_table(2)
        assert len(rows) == 20
        for c, delta, value in rows:
            assert value == pytest.approx(
                product_bound(RelaxedParams(2, c, delta)), rel=1e-13)
        assert {(c, delta) for c, delta, _ in rows} == {
            (c, delta)
            for delta in (0.2, 0.1, 0.05, 0.01)
            for c in (1e2, 1e4, 1e6, 1e9, 1e12)
        }


class TestParamsValidation:
    def test_dimension_range(self):
        with pytest.raises(ValidationError):
            RelaxedParams(1, 1.0, 0.1)
        with pytest.raises(ValidationError):
            RelaxedParams(9, 1.0, 0.1)

    def test_delta_open_interval(self):
        with pytest.raises(ValidationError):
            RelaxedParams(2, 1.0, 0.0)
        with pytest.raises(ValidationError):
            RelaxedParams(2, 1.0, 1.0)

    def test_penalty_nonnegative(self):
        with pytest.raises(ValidationError):
            RelaxedParams(2, -1.0, 0.1)
        RelaxedParams(2, 0.0, 0.1)
