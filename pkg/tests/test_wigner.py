import math

import numpy as np
import pytest
from hypothesis import given, settings, strategies as st
from hypothesis.extra.numpy import arrays

from cyclosqueeze.squeeze import SqueezeParams
from cyclosqueeze.wigner import (
    PhasePoint,
    closed_form_n2,
    closed_form_n3,
    closed_form_n4,
    normalization,
    slice_grid,
    wigner_state,
)

CLOSED_FORMS = {2: closed_form_n2, 3: closed_form_n3, 4: closed_form_n4}


def origin(n):
    return PhasePoint(np.zeros(n), np.zeros(n))


class TestPhasePoint:
    def test_alphas_roundtrip(self):
        point = PhasePoint([1.0, -0.5], [0.25, 2.0])
        back = PhasePoint.from_alphas(point.alphas)
        np.testing.assert_allclose(back.positions, point.positions, atol=1e-15)
        np.testing.assert_allclose(back.momenta, point.momenta, atol=1e-15)

    def test_rejects_mismatched_lengths(self):
        with pytest.raises(ValueError):
            PhasePoint([1.0, 2.0], [0.0])


class TestWignerState:
    def test_vacuum(self):
        state = wigner_state(SqueezeParams(3, 0.0))
        np.testing.assert_array_equal(state.position_precision, np.eye(3))
        np.testing.assert_array_equal(state.momentum_precision, np.eye(3))
        point = PhasePoint([0.3, -0.1, 0.5], [0.2, 0.0, -0.4])
        expected = math.pi**-3 * math.exp(
            -np.sum(point.positions**2) - np.sum(point.momenta**2)
        )
        assert state.value(point) == pytest.approx(expected, rel=1e-14)

    def test_two_mode_precisions(self):
        lam = 0.45
        state = wigner_state(SqueezeParams(2, lam))
        c, s = math.cosh(2 * lam), math.sinh(2 * lam)
        np.testing.assert_allclose(state.momentum_precision, [[c, -s], [-s, c]], atol=1e-13)
        np.testing.assert_allclose(state.position_precision, [[c, s], [s, c]], atol=1e-13)

    def test_three_mode_momentum_precision(self):
        lam = 0.6
        state = wigner_state(SqueezeParams(3, lam))
        u = (2.0 / 3.0) * math.exp(lam) + (1.0 / 3.0) * math.exp(-2 * lam)
        v = (1.0 / 3.0) * (math.exp(-2 * lam) - math.exp(lam))
        expected = np.full((3, 3), v)
        np.fill_diagonal(expected, u)
        np.testing.assert_allclose(state.momentum_precision, expected, atol=1e-13)

    def test_precisions_are_mutually_inverse(self):
        state = wigner_state(SqueezeParams(5, 1.2))
        product = state.position_precision @ state.momentum_precision
        assert np.abs(product - np.eye(5)).max() < 1e-11

    @pytest.mark.parametrize("n", [2, 3, 4, 6])
    @pytest.mark.parametrize("lam", [0.0, 0.5, 1.7])
    def test_origin_value_exact(self, n, lam):
        state = wigner_state(SqueezeParams(n, lam))
        assert state.value(origin(n)) == math.pi ** (-n)

    def test_dimension_mismatch(self):
        state = wigner_state(SqueezeParams(3, 0.2))
        with pytest.raises(ValueError):
            state.value(origin(4))

    @given(
        coords=arrays(
            np.float64,
            (2, 4),
            elements=st.floats(min_value=-2.0, max_value=2.0),
        ),
        lam=st.floats(min_value=-1.5, max_value=1.5),
    )
    @settings(max_examples=40, deadline=None)
    def test_bounds_and_cyclic_symmetry(self, coords, lam):
        state = wigner_state(SqueezeParams(4, lam))
        point = PhasePoint(coords[0], coords[1])
        value = state.value(point)
        assert 0.0 < value <= math.pi**-4
        rotated = PhasePoint(np.roll(coords[0], 1), np.roll(coords[1], 1))
        assert abs(state.value(rotated) - value) <= 1e-12 * value + 1e-300


class TestClosedForms:
    @pytest.mark.parametrize("n", [2, 3, 4])
    @pytest.mark.parametrize("lam", [0.1, 0.9])
    def test_origin(self, n, lam):
        assert CLOSED_FORMS[n](origin(n), lam) == pytest.approx(math.pi**-n, rel=1e-15)

    @pytest.mark.parametrize("n", [2, 3, 4])
    @pytest.mark.parametrize("lam", [0.3, 0.8, 1.5])
    def test_agree_with_generic_evaluator(self, n, lam):
        state = wigner_state(SqueezeParams(n, lam))
        closed = CLOSED_FORMS[n]
        rng = np.random.default_rng(7000 + 10 * n + int(10 * lam))
        for _ in range(100):
            point = PhasePoint(rng.normal(0, 0.7, n), rng.normal(0, 0.7, n))
            reference = closed(point, lam)
            assert abs(state.value(point) - reference) <= 1e-10 * reference

    def test_four_mode_zero_squeezing_is_vacuum(self):
        rng = np.random.default_rng(3)
        for _ in range(20):
            point = PhasePoint(rng.normal(0, 1, 4), rng.normal(0, 1, 4))
            expected = math.pi**-4 * math.exp(
                -np.sum(point.positions**2) - np.sum(point.momenta**2)
            )
            assert closed_form_n4(point, 0.0) == pytest.approx(expected, rel=1e-13)

    def test_wrong_dimension(self):
        with pytest.raises(ValueError):
            closed_form_n2(origin(3), 0.5)
        with pytest.raises(ValueError):
            closed_form_n3(origin(2), 0.5)
        with pytest.raises(ValueError):
            closed_form_n4(origin(3), 0.5)


class TestNormalization:
    @pytest.mark.parametrize("n", [2, 3, 4])
    def test_vacuum_tight(self, n):
        state = wigner_state(SqueezeParams(n, 0.0))
        assert abs(normalization(state, 8) - 1.0) < 1e-12

    @pytest.mark.parametrize("n,lam", [(2, 1.0), (3, 0.5), (4, 0.5), (4, 1.0)])
    def test_squeezed(self, n, lam):
        state = wigner_state(SqueezeParams(n, lam))
        assert abs(normalization(state, 8) - 1.0) < 1e-8

    def test_order_floor(self):
        state = wigner_state(SqueezeParams(2, 0.3))
        with pytest.raises(ValueError):
            normalization(state, 6)


class TestSliceGrid:
    def test_vacuum_grid_symmetric_with_central_peak(self):
        state = wigner_state(SqueezeParams(2, 0.0))
        grid = slice_grid(state, "q1", "q2", (-1, 1), (-1, 1), 3, 3)
        values = grid.values
        assert values[1, 1] == math.pi**-2
        assert values[1, 1] == values.max()
        np.testing.assert_allclose(values, values.T, atol=1e-15)
        np.testing.assert_allclose(values, values[::-1, ::-1], atol=1e-15)
        assert len(list(grid.rows())) == 9

    def test_matches_closed_form_and_ridge_direction(self):
        # for positive squeezing the sum of positions is squeezed, so the
        # density stretches along the q1 = -q2 anti-diagonal
        lam = 0.6
        state = wigner_state(SqueezeParams(2, lam))
        grid = slice_grid(state, "q1", "q2", (-1, 1), (-1, 1), 5, 5)
        for (a, b, value) in grid.rows():
            expected = closed_form_n2(PhasePoint([a, b], [0.0, 0.0]), lam)
            assert value == pytest.approx(expected, rel=1e-12)
        assert grid.values[4, 0] > grid.values[4, 4]

    def test_momentum_slice_widths(self):
        lam = 0.5
        state = wigner_state(SqueezeParams(4, lam))
        grid = slice_grid(state, "q1", "p1", (-1, 1), (-1, 1), 3, 3)
        qq = state.position_precision[0, 0]
        pp = state.momentum_precision[0, 0]
        assert grid.values[2, 1] == pytest.approx(math.pi**-4 * math.exp(-qq), rel=1e-12)
        assert grid.values[1, 2] == pytest.approx(math.pi**-4 * math.exp(-pp), rel=1e-12)

    def test_fixed_coordinates(self):
        state = wigner_state(SqueezeParams(3, 0.4))
        grid = slice_grid(
            state, "q1", "p2", (-1, 1), (-1, 1), 3, 3, fixed={"q3": 0.5, "p1": -0.25}
        )
        point = PhasePoint([1.0, 0.0, 0.5], [-0.25, 1.0, 0.0])
        assert grid.values[2, 2] == pytest.approx(state.value(point), rel=1e-14)

    def test_row_count_and_bounds(self):
        state = wigner_state(SqueezeParams(2, 0.8))
        grid = slice_grid(state, "p1", "p2", (-2, 2), (-1, 3), 4, 6)
        rows = list(grid.rows())
        assert len(rows) == 24
        assert all(0.0 < w <= math.pi**-2 for _, _, w in rows)

    def test_validation(self):
        state = wigner_state(SqueezeParams(2, 0.1))
        with pytest.raises(ValueError, match="distinct"):
            slice_grid(state, "q1", "q1", (-1, 1), (-1, 1), 3, 3)
        with pytest.raises(ValueError, match="axes"):
            slice_grid(state, "q9", "q2", (-1, 1), (-1, 1), 3, 3)
        with pytest.raises(ValueError, match="step"):
            slice_grid(state, "q1", "q2", (-1, 1), (-1, 1), 1, 3)
        with pytest.raises(ValueError, match="sweep axis"):
            slice_grid(state, "q1", "q2", (-1, 1), (-1, 1), 3, 3, fixed={"q1": 1.0})
        with pytest.raises(ValueError, match="unknown fixed"):
            slice_grid(state, "q1", "q2", (-1, 1), (-1, 1), 3, 3, fixed={"x1": 1.0})
