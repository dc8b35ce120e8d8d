"""Model maps, derived constants and parameter validation."""

import math

import numpy as np
import pytest
from pydantic import ValidationError

from core.errors import ParameterError
from core.model import (
    Action,
    ModelParams,
    Region,
    Signal,
    StateValue,
    cascade_decay,
    choose_action,
    classify_region,
    derive_constants,
    f0,
    f1,
    from_belief,
    posterior_llr,
    signal_prob_up,
    to_belief,
)

TOL = 1e-12


# =============================================================================
# Parameters
# =============================================================================

class TestModelParams:
    def test_alpha_below_half_names_bound(self):
        with pytest.raises(ValidationError, match="1/2 < alpha"):
            ModelParams(alpha=0.4, epsilon=0.01)

    def test_alpha_one_rejected(self):
        with pytest.raises(ValidationError):
            ModelParams(alpha=1.0, epsilon=0.01)

    def test_epsilon_at_upper_bound_rejected(self):
        with pytest.raises(ValidationError, match="alpha\\*\\(1-alpha\\)"):
            ModelParams(alpha=0.8, epsilon=0.8 * 0.2)

    def test_epsilon_zero_rejected(self):
        with pytest.raises(ValidationError):
            ModelParams(alpha=0.8, epsilon=0.0)

    def test_params_are_frozen(self, params):
        with pytest.raises(ValidationError):
            params.alpha = 0.7

    def test_labels_negate(self):
        for label in (StateValue, Signal, Action):
            assert -label.UP is label.DOWN
            assert -(-label.DOWN) is label.DOWN
            assert len(list(label)) == 2


# =============================================================================
# Derived Constants
# =============================================================================

class TestDeriveConstants:
    def test_c_alpha(self, params):
        assert derive_constants(params).c_alpha == pytest.approx(1.386294, abs=1e-6)

    def test_cap_floor_three(self, params):
        constants = derive_constants(params)
        assert constants.cap_K == pytest.approx(math.log(0.68) / math.log(0.9))
        assert constants.cap_K_floor == 3

    def test_fad_bound(self, params_low_eps):
        assert derive_constants(params_low_eps).fad_bound_M == pytest.approx(60.7, abs=0.1)

    def test_c_u(self, params):
        constants = derive_constants(params)
        assert constants.c_u == pytest.approx(math.log(1.25), abs=1e-12)
        assert 0 < constants.c_u < constants.c_alpha

    def test_supremum_views_agree(self, grid_params):
        for p in grid_params:
            constants = derive_constants(p)
            assert constants.l_sup == pytest.approx(f1(constants.c_alpha, p), abs=TOL)
            assert to_belief(constants.l_sup) == pytest.approx(constants.belief_sup, abs=1e-12)
            assert constants.expected_state_gap == pytest.approx(1 / p.epsilon)

    def test_bound_ordering_on_grid(self, grid_params):
        for p in grid_params:
            constants = derive_constants(p)
            assert constants.cap_K >= 1
            assert constants.cap_K_floor == math.floor(constants.cap_K)
            assert 1 < constants.fad_bound_M < 1 / p.epsilon

    def test_near_boundary_rejected(self):
        with pytest.raises(ParameterError) as excinfo:
            derive_constants(ModelParams(alpha=0.5 + 1e-12, epsilon=1e-13))
        assert excinfo.value.bound == "alpha>1/2"

    def test_near_epsilon_upper_bound_rejected(self):
        p = ModelParams(alpha=0.8, epsilon=0.16 - 1e-11)
        with pytest.raises(ParameterError) as excinfo:
            derive_constants(p)
        assert excinfo.value.bound == "epsilon<alpha(1-alpha)"


# =============================================================================
# Learning Maps
# =============================================================================

class TestLearningMaps:
    def test_f1_at_zero(self, params):
        assert f1(0.0, params) == pytest.approx(math.log(0.77 / 0.23), abs=1e-12)
        assert f1(0.0, params) == pytest.approx(1.20831, abs=1e-5)

    def test_f0_at_c_alpha_is_zero(self, grid_params):
        for p in grid_params:
            assert f0(derive_constants(p).c_alpha, p) == pytest.approx(0.0, abs=TOL)

    def test_symmetry(self, grid_params):
        rng = np.random.default_rng(11)
        points = rng.uniform(-4.0, 4.0, 10_000)
        for p in grid_params:
            np.testing.assert_allclose(f1(-points, p), -f0(points, p), atol=TOL, rtol=0)
            np.testing.assert_allclose(
                cascade_decay(-points, p), -cascade_decay(points, p), atol=TOL, rtol=0
            )

    def test_scalar_and_array_paths_agree(self, params):
        points = np.linspace(-30.0, 30.0, 241)
        vector = f1(points, params)
        scalar = np.array([f1(float(x), params) for x in points])
        np.testing.assert_allclose(vector, scalar, atol=1e-12, rtol=0)

    def test_moves_in_learning_region(self, grid_params):
        rng = np.random.default_rng(12)
        for p in grid_params:
            c = derive_constants(p).c_alpha
            points = rng.uniform(-c, c, 10_000)
            assert np.all(f1(points, p) > points)
            assert np.all(f0(points, p) < points)

    def test_strictly_increasing(self, grid_params):
        grid = np.linspace(-20.0, 20.0, 4001)
        for p in grid_params:
            assert np.all(np.diff(f1(grid, p)) > 0)
            assert np.all(np.diff(f0(grid, p)) > 0)

    def test_one_down_signal_flips_sign(self, grid_params):
        rng = np.random.default_rng(13)
        for p in grid_params:
            c = derive_constants(p).c_alpha
            points = rng.uniform(0.0, c * (1 - 1e-6), 10_000)
            points = points[points > 0]
            assert np.all(f0(points, p) < 0)
            assert np.all(f1(-points, p) > 0)

    def test_two_up_signals_from_zero_start_cascade(self, grid_params):
        for p in grid_params:
            c = derive_constants(p).c_alpha
            assert f1(f1(0.0, p), p) >= c - TOL

    def test_one_up_signal_from_threshold_starts_cascade(self, grid_params):
        rng = np.random.default_rng(14)
        for p in grid_params:
            constants = derive_constants(p)
            points = rng.uniform(constants.c_u, constants.c_alpha, 10_000)
            assert np.all(f1(points, p) >= constants.c_alpha - TOL)


# =============================================================================
# Cascade Decay
# =============================================================================

class TestCascadeDecay:
    def test_fixed_point_at_zero(self, params):
        assert cascade_decay(0.0, params) == 0.0

    def test_from_c_alpha_equals_f1_at_zero(self, params):
        c = derive_constants(params).c_alpha
        assert cascade_decay(c, params) == pytest.approx(f1(0.0, params), abs=TOL)

    def test_contraction(self, grid_params):
        rng = np.random.default_rng(15)
        points = rng.uniform(-10.0, 10.0, 10_000)
        points = points[points != 0]
        for p in grid_params:
            decayed = cascade_decay(points, p)
            assert np.all(np.sign(decayed) == np.sign(points))
            assert np.all(np.abs(decayed) < np.abs(points))

    def test_exits_within_three_steps_from_supremum(self, params):
        constants = derive_constants(params)
        l, steps = constants.l_sup, 0
        while l >= constants.c_alpha:
            l = cascade_decay(l, params)
            steps += 1
        assert steps == 3

    def test_cascade_cap_from_any_entry(self, grid_params):
        rng = np.random.default_rng(16)
        for p in grid_params:
            constants = derive_constants(p)
            for l in rng.uniform(constants.c_alpha, constants.l_sup, 200):
                steps = 0
                while l >= constants.c_alpha:
                    l = cascade_decay(l, p)
                    steps += 1
                assert steps <= constants.cap_K_floor

    def test_belief_space_decay_matches(self, params):
        constants = derive_constants(params)
        l, q = constants.l_sup, constants.belief_sup
        for _ in range(10):
            l = cascade_decay(l, params)
            q = (1 - 2 * params.epsilon) * q + params.epsilon
            assert to_belief(l) == pytest.approx(q, abs=1e-12)


# =============================================================================
# Posterior, Actions, Regions
# =============================================================================

class TestActionsAndRegions:
    def test_posterior(self, params):
        constants = derive_constants(params)
        assert posterior_llr(0.0, Signal.UP, constants) == pytest.approx(1.386294, abs=1e-6)
        assert posterior_llr(constants.c_alpha, Signal.DOWN, constants) == 0.0
        assert posterior_llr(-0.5, Signal.DOWN, constants) == pytest.approx(-1.886294, abs=1e-6)

    @pytest.mark.parametrize(
        "posterior,prev,expected",
        [
            (0.3, Action.DOWN, Action.UP),
            (0.0, Action.DOWN, Action.DOWN),
            (0.0, Action.UP, Action.UP),
            (-0.0001, Action.UP, Action.DOWN),
        ],
    )
    def test_choose_action(self, posterior, prev, expected):
        assert choose_action(posterior, prev) is expected

    def test_classify_region(self, params):
        constants = derive_constants(params)
        assert classify_region(0.0, constants) is Region.LEARNING
        assert classify_region(constants.c_alpha, constants) is Region.UP_CASCADE
        assert classify_region(-constants.c_alpha, constants) is Region.DOWN_CASCADE
        assert classify_region(-2.0, constants) is Region.DOWN_CASCADE
        assert classify_region(np.nextafter(constants.c_alpha, 0), constants) is Region.LEARNING

    def test_region_labels_round_trip(self):
        for region in Region:
            assert Region.from_label(region.label) is region
        assert Region.UP_CASCADE.is_cascade and not Region.LEARNING.is_cascade


# =============================================================================
# Up-Signal Probability and Beliefs
# =============================================================================

class TestSignalProbability:
    def test_half_at_zero(self, params):
        assert signal_prob_up(0.0, params) == pytest.approx(0.5, abs=1e-15)

    def test_at_c_alpha(self, params):
        c = derive_constants(params).c_alpha
        assert signal_prob_up(c, params) == pytest.approx(0.68, abs=1e-12)

    def test_symmetry_and_range(self, grid_params):
        rng = np.random.default_rng(17)
        points = rng.uniform(-30.0, 30.0, 10_000)
        for p in grid_params:
            up, down = signal_prob_up(points, p), signal_prob_up(-points, p)
            np.testing.assert_allclose(up + down, 1.0, atol=TOL, rtol=0)
            assert np.all((up >= 1 - p.alpha - TOL) & (up <= p.alpha + TOL))

    def test_strictly_increasing(self, params):
        grid = np.linspace(-15.0, 15.0, 3001)
        assert np.all(np.diff(signal_prob_up(grid, params)) > 0)

    def test_belief_round_trip(self):
        values = np.linspace(-10.0, 10.0, 81)
        np.testing.assert_allclose(from_belief(to_belief(values)), values, atol=1e-9)
