"""Change frequencies, sign switches, restricted fads, cascade episodes, reports."""

import json

import numpy as np
import pandas as pd
import pytest

from core.analytics import (
    POINT_COLUMNS,
    SUMMARY_COLUMNS,
    cascade_episodes,
    cascade_length_histogram,
    change_frequencies,
    fad_report,
    moment_stability,
    points_to_frame,
    read_report,
    require_gaps,
    restricted_fad_count,
    sign_switch_times,
    switch_gaps,
    write_report,
)
from core.engine import RunConfig, simulate, simulate_l_chain
from core.errors import InsufficientSwitchesError, MixedParametersError, TraceTooShortError
from core.model import ModelParams, Region


def run(params, horizon=20_000, seed=0):
    return simulate(RunConfig(params=params, horizon=horizon, seed=seed))


# =============================================================================
# Change Frequencies
# =============================================================================

class TestChangeFrequencies:
    def test_direct_counts(self, make_trace):
        freqs = change_frequencies(make_trace([1, 1, -1, 1], theta=[1, 1, 1, -1]))
        assert freqs.n == 3
        assert freqs.q_a == pytest.approx(2 / 3)
        assert freqs.q_theta == pytest.approx(1 / 3)

    def test_marginal_trace_has_no_state_frequency(self, params):
        trace = simulate_l_chain(RunConfig(params=params, horizon=100, seed=0))
        assert change_frequencies(trace).q_theta is None

    def test_too_short(self, make_trace):
        with pytest.raises(TraceTooShortError):
            change_frequencies(make_trace([1]))

    def test_bounded(self, params):
        freqs = change_frequencies(run(params, horizon=5_000, seed=3))
        assert 0 <= freqs.q_a <= 1 and 0 <= freqs.q_theta <= 1


# =============================================================================
# Sign Switches
# =============================================================================

class TestSwitchGaps:
    def test_switch_times(self):
        times, zero_hits = sign_switch_times([1, 1, -1, -1, 1])
        assert times.tolist() == [3, 5]
        assert zero_hits == 0

    def test_gaps_from_trace(self, make_trace):
        trace = make_trace([1, -1, -1, 1], l_pub=[0.5, 0.5, -0.5, -0.5], l_final=0.5)
        stats = switch_gaps(trace)
        assert stats.switch_times == [3, 5]
        assert stats.gaps == [3, 2]
        assert stats.fresh_gaps == [2]
        assert stats.sufficient
        assert sum(stats.gaps) == stats.switch_times[-1]

    def test_zero_inherits_previous_sign(self):
        times, zero_hits = sign_switch_times([0.0, 1.0, 0.0, -1.0])
        assert times.tolist() == [4]
        assert zero_hits == 1

        times, zero_hits = sign_switch_times([0.5, 0.0, 0.5])
        assert times.tolist() == []
        assert zero_hits == 1

    def test_insufficient_switches_flagged(self, make_trace):
        trace = make_trace([1, 1, 1], l_pub=[0.5, 0.5, 0.5], l_final=-0.5)
        stats = switch_gaps(trace)
        assert not stats.sufficient
        assert stats.gaps == []
        with pytest.raises(InsufficientSwitchesError):
            require_gaps(stats)

    @pytest.mark.parametrize("seed", range(4))
    def test_switches_reconstruct_action_changes(self, params, seed):
        stats = switch_gaps(run(params, seed=seed))
        assert stats.zero_hits == 0
        assert len(stats.switch_times) == stats.action_changes
        assert all(g > 0 for g in stats.gaps)

    def test_pooled_gap_below_bound(self, params_low_eps):
        gaps = []
        for seed in range(4):
            gaps.extend(switch_gaps(run(params_low_eps, horizon=50_000, seed=seed)).fresh_gaps)
        assert np.mean(gaps) < 60.7 < 1 / params_low_eps.epsilon


# =============================================================================
# Restricted Fads
# =============================================================================

class TestRestrictedFads:
    def test_change_after_hold(self, make_trace):
        assert restricted_fad_count(make_trace([1, -1, 1, 1, -1])) == 1

    def test_consecutive_pair_reading(self, make_trace):
        assert restricted_fad_count(make_trace([1, -1, 1, 1, -1]), "consecutive_pair") == 1
        assert restricted_fad_count(make_trace([1, -1, 1, -1]), "consecutive_pair") == 2

    def test_no_changes(self, make_trace):
        assert restricted_fad_count(make_trace([1, 1, 1, 1])) == 0

    def test_readings_partition_changes(self, params):
        trace = run(params, seed=5)
        total = change_frequencies(trace).action_changes
        first_change = int(trace.action[1] != trace.action[0])
        assert (
            restricted_fad_count(trace)
            + restricted_fad_count(trace, "consecutive_pair")
            + first_change
            == total
        )

    def test_too_short(self, make_trace):
        with pytest.raises(TraceTooShortError):
            restricted_fad_count(make_trace([1, -1]))

    def test_unknown_mode(self, make_trace):
        with pytest.raises(ValueError):
            restricted_fad_count(make_trace([1, -1, 1]), "other")


# =============================================================================
# Cascade Episodes
# =============================================================================

class TestCascadeEpisodes:
    def test_none_in_learning_region(self, make_trace):
        assert cascade_episodes(make_trace([1, -1, 1, -1])) == []

    def test_entry_and_exit(self, make_trace):
        trace = make_trace(
            [1, 1, 1, -1, -1],
            l_pub=[0.0, 1.5, 1.45, 0.5, -1.5],
            l_final=-1.2,
        )
        up, down = cascade_episodes(trace)
        assert (up.enter_t, up.length, up.direction) == (2, 2, Region.UP_CASCADE)
        assert up.enter_l == 1.5 and up.exit_l == 0.5
        assert (down.enter_t, down.length, down.direction) == (5, 1, Region.DOWN_CASCADE)
        assert down.exit_l == -1.2 and not down.censored
        assert cascade_length_histogram([up, down]) == {1: 1, 2: 1}

    def test_censored_at_end(self, make_trace):
        trace = make_trace([1, 1, 1], l_pub=[0.0, 1.5, 1.45], l_final=1.4)
        (episode,) = cascade_episodes(trace)
        assert episode.censored

    def test_simulated_episodes_respect_cap(self, params):
        episodes = cascade_episodes(run(params, horizon=50_000, seed=7))
        assert episodes
        c_alpha = 1.3862943611198906
        for e in episodes:
            assert 1 <= e.length <= 3
            assert abs(e.enter_l) >= c_alpha
            if not e.censored:
                assert abs(e.exit_l) < c_alpha
                assert np.sign(e.exit_l) == np.sign(e.enter_l)

    def test_longer_cascades_at_lower_epsilon(self):
        episodes = cascade_episodes(run(ModelParams(alpha=0.8, epsilon=0.03), seed=1))
        assert max(e.length for e in episodes) <= 6


# =============================================================================
# Moment Stability
# =============================================================================

class TestMomentStability:
    def test_growing_series_unstable(self):
        assert not moment_stability(np.arange(1, 1001)).stable

    def test_stationary_series_stable(self):
        result = moment_stability(np.tile([1, 2, 3, 4], 250))
        assert result.stable
        assert result.moments[1] == [2.5] * 10

    def test_blocks_are_disjoint(self):
        result = moment_stability(np.arange(1, 1001), max_order=1)
        assert result.block_ends == list(range(100, 1001, 100))
        assert result.moments[1][0] == pytest.approx(50.5)
        assert result.moments[1][-1] == pytest.approx(950.5)

    def test_false_alarm_rate_on_stationary_gaps(self):
        rng = np.random.default_rng(7)
        verdicts = [
            moment_stability(rng.geometric(1 / 9, size=2_000)).stable for _ in range(200)
        ]
        assert 1 - np.mean(verdicts) <= 0.1

    def test_needs_enough_gaps(self):
        with pytest.raises(InsufficientSwitchesError):
            moment_stability([1, 2, 3])


# =============================================================================
# Reports
# =============================================================================

class TestFadReport:
    @pytest.fixture
    def traces(self, params):
        return [run(params, seed=seed) for seed in range(3)]

    def test_fads_emerge(self, traces):
        report = fad_report(traces)
        assert report.fads_emerged and report.all_seeds_fads
        assert report.margin == pytest.approx(report.q_a - report.q_theta)
        assert report.ratio == pytest.approx(report.q_a / report.q_theta)
        assert report.seeds == [0, 1, 2]
        assert report.max_cascade_length <= report.cap_K_floor == 3

    def test_per_seed_counts(self, traces):
        report = fad_report(traces)
        for trace, summary in zip(traces, report.per_seed):
            freqs = change_frequencies(trace)
            assert summary.action_changes == freqs.action_changes
            assert summary.state_changes == freqs.state_changes
            assert summary.restricted_fad_count == restricted_fad_count(trace)
        assert report.restricted_fad_count == sum(s.restricted_fad_count for s in report.per_seed)

    def test_summary_line(self, traces):
        line = fad_report(traces).summary_line()
        assert line.startswith("Q_a=") and " Q_theta=" in line and line.endswith("fads=true")

    def test_alternative_reading_recorded(self, traces):
        report = fad_report(traces, "consecutive_pair")
        assert report.restricted_mode == "consecutive_pair"

    def test_mixed_parameters_rejected(self, params, params_low_eps):
        with pytest.raises(MixedParametersError):
            fad_report([run(params, horizon=100), run(params_low_eps, horizon=100)])

    def test_marginal_trace_rejected(self, params):
        with pytest.raises(ValueError):
            fad_report([simulate_l_chain(RunConfig(params=params, horizon=100, seed=0))])

    def test_json_round_trip(self, traces, tmp_path):
        report = fad_report(traces)
        path = write_report(report, tmp_path / "report.json", "json")
        assert read_report(path) == report
        assert json.loads(path.read_text())["rng_name"] == "numpy-pcg64"

    def test_csv_rows(self, traces, tmp_path):
        report = fad_report(traces)
        frame = pd.read_csv(write_report(report, tmp_path / "report.csv", "csv"))
        assert list(frame.columns) == SUMMARY_COLUMNS
        assert len(frame) == 3

        points = pd.read_csv(write_report([report], tmp_path / "points.csv", "csv", rows="point"))
        assert list(points.columns) == POINT_COLUMNS
        assert points.loc[0, "ratio"] == pytest.approx(report.ratio)
        assert points_to_frame([report]).loc[0, "seeds"] == 3
