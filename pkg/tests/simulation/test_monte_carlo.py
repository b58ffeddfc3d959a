#!/usr/bin/env python3
"""Tests for Monte Carlo estimation"""
import pytest

from src.analysis.bounds import decode_prob_bound
from src.analysis.rank_prob import decode_prob
from src.core.config import Settings
from src.core.errors import InvalidArgumentError
from src.core.models import DecodeMode, NetworkConfig, Scheme
from src.simulation.monte_carlo import Tally, simulate, simulate_ptp, trial_rng, wilson_interval
from tests.helpers import within_standard_errors


@pytest.mark.unit
class TestWilsonInterval:
    """Test the Wilson score interval"""

    def test_zero_successes(self):
        low, high = wilson_interval(0, 10)
        assert low == 0.0
        assert high == pytest.approx(0.27754, abs=1e-4)

    def test_all_successes(self):
        low, high = wilson_interval(10, 10)
        assert high == 1.0
        assert low == pytest.approx(1 - 0.27754, abs=1e-4)

    def test_symmetric_at_one_half(self):
        low, high = wilson_interval(50, 100)
        assert 0.5 - low == pytest.approx(high - 0.5)

    def test_narrows_with_trials(self):
        small = wilson_interval(30, 100)
        large = wilson_interval(3000, 10000)
        assert large[1] - large[0] < small[1] - small[0]

    def test_rejects_no_trials(self):
        with pytest.raises(InvalidArgumentError):
            wilson_interval(0, 0)


@pytest.mark.unit
class TestTally:
    """Test merging of per-chunk counts"""

    def test_merge_adds_every_count(self):
        first = Tally(trials=3, successes=2, overheard_1=4, overheard_2=1, modes={DecodeMode.UNAIDED: 2})
        second = Tally(trials=5, successes=1, overheard_1=2, modes={DecodeMode.UNAIDED: 1, DecodeMode.FULLY_AIDED: 1})
        merged = Tally().merge(first).merge(second)

        assert (merged.trials, merged.successes, merged.overheard_1, merged.overheard_2) == (8, 3, 6, 1)
        assert merged.modes == {DecodeMode.UNAIDED: 3, DecodeMode.FULLY_AIDED: 1}

    def test_merge_order_does_not_matter(self):
        parts = [Tally(trials=i, successes=i // 2, modes={DecodeMode.PARTIAL_1: i}) for i in range(1, 5)]
        forward = Tally()
        for part in parts:
            forward.merge(part.model_copy(deep=True))
        backward = Tally()
        for part in reversed(parts):
            backward.merge(part.model_copy(deep=True))
        assert forward == backward


@pytest.mark.unit
class TestStreams:
    """Test per-trial random streams"""

    def test_stream_depends_on_seed_and_index(self):
        a = trial_rng(1, 0).random(4)
        assert (trial_rng(1, 0).random(4) == a).all()
        assert not (trial_rng(1, 1).random(4) == a).all()
        assert not (trial_rng(2, 0).random(4) == a).all()


@pytest.mark.unit
class TestSimulate:
    """Test the network simulator"""

    def test_all_links_erased(self, test_settings):
        cfg = NetworkConfig.symmetric(k=3, n=5, n_r=4, p_sd=1.0, p_sr=1.0, p_rd=1.0)
        result = simulate(cfg, trials=500, seed=3, settings=test_settings)
        assert result.estimate == 0.0
        assert result.successes == 0
        assert result.ci_low == 0.0

    def test_lossless_systematic_always_decodes(self, test_settings):
        cfg = NetworkConfig.symmetric(k=4, n=4, n_r=0, p_sd=0.0, p_sr=0.5, p_rd=0.5, scheme=Scheme.SYSTEMATIC)
        result = simulate(cfg, trials=300, seed=3, settings=test_settings)
        assert result.estimate == 1.0
        assert result.mode_counts == {DecodeMode.UNAIDED: 300}

    def test_repeatable(self, small_config, test_settings):
        first = simulate(small_config, trials=1000, seed=42, settings=test_settings)
        second = simulate(small_config, trials=1000, seed=42, settings=test_settings)
        assert first == second

    def test_independent_of_chunking(self, small_config):
        fine = simulate(small_config, trials=1000, seed=42, settings=Settings(chunk_size=64))
        coarse = simulate(small_config, trials=1000, seed=42, settings=Settings(chunk_size=5000))
        assert fine == coarse

    def test_independent_of_workers(self, small_config, test_settings):
        single = simulate(small_config, trials=1200, seed=42, workers=1, settings=test_settings)
        pooled = simulate(small_config, trials=1200, seed=42, workers=3, settings=test_settings)
        assert single == pooled

    def test_seed_changes_result(self, small_config, test_settings):
        first = simulate(small_config, trials=2000, seed=1, settings=test_settings)
        second = simulate(small_config, trials=2000, seed=2, settings=test_settings)
        assert first.seed != second.seed
        assert first.mode_counts != second.mode_counts or first.overheard_1 != second.overheard_1

    def test_result_bookkeeping(self, small_config, test_settings):
        result = simulate(small_config, trials=1000, seed=5, settings=test_settings)
        assert result.trials == 1000
        assert result.ci_low <= result.estimate <= result.ci_high
        assert sum(result.mode_counts.values()) == result.successes
        assert DecodeMode.FAILED not in result.mode_counts

    @pytest.mark.parametrize("trials,seed", [(0, 1), (10, -1), (10, 2**64)])
    def test_invalid_run(self, small_config, trials, seed):
        with pytest.raises(InvalidArgumentError):
            simulate(small_config, trials=trials, seed=seed)


@pytest.mark.unit
class TestAgainstAnalysis:
    """Simulation agrees with closed forms where they are exact"""

    @pytest.mark.parametrize("scheme", list(Scheme))
    def test_no_relay_matches_unaided(self, scheme, test_settings):
        cfg = NetworkConfig(k1=3, k2=4, n1=5, n2=6, n_r=0, p1d=0.3, p2d=0.2, p1r=0.1, p2r=0.1, scheme=scheme)
        trials = 4000
        result = simulate(cfg, trials=trials, seed=11, settings=test_settings)
        expected = decode_prob_bound(cfg).p_total
        assert within_standard_errors(result.estimate, expected, trials)

    @pytest.mark.parametrize("scheme", list(Scheme))
    def test_independent_relay_matches_each_component(self, scheme, small_config, test_settings):
        """Without overhearing correlation every bound component is an exact probability"""
        cfg = small_config.model_copy(update={"scheme": scheme})
        trials = 5000
        result = simulate(cfg, trials=trials, seed=17, shared_generation=False, settings=test_settings)
        bound = decode_prob_bound(cfg)

        assert within_standard_errors(result.estimate, bound.p_total, trials)
        for mode, expected in bound.components().items():
            assert within_standard_errors(result.mode_estimate(mode), expected, trials), mode

    def test_shared_overhearing_statistic(self, test_settings):
        cfg = NetworkConfig.symmetric(k=4, n=8, n_r=4, p_sd=0.3, p_sr=0.2, p_rd=0.2)
        trials = 4000
        shared = simulate(cfg, trials=trials, seed=23, settings=test_settings)
        independent = simulate(cfg, trials=trials, seed=23, shared_generation=False, settings=test_settings)

        expected = 8 * 0.7 * 0.8
        # Count per trial is Binomial(8, 0.56)
        std_error = (8 * 0.56 * 0.44 / trials) ** 0.5
        for source in (1, 2):
            assert abs(shared.mean_overheard(source) - expected) <= 4 * std_error
            assert independent.mean_overheard(source) == 0.0


@pytest.mark.unit
class TestSimulatePointToPoint:
    """Test single-link simulation"""

    @pytest.mark.parametrize("scheme", list(Scheme))
    def test_matches_closed_form(self, scheme, test_settings):
        trials = 4000
        result = simulate_ptp(8, 5, 0.25, scheme, trials=trials, seed=9, settings=test_settings)
        assert within_standard_errors(result.estimate, decode_prob(8, 5, 0.25, scheme), trials)

    @pytest.mark.parametrize("n,k,p", [(3, 4, 0.1), (4, 0, 0.1), (4, 2, 1.5)])
    def test_invalid_link(self, n, k, p):
        with pytest.raises(InvalidArgumentError):
            simulate_ptp(n, k, p, Scheme.NON_SYSTEMATIC, trials=10, seed=1)
