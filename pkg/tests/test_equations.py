"""Update-rule fidelity: every operation against an independent transcription."""

import math

import numpy as np
import pytest

from batopt import (
    accept_candidate,
    apply_bounds,
    local_search_step,
    loudness_step,
    pulse_rate_at,
    sample_frequency,
    update_position,
    update_velocity,
)

# Independent per-component transcriptions of the update rules. Kept as
# plain Python float arithmetic so any vectorization slip in the library
# shows up as a bitwise mismatch.


def frequency_reference(beta, f_min, f_max):
    return f_min + (f_max - f_min) * beta


def velocity_reference(v, x, x_best, f):
    return [v[j] + (x[j] - x_best[j]) * f for j in range(len(v))]


def position_reference(x, v):
    return [x[j] + v[j] for j in range(len(x))]


def pulse_reference(r0, gamma, t):
    return r0 * (1.0 - math.exp(-gamma * t))


class TestSampleFrequency:
    def test_endpoints_and_midpoint(self):
        assert sample_frequency(0.0, 0.0, 2.0) == 0.0
        assert sample_frequency(1.0, 0.0, 2.0) == 2.0
        assert sample_frequency(0.5, 0.0, 2.0) == 1.0

    def test_matches_reference_bitwise(self):
        rng = np.random.default_rng(7)
        for _ in range(1000):
            beta = float(rng.random())
            f_min = float(rng.uniform(-3, 3))
            f_max = f_min + float(rng.uniform(0, 5))
            assert sample_frequency(beta, f_min, f_max) == frequency_reference(beta, f_min, f_max)

    def test_range_over_many_draws(self):
        rng = np.random.default_rng(11)
        f_min, f_max = -1.5, 4.25
        for beta in rng.random(100_000):
            f = sample_frequency(float(beta), f_min, f_max)
            assert f_min <= f <= f_max

    @pytest.mark.parametrize("beta", [-0.01, 1.01, float("nan")])
    def test_rejects_bad_beta(self, beta):
        with pytest.raises(ValueError):
            sample_frequency(beta, 0.0, 2.0)

    def test_rejects_inverted_band(self):
        with pytest.raises(ValueError):
            sample_frequency(0.5, 2.0, 0.0)


class TestUpdateVelocity:
    def test_zero_difference_term(self):
        v = np.array([0.3, -0.7])
        x = np.array([1.0, 2.0])
        out = update_velocity(v, x, x, 1.7)
        assert np.array_equal(out, v)

    def test_direct_substitution(self):
        out = update_velocity(np.array([0.0]), np.array([1.0]), np.array([0.0]), 0.5)
        assert np.array_equal(out, np.array([0.5]))

    def test_zero_frequency(self):
        v = np.array([1.0, -2.0, 3.0])
        out = update_velocity(v, np.array([4.0, 5.0, 6.0]), np.zeros(3), 0.0)
        assert np.array_equal(out, v)

    def test_reversed_sign(self):
        out = update_velocity(np.array([0.0]), np.array([1.0]), np.array([0.0]), 0.5, "reversed")
        assert np.array_equal(out, np.array([-0.5]))

    def test_matches_reference_bitwise(self):
        rng = np.random.default_rng(13)
        for _ in range(1000):
            d = int(rng.integers(1, 9))
            v = rng.normal(size=d)
            x = rng.normal(size=d)
            xb = rng.normal(size=d)
            f = float(rng.uniform(0, 2))
            out = update_velocity(v, x, xb, f)
            for j, expected in enumerate(velocity_reference(v, x, xb, f)):
                assert out[j] == expected

    def test_rejects_dimension_mismatch(self):
        with pytest.raises(ValueError):
            update_velocity(np.zeros(2), np.zeros(3), np.zeros(3), 1.0)


class TestUpdatePosition:
    def test_direct_substitution(self):
        assert np.array_equal(update_position(np.array([1.0]), np.array([0.5])), np.array([1.5]))

    def test_zero_velocity(self):
        x = np.array([3.0, -4.0])
        assert np.array_equal(update_position(x, np.zeros(2)), x)

    def test_componentwise(self):
        out = update_position(np.array([-1.0, 2.0]), np.array([1.0, -2.0]))
        assert np.array_equal(out, np.zeros(2))

    def test_matches_reference_bitwise(self):
        rng = np.random.default_rng(17)
        for _ in range(1000):
            d = int(rng.integers(1, 9))
            x = rng.normal(scale=5, size=d)
            v = rng.normal(scale=5, size=d)
            out = update_position(x, v)
            for j, expected in enumerate(position_reference(x, v)):
                assert out[j] == expected

    def test_rejects_dimension_mismatch(self):
        with pytest.raises(ValueError):
            update_position(np.zeros(2), np.zeros(5))


class TestLoudnessStep:
    def test_typical_decay_value(self):
        assert loudness_step(1.0, 0.9) == 0.9

    def test_identity_factor(self):
        assert loudness_step(0.37, 1.0) == 0.37

    def test_geometric_decay(self):
        a = 2.0
        for _ in range(25):
            a = loudness_step(a, 0.95)
        assert a == pytest.approx(2.0 * 0.95**25, rel=1e-12)

    def test_never_increases(self):
        rng = np.random.default_rng(19)
        for _ in range(1000):
            a = float(rng.uniform(0, 3))
            alpha = float(rng.uniform(0.01, 1.0))
            assert loudness_step(a, alpha) <= a

    @pytest.mark.parametrize("a,alpha", [(-0.1, 0.9), (1.0, 0.0), (1.0, 1.5), (1.0, -0.2)])
    def test_rejects_bad_arguments(self, a, alpha):
        with pytest.raises(ValueError):
            loudness_step(a, alpha)


class TestPulseRate:
    def test_zero_at_start(self):
        assert pulse_rate_at(0.5, 0.9, 0) == 0.0

    def test_limit_is_ceiling(self):
        assert abs(pulse_rate_at(0.5, 0.9, 200) - 0.5) < 1e-12
        assert abs(pulse_rate_at(1.0, 2.0, 500) - 1.0) < 1e-12

    def test_known_value(self):
        # 0.5 * (1 - exp(-0.9)), evaluated at 50 digits with mpmath
        assert pulse_rate_at(0.5, 0.9, 1) == pytest.approx(0.29671517012970044, rel=1e-12)

    def test_monotone_and_bounded(self):
        r0, gamma = 0.8, 0.35
        previous = -1.0
        for t in range(0, 300):
            r = pulse_rate_at(r0, gamma, t)
            assert r >= previous
            assert abs(r - r0) < r0 * math.exp(-gamma * t) + 1e-12
            previous = r

    def test_matches_reference(self):
        rng = np.random.default_rng(23)
        for _ in range(1000):
            r0 = float(rng.random())
            gamma = float(rng.uniform(0.05, 3.0))
            t = int(rng.integers(0, 500))
            assert pulse_rate_at(r0, gamma, t) == pytest.approx(
                pulse_reference(r0, gamma, t), rel=1e-12
            )

    @pytest.mark.parametrize("r0,gamma,t", [(-0.1, 0.9, 1), (1.1, 0.9, 1), (0.5, 0.0, 1), (0.5, 0.9, -1)])
    def test_rejects_bad_arguments(self, r0, gamma, t):
        with pytest.raises(ValueError):
            pulse_rate_at(r0, gamma, t)


class TestLocalSearchStep:
    def test_zero_loudness_returns_best(self):
        best = np.array([0.4, -0.2])
        out = local_search_step(best, 0.0, np.array([1.0, -1.0]))
        assert np.array_equal(out, best)

    def test_zero_perturbation(self):
        best = np.array([2.0, 3.0])
        assert np.array_equal(local_search_step(best, 0.7, np.zeros(2)), best)

    def test_direct_substitution(self):
        out = local_search_step(np.array([1.0, 1.0]), 0.5, np.array([1.0, -1.0]))
        assert np.array_equal(out, np.array([1.5, 0.5]))

    def test_rejects_dimension_mismatch(self):
        with pytest.raises(ValueError):
            local_search_step(np.zeros(2), 0.5, np.zeros(3))


class TestAcceptCandidate:
    def test_no_uphill_acceptance(self):
        assert accept_candidate(2.0, 1.0, 0.0, 1.0) is False

    def test_loudness_gate_blocks(self):
        assert accept_candidate(0.5, 1.0, 0.5, 0.3) is False

    def test_both_conditions_hold(self):
        assert accept_candidate(0.5, 1.0, 0.1, 0.9) is True

    def test_equal_fitness_accepted_when_gate_open(self):
        assert accept_candidate(1.0, 1.0, 0.0, 0.5) is True

    def test_rejects_bad_gate_draw(self):
        with pytest.raises(ValueError):
            accept_candidate(0.5, 1.0, 1.0, 0.9)


class TestApplyBounds:
    def test_identity_inside_box(self):
        x = np.array([0.5, 1.5])
        lower, upper = np.zeros(2), np.full(2, 2.0)
        assert np.array_equal(apply_bounds(x, lower, upper, "clamp"), x)
        assert np.array_equal(apply_bounds(x, lower, upper, "reflect"), x)

    def test_clamp_to_upper(self):
        out = apply_bounds(np.array([3.0]), np.array([0.0]), np.array([2.0]), "clamp")
        assert np.array_equal(out, np.array([2.0]))

    def test_reflect_folds_back(self):
        out = apply_bounds(np.array([3.0]), np.array([0.0]), np.array([2.0]), "reflect")
        assert np.array_equal(out, np.array([1.0]))

    def test_always_within_bounds(self):
        rng = np.random.default_rng(29)
        lower = np.array([-1.0, 0.0, 2.0])
        upper = np.array([1.0, 5.0, 2.5])
        for _ in range(2000):
            x = rng.normal(scale=100.0, size=3)
            for mode in ("clamp", "reflect"):
                out = apply_bounds(x, lower, upper, mode)
                assert np.all(out >= lower) and np.all(out <= upper)

    def test_rejects_unknown_mode(self):
        with pytest.raises(ValueError):
            apply_bounds(np.zeros(1), np.array([0.0]), np.array([1.0]), "wrap")
