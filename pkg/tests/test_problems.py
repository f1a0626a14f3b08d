"""Benchmark suite correctness: frozen values, optima, totality."""

import numpy as np
import pytest

from batopt import (
    ackley,
    benchmark_names,
    get_benchmark,
    get_multiobjective,
    multiobjective_names,
    rastrigin,
    rosenbrock,
    schaffer_bi_objective,
    sphere,
)

# mpmath evaluation (50 digits) of ackley at (1, 1)
ACKLEY_11 = 3.6253849384403628


class TestSphere:
    def test_values(self):
        assert sphere(np.zeros(4)) == 0.0
        assert sphere(np.array([1.0, 1.0])) == 2.0
        assert sphere(np.array([3.0])) == 9.0


class TestRosenbrock:
    def test_global_minimum(self):
        assert rosenbrock(np.ones(7)) == 0.0

    def test_values(self):
        assert rosenbrock(np.zeros(2)) == 1.0
        assert rosenbrock(np.array([-1.0, 1.0])) == 4.0

    def test_rejects_one_dimension(self):
        with pytest.raises(ValueError):
            rosenbrock(np.array([1.0]))


class TestRastrigin:
    def test_global_minimum(self):
        assert rastrigin(np.zeros(6)) == 0.0

    def test_unit_point(self):
        assert rastrigin(np.array([1.0, 1.0])) == pytest.approx(2.0, abs=1e-9)

    def test_non_negative_on_grid(self):
        axis = np.linspace(-5.12, 5.12, 101)
        for a in axis:
            for b in axis:
                assert rastrigin(np.array([a, b])) >= -1e-9


class TestAckley:
    def test_global_minimum_within_tolerance(self):
        for d in (1, 2, 10):
            assert abs(ackley(np.zeros(d))) < 1e-12

    def test_unit_point(self):
        assert ackley(np.array([1.0, 1.0])) == pytest.approx(ACKLEY_11, rel=1e-12)

    def test_positive_away_from_origin(self):
        rng = np.random.default_rng(31)
        for _ in range(5000):
            x = rng.uniform(-32.768, 32.768, size=2)
            if np.any(x != 0.0):
                assert ackley(x) > 0.0


class TestSchaffer:
    def test_values(self):
        assert schaffer_bi_objective(0.0) == (0.0, 4.0)
        assert schaffer_bi_objective(2.0) == (4.0, 0.0)
        assert schaffer_bi_objective(1.0) == (1.0, 1.0)

    def test_accepts_length_one_vector(self):
        assert schaffer_bi_objective(np.array([1.0])) == (1.0, 1.0)


class TestRegistry:
    def test_names(self):
        assert benchmark_names() == ["ackley", "rastrigin", "rosenbrock", "sphere"]
        assert multiobjective_names() == ["schaffer"]

    @pytest.mark.parametrize("name", ["sphere", "rosenbrock", "rastrigin", "ackley"])
    def test_optimum_self_check_passes(self, name):
        spec = get_benchmark(name, 10 if name != "rosenbrock" else 10)
        assert abs(spec.problem.evaluate(spec.known_optimum_position) - spec.known_optimum_value) <= 1e-12
        assert np.all(spec.known_optimum_position >= spec.lower_bounds)
        assert np.all(spec.known_optimum_position <= spec.upper_bounds)

    def test_unknown_name_lists_choices(self):
        with pytest.raises(KeyError) as excinfo:
            get_benchmark("nosuch", 4)
        message = str(excinfo.value)
        assert "nosuch" in message and "sphere" in message

    def test_rosenbrock_dimension_floor(self):
        with pytest.raises(ValueError):
            get_benchmark("rosenbrock", 1)

    def test_multiobjective_registry(self):
        mo = get_multiobjective("schaffer")
        assert mo.dimension == 1 and mo.n_objectives == 2
        assert tuple(mo.evaluate(np.array([1.0]))) == (1.0, 1.0)
        with pytest.raises(KeyError):
            get_multiobjective("nosuch")

    @pytest.mark.parametrize("name", ["sphere", "rosenbrock", "rastrigin", "ackley"])
    def test_deterministic_and_total_in_box(self, name):
        spec = get_benchmark(name, 5)
        rng = np.random.default_rng(37)
        samples = rng.uniform(spec.lower_bounds, spec.upper_bounds, size=(100_000, 5))
        values = np.array([spec.problem.evaluate(x) for x in samples])
        assert np.all(np.isfinite(values))
        for i in range(0, 100_000, 997):  # determinism spot-checked on a stride
            assert spec.problem.evaluate(samples[i].copy()) == values[i]
