"""Estimator facade: sklearn parameter protocol and fitted attributes."""

import numpy as np
import pytest
from sklearn.base import clone

from batopt import BatAlgorithm, get_benchmark, get_multiobjective


class TestParameterProtocol:
    def test_get_params_round_trip(self):
        est = BatAlgorithm(alpha=0.95, n_bats=12, seed=5)
        params = est.get_params()
        assert params["alpha"] == 0.95
        assert params["n_bats"] == 12
        rebuilt = BatAlgorithm(**params)
        assert rebuilt.get_params() == params

    def test_set_params(self):
        est = BatAlgorithm()
        est.set_params(alpha=0.93, variant="levy")
        assert est.alpha == 0.93 and est.variant == "levy"
        with pytest.raises(ValueError):
            est.set_params(not_a_param=1)

    def test_clone(self):
        est = BatAlgorithm(seed=9, max_iterations=50)
        twin = clone(est)
        assert twin.get_params() == est.get_params()

    def test_validation_deferred_to_fit(self):
        est = BatAlgorithm(alpha=1.5)  # construction must not raise
        with pytest.raises(ValueError):
            est.fit(get_benchmark("sphere", 3).problem)


class TestFit:
    def test_fit_sets_attributes(self):
        spec = get_benchmark("sphere", 5)
        est = BatAlgorithm(n_bats=10, max_iterations=100, seed=4).fit(spec.problem)
        assert est.best_fitness_ == spec.problem.evaluate(est.best_position_)
        assert est.n_iterations_ == 100
        assert est.n_evaluations_ == 10 * 101
        assert est.trace_.final().best_fitness == est.best_fitness_
        assert np.all(est.best_position_ >= spec.lower_bounds)
        assert np.all(est.best_position_ <= spec.upper_bounds)

    def test_fit_deterministic_in_seed(self):
        spec = get_benchmark("rastrigin", 4)
        a = BatAlgorithm(n_bats=8, max_iterations=60, seed=21).fit(spec.problem)
        b = BatAlgorithm(n_bats=8, max_iterations=60, seed=21).fit(spec.problem)
        assert a.best_fitness_ == b.best_fitness_
        assert np.array_equal(a.best_position_, b.best_position_)

    def test_optimize_returns_pair(self):
        spec = get_benchmark("sphere", 3)
        position, fitness = BatAlgorithm(n_bats=8, max_iterations=40, seed=2).optimize(spec.problem)
        assert fitness == spec.problem.evaluate(position)

    def test_params_not_mutated_by_fit(self):
        est = BatAlgorithm(n_bats=8, max_iterations=30, seed=1)
        before = est.get_params()
        est.fit(get_benchmark("sphere", 3).problem)
        assert est.get_params() == before

    def test_composes_with_parameter_grid(self):
        from sklearn.model_selection import ParameterGrid

        spec = get_benchmark("sphere", 3)
        grid = ParameterGrid({"alpha": [0.9, 0.95], "attraction_sign": ["paper", "reversed"]})
        results = {}
        for params in grid:
            est = BatAlgorithm(n_bats=6, max_iterations=40, seed=3, **params)
            results[tuple(sorted(params.items()))] = est.fit(spec.problem).best_fitness_
        assert len(results) == 4
        assert all(np.isfinite(v) for v in results.values())


class TestMultiObjectiveFit:
    def test_requires_matching_problem_kind(self):
        with pytest.raises(ValueError):
            BatAlgorithm(variant="multiobjective").fit(get_benchmark("sphere", 3).problem)
        with pytest.raises(ValueError):
            BatAlgorithm().fit(get_multiobjective("schaffer"))

    def test_fit_exposes_front(self):
        est = BatAlgorithm(
            variant="multiobjective", n_bats=8, max_iterations=80, seed=6, n_weights=5
        ).fit(get_multiobjective("schaffer"))
        assert len(est.result_.results) == 5
        assert 1 <= len(est.pareto_front_) <= 5
        assert len(est.pareto_front_) == len(est.pareto_positions_) == len(est.pareto_weights_)
        for objectives in est.pareto_front_:
            assert objectives.shape == (2,)
