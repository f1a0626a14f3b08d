"""Scikit-learn style front end for the optimizer.

``BatAlgorithm`` keeps every tunable as a constructor parameter, so it
composes with the usual ecosystem machinery (``get_params``/``set_params``,
``clone``, parameter grids). Validation happens at ``fit`` time, sklearn
style, by building the frozen :class:`~batopt.core.BaConfig`.
"""

from __future__ import annotations

from dataclasses import fields as dataclass_fields

from sklearn.base import BaseEstimator

from .core import BaConfig, run
from .problems import MultiObjectiveProblem
from .variants import run_multiobjective

__all__ = ["BatAlgorithm"]

_CONFIG_FIELDS = tuple(f.name for f in dataclass_fields(BaConfig))


class BatAlgorithm(BaseEstimator):
    """Bat-algorithm optimizer over box-constrained problems.

    Parameters mirror :class:`~batopt.core.BaConfig`; see its docs for the
    semantics of each knob. ``trace_every`` thins the recorded convergence
    trace without changing the search itself.

    After :meth:`fit` on a single-objective problem the instance exposes
    ``best_position_``, ``best_fitness_``, ``state_``, ``trace_``,
    ``n_iterations_``, and ``n_evaluations_``. With
    ``variant="multiobjective"`` and a multiobjective problem it instead
    exposes ``pareto_front_``, ``pareto_positions_``, ``pareto_weights_``,
    and the full sweep as ``result_``.

    Examples
    --------
    >>> from batopt import BatAlgorithm, get_benchmark
    >>> spec = get_benchmark("sphere", 5)
    >>> opt = BatAlgorithm(max_iterations=200, seed=7).fit(spec.problem)
    >>> opt.best_fitness_ < spec.problem.evaluate(spec.upper_bounds)
    True
    """

    def __init__(
        self,
        n_bats=25,
        f_min=0.0,
        f_max=2.0,
        alpha=0.9,
        gamma=0.9,
        initial_loudness=1.0,
        min_loudness=0.0,
        initial_pulse_rate=0.5,
        max_iterations=1000,
        target_fitness=None,
        seed=0,
        bound_mode="clamp",
        attraction_sign="paper",
        variant="standard",
        levy_exponent=1.5,
        levy_scale=0.01,
        levy_fraction=0.1,
        chaos_start=0.7,
        n_weights=11,
        trace_every=1,
    ):
        self.n_bats = n_bats
        self.f_min = f_min
        self.f_max = f_max
        self.alpha = alpha
        self.gamma = gamma
        self.initial_loudness = initial_loudness
        self.min_loudness = min_loudness
        self.initial_pulse_rate = initial_pulse_rate
        self.max_iterations = max_iterations
        self.target_fitness = target_fitness
        self.seed = seed
        self.bound_mode = bound_mode
        self.attraction_sign = attraction_sign
        self.variant = variant
        self.levy_exponent = levy_exponent
        self.levy_scale = levy_scale
        self.levy_fraction = levy_fraction
        self.chaos_start = chaos_start
        self.n_weights = n_weights
        self.trace_every = trace_every

    def make_config(self) -> BaConfig:
        """Validate the current parameters into a frozen config."""
        return BaConfig(**{name: getattr(self, name) for name in _CONFIG_FIELDS})

    def fit(self, problem, y=None):
        """Run the configured optimization on ``problem``.

        ``problem`` is a :class:`~batopt.core.Problem`, or a
        :class:`~batopt.problems.MultiObjectiveProblem` when the variant is
        ``"multiobjective"``. ``y`` is ignored (interface compatibility).
        """
        config = self.make_config()
        if config.variant == "multiobjective":
            if not isinstance(problem, MultiObjectiveProblem):
                raise ValueError("variant 'multiobjective' requires a MultiObjectiveProblem")
            result = run_multiobjective(problem, config)
            self.result_ = result
            self.pareto_front_ = [r.objectives.copy() for r in result.front]
            self.pareto_positions_ = [r.position.copy() for r in result.front]
            self.pareto_weights_ = [r.weights.copy() for r in result.front]
            return self
        if isinstance(problem, MultiObjectiveProblem):
            raise ValueError(
                "got a MultiObjectiveProblem; set variant='multiobjective' to optimize it"
            )
        state, trace = run(problem, config, trace_every=self.trace_every)
        self.state_ = state
        self.trace_ = trace
        self.best_position_ = state.best_position.copy()
        self.best_fitness_ = state.best_fitness
        self.n_iterations_ = state.iteration
        self.n_evaluations_ = trace.final().evaluations
        return self

    def optimize(self, problem):
        """Convenience wrapper: fit and return ``(best_position, best_fitness)``."""
        self.fit(problem)
        return self.best_position_, self.best_fitness_
