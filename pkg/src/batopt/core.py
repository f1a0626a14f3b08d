"""Standard bat-algorithm engine.

The algorithm maintains a population of agents ("bats"), each carrying a
position, a velocity, a frequency used as a per-step scale factor, a
loudness that gates acceptance of candidate moves, and a pulse rate that
gates a local random walk around the best solution found so far. Loudness
decays geometrically on every accepted move while the pulse rate saturates
toward its configured ceiling, so the search contracts around promising
regions as the run progresses.

Everything here is deterministic given a master seed; see :mod:`batopt.rng`
for the stream derivation rules.
"""

from __future__ import annotations

import math
from dataclasses import dataclass, field
from typing import Callable, Optional

import numpy as np

from ._validation import (
    check_box,
    check_choice,
    check_int,
    check_same_length,
    check_scalar,
    check_vector,
)
from .rng import check_seed, make_rng

__all__ = [
    "Bat",
    "SwarmState",
    "BaConfig",
    "Problem",
    "RunTrace",
    "TraceRecord",
    "VariantHooks",
    "ObjectiveEvaluationError",
    "sample_frequency",
    "update_velocity",
    "update_position",
    "loudness_step",
    "pulse_rate_at",
    "local_search_step",
    "accept_candidate",
    "apply_bounds",
    "initialize_swarm",
    "step",
    "run",
]

BOUND_MODES = ("clamp", "reflect")
ATTRACTION_SIGNS = ("paper", "reversed")
VARIANTS = ("standard", "levy", "chaotic", "binary", "multiobjective")


class ObjectiveEvaluationError(RuntimeError):
    """Raised when the objective fails for one agent; carries the bat index."""

    def __init__(self, bat_index: int, cause: Exception):
        super().__init__(f"objective evaluation failed for bat {bat_index}: {cause}")
        self.bat_index = bat_index


# ---------------------------------------------------------------------------
# Domain types
# ---------------------------------------------------------------------------


@dataclass
class Bat:
    """One agent of the swarm.

    ``pulse_rate`` starts at zero and grows toward ``initial_pulse_rate``
    (the configured ceiling); ``loudness`` only ever shrinks. ``fitness``
    caches the objective value at ``position``.
    """

    position: np.ndarray
    velocity: np.ndarray
    frequency: float
    loudness: float
    pulse_rate: float
    initial_pulse_rate: float
    fitness: float

    def copy(self) -> "Bat":
        return Bat(
            position=self.position.copy(),
            velocity=self.velocity.copy(),
            frequency=self.frequency,
            loudness=self.loudness,
            pulse_rate=self.pulse_rate,
            initial_pulse_rate=self.initial_pulse_rate,
            fitness=self.fitness,
        )


@dataclass
class SwarmState:
    """Population plus best-so-far bookkeeping at iteration ``iteration``."""

    bats: list
    best_position: np.ndarray
    best_fitness: float
    iteration: int

    def copy(self) -> "SwarmState":
        return SwarmState(
            bats=[b.copy() for b in self.bats],
            best_position=self.best_position.copy(),
            best_fitness=self.best_fitness,
            iteration=self.iteration,
        )

    def mean_loudness(self) -> float:
        return sum(b.loudness for b in self.bats) / len(self.bats)

    def mean_pulse_rate(self) -> float:
        return sum(b.pulse_rate for b in self.bats) / len(self.bats)


@dataclass(frozen=True)
class BaConfig:
    """All algorithm-dependent parameters.

    The defaults follow common practice for this optimizer family:
    frequencies in [0, 2], loudness decay and pulse-rate growth constants
    of 0.9, initial loudness 1.0, pulse-rate ceiling 0.5.

    ``attraction_sign`` selects the sign of the velocity pull term:
    ``"paper"`` keeps the classic formulation's ``(x - best)`` term, which
    pushes agents away from the best and leaves exploitation to the local
    walk; ``"reversed"`` uses ``(best - x)``, the attraction form common in
    later implementations. ``min_loudness`` is an optional floor; the
    default of 0 disables it.

    Variant knobs (``levy_*``, ``chaos_start``, ``n_weights``) only take
    effect for the matching ``variant`` selection. ``levy_scale`` is
    relative to the mean box width of the problem being solved.
    """

    n_bats: int = 25
    f_min: float = 0.0
    f_max: float = 2.0
    alpha: float = 0.9
    gamma: float = 0.9
    initial_loudness: float = 1.0
    min_loudness: float = 0.0
    initial_pulse_rate: float = 0.5
    max_iterations: int = 1000
    target_fitness: Optional[float] = None
    seed: int = 0
    bound_mode: str = "clamp"
    attraction_sign: str = "paper"
    variant: str = "standard"
    levy_exponent: float = 1.5
    levy_scale: float = 0.01
    levy_fraction: float = 0.1
    chaos_start: float = 0.7
    n_weights: int = 11

    def __post_init__(self):
        check_int("n_bats", self.n_bats, ge=1)
        f_min = check_scalar("f_min", self.f_min)
        check_scalar("f_max", self.f_max, ge=f_min)
        check_scalar("alpha", self.alpha, gt=0.0, le=1.0)
        check_scalar("gamma", self.gamma, gt=0.0)
        a0 = check_scalar("initial_loudness", self.initial_loudness, gt=0.0)
        check_scalar("min_loudness", self.min_loudness, ge=0.0, le=a0)
        check_scalar("initial_pulse_rate", self.initial_pulse_rate, ge=0.0, le=1.0)
        check_int("max_iterations", self.max_iterations, ge=0)
        if self.target_fitness is not None:
            check_scalar("target_fitness", self.target_fitness)
        check_seed(self.seed)
        check_choice("bound_mode", self.bound_mode, BOUND_MODES)
        check_choice("attraction_sign", self.attraction_sign, ATTRACTION_SIGNS)
        check_choice("variant", self.variant, VARIANTS)
        check_scalar("levy_exponent", self.levy_exponent, gt=1.0, le=2.0)
        check_scalar("levy_scale", self.levy_scale, ge=0.0)
        check_scalar("levy_fraction", self.levy_fraction, ge=0.0, le=1.0)
        check_scalar("chaos_start", self.chaos_start, ge=0.0, le=1.0)
        check_int("n_weights", self.n_weights, ge=2)


@dataclass(frozen=True)
class Problem:
    """Box-constrained minimization problem.

    ``objective`` maps a position vector to one real scalar and must be
    deterministic. Maximization is expressed by negating the objective.
    """

    dimension: int
    lower_bounds: np.ndarray
    upper_bounds: np.ndarray
    objective: Callable[[np.ndarray], float]

    def __post_init__(self):
        check_int("dimension", self.dimension, ge=1)
        lower, upper = check_box(self.lower_bounds, self.upper_bounds)
        check_vector("lower_bounds", lower, length=self.dimension)
        object.__setattr__(self, "lower_bounds", lower)
        object.__setattr__(self, "upper_bounds", upper)

    def evaluate(self, x: np.ndarray) -> float:
        return float(self.objective(x))


@dataclass(frozen=True)
class TraceRecord:
    iteration: int
    best_fitness: float
    mean_loudness: float
    mean_pulse_rate: float
    evaluations: int


@dataclass
class RunTrace:
    """Per-iteration convergence record of a single run."""

    records: list = field(default_factory=list)

    def append(self, record: TraceRecord) -> None:
        self.records.append(record)

    def final(self) -> TraceRecord:
        return self.records[-1]

    def __len__(self) -> int:
        return len(self.records)

    def __eq__(self, other) -> bool:
        return isinstance(other, RunTrace) and self.records == other.records


@dataclass
class VariantHooks:
    """Strategy hooks that variants plug into the per-bat update flow.

    ``beta``     replaces the uniform draw feeding the frequency sample.
    ``candidate``replaces the plain ``position + velocity`` move; receives
                 ``(position, new_velocity, rng)`` and returns the candidate.
    ``quantize`` snaps a candidate onto the variant's encoding (e.g. bits)
                 after boundary handling; also applied to initial positions.
    """

    beta: Optional[Callable[[np.random.Generator], float]] = None
    candidate: Optional[Callable[[np.ndarray, np.ndarray, np.random.Generator], np.ndarray]] = None
    quantize: Optional[Callable[[np.ndarray], np.ndarray]] = None


# ---------------------------------------------------------------------------
# Update operations
# ---------------------------------------------------------------------------


def sample_frequency(beta: float, f_min: float, f_max: float) -> float:
    """Map a unit draw onto the frequency band: ``f_min + (f_max - f_min) * beta``."""
    beta = check_scalar("beta", beta, ge=0.0, le=1.0)
    f_min = check_scalar("f_min", f_min)
    f_max = check_scalar("f_max", f_max, ge=f_min)
    return f_min + (f_max - f_min) * beta


def update_velocity(
    v_prev: np.ndarray,
    x_prev: np.ndarray,
    x_best: np.ndarray,
    f: float,
    attraction_sign: str = "paper",
) -> np.ndarray:
    """Velocity update ``v + (x - best) * f`` (or the reversed-sign form)."""
    v_prev = check_vector("v_prev", v_prev)
    x_prev = check_vector("x_prev", x_prev)
    x_best = check_vector("x_best", x_best)
    check_same_length([("v_prev", v_prev), ("x_prev", x_prev), ("x_best", x_best)])
    check_choice("attraction_sign", attraction_sign, ATTRACTION_SIGNS)
    if attraction_sign == "paper":
        return v_prev + (x_prev - x_best) * f
    return v_prev + (x_best - x_prev) * f


def update_position(x_prev: np.ndarray, v: np.ndarray) -> np.ndarray:
    """Position update ``x + v`` (before boundary handling)."""
    x_prev = check_vector("x_prev", x_prev)
    v = check_vector("v", v)
    check_same_length([("x_prev", x_prev), ("v", v)])
    return x_prev + v


def loudness_step(loudness: float, alpha: float) -> float:
    """Geometric loudness decay ``alpha * A``, akin to an annealing cooling factor."""
    loudness = check_scalar("loudness", loudness, ge=0.0)
    alpha = check_scalar("alpha", alpha, gt=0.0, le=1.0)
    return alpha * loudness


def pulse_rate_at(r0: float, gamma: float, t: int) -> float:
    """Saturating pulse-rate schedule ``r0 * (1 - exp(-gamma * t))``.

    Monotone non-decreasing in ``t`` with limit ``r0``.
    """
    r0 = check_scalar("r0", r0, ge=0.0, le=1.0)
    gamma = check_scalar("gamma", gamma, gt=0.0)
    t = check_int("t", t, ge=0)
    return r0 * (1.0 - math.exp(-gamma * t))


def local_search_step(x_best: np.ndarray, mean_loudness: float, epsilon: np.ndarray) -> np.ndarray:
    """Random walk around the best solution, scaled by the population's mean loudness.

    The step magnitude contracts as loudness decays, which is what makes the
    search zoom into promising regions over time.
    """
    x_best = check_vector("x_best", x_best)
    mean_loudness = check_scalar("mean_loudness", mean_loudness, ge=0.0)
    epsilon = check_vector("epsilon", epsilon, length=len(x_best))
    return x_best + epsilon * mean_loudness


def accept_candidate(candidate_fitness: float, current_fitness: float, u: float, loudness: float) -> bool:
    """Accept iff the gate draw falls below the loudness and the move is no worse."""
    u = check_scalar("u", u, ge=0.0, lt=1.0)
    loudness = check_scalar("loudness", loudness, ge=0.0)
    return bool(u < loudness and candidate_fitness <= current_fitness)


def apply_bounds(x: np.ndarray, lower: np.ndarray, upper: np.ndarray, mode: str = "clamp") -> np.ndarray:
    """Force a position back into the box, by clamping or by reflecting overshoot."""
    x = np.asarray(x, dtype=np.float64)
    lower, upper = check_box(lower, upper)
    check_choice("mode", mode, BOUND_MODES)
    if mode == "clamp":
        return np.clip(x, lower, upper)
    # Reflection folds any overshoot back with a triangle wave of period 2*width,
    # so arbitrarily large excursions still land inside the box.
    width = upper - lower
    y = np.mod(x - lower, 2.0 * width)
    y = np.where(y > width, 2.0 * width - y, y)
    return lower + y


# ---------------------------------------------------------------------------
# Engine
# ---------------------------------------------------------------------------


def _evaluate(problem: Problem, x: np.ndarray, bat_index: int) -> float:
    try:
        return problem.evaluate(x)
    except Exception as exc:  # objective failures carry the offending index
        raise ObjectiveEvaluationError(bat_index, exc) from exc


def initialize_swarm(problem: Problem, config: BaConfig, rng: np.random.Generator) -> SwarmState:
    """Build the iteration-0 population.

    Positions are uniform in the box, velocities zero, frequencies uniform
    in the configured band, loudness at its initial value, and pulse rates
    at the schedule's t=0 value of zero. Draw order: the (n_bats, d)
    position matrix first, then the n_bats frequency vector.
    """
    n, d = config.n_bats, problem.dimension
    positions = rng.uniform(problem.lower_bounds, problem.upper_bounds, size=(n, d))
    frequencies = rng.uniform(config.f_min, config.f_max, size=n)

    hooks = _resolve_hooks(config, problem)
    bats = []
    for i in range(n):
        x = positions[i]
        if hooks is not None and hooks.quantize is not None:
            x = hooks.quantize(x)
        bats.append(
            Bat(
                position=x,
                velocity=np.zeros(d),
                frequency=float(frequencies[i]),
                loudness=config.initial_loudness,
                pulse_rate=pulse_rate_at(config.initial_pulse_rate, config.gamma, 0),
                initial_pulse_rate=config.initial_pulse_rate,
                fitness=_evaluate(problem, x, i),
            )
        )

    best_index = min(range(n), key=lambda i: bats[i].fitness)
    return SwarmState(
        bats=bats,
        best_position=bats[best_index].position.copy(),
        best_fitness=bats[best_index].fitness,
        iteration=0,
    )


def step(
    state: SwarmState,
    problem: Problem,
    config: BaConfig,
    rng: np.random.Generator,
    hooks: Optional[VariantHooks] = None,
) -> SwarmState:
    """Advance the swarm by one iteration and return the new state.

    Bats update sequentially, so later bats in the same iteration already
    see improvements found by earlier ones. Per-bat flow and draw order:

    1. frequency from a unit draw (or the variant's ``beta`` hook),
    2. velocity update against the current best,
    3. candidate position ``x + v`` (or the variant's ``candidate`` hook),
    4. one gate draw; if it exceeds the bat's pulse rate, the candidate is
       replaced by a local walk around the best with a fresh uniform
       [-1, 1]^d perturbation scaled by the population's mean loudness,
    5. boundary handling (and the variant's ``quantize`` hook, if any),
    6. evaluation and one acceptance draw: the move commits only if the
       draw is below the bat's loudness and the candidate is no worse;
       on acceptance the loudness decays and the pulse rate is refreshed
       from the schedule at the new iteration number.

    The global best is updated from every evaluation, accepted or not, on
    strict improvement only (ties keep the incumbent).
    """
    new = state.copy()
    bats = new.bats
    n = len(bats)
    t_next = state.iteration + 1

    # Hot path: the arithmetic below inlines sample_frequency,
    # update_velocity, update_position, local_search_step, apply_bounds,
    # and accept_candidate with the identical operation order, skipping
    # their per-call argument validation (the state is engine-owned and
    # already valid). Any drift from the public operations is a bug;
    # the step-replay test asserts bit-for-bit agreement.
    f_min, f_span = config.f_min, config.f_max - config.f_min
    lower, upper = problem.lower_bounds, problem.upper_bounds
    reversed_pull = config.attraction_sign == "reversed"
    clamp = config.bound_mode == "clamp"
    if not clamp:
        width = upper - lower
        two_width = 2.0 * width
    beta_hook = hooks.beta if hooks is not None else None
    candidate_hook = hooks.candidate if hooks is not None else None
    quantize = hooks.quantize if hooks is not None else None

    for i in range(n):
        bat = bats[i]
        beta = beta_hook(rng) if beta_hook is not None else float(rng.random())
        frequency = f_min + f_span * beta
        if reversed_pull:
            velocity = bat.velocity + (new.best_position - bat.position) * frequency
        else:
            velocity = bat.velocity + (bat.position - new.best_position) * frequency

        if candidate_hook is not None:
            candidate = candidate_hook(bat.position, velocity, rng)
        else:
            candidate = bat.position + velocity

        if rng.random() > bat.pulse_rate:
            epsilon = rng.uniform(-1.0, 1.0, size=problem.dimension)
            candidate = new.best_position + epsilon * new.mean_loudness()

        if clamp:
            candidate = np.minimum(np.maximum(candidate, lower), upper)
        else:
            y = np.mod(candidate - lower, two_width)
            candidate = lower + np.where(y > width, two_width - y, y)
        if quantize is not None:
            candidate = quantize(candidate)

        candidate_fitness = _evaluate(problem, candidate, i)
        u = float(rng.random())

        bat.frequency = frequency
        bat.velocity = velocity
        if u < bat.loudness and candidate_fitness <= bat.fitness:
            bat.position = candidate
            bat.fitness = candidate_fitness
            bat.loudness = max(loudness_step(bat.loudness, config.alpha), config.min_loudness)
            bat.pulse_rate = pulse_rate_at(bat.initial_pulse_rate, config.gamma, t_next)

        if candidate_fitness < new.best_fitness:
            new.best_fitness = candidate_fitness
            new.best_position = candidate.copy()

    new.iteration = t_next
    return new


def _resolve_hooks(config: BaConfig, problem: Problem) -> Optional[VariantHooks]:
    if config.variant == "standard":
        return None
    from .variants import make_hooks  # deferred: variants builds on this module

    return make_hooks(config, problem)


def _record(trace: RunTrace, state: SwarmState, n_bats: int) -> None:
    trace.append(
        TraceRecord(
            iteration=state.iteration,
            best_fitness=state.best_fitness,
            mean_loudness=state.mean_loudness(),
            mean_pulse_rate=state.mean_pulse_rate(),
            evaluations=n_bats * (state.iteration + 1),
        )
    )


def run(
    problem: Problem,
    config: BaConfig,
    rng: Optional[np.random.Generator] = None,
    trace_every: int = 1,
) -> tuple:
    """Run the configured optimizer on ``problem``.

    Iterates until the iteration budget is exhausted or the best fitness
    reaches ``config.target_fitness`` (when set). Returns the final
    :class:`SwarmState` and the :class:`RunTrace`. The trace records the
    initialization plus every ``trace_every``-th iteration, always
    including the final one.

    ``rng`` defaults to a fresh stream seeded from ``config.seed``; batch
    drivers pass child streams instead.
    """
    trace_every = check_int("trace_every", trace_every, ge=1)
    if config.variant == "multiobjective":
        raise ValueError(
            "variant 'multiobjective' is a pipeline over scalarized runs; "
            "use batopt.variants.run_multiobjective"
        )
    if rng is None:
        rng = make_rng(config.seed)
    hooks = _resolve_hooks(config, problem)

    state = initialize_swarm(problem, config, rng)
    trace = RunTrace()
    _record(trace, state, config.n_bats)

    def reached_target(s: SwarmState) -> bool:
        return config.target_fitness is not None and s.best_fitness <= config.target_fitness

    while state.iteration < config.max_iterations and not reached_target(state):
        state = step(state, problem, config, rng, hooks)
        if state.iteration % trace_every == 0 or state.iteration == config.max_iterations:
            _record(trace, state, config.n_bats)

    if trace.final().iteration != state.iteration:  # early stop between thinned records
        _record(trace, state, config.n_bats)
    return state, trace
