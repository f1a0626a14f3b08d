"""Pluggable variant mechanisms for the bat-algorithm engine.

Four strategies, each isolated behind small pure operations plus a hook
factory that wires them into the engine's per-bat flow:

* heavy-tailed (Levy-flight) jumps replacing the plain position move for a
  configurable fraction of bats,
* a chaotic (logistic-map) sequence replacing the uniform draw behind the
  frequency sample,
* binary position encoding driven by a sigmoid transfer of the velocity,
* weighted-sum scalarization of multiobjective problems, swept over a
  deterministic weight lattice and reduced to a non-dominated front.
"""

from __future__ import annotations

import math
from dataclasses import dataclass, field, replace
from itertools import combinations_with_replacement
from typing import Optional

import numpy as np

from ._validation import check_int, check_scalar, check_vector
from .core import BaConfig, Problem, VariantHooks, run, update_position
from .problems import MultiObjectiveProblem
from .rng import child_rng

__all__ = [
    "LevyConfig",
    "ChaosState",
    "BinaryBat",
    "ScalarizationWeights",
    "WeightedRunResult",
    "MultiObjectiveResult",
    "mantegna_sigma",
    "levy_step",
    "chaos_next",
    "chaotic_parameter",
    "transfer_probability",
    "binary_update",
    "scalarize",
    "pareto_filter",
    "weight_lattice",
    "scalarized_problem",
    "run_multiobjective",
    "make_hooks",
]


# ---------------------------------------------------------------------------
# Levy flights (Mantegna generator)
# ---------------------------------------------------------------------------


@dataclass(frozen=True)
class LevyConfig:
    """Heavy-tailed step distribution parameters.

    ``stability_exponent`` in (1, 2]; 2 is the Gaussian limit. ``scale``
    multiplies the raw steps; 0 degenerates to no movement.
    """

    stability_exponent: float = 1.5
    scale: float = 1.0

    def __post_init__(self):
        check_scalar("stability_exponent", self.stability_exponent, gt=1.0, le=2.0)
        check_scalar("scale", self.scale, ge=0.0)


def mantegna_sigma(exponent: float) -> float:
    """Normalizer sigma_u of the two-Gaussian-ratio heavy-tail generator.

    ``sigma_u = [Gamma(1+b) sin(pi b / 2) / (Gamma((1+b)/2) b 2^((b-1)/2))]^(1/b)``.
    """
    b = check_scalar("exponent", exponent, gt=1.0, le=2.0)
    num = math.gamma(1.0 + b) * math.sin(math.pi * b / 2.0)
    den = math.gamma((1.0 + b) / 2.0) * b * 2.0 ** ((b - 1.0) / 2.0)
    return (num / den) ** (1.0 / b)


def levy_step(config: LevyConfig, dimension: int, rng: np.random.Generator) -> np.ndarray:
    """Draw one heavy-tailed step vector.

    Uses the two-Gaussian ratio ``u / |v|^(1/b)`` with ``u ~ N(0, sigma_u^2)``
    drawn before ``v ~ N(0, 1)``. The exponent-2 limit is sampled as a plain
    Gaussian (the ratio construction degenerates there). ``scale == 0``
    returns zeros without consuming draws.
    """
    dimension = check_int("dimension", dimension, ge=1)
    if config.scale == 0.0:
        return np.zeros(dimension)
    if config.stability_exponent == 2.0:
        return config.scale * rng.standard_normal(dimension)
    sigma = mantegna_sigma(config.stability_exponent)
    u = rng.normal(0.0, sigma, size=dimension)
    v = rng.normal(0.0, 1.0, size=dimension)
    return config.scale * u / np.abs(v) ** (1.0 / config.stability_exponent)


# ---------------------------------------------------------------------------
# Chaotic parameter sequence
# ---------------------------------------------------------------------------


@dataclass(frozen=True)
class ChaosState:
    """Current value of an iterated chaotic map on [0, 1]."""

    value: float = 0.7
    map_kind: str = "logistic"

    def __post_init__(self):
        check_scalar("value", self.value, ge=0.0, le=1.0)
        if self.map_kind != "logistic":
            raise ValueError(f"map_kind must be 'logistic', got {self.map_kind!r}")


def chaos_next(state: ChaosState) -> ChaosState:
    """Advance the logistic map at full parameter: ``x' = 4 x (1 - x)``."""
    x = check_scalar("value", state.value, ge=0.0, le=1.0)
    return ChaosState(value=4.0 * x * (1.0 - x), map_kind=state.map_kind)


def chaotic_parameter(base: float, state: ChaosState) -> float:
    """Value to use in place of a uniform parameter draw.

    ``base`` is the draw being replaced, accepted for interface symmetry;
    the chaotic value substitutes it outright. The caller advances the
    state afterwards via :func:`chaos_next`.
    """
    base = float(base)
    if math.isnan(base) or math.isinf(base):
        raise ValueError(f"base must be finite, got {base}")
    return state.value


# ---------------------------------------------------------------------------
# Binary encoding
# ---------------------------------------------------------------------------


@dataclass
class BinaryBat:
    """Bit-vector position with a real-valued velocity."""

    bits: np.ndarray
    velocity: np.ndarray

    def __post_init__(self):
        bits = check_vector("bits", self.bits)
        if not np.all((bits == 0.0) | (bits == 1.0)):
            raise ValueError("bits must contain only 0 and 1")
        self.bits = bits
        self.velocity = check_vector("velocity", self.velocity, length=len(bits))


def transfer_probability(v):
    """Sigmoid map from velocity to bit-set probability, ``1 / (1 + exp(-v))``.

    Strictly increasing and symmetric about (0, 0.5). Computed in the
    numerically stable split form, so saturation at float limits yields
    exactly 0.0 or 1.0 instead of overflowing. Accepts scalars or arrays.
    """
    arr = np.asarray(v, dtype=np.float64)
    out = np.empty_like(arr)
    pos = arr >= 0
    out[pos] = 1.0 / (1.0 + np.exp(-arr[pos]))
    ev = np.exp(arr[~pos])
    out[~pos] = ev / (1.0 + ev)
    return float(out) if out.ndim == 0 else out


def binary_update(bat: BinaryBat, u: np.ndarray) -> BinaryBat:
    """Resample bits: bit j set iff ``u_j < transfer_probability(velocity_j)``."""
    u = check_vector("u", u, length=len(bat.bits))
    bits = np.where(u < transfer_probability(bat.velocity), 1.0, 0.0)
    return BinaryBat(bits=bits, velocity=bat.velocity.copy())


# ---------------------------------------------------------------------------
# Multiobjective scalarization
# ---------------------------------------------------------------------------


@dataclass(frozen=True)
class ScalarizationWeights:
    """Non-negative objective weights summing to one."""

    weights: np.ndarray

    def __post_init__(self):
        w = check_vector("weights", self.weights)
        if np.any(w < 0.0):
            raise ValueError("weights must be non-negative")
        if abs(float(np.sum(w)) - 1.0) > 1e-12:
            raise ValueError(f"weights must sum to 1, got {float(np.sum(w))!r}")
        object.__setattr__(self, "weights", w)


def scalarize(objectives: np.ndarray, weights: ScalarizationWeights) -> float:
    """Weighted sum of objective values."""
    obj = check_vector("objectives", objectives, length=len(weights.weights))
    return float(np.dot(obj, weights.weights))


def _non_dominated_mask(arr: np.ndarray) -> np.ndarray:
    mask = np.empty(arr.shape[0], dtype=bool)
    for i in range(arr.shape[0]):
        no_worse = np.all(arr <= arr[i], axis=1)
        better_somewhere = np.any(arr < arr[i], axis=1)
        mask[i] = not np.any(no_worse & better_somewhere)
    return mask


def pareto_filter(points) -> list:
    """Keep exactly the points not dominated by any other (minimization).

    A point dominates another when it is no worse in every objective and
    strictly better in at least one. Input order is preserved; duplicates
    of a non-dominated point are all kept.
    """
    pts = [check_vector("point", p) for p in points]
    if not pts:
        return []
    if len({p.shape[0] for p in pts}) > 1:
        raise ValueError("all objective vectors must have the same length")
    arr = np.vstack(pts)
    mask = _non_dominated_mask(arr)
    return [arr[i].copy() for i in range(arr.shape[0]) if mask[i]]


def weight_lattice(n_objectives: int, resolution: int) -> list:
    """Deterministic simplex lattice of weight vectors, corners included.

    For two objectives this is ``resolution`` evenly spaced convex
    combinations from (1, 0) to (0, 1); in general every composition of
    ``resolution - 1`` lattice steps over the objectives, in lexicographic
    order.
    """
    m = check_int("n_objectives", n_objectives, ge=2)
    k = check_int("resolution", resolution, ge=2)
    steps = k - 1
    lattice = []
    for split in combinations_with_replacement(range(m), steps):
        counts = np.bincount(np.asarray(split, dtype=int), minlength=m)
        lattice.append(ScalarizationWeights(counts / steps))
    return lattice


def scalarized_problem(mo_problem: MultiObjectiveProblem, weights: ScalarizationWeights) -> Problem:
    """Single-objective view of a multiobjective problem under fixed weights."""

    def objective(x: np.ndarray) -> float:
        return scalarize(mo_problem.evaluate(x), weights)

    return Problem(
        dimension=mo_problem.dimension,
        lower_bounds=mo_problem.lower_bounds,
        upper_bounds=mo_problem.upper_bounds,
        objective=objective,
    )


@dataclass(frozen=True)
class WeightedRunResult:
    """Outcome of one scalarized run: the weights, the minimizer, its objectives."""

    weights: np.ndarray
    position: np.ndarray
    objectives: np.ndarray


@dataclass
class MultiObjectiveResult:
    """All weighted-run outcomes plus the non-dominated subset."""

    results: list = field(default_factory=list)
    front: list = field(default_factory=list)


def run_multiobjective(mo_problem: MultiObjectiveProblem, config: BaConfig) -> MultiObjectiveResult:
    """Sweep scalarized runs over the weight lattice and filter the union.

    Run ``i`` optimizes the weighted sum for lattice weight ``i`` with an
    independent child stream derived from ``(config.seed, i)``, so results
    do not depend on execution order. The front holds the weighted-run
    outcomes whose objective vectors survive non-dominated filtering.
    """
    lattice = weight_lattice(mo_problem.n_objectives, config.n_weights)
    sub_config = replace(config, variant="standard")
    results = []
    for i, weights in enumerate(lattice):
        problem = scalarized_problem(mo_problem, weights)
        state, _ = run(problem, sub_config, rng=child_rng(config.seed, i))
        results.append(
            WeightedRunResult(
                weights=weights.weights.copy(),
                position=state.best_position.copy(),
                objectives=np.asarray(mo_problem.evaluate(state.best_position), dtype=np.float64),
            )
        )
    mask = _non_dominated_mask(np.vstack([r.objectives for r in results]))
    front = [r for r, keep in zip(results, mask) if keep]
    return MultiObjectiveResult(results=results, front=front)


# ---------------------------------------------------------------------------
# Hook wiring
# ---------------------------------------------------------------------------


def make_hooks(config: BaConfig, problem: Problem) -> Optional[VariantHooks]:
    """Build the engine hooks for ``config.variant``.

    Returns None for the standard algorithm. The multiobjective variant is
    a pipeline over whole runs, not a per-step hook, and is rejected here.
    """
    if config.variant == "standard":
        return None

    if config.variant == "levy":
        mean_width = float(np.mean(problem.upper_bounds - problem.lower_bounds))
        levy_config = LevyConfig(
            stability_exponent=config.levy_exponent,
            scale=config.levy_scale * mean_width,
        )

        def levy_candidate(x_prev, velocity, rng):
            # one gate draw per bat keeps the stream layout fixed
            if rng.random() < config.levy_fraction:
                return x_prev + levy_step(levy_config, x_prev.shape[0], rng)
            return update_position(x_prev, velocity)

        return VariantHooks(candidate=levy_candidate)

    if config.variant == "chaotic":
        state = ChaosState(value=config.chaos_start)

        def chaotic_beta(rng):
            nonlocal state
            beta = chaotic_parameter(0.0, state)
            state = chaos_next(state)
            return beta

        return VariantHooks(beta=chaotic_beta)

    if config.variant == "binary":
        if np.any(problem.lower_bounds > 0.0) or np.any(problem.upper_bounds < 1.0):
            raise ValueError(
                "variant 'binary' searches bit vectors and needs the box to contain {0,1}^d"
            )

        def binary_candidate(x_prev, velocity, rng):
            u = rng.random(size=velocity.shape[0])
            return binary_update(BinaryBat(bits=x_prev, velocity=velocity), u).bits

        def to_bits(x):
            return np.where(x >= 0.5, 1.0, 0.0)

        return VariantHooks(candidate=binary_candidate, quantize=to_bits)

    raise ValueError(
        "variant 'multiobjective' has no per-step hooks; use run_multiobjective"
    )
