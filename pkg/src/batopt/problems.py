"""Benchmark objective suite with known optima and conventional box bounds."""

from __future__ import annotations

from dataclasses import dataclass
from typing import Callable

import numpy as np

from ._validation import check_box, check_int
from .core import Problem

__all__ = [
    "sphere",
    "rosenbrock",
    "rastrigin",
    "ackley",
    "schaffer_bi_objective",
    "BenchmarkSpec",
    "MultiObjectiveProblem",
    "benchmark_names",
    "multiobjective_names",
    "get_benchmark",
    "get_multiobjective",
]


def sphere(x) -> float:
    """Sum of squares; minimum 0 at the origin."""
    x = np.asarray(x, dtype=np.float64)
    return float(np.sum(x * x))


def rosenbrock(x) -> float:
    """Banana valley, minimum 0 at all-ones; needs at least 2 dimensions."""
    x = np.asarray(x, dtype=np.float64)
    if x.shape[0] < 2:
        raise ValueError(f"rosenbrock needs dimension >= 2, got {x.shape[0]}")
    head, tail = x[:-1], x[1:]
    return float(np.sum(100.0 * (tail - head * head) ** 2 + (1.0 - head) ** 2))


def rastrigin(x) -> float:
    """Highly multimodal cosine lattice; minimum 0 at the origin."""
    x = np.asarray(x, dtype=np.float64)
    d = x.shape[0]
    return float(10.0 * d + np.sum(x * x - 10.0 * np.cos(2.0 * np.pi * x)))


def ackley(x) -> float:
    """Exponential well with cosine ripples; minimum 0 at the origin."""
    x = np.asarray(x, dtype=np.float64)
    d = x.shape[0]
    radial = -20.0 * np.exp(-0.2 * np.sqrt(np.sum(x * x) / d))
    ripple = -np.exp(np.sum(np.cos(2.0 * np.pi * x)) / d)
    return float(radial + ripple + 20.0 + np.e)


def schaffer_bi_objective(x) -> tuple:
    """Convex bi-objective pair (x^2, (x-2)^2); Pareto-optimal on [0, 2]."""
    x = float(np.asarray(x, dtype=np.float64).reshape(()))
    return (x * x, (x - 2.0) * (x - 2.0))


@dataclass(frozen=True)
class BenchmarkSpec:
    """A registered single-objective benchmark at a concrete dimension."""

    name: str
    dimension: int
    lower_bounds: np.ndarray
    upper_bounds: np.ndarray
    known_optimum_position: np.ndarray
    known_optimum_value: float
    problem: Problem

    def __post_init__(self):
        residual = abs(self.problem.evaluate(self.known_optimum_position) - self.known_optimum_value)
        if residual > 1e-12:
            raise ValueError(
                f"benchmark {self.name!r} fails its optimum self-check: residual {residual!r}"
            )


@dataclass(frozen=True)
class MultiObjectiveProblem:
    """Box-constrained problem with a vector-valued objective (minimization)."""

    dimension: int
    lower_bounds: np.ndarray
    upper_bounds: np.ndarray
    objectives: Callable[[np.ndarray], np.ndarray]
    n_objectives: int

    def __post_init__(self):
        check_int("dimension", self.dimension, ge=1)
        check_int("n_objectives", self.n_objectives, ge=2)
        lower, upper = check_box(self.lower_bounds, self.upper_bounds)
        object.__setattr__(self, "lower_bounds", lower)
        object.__setattr__(self, "upper_bounds", upper)

    def evaluate(self, x: np.ndarray) -> np.ndarray:
        return np.asarray(self.objectives(x), dtype=np.float64)


# name -> (objective, (low, high), optimum position builder, optimum value, min dimension)
_SINGLE = {
    "sphere": (sphere, (-5.0, 10.0), np.zeros, 0.0, 1),
    "rosenbrock": (rosenbrock, (-5.0, 10.0), np.ones, 0.0, 2),
    "rastrigin": (rastrigin, (-5.12, 5.12), np.zeros, 0.0, 1),
    "ackley": (ackley, (-32.768, 32.768), np.zeros, 0.0, 1),
}

_MULTI = {
    "schaffer": (lambda x: np.asarray(schaffer_bi_objective(x)), (-10.0, 10.0), 1, 2),
}


def benchmark_names() -> list:
    return sorted(_SINGLE)


def multiobjective_names() -> list:
    return sorted(_MULTI)


def get_benchmark(name: str, dimension: int) -> BenchmarkSpec:
    """Build a registered benchmark; the optimum self-check runs on every call."""
    if name not in _SINGLE:
        known = ", ".join(sorted(_SINGLE) + sorted(_MULTI))
        raise KeyError(f"unknown problem {name!r} (known problems: {known})")
    objective, (low, high), optimum_at, optimum_value, min_dim = _SINGLE[name]
    dimension = check_int("dimension", dimension, ge=min_dim)
    lower = np.full(dimension, low)
    upper = np.full(dimension, high)
    return BenchmarkSpec(
        name=name,
        dimension=dimension,
        lower_bounds=lower,
        upper_bounds=upper,
        known_optimum_position=optimum_at(dimension),
        known_optimum_value=optimum_value,
        problem=Problem(dimension=dimension, lower_bounds=lower, upper_bounds=upper, objective=objective),
    )


def get_multiobjective(name: str) -> MultiObjectiveProblem:
    """Build a registered multiobjective problem (fixed dimension)."""
    if name not in _MULTI:
        known = ", ".join(sorted(_MULTI))
        raise KeyError(f"unknown multiobjective problem {name!r} (known: {known})")
    objectives, (low, high), dimension, n_objectives = _MULTI[name]
    return MultiObjectiveProblem(
        dimension=dimension,
        lower_bounds=np.full(dimension, low),
        upper_bounds=np.full(dimension, high),
        objectives=objectives,
        n_objectives=n_objectives,
    )
