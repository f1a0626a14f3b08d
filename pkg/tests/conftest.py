"""Shared fixtures: the heavyweight 30-run batches are built once per session."""

import time

import pytest

from batopt import BaConfig, get_benchmark, run_batch

# The reference experiment setup used by the acceptance suite: 25 bats,
# 1000 iterations, library defaults otherwise, success target 1e-3 above
# the known optimum (never reached at this budget, so runs keep their
# full evaluation budget).
ACCEPTANCE_SEED = 42
ACCEPTANCE_CONFIG = BaConfig(
    n_bats=25,
    max_iterations=1000,
    seed=ACCEPTANCE_SEED,
    target_fitness=1e-3,
)
N_ACCEPTANCE_RUNS = 30


def _timed_batch(problem_name):
    spec = get_benchmark(problem_name, 10)
    start = time.perf_counter()
    summary, traces = run_batch(spec.problem, ACCEPTANCE_CONFIG, N_ACCEPTANCE_RUNS)
    elapsed = time.perf_counter() - start
    return {"spec": spec, "summary": summary, "traces": traces, "elapsed": elapsed}


@pytest.fixture(scope="session")
def sphere_batch():
    return _timed_batch("sphere")


@pytest.fixture(scope="session")
def rastrigin_batch():
    return _timed_batch("rastrigin")
