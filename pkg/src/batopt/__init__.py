"""batopt: bat-algorithm optimization with variants, benchmarks, and a CLI."""

from .core import (
    BaConfig,
    Bat,
    ObjectiveEvaluationError,
    Problem,
    RunTrace,
    SwarmState,
    TraceRecord,
    VariantHooks,
    accept_candidate,
    apply_bounds,
    initialize_swarm,
    local_search_step,
    loudness_step,
    pulse_rate_at,
    run,
    sample_frequency,
    step,
    update_position,
    update_velocity,
)
from .estimator import BatAlgorithm
from .harness import (
    BatchError,
    RunSummary,
    read_summary_json,
    read_trace_csv,
    run_batch,
    summary_to_dict,
    write_summary_json,
    write_trace_csv,
)
from .problems import (
    BenchmarkSpec,
    MultiObjectiveProblem,
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
from .rng import child_rng, make_rng
from .variants import (
    BinaryBat,
    ChaosState,
    LevyConfig,
    MultiObjectiveResult,
    ScalarizationWeights,
    WeightedRunResult,
    binary_update,
    chaos_next,
    chaotic_parameter,
    levy_step,
    mantegna_sigma,
    pareto_filter,
    run_multiobjective,
    scalarize,
    scalarized_problem,
    transfer_probability,
    weight_lattice,
)

__version__ = "0.1.0"

__all__ = [
    "BaConfig",
    "Bat",
    "BatAlgorithm",
    "BatchError",
    "BenchmarkSpec",
    "BinaryBat",
    "ChaosState",
    "LevyConfig",
    "MultiObjectiveProblem",
    "MultiObjectiveResult",
    "ObjectiveEvaluationError",
    "Problem",
    "RunSummary",
    "RunTrace",
    "ScalarizationWeights",
    "SwarmState",
    "TraceRecord",
    "VariantHooks",
    "WeightedRunResult",
    "accept_candidate",
    "ackley",
    "apply_bounds",
    "benchmark_names",
    "binary_update",
    "chaos_next",
    "chaotic_parameter",
    "child_rng",
    "get_benchmark",
    "get_multiobjective",
    "initialize_swarm",
    "levy_step",
    "local_search_step",
    "loudness_step",
    "make_rng",
    "mantegna_sigma",
    "multiobjective_names",
    "pareto_filter",
    "pulse_rate_at",
    "rastrigin",
    "read_summary_json",
    "read_trace_csv",
    "rosenbrock",
    "run",
    "run_batch",
    "run_multiobjective",
    "sample_frequency",
    "scalarize",
    "scalarized_problem",
    "schaffer_bi_objective",
    "sphere",
    "step",
    "summary_to_dict",
    "transfer_probability",
    "update_position",
    "update_velocity",
    "weight_lattice",
    "write_summary_json",
    "write_trace_csv",
]
