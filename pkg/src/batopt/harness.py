"""Multi-run experiment harness: batch statistics and machine-readable output.

Each run in a batch owns a private child stream derived from
``(config.seed, run_index)``, so batches are reproducible bit-for-bit and
independent of how many workers execute them. Wall-clock time is measured
and kept on the in-memory summary but deliberately left out of the
serialized form, which must be byte-identical across repeated executions.
"""

from __future__ import annotations

import io
import json
import time
from concurrent.futures import ThreadPoolExecutor
from dataclasses import asdict, dataclass
from typing import Optional

import numpy as np

from ._validation import check_int
from .core import BaConfig, Problem, RunTrace, TraceRecord, run
from .rng import child_rng

__all__ = [
    "RunSummary",
    "BatchError",
    "run_batch",
    "write_trace_csv",
    "read_trace_csv",
    "summary_to_dict",
    "write_summary_json",
    "read_summary_json",
]

TRACE_HEADER = "iteration,best_fitness,mean_loudness,mean_pulse_rate,evaluations"


class BatchError(RuntimeError):
    """Raised when a run inside a batch fails; carries the run index."""

    def __init__(self, run_index: int, cause: Exception):
        super().__init__(f"run {run_index} failed: {cause}")
        self.run_index = run_index


@dataclass
class RunSummary:
    """Aggregate statistics over the final best fitnesses of a batch.

    ``success_rate`` counts runs whose final best reached the configured
    target fitness; it is 0.0 when no target was set. ``wall_time_mean``
    is measured, not reproducible, and is excluded from serialization.
    """

    n_runs: int
    best: float
    worst: float
    mean: float
    std_dev: float
    success_rate: float
    evaluations_mean: float
    wall_time_mean: float


def run_batch(
    problem: Problem,
    config: BaConfig,
    n_runs: int,
    n_workers: int = 1,
    trace_every: int = 1,
) -> tuple:
    """Execute ``n_runs`` independent seeded runs and aggregate them.

    Returns ``(RunSummary, [RunTrace, ...])`` with traces ordered by run
    index. Results are identical for any ``n_workers``; a failing run
    aborts the batch with its index (the smallest failing index when
    several workers fail).
    """
    n_runs = check_int("n_runs", n_runs, ge=1)
    n_workers = check_int("n_workers", n_workers, ge=1)

    def one_run(index: int):
        start = time.perf_counter()
        state, trace = run(problem, config, rng=child_rng(config.seed, index), trace_every=trace_every)
        return state.best_fitness, trace, time.perf_counter() - start

    outcomes = [None] * n_runs
    failures = {}
    if n_workers == 1:
        for r in range(n_runs):
            try:
                outcomes[r] = one_run(r)
            except Exception as exc:
                raise BatchError(r, exc) from exc
    else:
        with ThreadPoolExecutor(max_workers=n_workers) as pool:
            futures = {r: pool.submit(one_run, r) for r in range(n_runs)}
        for r, future in futures.items():
            exc = future.exception()
            if exc is not None:
                failures[r] = exc
            else:
                outcomes[r] = future.result()
        if failures:
            first = min(failures)
            raise BatchError(first, failures[first]) from failures[first]

    finals = np.array([o[0] for o in outcomes])
    traces = [o[1] for o in outcomes]
    times = [o[2] for o in outcomes]

    if config.target_fitness is None:
        success_rate = 0.0
    else:
        success_rate = float(np.mean(finals <= config.target_fitness))

    summary = RunSummary(
        n_runs=n_runs,
        best=float(np.min(finals)),
        worst=float(np.max(finals)),
        mean=float(np.mean(finals)),
        std_dev=float(np.std(finals, ddof=1)) if n_runs > 1 else 0.0,
        success_rate=success_rate,
        evaluations_mean=float(np.mean([t.final().evaluations for t in traces])),
        wall_time_mean=float(np.mean(times)),
    )
    return summary, traces


# ---------------------------------------------------------------------------
# Serialization
# ---------------------------------------------------------------------------


def _open_sink(destination, mode):
    if hasattr(destination, "write"):
        return destination, False
    return open(destination, mode), True


def _write_text(destination, text: str) -> None:
    sink, opened = _open_sink(destination, "w")
    try:
        data = text.encode("utf-8") if isinstance(sink, (io.RawIOBase, io.BufferedIOBase)) else text
        sink.write(data)
    finally:
        if opened:
            sink.close()


def write_trace_csv(trace: RunTrace, destination) -> None:
    """Emit one trace as CSV: fixed header, one row per record, ``\\n`` endings.

    Floats are written in shortest round-trip decimal form, so
    :func:`read_trace_csv` recovers the trace exactly.
    """
    lines = [TRACE_HEADER]
    for r in trace.records:
        lines.append(
            f"{r.iteration},{r.best_fitness!r},{r.mean_loudness!r},{r.mean_pulse_rate!r},{r.evaluations}"
        )
    _write_text(destination, "\n".join(lines) + "\n")


def read_trace_csv(source) -> RunTrace:
    """Parse the CSV format written by :func:`write_trace_csv`."""
    if hasattr(source, "read"):
        text = source.read()
        if isinstance(text, bytes):
            text = text.decode("utf-8")
    else:
        with open(source, "r", encoding="utf-8") as fh:
            text = fh.read()
    lines = [line for line in text.split("\n") if line]
    if not lines or lines[0] != TRACE_HEADER:
        raise ValueError(f"not a trace CSV: expected header {TRACE_HEADER!r}")
    trace = RunTrace()
    for line in lines[1:]:
        it, best, loud, pulse, evals = line.split(",")
        trace.append(
            TraceRecord(
                iteration=int(it),
                best_fitness=float(best),
                mean_loudness=float(loud),
                mean_pulse_rate=float(pulse),
                evaluations=int(evals),
            )
        )
    return trace


def summary_to_dict(summary: RunSummary, config: BaConfig) -> dict:
    """Deterministic dict form of a summary plus the full resolved config.

    Every configuration parameter is echoed so a result file alone is
    enough to reproduce the batch. Measured wall time is dropped; it is
    the one field that would differ between identical executions.
    """
    fields = asdict(summary)
    fields.pop("wall_time_mean")
    fields["config"] = asdict(config)
    return fields


def write_summary_json(summary: RunSummary, config: BaConfig, destination) -> None:
    """Serialize a summary as deterministic, sorted-key JSON."""
    payload = json.dumps(summary_to_dict(summary, config), indent=2, sort_keys=True)
    _write_text(destination, payload + "\n")


def read_summary_json(source) -> dict:
    """Parse a summary JSON file back into a plain dict."""
    if hasattr(source, "read"):
        text = source.read()
        if isinstance(text, bytes):
            text = text.decode("utf-8")
        return json.loads(text)
    with open(source, "r", encoding="utf-8") as fh:
        return json.load(fh)
