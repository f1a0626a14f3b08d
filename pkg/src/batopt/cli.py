"""Command-line experiment runner.

Exit codes: 0 success (including ``--help``), 1 usage error (bad flag,
bad value, unknown problem), 2 runtime error (failed objective, I/O).
All output is deterministic for fixed flags: the summary JSON carries no
timing, and traces derive from seeded streams only.
"""

from __future__ import annotations

import argparse
import json
import sys

from .core import ATTRACTION_SIGNS, BOUND_MODES, VARIANTS, BaConfig
from .harness import run_batch, write_summary_json, write_trace_csv
from .problems import benchmark_names, get_benchmark, get_multiobjective, multiobjective_names
from .variants import run_multiobjective

__all__ = ["build_parser", "cli_main", "main"]

DEFAULT_TARGET_MARGIN = 1e-3

# BaConfig field -> CLI flag, used to phrase validation errors.
_FIELD_FLAGS = {
    "n_bats": "--bats",
    "f_min": "--fmin",
    "f_max": "--fmax",
    "alpha": "--alpha",
    "gamma": "--gamma",
    "initial_loudness": "--loudness0",
    "initial_pulse_rate": "--pulse0",
    "max_iterations": "--iters",
    "target_fitness": "--target",
    "seed": "--seed",
    "bound_mode": "--bound-mode",
    "attraction_sign": "--attraction-sign",
    "variant": "--variant",
    "n_runs": "--runs",
    "trace_every": "--trace-every",
    "dimension": "--dim",
}


class _UsageError(Exception):
    pass


class _Parser(argparse.ArgumentParser):
    def error(self, message):  # argparse would sys.exit(2); we map usage errors to 1
        raise _UsageError(message)


def build_parser() -> argparse.ArgumentParser:
    parser = _Parser(
        prog="batopt",
        description="Run seeded bat-algorithm experiments on benchmark problems.",
    )
    parser.add_argument("--problem", required=True,
                        help=f"objective name ({', '.join(benchmark_names() + multiobjective_names())})")
    parser.add_argument("--dim", type=int, default=None,
                        help="problem dimension (default 10; fixed-dimension problems set their own)")
    parser.add_argument("--bats", type=int, default=25, help="population size")
    parser.add_argument("--iters", type=int, default=1000, help="iteration budget per run")
    parser.add_argument("--runs", type=int, default=1, help="independent runs in the batch")
    parser.add_argument("--seed", type=int, default=0, help="64-bit master seed")
    parser.add_argument("--alpha", type=float, default=0.9, help="loudness decay factor in (0, 1]")
    parser.add_argument("--gamma", type=float, default=0.9, help="pulse-rate growth constant > 0")
    parser.add_argument("--fmin", type=float, default=0.0, help="lower frequency bound")
    parser.add_argument("--fmax", type=float, default=2.0, help="upper frequency bound")
    parser.add_argument("--loudness0", type=float, default=1.0, help="initial loudness")
    parser.add_argument("--pulse0", type=float, default=0.5, help="pulse-rate ceiling in [0, 1]")
    parser.add_argument("--variant", default="standard", choices=list(VARIANTS),
                        help="algorithm variant")
    parser.add_argument("--bound-mode", default="clamp", choices=list(BOUND_MODES),
                        help="boundary handling")
    parser.add_argument("--attraction-sign", default="paper", choices=list(ATTRACTION_SIGNS),
                        help="sign of the velocity pull term")
    parser.add_argument("--trace-out", default=None, metavar="PATH",
                        help="write the first run's convergence trace as CSV")
    parser.add_argument("--summary-out", default=None, metavar="PATH",
                        help="write the summary JSON here instead of stdout")
    parser.add_argument("--trace-every", type=int, default=1, metavar="K",
                        help="record every K-th iteration in traces")
    parser.add_argument("--target", type=float, default=None,
                        help="stop runs at this fitness; default: known optimum + 1e-3 when available")
    return parser


def _usage_error(message: str) -> int:
    print(f"batopt: error: {message}", file=sys.stderr)
    return 1


def _flagged(message: str) -> str:
    """Rephrase a config ValueError so it names the offending CLI flag."""
    for field, flag in _FIELD_FLAGS.items():
        if message.startswith(field):
            return f"argument {flag}: {message}"
    return message


def cli_main(argv) -> int:
    """Parse flags, run the batch, write outputs; returns the exit code."""
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except _UsageError as exc:
        return _usage_error(str(exc))
    except SystemExit as exc:  # --help prints and stops with code 0
        return int(exc.code or 0)

    multiobjective = args.variant == "multiobjective"
    if (args.problem in multiobjective_names()) != multiobjective:
        if multiobjective:
            return _usage_error(
                f"argument --problem: {args.problem!r} is single-objective; "
                f"--variant multiobjective needs one of: {', '.join(multiobjective_names())}"
            )
        return _usage_error(
            f"argument --problem: {args.problem!r} is multiobjective; pass --variant multiobjective"
        )

    try:
        if multiobjective:
            mo_problem = get_multiobjective(args.problem)
            if args.dim is not None and args.dim != mo_problem.dimension:
                return _usage_error(
                    f"argument --dim: {args.problem} has fixed dimension {mo_problem.dimension}"
                )
            spec = None
        else:
            spec = get_benchmark(args.problem, 10 if args.dim is None else args.dim)
    except KeyError as exc:
        return _usage_error(f"argument --problem: {exc.args[0]}")
    except ValueError as exc:
        return _usage_error(f"argument --dim: {exc}")

    target = args.target
    if target is None and spec is not None:
        target = spec.known_optimum_value + DEFAULT_TARGET_MARGIN

    try:
        config = BaConfig(
            n_bats=args.bats,
            f_min=args.fmin,
            f_max=args.fmax,
            alpha=args.alpha,
            gamma=args.gamma,
            initial_loudness=args.loudness0,
            initial_pulse_rate=args.pulse0,
            max_iterations=args.iters,
            target_fitness=target,
            seed=args.seed,
            bound_mode=args.bound_mode,
            attraction_sign=args.attraction_sign,
            variant=args.variant,
        )
        n_runs = args.runs
        if n_runs < 1:
            raise ValueError(f"n_runs must be >= 1, got {n_runs}")
        if args.trace_every < 1:
            raise ValueError(f"trace_every must be >= 1, got {args.trace_every}")
    except ValueError as exc:
        return _usage_error(_flagged(str(exc)))

    try:
        if multiobjective:
            if args.trace_out is not None:
                return _usage_error("argument --trace-out: not available with --variant multiobjective")
            result = run_multiobjective(mo_problem, config)
            payload = json.dumps(_front_dict(result, config), indent=2, sort_keys=True) + "\n"
            if args.summary_out is None:
                sys.stdout.write(payload)
            else:
                with open(args.summary_out, "w", encoding="utf-8") as fh:
                    fh.write(payload)
            return 0

        summary, traces = run_batch(spec.problem, config, n_runs, trace_every=args.trace_every)
        if args.trace_out is not None:
            write_trace_csv(traces[0], args.trace_out)
        if args.summary_out is None:
            write_summary_json(summary, config, sys.stdout)
        else:
            write_summary_json(summary, config, args.summary_out)
        return 0
    except (OSError, RuntimeError) as exc:
        print(f"batopt: runtime error: {exc}", file=sys.stderr)
        return 2


def _front_dict(result, config: BaConfig) -> dict:
    from dataclasses import asdict

    return {
        "front": [
            {
                "weights": [float(w) for w in r.weights],
                "position": [float(x) for x in r.position],
                "objectives": [float(v) for v in r.objectives],
            }
            for r in result.front
        ],
        "n_weighted_runs": len(result.results),
        "config": asdict(config),
    }


def main() -> None:
    sys.exit(cli_main(sys.argv[1:]))


if __name__ == "__main__":
    main()
