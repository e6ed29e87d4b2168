"""Command-line harness: run experiment grids, summarize result CSVs, and run
the independent-oracle verification suite.

A JSON config file can supply any ``run`` option; explicit flags override
it.  Exit code is nonzero if any verification fails.
"""
from __future__ import annotations

import argparse
import json
import sys
import time

from . import checks, kernels
from .experiments import (
    ExperimentConfig,
    read_csv,
    resolve_concepts,
    rows_as_dicts,
    run_grid,
    summarize,
    write_csv,
    write_summary_json,
)
from .learner import Schedule

RUN_DEFAULTS = {
    "n": 4,
    "concepts": "all",
    "epsilon": [0.1],
    "delta": [0.1],
    "schedule": ["linear"],
    "reps": 50,
    "seed": 0,
    "workers": 1,
    "fixed_distribution": False,
    "out": "results.csv",
}


def _build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="qpaclearn")
    sub = parser.add_subparsers(dest="command", required=True)

    run = sub.add_parser("run", help="run a seeded experiment grid, write CSV + summary JSON")
    run.add_argument("--config", help="JSON file with run options (flags override)")
    run.add_argument("--n", type=int)
    run.add_argument("--concepts", help='"all", "random:K", or bit literals "1010,0111"')
    run.add_argument("--epsilon", type=float, nargs="+")
    run.add_argument("--delta", type=float, nargs="+")
    run.add_argument("--schedule", nargs="+", choices=[s.value for s in Schedule])
    run.add_argument("--reps", type=int)
    run.add_argument("--seed", type=int)
    run.add_argument("--workers", type=int)
    run.add_argument("--fixed-distribution", action="store_true", default=None)
    run.add_argument("--out", help="output CSV path (summary goes next to it)")

    summ = sub.add_parser("summarize", help="aggregate a results CSV into JSON")
    summ.add_argument("--in", dest="input", required=True)
    summ.add_argument("--out", required=True)

    ver = sub.add_parser("verify", help="run the grid/quadrature/closed-form checks")
    ver.add_argument("--quick", action="store_true", help="smaller suites, same checks")
    return parser


def _merged_run_options(args: argparse.Namespace) -> dict:
    options = dict(RUN_DEFAULTS)
    if args.config:
        with open(args.config, encoding="utf-8") as fh:
            loaded = json.load(fh)
        unknown = set(loaded) - set(RUN_DEFAULTS)
        if unknown:
            raise SystemExit(f"unknown config keys: {sorted(unknown)}")
        options.update(loaded)
    for key in RUN_DEFAULTS:
        value = getattr(args, key.replace("-", "_"), None)
        if value is not None:
            options[key] = value
    return options


def _cmd_run(args: argparse.Namespace) -> int:
    options = _merged_run_options(args)
    concepts = options["concepts"]
    if isinstance(concepts, str):
        concepts = resolve_concepts(concepts, options["n"], options["seed"])
    config = ExperimentConfig(
        n=options["n"],
        concepts=tuple(concepts),
        epsilons=tuple(options["epsilon"]),
        deltas=tuple(options["delta"]),
        schedules=tuple(Schedule(s) for s in options["schedule"]),
        reps=options["reps"],
        master_seed=options["seed"],
        workers=options["workers"],
        fixed_distribution=bool(options["fixed_distribution"]),
    )
    out = options["out"]
    print(f"backend={kernels.backend_name()} rows={config.row_count()} out={out}", file=sys.stderr)
    t0 = time.perf_counter()
    rows = write_csv(run_grid(config), out)
    elapsed = time.perf_counter() - t0
    summary_path = out.rsplit(".", 1)[0] + "_summary.json"
    write_summary_json(summarize(rows_as_dicts(rows)), summary_path)
    mean_ms = sum(r.wall_time_ms for r in rows) / len(rows)
    print(
        f"wrote {len(rows)} rows in {elapsed:.1f}s (mean {mean_ms:.1f} ms/run); "
        f"summary at {summary_path}",
        file=sys.stderr,
    )
    return 0


def _cmd_summarize(args: argparse.Namespace) -> int:
    write_summary_json(summarize(read_csv(args.input)), args.out)
    return 0


def _cmd_verify(args: argparse.Namespace) -> int:
    quick = args.quick
    failures = 0

    bad = checks.lemma_counterexamples(n_points=2001 if quick else 20001)
    ok = bad == 0
    failures += not ok
    print(f"[{'PASS' if ok else 'FAIL'}] threshold-guarantee grid: {bad} counterexamples")

    dev = checks.posterior_max_deviation(max_shots=32 if quick else 64)
    ok = dev < 1e-10
    failures += not ok
    print(f"[{'PASS' if ok else 'FAIL'}] stop confidence vs quadrature: max dev {dev:.2e}")

    ok = checks.posterior_bound_holds(max_shots=512 if quick else 4096)
    failures += not ok
    print(f"[{'PASS' if ok else 'FAIL'}] stop confidence lower bound 1 - 1/sqrt(pi N)")

    dev = checks.amplification_max_deviation(n_setups=40 if quick else 200)
    ok = dev < 1e-9
    failures += not ok
    print(f"[{'PASS' if ok else 'FAIL'}] amplified probability vs closed form: max dev {dev:.2e}")

    return 1 if failures else 0


def main(argv: list[str] | None = None) -> int:
    args = _build_parser().parse_args(argv)
    if args.command == "run":
        return _cmd_run(args)
    if args.command == "summarize":
        return _cmd_summarize(args)
    return _cmd_verify(args)


if __name__ == "__main__":
    sys.exit(main())
