"""Seeded experiment grids over (concept, epsilon, delta, schedule, repetition),
with CSV persistence and per-group summaries.

Every run's seed is a stable hash of the master seed and the grid
coordinates, so rows are reproducible independently of execution order and
worker count.  The product distribution is redrawn per (concept, repetition)
by default; ``fixed_distribution`` pins one distribution per concept
instead, for when the same oracle should be reused across repetitions.
"""
from __future__ import annotations

import hashlib
import json
import time
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass
from statistics import median
from typing import Iterable, Iterator, Sequence

import numpy as np

from .boolfunc import MAX_ARITY, bits_from_mask, check_mask, mask_from_bits, parity_anf
from .learner import LearnParams, Schedule, learn
from .oracle import ProductDistribution, build_oracle

CSV_HEADER = (
    "n,concept,epsilon,delta,schedule,rep,seed,final_error,"
    "updates,sampling_phases,oracle_calls,terminated_ok"
)


def derive_seed(master_seed: int, *coords) -> int:
    """Stable 64-bit seed from the master seed and arbitrary coordinates."""
    key = "|".join([str(master_seed)] + [repr(c) for c in coords])
    digest = hashlib.sha256(key.encode()).digest()
    return int.from_bytes(digest[:8], "little")


def resolve_concepts(spec: str, n: int, master_seed: int) -> tuple[int, ...]:
    """Parse a concept selection: "all", "random:K", or comma-separated
    bit literals in x_0-first order (e.g. "1010,0111")."""
    if spec == "all":
        return tuple(range(1 << n))
    if spec.startswith("random:"):
        k = int(spec.split(":", 1)[1])
        if not 1 <= k <= (1 << n):
            raise ValueError(f"cannot pick {k} distinct concepts from {1 << n}")
        rng = np.random.default_rng(derive_seed(master_seed, "concepts", n, k))
        return tuple(int(m) for m in rng.choice(1 << n, size=k, replace=False))
    return tuple(mask_from_bits(part.strip()) for part in spec.split(","))


@dataclass(frozen=True)
class ExperimentConfig:
    n: int
    concepts: tuple[int, ...]
    epsilons: tuple[float, ...]
    deltas: tuple[float, ...]
    schedules: tuple[Schedule, ...] = (Schedule.LINEAR,)
    reps: int = 50
    master_seed: int = 0
    workers: int = 1
    fixed_distribution: bool = False

    def __post_init__(self):
        if not 1 <= self.n <= MAX_ARITY:
            raise ValueError(f"n must be in [1, {MAX_ARITY}], got {self.n}")
        if self.reps < 1:
            raise ValueError("reps must be >= 1")
        if self.workers < 1:
            raise ValueError("workers must be >= 1")
        for c in self.concepts:
            check_mask(c, self.n)

    def row_count(self) -> int:
        return (
            len(self.concepts)
            * len(self.epsilons)
            * len(self.deltas)
            * len(self.schedules)
            * self.reps
        )


@dataclass(frozen=True)
class ResultRow:
    n: int
    concept: int
    epsilon: float
    delta: float
    schedule: Schedule
    rep: int
    seed: int
    final_error: float
    updates: int
    sampling_phases: int
    oracle_calls: int
    terminated_ok: bool
    wall_time_ms: float  # diagnostic only; kept out of the canonical CSV

    def csv_line(self) -> str:
        return ",".join(
            [
                str(self.n),
                bits_from_mask(self.concept, self.n),
                repr(self.epsilon),
                repr(self.delta),
                self.schedule.value,
                str(self.rep),
                str(self.seed),
                repr(self.final_error),
                str(self.updates),
                str(self.sampling_phases),
                str(self.oracle_calls),
                "true" if self.terminated_ok else "false",
            ]
        )


def _run_one(args: tuple) -> ResultRow:
    n, concept, eps, delta, schedule, rep, master_seed, fixed_distribution = args
    dist_rep = 0 if fixed_distribution else rep
    dist_seed = derive_seed(master_seed, "dist", concept, dist_rep)
    run_seed = derive_seed(master_seed, "run", concept, eps, delta, schedule.value, rep)
    dist = ProductDistribution.random(n, np.random.default_rng(dist_seed))
    oracle = build_oracle(parity_anf(n, concept), dist)
    t0 = time.perf_counter()
    rec = learn(oracle, LearnParams(eps, delta, schedule, seed=run_seed))
    wall_ms = (time.perf_counter() - t0) * 1e3
    return ResultRow(
        n=n,
        concept=concept,
        epsilon=eps,
        delta=delta,
        schedule=schedule,
        rep=rep,
        seed=run_seed,
        final_error=rec.final_error,
        updates=rec.updates,
        sampling_phases=rec.sampling_phases,
        oracle_calls=rec.oracle_calls,
        terminated_ok=rec.terminated_ok,
        wall_time_ms=wall_ms,
    )


def _work_items(config: ExperimentConfig) -> Iterator[tuple]:
    for concept in config.concepts:
        for eps in config.epsilons:
            for delta in config.deltas:
                for schedule in config.schedules:
                    for rep in range(config.reps):
                        yield (
                            config.n,
                            concept,
                            eps,
                            delta,
                            schedule,
                            rep,
                            config.master_seed,
                            config.fixed_distribution,
                        )


def run_grid(config: ExperimentConfig) -> Iterator[ResultRow]:
    """Yield one row per grid point, in canonical order regardless of workers."""
    items = _work_items(config)
    if config.workers == 1:
        for item in items:
            yield _run_one(item)
    else:
        with ProcessPoolExecutor(max_workers=config.workers) as pool:
            yield from pool.map(_run_one, items, chunksize=8)


def write_csv(rows: Iterable[ResultRow], path: str) -> list[ResultRow]:
    """Stream rows to ``path``; on failure the partial file is left on disk."""
    written = []
    with open(path, "w", encoding="utf-8", newline="\n") as fh:
        fh.write(CSV_HEADER + "\n")
        for row in rows:
            fh.write(row.csv_line() + "\n")
            written.append(row)
    return written


def read_csv(path: str) -> list[dict]:
    """Parse a results CSV back into typed dicts (concept stays a bit literal)."""
    with open(path, encoding="utf-8") as fh:
        header = fh.readline().strip()
        if header != CSV_HEADER:
            raise ValueError(f"unexpected CSV header: {header!r}")
        rows = []
        for line in fh:
            parts = line.strip().split(",")
            if len(parts) != 12:
                raise ValueError(f"malformed row: {line!r}")
            rows.append(
                {
                    "n": int(parts[0]),
                    "concept": parts[1],
                    "epsilon": float(parts[2]),
                    "delta": float(parts[3]),
                    "schedule": parts[4],
                    "rep": int(parts[5]),
                    "seed": int(parts[6]),
                    "final_error": float(parts[7]),
                    "updates": int(parts[8]),
                    "sampling_phases": int(parts[9]),
                    "oracle_calls": int(parts[10]),
                    "terminated_ok": parts[11] == "true",
                }
            )
    return rows


def summarize(rows: Sequence[dict]) -> list[dict]:
    """Per-(n, concept, epsilon, delta, schedule) aggregates.

    ``fraction_below_epsilon`` uses a strict comparison, matching the
    learning target P(err < eps).
    """
    if not rows:
        raise ValueError("no rows to summarize")
    groups: dict[tuple, list[dict]] = {}
    for row in rows:
        key = (row["n"], row["concept"], row["epsilon"], row["delta"], row["schedule"])
        groups.setdefault(key, []).append(row)
    out = []
    for key in sorted(groups):
        n, concept, eps, delta, schedule = key
        bucket = groups[key]
        errors = [r["final_error"] for r in bucket]
        out.append(
            {
                "n": n,
                "concept": concept,
                "epsilon": eps,
                "delta": delta,
                "schedule": schedule,
                "runs": len(bucket),
                "min_error": min(errors),
                "median_error": median(errors),
                "max_error": max(errors),
                "fraction_below_epsilon": sum(e < eps for e in errors) / len(bucket),
                "mean_updates": sum(r["updates"] for r in bucket) / len(bucket),
                "mean_oracle_calls": sum(r["oracle_calls"] for r in bucket) / len(bucket),
                "all_terminated": all(r["terminated_ok"] for r in bucket),
            }
        )
    return out


def rows_as_dicts(rows: Sequence[ResultRow]) -> list[dict]:
    return [
        {
            "n": r.n,
            "concept": bits_from_mask(r.concept, r.n),
            "epsilon": r.epsilon,
            "delta": r.delta,
            "schedule": r.schedule.value,
            "rep": r.rep,
            "seed": r.seed,
            "final_error": r.final_error,
            "updates": r.updates,
            "sampling_phases": r.sampling_phases,
            "oracle_calls": r.oracle_calls,
            "terminated_ok": r.terminated_ok,
        }
        for r in rows
    ]


def write_summary_json(summary: list[dict], path: str) -> None:
    with open(path, "w", encoding="utf-8", newline="\n") as fh:
        json.dump({"groups": summary}, fh, indent=2, sort_keys=True)
        fh.write("\n")
