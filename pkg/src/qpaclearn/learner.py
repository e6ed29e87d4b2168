"""Error-threshold tuning loop: sample the amplified flag state, compare the
hit count against half the shots, and toggle network gates until the deepest
round of the schedule stays under threshold.

Shot budgets come from the posterior analysis of the stop decision: with N
an even integer above 1/(pi*delta^2), observing at most N/2 flagged shots
means the flag probability is below 1/2 with confidence above 1 - delta.
"""
from __future__ import annotations

import enum
import math
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Callable, Sequence

import numpy as np

from .amplify import build_diffusion, build_preparation, max_rounds
from .oracle import Oracle, exact_error
from .statevector import StateVector, apply_circuit, sample
from .tnn import TnnState

# Strategy contract: (errors grouped by Hamming weight, corrects grouped by
# Hamming weight) -> masks to toggle.  Group index i holds the deduplicated
# weight-i inputs.
UpdateStrategy = Callable[[list[list[int]], list[list[int]]], Sequence[int]]


def sample_size(delta: float) -> int:
    """Even shot count per sampling phase, 2*(floor(1/(pi*delta^2))//2) + 2."""
    if not 0.0 < delta < 0.5:
        raise ValueError(f"delta must be in (0, 1/2), got {delta}")
    return 2 * (math.floor(1.0 / (math.pi * delta * delta)) // 2) + 2


def stop_confidence(shots: int) -> float:
    """P(flag probability < 1/2 | at most half the shots flagged), uniform prior.

    Exact rational evaluation of
    1/2 + (1/2)^(N+1) * (N+1)/(N+2) * (2^N - C(N, N/2));
    float arithmetic overflows near N ~ 1030, big integers do not.
    """
    n = shots
    if n < 2 or n % 2:
        raise ValueError(f"shot count must be even and >= 2, got {n}")
    central = math.comb(n, n // 2)
    value = Fraction(1, 2) + Fraction(n + 1, n + 2) * Fraction((1 << n) - central, 1 << (n + 1))
    return float(value)


class Schedule(str, enum.Enum):
    LINEAR = "linear"
    POW2 = "pow2"


def schedule_values(kind: Schedule, deepest: int) -> list[int]:
    """Round counts visited per pass: every integer, or powers of two.

    Both variants start at 0 and end at ``deepest``; the power-of-two variant
    inserts each power below ``deepest`` and deduplicates.
    """
    if deepest < 0:
        raise ValueError("deepest round must be >= 0")
    if kind == Schedule.LINEAR:
        return list(range(deepest + 1))
    vals = {0, deepest}
    p = 1
    while p < deepest:
        vals.add(p)
        p *= 2
    return sorted(vals)


@dataclass
class SampleBatch:
    """One sampling phase: N shots of the ``rounds``-times-amplified state,
    partitioned by the two-ancilla pattern.  Inputs with pattern 11 were
    misclassified (flagged), 00 correctly classified, 10 misclassified but
    scaled out of the flag space; 01 cannot occur because the second ancilla
    only rotates when the first is 1.
    """

    rounds: int
    errors: list[int]
    corrects: list[int]
    discarded: list[int]

    @property
    def flagged(self) -> int:
        return len(self.errors)


def sampling_phase(
    oracle: Oracle,
    tnn: TnnState,
    rounds: int,
    shots: int,
    rng: np.random.Generator,
    preparation=None,
    diffusion=None,
) -> SampleBatch:
    """Prepare, amplify ``rounds`` times, measure ``shots`` times, partition.

    The preparation/diffusion circuits are rebuilt unless supplied (the
    tuning loop caches them between network updates).
    """
    if rounds < 0:
        raise ValueError("rounds must be >= 0")
    n = oracle.n
    if preparation is None:
        preparation = build_preparation(oracle, tnn)
    if diffusion is None and rounds > 0:
        diffusion = build_diffusion(preparation)
    state = StateVector(n + 2)
    apply_circuit(state, preparation)
    for _ in range(rounds):
        apply_circuit(state, diffusion)
    shots_drawn = sample(state, rng, shots)

    input_mask = (1 << n) - 1
    errors, corrects, discarded = [], [], []
    for s in shots_drawn:
        s = int(s)
        a0 = s >> n & 1
        a1 = s >> (n + 1) & 1
        x = s & input_mask
        if a0 and a1:
            errors.append(x)
        elif not a0 and not a1:
            corrects.append(x)
        elif a0:
            discarded.append(x)
        else:
            raise AssertionError("ancilla pattern 01 measured; scaling ancilla desynced")
    return SampleBatch(rounds, errors, corrects, discarded)


def group_by_weight(xs: Sequence[int], n: int) -> list[list[int]]:
    """Deduplicate and bucket by Hamming weight; index i holds weight-i masks, sorted."""
    groups: list[list[int]] = [[] for _ in range(n + 1)]
    for x in sorted(set(xs)):
        groups[x.bit_count()].append(x)
    return groups


def parity_update(errors: list[list[int]], corrects: list[list[int]]) -> list[int]:
    """Gate toggles for the parity class.

    Weight-1 misclassified inputs name wrong gates directly; additionally,
    any misclassified/correct pair from adjacent weight groups differing in
    exactly one bit pins that bit's gate.  Output is deduplicated and sorted
    so identical measurements always produce identical updates.
    """
    gates = set(errors[1]) if len(errors) > 1 else set()
    n_groups = min(len(errors), len(corrects))
    for i in range(1, n_groups - 1):
        for e in errors[i]:
            for c in corrects[i + 1]:
                d = e ^ c
                if d.bit_count() == 1:
                    gates.add(d)
        for c in corrects[i]:
            for e in errors[i + 1]:
                d = c ^ e
                if d.bit_count() == 1:
                    gates.add(d)
    return sorted(gates)


@dataclass(frozen=True)
class LearnParams:
    epsilon: float
    delta: float
    schedule: Schedule = Schedule.LINEAR
    seed: int = 0
    max_updates: int | None = None  # default 10 * 2^n, set at run time

    def __post_init__(self):
        if not 0.0 < self.epsilon < 0.5:
            raise ValueError(f"epsilon must be in (0, 1/2), got {self.epsilon}")
        if not 0.0 < self.delta < 0.5:
            raise ValueError(f"delta must be in (0, 1/2), got {self.delta}")


@dataclass(frozen=True)
class LearnRecord:
    hypothesis: tuple[int, ...]
    final_error: float
    updates: int
    sampling_phases: int
    oracle_calls: int  # every oracle application, incl. the two per diffusion round
    shot_calls: int  # shots only, one per measurement
    trace: tuple[tuple[int, int], ...]  # (rounds, flagged) per phase, in order
    terminated_ok: bool


def learn(
    oracle: Oracle,
    params: LearnParams,
    strategy: UpdateStrategy = parity_update,
) -> LearnRecord:
    """Run the tuning loop from the identity network until the deepest
    scheduled round stays at or under N/2 flagged shots (strictly more
    triggers an update and restarts the schedule)."""
    n = oracle.n
    shots = sample_size(params.delta)
    deepest = max_rounds(params.epsilon)
    schedule = schedule_values(params.schedule, deepest)
    cap = params.max_updates if params.max_updates is not None else 10 * (1 << n)
    rng = np.random.default_rng(params.seed)

    tnn = TnnState(n)
    preparation = build_preparation(oracle, tnn)
    diffusion = build_diffusion(preparation)

    trace: list[tuple[int, int]] = []
    updates = 0
    phases = 0
    oracle_calls = 0
    terminated_ok = True
    position = 0
    while True:
        rounds = schedule[position]
        batch = sampling_phase(oracle, tnn, rounds, shots, rng, preparation, diffusion)
        phases += 1
        oracle_calls += shots * (1 + 2 * rounds)
        trace.append((rounds, batch.flagged))
        if batch.flagged > shots // 2:
            masks = strategy(
                group_by_weight(batch.errors, n), group_by_weight(batch.corrects, n)
            )
            tnn.toggle(masks)
            preparation = build_preparation(oracle, tnn)
            diffusion = build_diffusion(preparation)
            updates += 1
            position = 0
            if updates >= cap:
                terminated_ok = False
                break
        elif position == len(schedule) - 1:
            break
        else:
            position += 1

    return LearnRecord(
        hypothesis=tuple(sorted(tnn.gates)),
        final_error=exact_error(oracle, tnn.hypothesis()),
        updates=updates,
        sampling_phases=phases,
        oracle_calls=oracle_calls,
        shot_calls=phases * shots,
        trace=tuple(trace),
        terminated_ok=terminated_ok,
    )
