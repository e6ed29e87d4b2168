"""Acceptance suite: every criterion prints one [PASS]/[FAIL] line.

Run with ``pytest -s tests/test_acceptance.py`` to see the lines as they
complete.  The statistical criteria run fully seeded grids, so results are
reproducible bit for bit.
"""
import math
import subprocess
import sys
from statistics import median

import numpy as np
import pytest

from qpaclearn.amplify import build_diffusion, build_preparation, max_rounds
from qpaclearn.boolfunc import anf_to_truth_table, parity_anf, truth_table_to_anf
from qpaclearn.checks import (
    amplification_max_deviation,
    lemma_counterexamples,
    posterior_bound_holds,
    posterior_max_deviation,
)
from qpaclearn.experiments import derive_seed
from qpaclearn.learner import LearnParams, Schedule, learn, sample_size, stop_confidence
from qpaclearn.oracle import ProductDistribution, build_oracle
from qpaclearn.statevector import StateVector, apply_circuit, apply_inverse
from qpaclearn.tnn import TnnState

MASTER_SEED = 20260810
REPS = 50


def report(name, ok, detail=""):
    print(f"[{'PASS' if ok else 'FAIL'}] {name}" + (f": {detail}" if detail else ""))
    assert ok, f"{name}: {detail}"


def run_concept_grid(n, concepts, epsilon, delta, schedule, tag):
    """50 seeded repetitions per concept; returns {concept: [LearnRecord]}."""
    records = {}
    for concept in concepts:
        runs = []
        for rep in range(REPS):
            dist_seed = derive_seed(MASTER_SEED, tag, "dist", concept, rep)
            run_seed = derive_seed(MASTER_SEED, tag, "run", concept, rep, schedule.value)
            dist = ProductDistribution.random(n, np.random.default_rng(dist_seed))
            oracle = build_oracle(parity_anf(n, concept), dist)
            runs.append(learn(oracle, LearnParams(epsilon, delta, schedule, seed=run_seed)))
        records[concept] = runs
    return records


def random_nonzero_concepts(n, count, seed):
    rng = np.random.default_rng(seed)
    picked = rng.choice((1 << n) - 1, size=count, replace=False) + 1
    return tuple(int(c) for c in picked)


@pytest.fixture(scope="module")
def n4_grid():
    return run_concept_grid(4, range(16), 0.1, 0.1, Schedule.LINEAR, "fig4a")


@pytest.fixture(scope="module")
def n6_grid():
    concepts = random_nonzero_concepts(6, 4, MASTER_SEED)
    return run_concept_grid(6, concepts, 0.05, 0.05, Schedule.LINEAR, "mid6")


@pytest.fixture(scope="module")
def schedule_grids():
    concepts = random_nonzero_concepts(6, 2, MASTER_SEED + 1)
    return {
        sched: run_concept_grid(6, concepts, 0.01, 0.1, sched, "fig8")
        for sched in (Schedule.LINEAR, Schedule.POW2)
    }


def test_statistical_pac_reproduction_n4(n4_grid):
    fractions = {
        c: sum(r.final_error < 0.1 for r in runs) / len(runs) for c, runs in n4_grid.items()
    }
    aggregate = sum(fractions.values()) / len(fractions)
    report(
        "n=4 all concepts, eps=0.1, delta=0.1: per-concept fraction(err<eps) >= 0.9",
        all(f >= 0.9 for f in fractions.values()),
        f"worst {min(fractions.values()):.2f}, aggregate {aggregate:.3f}",
    )


def test_mid_scale_spot_check_n6(n6_grid):
    fractions = {
        c: sum(r.final_error < 0.05 for r in runs) / len(runs) for c, runs in n6_grid.items()
    }
    report(
        "n=6 four concepts, eps=0.05, delta=0.05: per-concept fraction >= 0.95",
        all(f >= 0.95 for f in fractions.values()),
        f"fractions {sorted(fractions.values())}",
    )


def test_schedule_equivalence(schedule_grids):
    ok = True
    details = []
    medians = {}
    for sched, grid in schedule_grids.items():
        for concept, runs in grid.items():
            frac = sum(r.final_error < 0.01 for r in runs) / len(runs)
            ok &= frac >= 0.9
            details.append(f"{sched.value}/{concept:06b}: frac {frac:.2f}")
        medians[sched] = median(r.updates for grid_runs in grid.values() for r in grid_runs)
    lo, hi = sorted(medians.values())
    ok &= (hi == lo == 0) or (lo > 0 and hi / lo <= 2.0)
    report(
        "n=6 eps=0.01 Linear vs PowersOfTwo: fractions >= 0.9, medians within 2x",
        ok,
        "; ".join(details) + f"; median updates {medians[Schedule.LINEAR]} vs {medians[Schedule.POW2]}",
    )


def test_max_rounds_reference_values():
    got = (max_rounds(0.01), max_rounds(0.05), max_rounds(0.1))
    report("deepest round for eps 0.01/0.05/0.1 equals 9/4/3", got == (9, 4, 3), f"got {got}")


def test_posterior_formula():
    dev = posterior_max_deviation(max_shots=64)
    exact_small = stop_confidence(2) == 11 / 16
    bound = posterior_bound_holds(max_shots=4096)
    report(
        "stop confidence: quadrature match (<=64), N=2 = 11/16 exact, bound to 4096",
        dev < 1e-10 and exact_small and bound,
        f"max quadrature dev {dev:.2e}",
    )


def test_amplification_closed_form():
    dev = amplification_max_deviation(n_setups=200, seed=MASTER_SEED)
    report(
        "200 random setups: simulated flag probability matches closed form",
        dev < 1e-9,
        f"max dev {dev:.2e}",
    )


def test_lemma_grid():
    bad = lemma_counterexamples(n_points=20001)
    report("threshold-guarantee grid (20001 angles x 6 epsilons)", bad == 0, f"{bad} bad")


def test_exactness_suites():
    # truth-table round trip, exhaustive through n=4
    round_trip_ok = True
    for n in range(1, 5):
        size = 1 << n
        for bits in range(1 << size):
            table = np.array([(bits >> i) & 1 for i in range(size)], dtype=np.uint8)
            if not np.array_equal(anf_to_truth_table(truth_table_to_anf(table, n)), table):
                round_trip_ok = False
                break

    # network circuit vs direct evaluation, all inputs for each gate set
    tnn_ok = True
    rng = np.random.default_rng(5)
    for n in range(1, 5):
        if n <= 2:
            gate_sets = [
                {u for u in range(1 << n) if bits >> u & 1} for bits in range(1 << (1 << n))
            ]
        else:
            gate_sets = [set(), {0}, set(range(1 << n))]
            for _ in range(40):
                count = int(rng.integers(1, (1 << n) + 1))
                gate_sets.append({int(u) for u in rng.choice(1 << n, count, replace=False)})
        for gates in gate_sets:
            t = TnnState(n, gates)
            f = t.hypothesis()
            circuit = t.as_circuit()
            for x in range(1 << n):
                state = StateVector.basis(n + 1, x)
                apply_circuit(state, circuit)
                if state.amps[x | (f.evaluate(x) << n)] != 1.0:
                    tnn_ok = False

    # norm drift over 1e4 random gates
    from test_statevector import random_gate

    state = StateVector(8)
    for _ in range(10_000):
        from qpaclearn.statevector import apply_gate

        apply_gate(state, random_gate(rng, 8))
    drift = abs(state.norm() - 1.0)

    # apply/inverse round trip
    from qpaclearn.statevector import Circuit

    worst = 0.0
    for _ in range(30):
        circuit = Circuit(7, tuple(random_gate(rng, 7) for _ in range(25)))
        amps = rng.standard_normal(1 << 7) + 1j * rng.standard_normal(1 << 7)
        state = StateVector(7, amps / np.linalg.norm(amps))
        before = state.amps.copy()
        apply_inverse(apply_circuit(state, circuit), circuit)
        worst = max(worst, float(np.max(np.abs(state.amps - before))))

    report(
        "exactness: table round trip (n<=4), network vs evaluation (n<=4), "
        "norm drift, inverse round trip",
        round_trip_ok and tnn_ok and drift < 1e-10 and worst < 1e-10,
        f"drift {drift:.2e}, round trip {worst:.2e}",
    )


def per_update_call_segments(record, shots):
    segments = []
    calls = 0
    for rounds, flagged in record.trace:
        calls += shots * (1 + 2 * rounds)
        if flagged > shots // 2:
            segments.append(calls)
            calls = 0
    return segments


def test_complexity_accounting(n4_grid):
    shots = sample_size(0.1)
    deepest = max_rounds(0.1)
    bound = (deepest + 1) * shots * (1 + 2 * deepest)
    worst = 0
    ok = True
    for runs in n4_grid.values():
        for record in runs:
            for segment in per_update_call_segments(record, shots):
                worst = max(worst, segment)
                ok &= segment <= bound

    standalone = subprocess.run(
        [sys.executable, "-c", "import qpaclearn, sys; sys.exit('matplotlib' in sys.modules)"],
        capture_output=True,
    )
    ok &= standalone.returncode == 0
    report(
        "per-update oracle calls within bound; suite independent of plotting stack",
        ok,
        f"worst segment {worst} <= bound {bound}",
    )
