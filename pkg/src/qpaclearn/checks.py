"""Independent-oracle verification routines.

Each check recomputes a quantity along a second route (quadrature, grid
enumeration, closed form vs. simulation) and reports the disagreement; the
CLI ``verify`` subcommand and the acceptance tests both run these.
"""
from __future__ import annotations

import math

import numpy as np
from scipy import integrate, stats

from .amplify import (
    amplified_probability,
    build_diffusion,
    build_preparation,
    flag_probability,
    max_rounds,
    threshold_angle,
)
from .boolfunc import Anf
from .learner import stop_confidence
from .oracle import ProductDistribution, build_oracle, exact_error
from .statevector import StateVector, apply_circuit
from .tnn import TnnState

GRID_EPSILONS = (0.01, 0.05, 0.1, 0.2, 0.3, 0.45)


def lemma_counterexamples(
    n_points: int = 20001, epsilons: tuple[float, ...] = GRID_EPSILONS
) -> int:
    """Grid scan of the stopping guarantee.

    For every angle theta on [0, pi/2] checks that "all scheduled rounds
    keep the flag probability under 1/2" forces theta below the threshold
    angle; counts violations (which should never exist).
    """
    thetas = np.linspace(0.0, math.pi / 2.0, n_points)
    bad = 0
    for eps in epsilons:
        t_eps = threshold_angle(eps)
        deepest = max_rounds(eps)
        worst = np.zeros_like(thetas)
        for m in range(deepest + 1):
            worst = np.maximum(worst, np.sin((2 * m + 1) * thetas) ** 2)
        premise = worst < 0.5
        conclusion = thetas < t_eps
        bad += int(np.count_nonzero(premise & ~conclusion))
    return bad


def posterior_quadrature(shots: int) -> float:
    """Stop confidence by adaptive quadrature of the Bayes ratio.

    Integrates P(at most half flagged | p) under a uniform prior on p over
    [0, 1/2] and [0, 1]; independent of the closed form used at run time.
    """
    n = shots
    if n < 2 or n % 2:
        raise ValueError(f"shot count must be even and >= 2, got {n}")

    def below_half_prob(p: float) -> float:
        return stats.binom.cdf(n // 2, n, p)

    num, _ = integrate.quad(below_half_prob, 0.0, 0.5, limit=200)
    den, _ = integrate.quad(below_half_prob, 0.0, 1.0, limit=200)
    return num / den


def posterior_max_deviation(max_shots: int = 64) -> float:
    """Max |closed form - quadrature| over even shot counts up to ``max_shots``."""
    return max(
        abs(stop_confidence(n) - posterior_quadrature(n)) for n in range(2, max_shots + 1, 2)
    )


def posterior_bound_holds(max_shots: int = 4096) -> bool:
    """Closed form stays above 1 - 1/sqrt(pi*N) for every even N up to the cap."""
    return all(
        stop_confidence(n) >= 1.0 - 1.0 / math.sqrt(math.pi * n)
        for n in range(2, max_shots + 1, 2)
    )


def _random_anf(n: int, rng: np.random.Generator) -> Anf:
    count = int(rng.integers(0, (1 << n) + 1))
    masks = rng.choice(1 << n, size=count, replace=False) if count else []
    return Anf(n, frozenset(int(u) for u in masks))


def amplification_max_deviation(
    n_setups: int = 200,
    seed: int = 7,
    max_n: int = 6,
    max_rounds_checked: int = 12,
) -> float:
    """Simulated flag probability vs. the closed form, over random setups.

    Draws random (concept, hypothesis, distribution, rounds) tuples, runs
    the full preparation-plus-diffusion circuit, and compares the measured
    flag probability with sin^2((2m+1) asin(sqrt(err/5))).
    """
    rng = np.random.default_rng(seed)
    worst = 0.0
    for _ in range(n_setups):
        n = int(rng.integers(2, max_n + 1))
        concept = _random_anf(n, rng)
        hypothesis = _random_anf(n, rng)
        dist = ProductDistribution.random(n, rng)
        rounds = int(rng.integers(0, max_rounds_checked + 1))

        oracle = build_oracle(concept, dist)
        tnn = TnnState(n, hypothesis.monomials)
        prep = build_preparation(oracle, tnn)
        state = apply_circuit(StateVector(n + 2), prep)
        if rounds:
            diffusion = build_diffusion(prep)
            for _ in range(rounds):
                apply_circuit(state, diffusion)

        err = exact_error(oracle, hypothesis)
        expected = amplified_probability(err, rounds)
        worst = max(worst, abs(flag_probability(state, n) - expected))
    return worst
