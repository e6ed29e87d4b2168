import math

import numpy as np
import pytest

from qpaclearn.boolfunc import Anf, mask_from_bits, parity_anf
from qpaclearn.oracle import ProductDistribution, build_oracle, exact_error
from qpaclearn.statevector import McX, Ry, StateVector, apply_circuit, masked_probability
from qpaclearn.tnn import TnnState


def brute_force_error(concept, hypothesis, dist):
    return sum(
        dist.weight(x)
        for x in range(1 << concept.n)
        if concept.evaluate(x) != hypothesis.evaluate(x)
    )


def random_anf(n, rng):
    count = int(rng.integers(0, (1 << n) + 1))
    masks = rng.choice(1 << n, size=count, replace=False) if count else []
    return Anf(n, frozenset(int(u) for u in masks))


def test_oracle_gate_layout_for_figure_concepts():
    dist = ProductDistribution((0.3, 0.8, 1.1, 2.0))
    oracle = build_oracle(parity_anf(4, mask_from_bits("1010")), dist)
    gates = oracle.circuit.gates
    assert [g for g in gates[:4]] == [Ry(q, dist.angles[q]) for q in range(4)]
    assert set(gates[4:]) == {McX(0b0001, 4), McX(0b0100, 4)}

    oracle = build_oracle(parity_anf(4, mask_from_bits("0111")), dist)
    mcx = oracle.circuit.gates[4:]
    assert all(isinstance(g, McX) and g.controls.bit_count() == 1 for g in mcx)
    assert len(mcx) == 3


def test_empty_concept_keeps_ancilla_zero():
    rng = np.random.default_rng(2)
    dist = ProductDistribution.random(3, rng)
    oracle = build_oracle(Anf(3, frozenset()), dist)
    state = apply_circuit(StateVector(4), oracle.circuit)
    assert masked_probability(state, 1 << 3, 1 << 3) < 1e-15


@pytest.mark.parametrize("n", [1, 2, 3, 4])
def test_example_state_amplitude_structure(n):
    rng = np.random.default_rng(20 + n)
    for _ in range(10):
        concept = random_anf(n, rng)
        dist = ProductDistribution.random(n, rng)
        oracle = build_oracle(concept, dist)
        state = apply_circuit(StateVector(n + 1), oracle.circuit)
        expected = np.zeros(1 << (n + 1))
        for x in range(1 << n):
            expected[x | (concept.evaluate(x) << n)] = math.sqrt(dist.weight(x))
        assert np.max(np.abs(state.amps.imag)) == 0.0
        assert np.max(np.abs(state.amps.real - expected)) < 1e-12


def test_weights_normalized_for_many_random_angle_vectors():
    rng = np.random.default_rng(0)
    for _ in range(1000):
        n = int(rng.integers(1, 9))
        dist = ProductDistribution.random(n, rng)
        assert abs(dist.weights().sum() - 1.0) < 1e-12


def test_weights_vector_matches_pointwise():
    rng = np.random.default_rng(5)
    dist = ProductDistribution.random(5, rng)
    w = dist.weights()
    assert all(abs(w[x] - dist.weight(x)) < 1e-15 for x in range(32))


def test_exact_error_zero_on_matching_hypothesis():
    rng = np.random.default_rng(1)
    concept = parity_anf(4, 0b1011)
    oracle = build_oracle(concept, ProductDistribution.random(4, rng))
    assert exact_error(oracle, concept) == 0.0


def test_exact_error_uniform_half():
    # concept x_1 under the uniform distribution vs the constant 0
    dist = ProductDistribution((math.pi / 2, math.pi / 2))
    oracle = build_oracle(parity_anf(2, mask_from_bits("01")), dist)
    assert exact_error(oracle, Anf(2, frozenset())) == pytest.approx(0.5, abs=1e-12)


def test_exact_error_single_bit_mass():
    # hypotheses differing in x_1 only: error mass sin^2(theta_1 / 2)
    dist = ProductDistribution((math.pi / 2, math.pi / 3))
    oracle = build_oracle(parity_anf(2, mask_from_bits("11")), dist)
    hypothesis = parity_anf(2, mask_from_bits("10"))
    assert exact_error(oracle, hypothesis) == pytest.approx(0.25, abs=1e-12)
    assert exact_error(oracle, hypothesis) == pytest.approx(
        brute_force_error(oracle.concept, hypothesis, dist), abs=1e-12
    )


def test_exact_error_matches_brute_force_random():
    rng = np.random.default_rng(42)
    for _ in range(30):
        n = int(rng.integers(1, 6))
        concept, hypothesis = random_anf(n, rng), random_anf(n, rng)
        dist = ProductDistribution.random(n, rng)
        oracle = build_oracle(concept, dist)
        assert exact_error(oracle, hypothesis) == pytest.approx(
            brute_force_error(concept, hypothesis, dist), abs=1e-12
        )


def test_exact_error_matches_simulated_ancilla_probability():
    rng = np.random.default_rng(77)
    for _ in range(40):
        n = int(rng.integers(1, 7))
        concept, hypothesis = random_anf(n, rng), random_anf(n, rng)
        dist = ProductDistribution.random(n, rng)
        oracle = build_oracle(concept, dist)
        circuit = oracle.circuit + TnnState(n, hypothesis.monomials).as_circuit(n + 1, n)
        state = apply_circuit(StateVector(n + 1), circuit)
        simulated = masked_probability(state, 1 << n, 1 << n)
        assert abs(simulated - exact_error(oracle, hypothesis)) < 1e-10


def test_exact_error_clamped_at_full_mass():
    # complement of the concept misclassifies every input; the analytic sum
    # may exceed 1 by accumulation and must be clamped
    rng = np.random.default_rng(8)
    for _ in range(20):
        n = int(rng.integers(1, 7))
        concept = random_anf(n, rng)
        complement = concept ^ Anf(n, frozenset({0}))
        oracle = build_oracle(concept, ProductDistribution.random(n, rng))
        err = exact_error(oracle, complement)
        assert err <= 1.0
        assert err == pytest.approx(1.0, abs=1e-12)


def test_arity_and_angle_validation():
    with pytest.raises(ValueError):
        build_oracle(parity_anf(3, 1), ProductDistribution((0.5, 0.5)))
    with pytest.raises(ValueError):
        ProductDistribution((0.5, 3.5))
    with pytest.raises(ValueError):
        exact_error(
            build_oracle(parity_anf(2, 1), ProductDistribution((0.5, 0.5))),
            Anf(3, frozenset()),
        )
