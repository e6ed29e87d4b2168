import math

import numpy as np
import pytest

from qpaclearn.statevector import (
    Circuit,
    Cz,
    McX,
    ReflectZero,
    Ry,
    StateVector,
    apply_circuit,
    apply_gate,
    apply_inverse,
    probability,
    sample,
)


def gate_matrix(gate, n):
    """Dense reference built column by column from the gate definitions."""
    dim = 1 << n
    mat = np.zeros((dim, dim), dtype=np.complex128)
    for j in range(dim):
        if isinstance(gate, McX):
            i = j ^ (1 << gate.target) if (j & gate.controls) == gate.controls else j
            mat[i, j] = 1.0
        elif isinstance(gate, Ry):
            if (j & gate.controls) == gate.controls:
                c, s = math.cos(gate.angle / 2), math.sin(gate.angle / 2)
                j0 = j & ~(1 << gate.qubit)
                j1 = j0 | (1 << gate.qubit)
                if j == j0:
                    mat[j0, j] += c
                    mat[j1, j] += s
                else:
                    mat[j0, j] += -s
                    mat[j1, j] += c
            else:
                mat[j, j] = 1.0
        elif isinstance(gate, Cz):
            both = (1 << gate.control) | (1 << gate.target)
            mat[j, j] = -1.0 if (j & both) == both else 1.0
        else:
            mat[j, j] = -1.0 if j == 0 else 1.0
    return mat


def random_gate(rng, n):
    kind = rng.integers(0, 4)
    if n < 2 and kind == 2:
        kind = 3  # no Cz on a single qubit
    target = int(rng.integers(0, n))
    if kind == 0:
        controls = int(rng.integers(0, 1 << n)) & ~(1 << target)
        return McX(controls, target)
    if kind == 1:
        controls = int(rng.integers(0, 1 << n)) & ~(1 << target) if rng.random() < 0.3 else 0
        return Ry(target, float(rng.uniform(-math.pi, math.pi)), controls)
    if kind == 2:
        other = int(rng.integers(0, n - 1))
        other += other >= target
        return Cz(target, other)
    return ReflectZero()


def random_state(rng, n):
    amps = rng.standard_normal(1 << n) + 1j * rng.standard_normal(1 << n)
    amps /= np.linalg.norm(amps)
    return StateVector(n, amps)


def test_toffoli_on_basis_state():
    # |110> in q_0-first order is index 0b011
    state = StateVector.basis(3, 0b011)
    apply_gate(state, McX(controls=0b011, target=2))
    expected = np.zeros(8)
    expected[0b111] = 1.0
    assert np.array_equal(state.amps, expected.astype(complex))


def test_ry_half_turn():
    state = StateVector(1)
    apply_gate(state, Ry(0, math.pi))
    assert abs(state.amps[1] - 1.0) < 1e-12
    assert abs(state.amps[0]) < 1e-12


def test_ry_scaling_column():
    state = StateVector(1)
    apply_gate(state, Ry(0, 2.0 * math.asin(1.0 / math.sqrt(5.0))))
    assert abs(state.amps[0] - 2.0 / math.sqrt(5.0)) < 1e-12
    assert abs(state.amps[1] - 1.0 / math.sqrt(5.0)) < 1e-12


def test_reflect_zero_touches_only_index_zero():
    rng = np.random.default_rng(3)
    state = random_state(rng, 3)
    before = state.amps.copy()
    apply_gate(state, ReflectZero())
    assert state.amps[0] == -before[0]
    assert np.array_equal(state.amps[1:], before[1:])


@pytest.mark.parametrize("n", [1, 2, 3])
def test_gates_match_dense_reference(n):
    rng = np.random.default_rng(10 + n)
    for _ in range(60):
        gate = random_gate(rng, n)
        state = random_state(rng, n)
        expected = gate_matrix(gate, n) @ state.amps
        apply_gate(state, gate)
        assert np.max(np.abs(state.amps - expected)) < 1e-12


def test_empty_circuit_is_identity():
    rng = np.random.default_rng(0)
    state = random_state(rng, 2)
    before = state.amps.copy()
    apply_circuit(state, Circuit(2))
    assert np.array_equal(state.amps, before)


def test_single_ry_round_trip():
    circuit = Circuit(1, (Ry(0, 0.7),))
    state = apply_inverse(apply_circuit(StateVector(1), circuit), circuit)
    assert abs(state.amps[0] - 1.0) < 1e-12
    assert abs(state.amps[1]) < 1e-12


def test_random_circuit_round_trip():
    rng = np.random.default_rng(7)
    for _ in range(20):
        gates = tuple(random_gate(rng, 6) for _ in range(20))
        circuit = Circuit(6, gates)
        state = random_state(rng, 6)
        before = state.amps.copy()
        apply_inverse(apply_circuit(state, circuit), circuit)
        assert np.max(np.abs(state.amps - before)) < 1e-10


def test_circuit_inverse_object_matches_apply_inverse():
    rng = np.random.default_rng(8)
    circuit = Circuit(4, tuple(random_gate(rng, 4) for _ in range(12)))
    s1 = random_state(rng, 4)
    s2 = s1.copy()
    apply_inverse(s1, circuit)
    apply_circuit(s2, circuit.inverse())
    assert np.array_equal(s1.amps, s2.amps)


def test_norm_conserved_under_long_random_sequence():
    rng = np.random.default_rng(9)
    state = random_state(rng, 5)
    for _ in range(2000):
        apply_gate(state, random_gate(rng, 5))
    assert abs(state.norm() - 1.0) < 1e-10


def test_probability_always_true_is_one():
    rng = np.random.default_rng(11)
    state = random_state(rng, 4)
    assert abs(probability(state, lambda ix: np.ones_like(ix, dtype=bool)) - 1.0) < 1e-12


def test_probability_of_single_qubit_on_uniform_state():
    state = StateVector(2)
    apply_gate(state, Ry(0, math.pi / 2))
    apply_gate(state, Ry(1, math.pi / 2))
    assert abs(probability(state, lambda ix: (ix & 1) == 1) - 0.5) < 1e-12


def test_sample_deterministic_basis_state():
    state = StateVector.basis(3, 0b101)
    shots = sample(state, np.random.default_rng(0), 50)
    assert np.all(shots == 0b101)


def test_sample_uniform_frequency():
    state = StateVector(1)
    apply_gate(state, Ry(0, math.pi / 2))
    shots = sample(state, np.random.default_rng(123), 100_000)
    # 6 sigma for Binomial(1e5, 1/2) is ~0.0095
    assert abs(np.mean(shots) - 0.5) < 0.01


def test_sample_seed_reproducible():
    rng = np.random.default_rng(5)
    state = random_state(rng, 4)
    a = sample(state, np.random.default_rng(99), 200)
    b = sample(state, np.random.default_rng(99), 200)
    assert np.array_equal(a, b)


def test_gate_validation():
    state = StateVector(3)
    with pytest.raises(ValueError):
        apply_gate(state, McX(controls=0b100, target=2))  # target in controls
    with pytest.raises(ValueError):
        apply_gate(state, McX(controls=0, target=3))
    with pytest.raises(ValueError):
        apply_gate(state, Ry(0, 1.0, controls=0b001))
    with pytest.raises(ValueError):
        apply_gate(state, Cz(1, 1))
    with pytest.raises(ValueError):
        Circuit(2, (McX(0, 5),))
    with pytest.raises(ValueError):
        apply_circuit(StateVector(2), Circuit(3))


def test_non_unit_amplitudes_rejected():
    with pytest.raises(ValueError):
        StateVector(2, np.array([1.0, 1.0, 0.0, 0.0]))
