"""Dense statevector simulation of the gate set used by the tuning circuits.

Gates: multi-controlled X, (controlled) Ry, controlled-Z, and the
reflection about |0...0> that flips the sign of amplitude 0 only.  Ry
convention: Ry(t) = [[cos t/2, -sin t/2], [sin t/2, cos t/2]], so angles in
[0, pi] keep every amplitude real and non-negative when starting from |0>.

Amplitude layout is little-endian: index bit i is qubit i, matching the
bitstring convention in :mod:`qpaclearn.boolfunc`.
"""
from __future__ import annotations

import math
from dataclasses import dataclass, field

import numpy as np

from . import kernels

NORM_TOL = 1e-10


@dataclass(frozen=True)
class McX:
    """X on ``target`` where every qubit in the ``controls`` mask is 1."""

    controls: int
    target: int


@dataclass(frozen=True)
class Ry:
    """Y-rotation on ``qubit``; a nonzero ``controls`` mask gates it."""

    qubit: int
    angle: float
    controls: int = 0


@dataclass(frozen=True)
class Cz:
    """Phase flip where both ``control`` and ``target`` are 1."""

    control: int
    target: int


@dataclass(frozen=True)
class ReflectZero:
    """I - 2|0><0|: negates the all-zeros amplitude, leaves the rest."""


Gate = McX | Ry | Cz | ReflectZero


def _check_gate(gate: Gate, n_qubits: int) -> None:
    if isinstance(gate, McX):
        if not 0 <= gate.target < n_qubits:
            raise ValueError(f"target {gate.target} out of range for {n_qubits} qubits")
        if not 0 <= gate.controls < (1 << n_qubits):
            raise ValueError(f"control mask {gate.controls:#x} out of range")
        if gate.controls >> gate.target & 1:
            raise ValueError(f"target {gate.target} is also a control")
    elif isinstance(gate, Ry):
        if not 0 <= gate.qubit < n_qubits:
            raise ValueError(f"qubit {gate.qubit} out of range for {n_qubits} qubits")
        if not 0 <= gate.controls < (1 << n_qubits):
            raise ValueError(f"control mask {gate.controls:#x} out of range")
        if gate.controls >> gate.qubit & 1:
            raise ValueError(f"qubit {gate.qubit} is also a control")
    elif isinstance(gate, Cz):
        if gate.control == gate.target:
            raise ValueError("Cz control equals target")
        for q in (gate.control, gate.target):
            if not 0 <= q < n_qubits:
                raise ValueError(f"qubit {q} out of range for {n_qubits} qubits")
    elif not isinstance(gate, ReflectZero):
        raise TypeError(f"not a gate: {gate!r}")


def invert_gate(gate: Gate) -> Gate:
    """McX, Cz, ReflectZero are involutions; Ry inverts by negating the angle."""
    if isinstance(gate, Ry):
        return Ry(gate.qubit, -gate.angle, gate.controls)
    return gate


@dataclass(frozen=True)
class Circuit:
    n_qubits: int
    gates: tuple[Gate, ...] = field(default_factory=tuple)

    def __post_init__(self):
        object.__setattr__(self, "gates", tuple(self.gates))
        for g in self.gates:
            _check_gate(g, self.n_qubits)

    def __add__(self, other: "Circuit") -> "Circuit":
        if self.n_qubits != other.n_qubits:
            raise ValueError("qubit count mismatch")
        return Circuit(self.n_qubits, self.gates + other.gates)

    def inverse(self) -> "Circuit":
        return Circuit(self.n_qubits, tuple(invert_gate(g) for g in reversed(self.gates)))


class StateVector:
    """2**n_qubits complex amplitudes, kept unit-norm by unitary gates."""

    __slots__ = ("n_qubits", "amps")

    def __init__(self, n_qubits: int, amps: np.ndarray | None = None):
        if not 0 <= n_qubits <= 26:
            raise ValueError(f"n_qubits must be in [0, 26], got {n_qubits}")
        self.n_qubits = n_qubits
        if amps is None:
            amps = np.zeros(1 << n_qubits, dtype=np.complex128)
            amps[0] = 1.0
        else:
            amps = np.asarray(amps, dtype=np.complex128).reshape(1 << n_qubits)
            if abs(np.linalg.norm(amps) - 1.0) > NORM_TOL:
                raise ValueError("amplitudes are not unit norm")
            amps = amps.copy()
        self.amps = amps

    @classmethod
    def basis(cls, n_qubits: int, index: int) -> "StateVector":
        amps = np.zeros(1 << n_qubits, dtype=np.complex128)
        amps[index] = 1.0
        return cls(n_qubits, amps)

    def copy(self) -> "StateVector":
        out = StateVector.__new__(StateVector)
        out.n_qubits = self.n_qubits
        out.amps = self.amps.copy()
        return out

    def norm(self) -> float:
        return float(np.linalg.norm(self.amps))


def apply_gate(state: StateVector, gate: Gate) -> StateVector:
    """Apply one gate in place; returns the state for chaining."""
    _check_gate(gate, state.n_qubits)
    if isinstance(gate, McX):
        kernels.apply_mcx(state.amps, state.n_qubits, gate.controls, gate.target)
    elif isinstance(gate, Ry):
        half = 0.5 * gate.angle
        kernels.apply_cry(
            state.amps, state.n_qubits, gate.controls, gate.qubit, math.cos(half), math.sin(half)
        )
    elif isinstance(gate, Cz):
        kernels.apply_phase_mask(
            state.amps, state.n_qubits, (1 << gate.control) | (1 << gate.target)
        )
    else:
        state.amps[0] = -state.amps[0]
    return state


def apply_circuit(state: StateVector, circuit: Circuit) -> StateVector:
    if state.n_qubits != circuit.n_qubits:
        raise ValueError("qubit count mismatch")
    for g in circuit.gates:
        apply_gate(state, g)
    return state


def apply_inverse(state: StateVector, circuit: Circuit) -> StateVector:
    if state.n_qubits != circuit.n_qubits:
        raise ValueError("qubit count mismatch")
    for g in reversed(circuit.gates):
        apply_gate(state, invert_gate(g))
    return state


def probability(state: StateVector, predicate) -> float:
    """Total probability of the basis indices selected by ``predicate``.

    ``predicate`` receives the full int64 index array and returns a boolean
    mask (vectorized, so lambdas over bit arithmetic work directly).
    """
    idx = np.arange(state.amps.size, dtype=np.int64)
    sel = np.asarray(predicate(idx), dtype=bool)
    a = state.amps[sel]
    return float(np.sum(a.real * a.real + a.imag * a.imag))


def masked_probability(state: StateVector, mask: int, value: int) -> float:
    """Probability that the bits in ``mask`` read exactly ``value``."""
    return float(kernels.masked_probability(state.amps, mask, value))


def sample(state: StateVector, rng: np.random.Generator, shots: int) -> np.ndarray:
    """``shots`` i.i.d. basis-index draws from |amplitude|^2; seed-deterministic."""
    if shots < 1:
        raise ValueError("shots must be >= 1")
    probs = state.amps.real**2 + state.amps.imag**2
    cdf = np.cumsum(probs)
    draws = rng.random(shots) * cdf[-1]
    return np.searchsorted(cdf, draws, side="right").astype(np.int64)
