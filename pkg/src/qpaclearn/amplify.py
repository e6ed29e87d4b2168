"""Amplitude amplification over the misclassified-input subspace.

The preparation circuit runs the oracle and the tunable network on inputs
plus a first ancilla, then a controlled Y-rotation moves 1/5 of the error
mass onto a second ancilla.  Flag pattern 11 on the two ancillas then
carries probability err/5, which keeps its rotation angle strictly below
the pi/4 stationary point of the amplification, so that the error is always
amplified.  One diffusion round is: flag phase flip, inverse preparation,
reflection about zero, preparation (the textbook operator's leading global
minus sign is dropped; probabilities are unchanged).
"""
from __future__ import annotations

import math

from .oracle import Oracle
from .statevector import Circuit, Cz, ReflectZero, Ry, StateVector, masked_probability
from .tnn import TnnState

# One-fifth scaling: the controlled rotation sends |10> on the ancillas to
# (2/sqrt5)|10> + (1/sqrt5)|11>.
SCALE_ANGLE = 2.0 * math.asin(1.0 / math.sqrt(5.0))
SCALE_FACTOR = 5.0


def build_preparation(oracle: Oracle, tnn: TnnState) -> Circuit:
    """State preparation on n+2 qubits: oracle, network, scaling rotation."""
    if tnn.n != oracle.n:
        raise ValueError("network arity mismatch")
    n = oracle.n
    gates = oracle.circuit.gates  # Ry layer + concept McX on ancilla n
    gates += tnn.as_circuit(n + 2, ancilla=n).gates
    gates += (Ry(n + 1, SCALE_ANGLE, controls=1 << n),)
    return Circuit(n + 2, gates)


def build_diffusion(preparation: Circuit) -> Circuit:
    """One amplification round for the given preparation circuit."""
    n_total = preparation.n_qubits
    flag_flip = Circuit(n_total, (Cz(n_total - 2, n_total - 1),))
    reflect = Circuit(n_total, (ReflectZero(),))
    return flag_flip + preparation.inverse() + reflect + preparation


def flag_probability(state: StateVector, n_inputs: int) -> float:
    """Probability that both ancillas (qubits n, n+1) read 1."""
    mask = 0b11 << n_inputs
    return masked_probability(state, mask, mask)


def threshold_angle(epsilon: float) -> float:
    """arcsin(sqrt(eps/5)), the flag-space angle the threshold targets."""
    if not 0.0 < epsilon < 0.5:
        raise ValueError(f"epsilon must be in (0, 1/2), got {epsilon}")
    return math.asin(math.sqrt(epsilon / SCALE_FACTOR))


def _max_rounds_for_angle(theta: float) -> int:
    # Smallest m with (2m+1)*theta >= pi/4, by direct comparison from a
    # closed-form candidate (no epsilon guard; ties resolve downward only
    # when the product is exactly >= pi/4).
    m = max(0, math.ceil((math.pi / (4.0 * theta) - 1.0) / 2.0))
    while (2 * m + 1) * theta < math.pi / 4.0:
        m += 1
    while m > 0 and (2 * (m - 1) + 1) * theta >= math.pi / 4.0:
        m -= 1
    return m


def max_rounds(epsilon: float) -> int:
    """Deepest amplification round the threshold test needs for ``epsilon``."""
    return _max_rounds_for_angle(threshold_angle(epsilon))


def amplified_probability(error: float, rounds: int) -> float:
    """Closed-form flag probability after ``rounds`` diffusion applications."""
    if not 0.0 <= error <= 1.0:
        raise ValueError(f"error must be in [0, 1], got {error}")
    if rounds < 0:
        raise ValueError("rounds must be >= 0")
    theta = math.asin(math.sqrt(error / SCALE_FACTOR))
    return math.sin((2 * rounds + 1) * theta) ** 2


def threshold_implication(theta: float, thresh_angle: float) -> tuple[bool, bool]:
    """Evaluate both sides of the stopping guarantee at a given angle.

    Returns (premise, conclusion): premise is "sin^2((2m+1)theta) < 1/2 for
    every round m up to the maximum", conclusion is "theta < thresh_angle".
    The guarantee is that premise implies conclusion; grid tests scan for
    (True, False) counterexamples.
    """
    if not 0.0 <= theta <= math.pi / 2.0:
        raise ValueError(f"theta must be in [0, pi/2], got {theta}")
    if not 0.0 < thresh_angle < math.pi / 4.0:
        raise ValueError(f"threshold angle must be in (0, pi/4), got {thresh_angle}")
    m_max = _max_rounds_for_angle(thresh_angle)
    premise = all(
        math.sin((2 * m + 1) * theta) ** 2 < 0.5 for m in range(m_max + 1)
    )
    return premise, theta < thresh_angle
