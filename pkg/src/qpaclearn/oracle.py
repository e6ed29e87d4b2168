"""Example oracle: a product distribution loaded by an Ry layer, then the
concept's multi-controlled X gates writing c(x) onto the first ancilla.

Applied to |0...0> the oracle circuit produces sum_x sqrt(D(x)) |x>|c(x)>
with every amplitude real and non-negative for angles in [0, pi].
"""
from __future__ import annotations

import math
from dataclasses import dataclass

import numpy as np

from .boolfunc import Anf, anf_to_truth_table, check_arity
from .statevector import Circuit, McX, Ry

WEIGHT_TOL = 1e-12


@dataclass(frozen=True)
class ProductDistribution:
    """D(x) = prod_i [cos^2(t_i/2) if x_i=0 else sin^2(t_i/2)], angles t_i in [0, pi]."""

    angles: tuple[float, ...]

    def __post_init__(self):
        object.__setattr__(self, "angles", tuple(float(a) for a in self.angles))
        check_arity(self.n)
        for a in self.angles:
            if not 0.0 <= a <= math.pi:
                raise ValueError(f"angle {a} outside [0, pi]")

    @property
    def n(self) -> int:
        return len(self.angles)

    @classmethod
    def random(cls, n: int, rng: np.random.Generator) -> "ProductDistribution":
        check_arity(n)
        return cls(tuple(rng.uniform(0.0, math.pi) for _ in range(n)))

    def weights(self) -> np.ndarray:
        """All 2^n point masses, indexed by x (bit i = x_i)."""
        w = np.ones(1)
        for a in self.angles:
            c, s = math.cos(0.5 * a), math.sin(0.5 * a)
            w = np.kron(np.array([c * c, s * s]), w)  # new factor lands on the next-higher bit
        return w

    def weight(self, x: int) -> float:
        p = 1.0
        for i, a in enumerate(self.angles):
            half = math.sin(0.5 * a) if x >> i & 1 else math.cos(0.5 * a)
            p *= half * half
        return p


@dataclass(frozen=True)
class Oracle:
    concept: Anf
    distribution: ProductDistribution
    circuit: Circuit  # on n+1 qubits: inputs q_0..q_{n-1}, ancilla at index n

    @property
    def n(self) -> int:
        return self.concept.n


def build_oracle(concept: Anf, distribution: ProductDistribution) -> Oracle:
    if concept.n != distribution.n:
        raise ValueError("concept/distribution arity mismatch")
    n = concept.n
    gates = [Ry(q, distribution.angles[q]) for q in range(n)]
    gates += [McX(u, n) for u in sorted(concept.monomials)]
    return Oracle(concept, distribution, Circuit(n + 1, tuple(gates)))


def exact_error(oracle: Oracle, hypothesis: Anf) -> float:
    """D-mass of the inputs where the hypothesis disagrees with the concept.

    Computed analytically from the product form: h(x) != c(x) exactly where
    the XOR function h^c evaluates to 1, so the error is one masked sum over
    its truth table.
    """
    if hypothesis.n != oracle.n:
        raise ValueError("hypothesis arity mismatch")
    wrong = anf_to_truth_table(hypothesis ^ oracle.concept)
    # accumulation can land epsilon outside [0, 1]; clamp to the contract
    return min(max(float(oracle.distribution.weights() @ wrong), 0.0), 1.0)
