"""The tunable network: a mutable set of control masks, each standing for an
X gate on the first ancilla controlled by the qubits in the mask.

The expressed hypothesis is exactly the XOR-of-monomials form whose monomial
set equals the gate set; the empty mask is an unconditional X (constant-1
term).  Updates are toggles: a mask already present is removed, a new one is
added, so a toggle XORs monomials into the hypothesis in both directions.
"""
from __future__ import annotations

from typing import Iterable

from .boolfunc import Anf, check_arity, check_mask
from .statevector import Circuit, McX


class TnnState:
    __slots__ = ("n", "gates")

    def __init__(self, n: int, gates: Iterable[int] = ()):
        check_arity(n)
        self.n = n
        self.gates: set[int] = set()
        for u in gates:
            check_mask(u, n)
            self.gates.add(u)

    def clone(self) -> "TnnState":
        return TnnState(self.n, self.gates)

    def hypothesis(self) -> Anf:
        return Anf(self.n, frozenset(self.gates))

    def toggle(self, masks: Iterable[int]) -> "TnnState":
        """Symmetric difference with ``masks``; toggling twice is a no-op."""
        for u in set(masks):
            check_mask(u, self.n)
            self.gates ^= {u}
        return self

    def as_circuit(self, n_qubits: int | None = None, ancilla: int | None = None) -> Circuit:
        """One multi-controlled X per gate mask, all targeting the ancilla.

        Defaults to the minimal n+1 qubit layout with the ancilla right
        after the inputs; pass both arguments to embed in a wider register.
        """
        if n_qubits is None:
            n_qubits = self.n + 1
        if ancilla is None:
            ancilla = self.n
        return Circuit(n_qubits, tuple(McX(u, ancilla) for u in sorted(self.gates)))

    def render(self) -> str:
        return self.hypothesis().render()

    def __repr__(self):
        return f"TnnState(n={self.n}, gates={sorted(self.gates)})"
