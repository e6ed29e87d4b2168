"""Pure-numpy gate kernels; fallback when the compiled extension is absent.

All kernels mutate a complex128 statevector of length 2**n_qubits in place.
Index bit i corresponds to qubit i.  Semantics must stay bitwise identical
to ``_kernels_cy`` — the test suite compares the two element for element.
"""
import numpy as np

BACKEND = "pure"


def _pair_indices(size: int, controls: int, target_bit: int) -> np.ndarray:
    # Indices with every control bit set and the target bit clear.
    idx = np.arange(size, dtype=np.int64)
    sel = (idx & (controls | target_bit)) == controls
    return idx[sel]


def apply_mcx(amps: np.ndarray, n_qubits: int, controls: int, target: int) -> None:
    tb = 1 << target
    i0 = _pair_indices(amps.size, controls, tb)
    i1 = i0 | tb
    tmp = amps[i0].copy()
    amps[i0] = amps[i1]
    amps[i1] = tmp


def apply_cry(
    amps: np.ndarray,
    n_qubits: int,
    controls: int,
    target: int,
    cos_half: float,
    sin_half: float,
) -> None:
    tb = 1 << target
    i0 = _pair_indices(amps.size, controls, tb)
    i1 = i0 | tb
    a0 = amps[i0].copy()
    a1 = amps[i1].copy()
    amps[i0] = cos_half * a0 - sin_half * a1
    amps[i1] = sin_half * a0 + cos_half * a1


def apply_phase_mask(amps: np.ndarray, n_qubits: int, mask: int) -> None:
    idx = np.arange(amps.size, dtype=np.int64)
    sel = (idx & mask) == mask
    amps[sel] = -amps[sel]


def masked_probability(amps: np.ndarray, mask: int, value: int) -> float:
    idx = np.arange(amps.size, dtype=np.int64)
    sel = (idx & mask) == value
    a = amps[sel]
    return float(np.sum(a.real * a.real + a.imag * a.imag))
