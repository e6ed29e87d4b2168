"""Boolean functions over n-bit inputs: XOR-of-monomials form and truth tables.

Bitstrings are plain ints with the convention that bit i of the integer is
x_i (so qubit q_i and statevector index bit i line up with it).  The same
ints serve as input points and as monomial/control masks.  Bit-literal
strings such as "1010" list x_0 first; use :func:`mask_from_bits` /
:func:`bits_from_mask` to convert.
"""
from __future__ import annotations

from dataclasses import dataclass

import numpy as np

MAX_ARITY = 24  # statevector memory cap


def check_arity(n: int) -> None:
    if not 0 <= n <= MAX_ARITY:
        raise ValueError(f"arity must be in [0, {MAX_ARITY}], got {n}")


def check_mask(mask: int, n: int) -> None:
    if not 0 <= mask < (1 << n):
        raise ValueError(f"mask {mask:#x} out of range for {n} bits")


def mask_from_bits(bits: str) -> int:
    """Parse a bit-literal like "1010" (x_0 leftmost) into an int mask."""
    if not bits or any(c not in "01" for c in bits):
        raise ValueError(f"not a bit literal: {bits!r}")
    return sum(1 << i for i, c in enumerate(bits) if c == "1")


def bits_from_mask(mask: int, n: int) -> str:
    """Render an int mask as a bit literal with x_0 leftmost."""
    check_mask(mask, n)
    return "".join("1" if mask >> i & 1 else "0" for i in range(n))


@dataclass(frozen=True)
class Anf:
    """XOR-of-monomials form of a Boolean function.

    ``monomials`` holds the masks u with a nonzero coefficient; the value at
    x is the XOR over monomials of prod_{i: u_i=1} x_i.  The empty mask is
    the constant-1 term, the empty set the constant-0 function.
    """

    n: int
    monomials: frozenset[int]

    def __post_init__(self):
        check_arity(self.n)
        object.__setattr__(self, "monomials", frozenset(self.monomials))
        for u in self.monomials:
            check_mask(u, self.n)

    def evaluate(self, x: int) -> int:
        check_mask(x, self.n)
        acc = 0
        for u in self.monomials:
            if x & u == u:
                acc ^= 1
        return acc

    def __xor__(self, other: "Anf") -> "Anf":
        if self.n != other.n:
            raise ValueError("arity mismatch")
        return Anf(self.n, self.monomials ^ other.monomials)

    def render(self) -> str:
        """Sorted hex mask list, e.g. "n=4; 0x1,0x4" (empty set -> "-")."""
        masks = ",".join(hex(u) for u in sorted(self.monomials)) or "-"
        return f"n={self.n}; {masks}"


def anf_evaluate(f: Anf, x: int) -> int:
    return f.evaluate(x)


def _mobius(values: np.ndarray, n: int) -> np.ndarray:
    # Self-inverse butterfly over GF(2); index bit i is x_i.
    out = values.copy()
    for i in range(n):
        step = 1 << i
        view = out.reshape(-1, 2 * step)
        view[:, step:] ^= view[:, :step]
    return out


def anf_to_truth_table(f: Anf) -> np.ndarray:
    """Truth table of f as a uint8 array of length 2^n indexed by x."""
    coeffs = np.zeros(1 << f.n, dtype=np.uint8)
    for u in f.monomials:
        coeffs[u] = 1
    return _mobius(coeffs, f.n)


def truth_table_to_anf(values: np.ndarray, n: int) -> Anf:
    """Inverse of :func:`anf_to_truth_table` (the transform is an involution)."""
    values = np.asarray(values, dtype=np.uint8) & 1
    if values.shape != (1 << n,):
        raise ValueError(f"expected {1 << n} truth-table entries, got {values.shape}")
    coeffs = _mobius(values, n)
    return Anf(n, frozenset(int(u) for u in np.nonzero(coeffs)[0]))


def parity_anf(n: int, s: int) -> Anf:
    """The parity function x -> s.x as one single-control monomial per set bit."""
    check_mask(s, n)
    return Anf(n, frozenset(1 << i for i in range(n) if s >> i & 1))
