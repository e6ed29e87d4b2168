# cython: boundscheck=False, wraparound=False, cdivision=True
"""Compiled gate kernels over a dense statevector.

Same contract as ``_kernels_py``: in-place mutation of a complex128 array
whose index bit i is qubit i.  Pair enumeration inserts fixed bits into a
compressed counter (one insertion per control/target bit), so only the
amplitudes a gate actually touches are visited.
"""
import numpy as np

cimport cython

BACKEND = "compiled"

ctypedef Py_ssize_t index_t


cdef inline index_t _insert_one(index_t i, int pos) noexcept nogil:
    cdef index_t low = i & ((<index_t>1 << pos) - 1)
    return ((i >> pos) << (pos + 1)) | low | (<index_t>1 << pos)


cdef int _bit_positions(unsigned long long mask, int* out) noexcept nogil:
    # Ascending positions of the set bits; ascending order is what makes
    # repeated _insert_one calls compose correctly.
    cdef int k = 0
    cdef int p = 0
    while mask:
        if mask & 1:
            out[k] = p
            k += 1
        mask >>= 1
        p += 1
    return k


def apply_mcx(double complex[::1] amps, int n_qubits, unsigned long long controls, int target):
    cdef int pos[64]
    cdef int k = _bit_positions(controls | (<unsigned long long>1 << target), pos)
    cdef index_t n_pairs = <index_t>1 << (n_qubits - k)
    cdef index_t tb = <index_t>1 << target
    cdef index_t g, i, j
    cdef int b
    cdef double complex tmp
    for g in range(n_pairs):
        i = g
        for b in range(k):
            i = _insert_one(i, pos[b])
        j = i ^ tb
        tmp = amps[j]
        amps[j] = amps[i]
        amps[i] = tmp


def apply_cry(double complex[::1] amps, int n_qubits, unsigned long long controls, int target,
              double cos_half, double sin_half):
    cdef int pos[64]
    cdef int k = _bit_positions(controls | (<unsigned long long>1 << target), pos)
    cdef index_t n_pairs = <index_t>1 << (n_qubits - k)
    cdef index_t tb = <index_t>1 << target
    cdef index_t g, i1, i0
    cdef int b
    cdef double complex a0, a1
    for g in range(n_pairs):
        i1 = g
        for b in range(k):
            i1 = _insert_one(i1, pos[b])
        i0 = i1 ^ tb
        a0 = amps[i0]
        a1 = amps[i1]
        amps[i0] = cos_half * a0 - sin_half * a1
        amps[i1] = sin_half * a0 + cos_half * a1


def apply_phase_mask(double complex[::1] amps, int n_qubits, unsigned long long mask):
    cdef int pos[64]
    cdef int k = _bit_positions(mask, pos)
    cdef index_t n_hits = <index_t>1 << (n_qubits - k)
    cdef index_t g, i
    cdef int b
    for g in range(n_hits):
        i = g
        for b in range(k):
            i = _insert_one(i, pos[b])
        amps[i] = -amps[i]


def masked_probability(double complex[::1] amps, unsigned long long mask, unsigned long long value):
    cdef index_t size = amps.shape[0]
    cdef index_t i
    cdef double acc = 0.0
    cdef double re, im
    for i in range(size):
        if (<unsigned long long>i & mask) == value:
            re = amps[i].real
            im = amps[i].imag
            acc += re * re + im * im
    return acc
