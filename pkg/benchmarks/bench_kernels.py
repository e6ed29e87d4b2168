"""Compare the compiled gate kernels against the pure-numpy fallback.

Times a representative gate mix (multi-controlled X, controlled Ry, phase
mask, flag-probability sum) per qubit count and prints the speedup.  Run:

    python benchmarks/bench_kernels.py [--qubits 8 12 16 20] [--repeats 5]
"""
import argparse
import math
import time

import numpy as np

from qpaclearn import _kernels_py

try:
    from qpaclearn import _kernels_cy
except ImportError:
    _kernels_cy = None


def gate_mix(rng, n, count=60):
    ops = []
    for _ in range(count):
        target = int(rng.integers(0, n))
        controls = int(rng.integers(0, 1 << n)) & ~(1 << target)
        kind = int(rng.integers(0, 4))
        if kind == 0:
            ops.append(("mcx", controls, target))
        elif kind == 1:
            half = rng.uniform(0, math.pi)
            ops.append(("cry", controls, target, math.cos(half), math.sin(half)))
        elif kind == 2:
            ops.append(("phase", int(rng.integers(1, 1 << n))))
        else:
            mask = int(rng.integers(0, 1 << n))
            ops.append(("prob", mask, int(rng.integers(0, 1 << n)) & mask))
    return ops


def run_mix(impl, amps, n, ops):
    sink = 0.0
    for op in ops:
        if op[0] == "mcx":
            impl.apply_mcx(amps, n, op[1], op[2])
        elif op[0] == "cry":
            impl.apply_cry(amps, n, op[1], op[2], op[3], op[4])
        elif op[0] == "phase":
            impl.apply_phase_mask(amps, n, op[1])
        else:
            sink += impl.masked_probability(amps, op[1], op[2])
    return sink


def time_backend(impl, n, ops, repeats):
    rng = np.random.default_rng(0)
    amps = rng.standard_normal(1 << n) + 1j * rng.standard_normal(1 << n)
    amps /= np.linalg.norm(amps)
    best = math.inf
    for _ in range(repeats):
        work = amps.copy()
        t0 = time.perf_counter()
        run_mix(impl, work, n, ops)
        best = min(best, time.perf_counter() - t0)
    return best


def main():
    parser = argparse.ArgumentParser()
    parser.add_argument("--qubits", type=int, nargs="+", default=[6, 10, 14, 18, 22])
    parser.add_argument("--repeats", type=int, default=5)
    parser.add_argument("--gates", type=int, default=60)
    args = parser.parse_args()

    if _kernels_cy is None:
        print("compiled backend not built; showing pure backend only")
    print(f"{'qubits':>6} {'pure (ms)':>12} {'compiled (ms)':>14} {'speedup':>8}")
    for n in args.qubits:
        rng = np.random.default_rng(n)
        ops = gate_mix(rng, n, args.gates)
        t_pure = time_backend(_kernels_py, n, ops, args.repeats)
        if _kernels_cy is None:
            print(f"{n:>6} {t_pure * 1e3:>12.3f} {'-':>14} {'-':>8}")
            continue
        t_comp = time_backend(_kernels_cy, n, ops, args.repeats)
        print(f"{n:>6} {t_pure * 1e3:>12.3f} {t_comp * 1e3:>14.3f} {t_pure / t_comp:>8.1f}x")


if __name__ == "__main__":
    main()
