"""Benchmark the compiled matrix-exponential core against the pure-Python
fallback on the workload that dominates the verification scans: finite
little-group rotations, i.e. exponentials of 4x4 (and 16x16) complex
generators.

Run: python benchmarks/bench_kernels.py [n_calls]
"""
import sys
import time

import numpy as np

from evenspin import _kernels_py
from evenspin.dirac import random_momentum
from evenspin.little_algebra import four_vector_generators

try:
    from evenspin import _kernels
except ImportError:
    _kernels = None


def workload(n_calls, rng):
    """Generator matrices of finite little-group transformations."""
    gens = four_vector_generators()
    mats = []
    for _ in range(n_calls):
        fm = random_momentum(rng)
        mu = rng.uniform(-2.0, 2.0, size=3)
        nu = -np.cross(mu, fm.p) / fm.energy
        gen = sum(mu[k] * gens.j[k] + nu[k] * gens.k[k] for k in range(3))
        mats.append(-1j * gen)
    return mats


def time_backend(expm, mats, repeats=3):
    best = float("inf")
    for _ in range(repeats):
        t0 = time.perf_counter()
        for m in mats:
            expm(m)
        best = min(best, time.perf_counter() - t0)
    return best


def main():
    n_calls = int(sys.argv[1]) if len(sys.argv) > 1 else 2000
    rng = np.random.default_rng(7)
    mats4 = workload(n_calls, rng)
    mats16 = [np.kron(m, np.eye(4)) for m in mats4[: n_calls // 4]]

    print(f"{n_calls} 4x4 exponentials, {len(mats16)} 16x16 exponentials")
    rows = []
    for size, mats in (("4x4", mats4), ("16x16", mats16)):
        t_py = time_backend(_kernels_py.expm, mats)
        row = [size, f"python {1e6 * t_py / len(mats):9.2f} us/call"]
        if _kernels is not None:
            t_c = time_backend(_kernels.expm, mats)
            row.append(f"compiled {1e6 * t_c / len(mats):9.2f} us/call")
            row.append(f"speedup {t_py / t_c:6.1f}x")
            worst = max(float(np.abs(_kernels.expm(m) - _kernels_py.expm(m)).max())
                        for m in mats[:50])
            row.append(f"max |diff| {worst:.2e}")
        else:
            row.append("compiled backend not built")
        rows.append(row)
    for row in rows:
        print("  ".join(row))


if __name__ == "__main__":
    main()
