"""Pure-Python fallback for the compiled matrix-exponential core.

Implements the same algorithm as ``_kernels.pyx`` (scaling and squaring
around a fixed 20-term Taylor series) so that the two backends agree to
rounding and either can back the public kernel API.
"""
import numpy as np

N_TERMS = 20


def expm(a):
    """exp(a) for a square complex matrix."""
    A = np.ascontiguousarray(a, dtype=np.complex128)
    if A.ndim != 2 or A.shape[0] != A.shape[1]:
        raise ValueError(f"expm needs a square matrix, got shape {A.shape}")
    n = A.shape[0]
    if n == 0:
        return A.copy()

    norm = float(np.abs(A).sum(axis=0).max())
    squarings = 0
    while norm > 0.5:
        norm /= 2.0
        squarings += 1

    X = A / (2.0 ** squarings)
    acc = np.eye(n, dtype=np.complex128)
    term = np.eye(n, dtype=np.complex128)
    for k in range(1, N_TERMS + 1):
        term = term @ X / k
        acc = acc + term
    for _ in range(squarings):
        acc = acc @ acc
    return acc
