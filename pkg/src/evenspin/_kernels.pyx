# cython: boundscheck=False, wraparound=False, cdivision=True
"""Compiled matrix-exponential core for small dense complex matrices.

Scaling and squaring around a fixed 20-term Taylor series: the input is
halved until its 1-norm drops below 0.5, the series is summed with plain
C loops (the matrices here are at most 16x16, so naive matmul beats any
BLAS dispatch overhead), and the result is squared back up.
"""
import numpy as np

cdef int N_TERMS = 20


cdef void _matmul(double complex[:, ::1] out,
                  double complex[:, ::1] a,
                  double complex[:, ::1] b,
                  Py_ssize_t n) noexcept nogil:
    cdef Py_ssize_t i, j, k
    cdef double complex acc
    for i in range(n):
        for j in range(n):
            acc = 0
            for k in range(n):
                acc = acc + a[i, k] * b[k, j]
            out[i, j] = acc


def expm(a):
    """exp(a) for a square complex matrix."""
    A = np.ascontiguousarray(a, dtype=np.complex128)
    if A.ndim != 2 or A.shape[0] != A.shape[1]:
        raise ValueError(f"expm needs a square matrix, got shape {A.shape}")
    cdef Py_ssize_t n = A.shape[0]
    if n == 0:
        return A.copy()

    cdef double norm = float(np.abs(A).sum(axis=0).max())
    cdef int squarings = 0
    while norm > 0.5:
        norm = norm / 2.0
        squarings += 1

    X = A / (2.0 ** squarings)
    acc_arr = np.eye(n, dtype=np.complex128)
    term_arr = np.eye(n, dtype=np.complex128)
    scratch_arr = np.empty((n, n), dtype=np.complex128)

    cdef double complex[:, ::1] x = X
    cdef double complex[:, ::1] acc = acc_arr
    cdef double complex[:, ::1] term = term_arr
    cdef double complex[:, ::1] scratch = scratch_arr
    cdef Py_ssize_t i, j
    cdef int k, s

    with nogil:
        for k in range(1, N_TERMS + 1):
            _matmul(scratch, term, x, n)
            for i in range(n):
                for j in range(n):
                    term[i, j] = scratch[i, j] / k
                    acc[i, j] = acc[i, j] + term[i, j]
        for s in range(squarings):
            _matmul(scratch, acc, acc, n)
            for i in range(n):
                for j in range(n):
                    acc[i, j] = scratch[i, j]

    return acc_arr
