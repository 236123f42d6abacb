"""Dense complex linear-algebra kernels underlying all operator modules.

Matrices are plain numpy complex arrays. The matrix exponential is backed
by a compiled extension when available and an identical pure-Python
implementation otherwise; set EVENSPIN_PURE_PYTHON=1 to force the
fallback. Everything here is a pure function and safe to share across
threads.
"""
from __future__ import annotations

import os
from dataclasses import dataclass

import numpy as np

from ._kernels_py import expm as _kernels_py_expm

if os.environ.get("EVENSPIN_PURE_PYTHON"):
    from . import _kernels_py as _impl

    _BACKEND = "python"
else:
    try:
        from . import _kernels as _impl

        _BACKEND = "compiled"
    except ImportError:
        from . import _kernels_py as _impl

        _BACKEND = "python"

# eigenvalues closer than this (relative to the matrix norm) are one cluster
CLUSTER_REL = 1e-8

# the compiled core's naive loops beat BLAS dispatch overhead only for small
# matrices; beyond this the numpy implementation of the same algorithm wins
EXPM_COMPILED_DIM_LIMIT = 8


def kernel_backend() -> str:
    """Which expm backend was selected at import: 'compiled' or 'python'."""
    return _BACKEND


class ShapeError(ValueError):
    """Operands have incompatible or non-square shapes."""


class DomainError(ValueError):
    """Input lies outside an operation's physical domain."""


class ContractError(ValueError):
    """Input violates a precondition (e.g. non-Hermitian beyond tolerance)."""


class InvariantViolation(AssertionError):
    """A verified identity failed beyond its tolerance."""


@dataclass(frozen=True)
class Tolerance:
    """Absolute plus relative comparison tolerance."""

    abs_eps: float = 1e-10
    rel_eps: float = 1e-10

    def __post_init__(self):
        if self.abs_eps < 0 or self.rel_eps < 0:
            raise ValueError("tolerances must be nonnegative")

    def bound(self, scale: float) -> float:
        return self.abs_eps + self.rel_eps * float(scale)


DEFAULT_TOL = Tolerance()


def as_matrix(a) -> np.ndarray:
    a = np.asarray(a, dtype=np.complex128)
    if a.ndim != 2:
        raise ShapeError(f"expected a 2-d matrix, got ndim={a.ndim}")
    return a


def require_square(a: np.ndarray) -> np.ndarray:
    a = as_matrix(a)
    if a.shape[0] != a.shape[1]:
        raise ShapeError(f"expected a square matrix, got shape {a.shape}")
    return a


def frob(a) -> float:
    """Frobenius norm."""
    return float(np.linalg.norm(np.asarray(a)))


def approx_eq(a, b, tol: Tolerance = DEFAULT_TOL) -> bool:
    """Symmetric matrix comparison: ||a-b|| <= abs + rel * max(||a||, ||b||)."""
    a = as_matrix(a)
    b = as_matrix(b)
    if a.shape != b.shape:
        raise ShapeError(f"shape mismatch: {a.shape} vs {b.shape}")
    return frob(a - b) <= tol.bound(max(frob(a), frob(b)))


def commutator(a, b) -> np.ndarray:
    """a @ b - b @ a for square matrices of equal dimension."""
    a = require_square(a)
    b = require_square(b)
    if a.shape != b.shape:
        raise ShapeError(f"dimension mismatch: {a.shape} vs {b.shape}")
    return a @ b - b @ a


def anticommutator(a, b) -> np.ndarray:
    """a @ b + b @ a for square matrices of equal dimension."""
    a = require_square(a)
    b = require_square(b)
    if a.shape != b.shape:
        raise ShapeError(f"dimension mismatch: {a.shape} vs {b.shape}")
    return a @ b + b @ a


def kron(a, b) -> np.ndarray:
    """Kronecker product, row-major, first factor on the slow index."""
    return np.kron(as_matrix(a), as_matrix(b))


def expm(a) -> np.ndarray:
    """Matrix exponential (scaling and squaring with a Taylor core)."""
    a = require_square(a)
    if _BACKEND == "compiled" and a.shape[0] > EXPM_COMPILED_DIM_LIMIT:
        return _kernels_py_expm(a)
    return _impl.expm(a)


def phase_fix(v: np.ndarray, cutoff: float = 1e-12) -> np.ndarray:
    """Rotate a vector's global phase so its first nonzero entry is real positive."""
    v = np.asarray(v, dtype=np.complex128)
    for c in v:
        if abs(c) > cutoff:
            return v * (np.conj(c) / abs(c))
    return v.copy()


def _vector_key(v: np.ndarray):
    return tuple((float(c.real), float(c.imag)) for c in v)


@dataclass(frozen=True)
class SpinSpectrum:
    """Eigensystem of a Hermitian operator with degeneracy bookkeeping.

    values: all eigenvalues ascending; vectors: matching orthonormal
    columns, phase-fixed; eigenvalues: (value, multiplicity) pairs after
    clustering nearly-equal values.
    """

    values: np.ndarray
    vectors: np.ndarray
    eigenvalues: tuple[tuple[float, int], ...]

    def cluster_projector(self, value: float) -> np.ndarray:
        """Rank-m projector onto the eigenspace cluster nearest to value."""
        if not self.eigenvalues:
            raise ValueError("empty spectrum")
        best = min(range(len(self.eigenvalues)),
                   key=lambda i: abs(self.eigenvalues[i][0] - value))
        lo = sum(mult for _, mult in self.eigenvalues[:best])
        hi = lo + self.eigenvalues[best][1]
        cols = self.vectors[:, lo:hi]
        return cols @ cols.conj().T


def hermitian_eigensystem(a, tol: Tolerance = DEFAULT_TOL,
                          cluster_rel: float = CLUSTER_REL) -> SpinSpectrum:
    """Diagonalize a Hermitian matrix with deterministic ordering.

    Eigenvalues ascend; within a degenerate cluster the columns are
    ordered lexicographically by their phase-fixed entries so repeated
    runs produce identical output. Raises ContractError if the input is
    not Hermitian within tol.
    """
    a = require_square(a)
    scale = frob(a)
    if frob(a - a.conj().T) > tol.bound(scale):
        raise ContractError("matrix is not Hermitian within tolerance")

    values, vectors = np.linalg.eigh(a)
    vectors = np.column_stack([phase_fix(vectors[:, k]) for k in range(vectors.shape[1])])

    gap = cluster_rel * max(scale, 1e-300)
    clusters: list[list[int]] = [[0]]
    for k in range(1, len(values)):
        if values[k] - values[k - 1] <= gap:
            clusters[-1].append(k)
        else:
            clusters.append([k])

    order: list[int] = []
    pairs: list[tuple[float, int]] = []
    for idx in clusters:
        idx = sorted(idx, key=lambda k: _vector_key(vectors[:, k]))
        order.extend(idx)
        pairs.append((float(np.mean(values[idx])), len(idx)))

    values = values[order].astype(float)
    vectors = vectors[:, order]
    return SpinSpectrum(values=values, vectors=vectors, eigenvalues=tuple(pairs))
