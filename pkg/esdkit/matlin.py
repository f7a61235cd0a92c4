"""
Dense complex linear algebra kernel.

Matrices are plain ``numpy`` arrays of dtype complex128. A d x d density matrix is
vectorized row-major, so a superoperator indexes as ``L[i*d + j, k*d + l]`` and
``vec(A @ rho @ B) == kron(A, B.T) @ vec(rho)``.
"""
from __future__ import annotations
from functools import reduce
from typing import Iterable, Protocol, TypeAlias, TypeVar

import numpy as np
import scipy.linalg as sla

from .tolerances import DEFAULT_TOLERANCES

ComplexMatrix: TypeAlias = np.ndarray
CutLike: TypeAlias = "int | Iterable[int]"


class _Multipartite(Protocol):
    dims: tuple[int, ...]
    mat: np.ndarray


M = TypeVar("M", bound=_Multipartite)


# ------------------------------------------------------------
# Products
# ------------------------------------------------------------
def as_matrix(a) -> ComplexMatrix:
    """Return `a` as a 2D complex array."""
    m = np.asarray(a, dtype=complex)
    if m.ndim != 2:
        raise ValueError(f"Expected a 2D matrix, got shape {m.shape}")
    return m


def kron(a, b) -> ComplexMatrix:
    """Kronecker product with block structure a[i, j] * b."""
    return np.kron(as_matrix(a), as_matrix(b))


def kron_all(*mats) -> ComplexMatrix:
    """Left fold of `kron` over one or more matrices."""
    if not mats:
        raise ValueError("kron_all needs at least one matrix")
    return reduce(kron, mats)


def dagger(a) -> ComplexMatrix:
    return as_matrix(a).conj().T


# ------------------------------------------------------------
# Exponential
# ------------------------------------------------------------
def expm(a) -> ComplexMatrix:
    """Matrix exponential (Pade scaling-and-squaring, scipy)."""
    m = as_matrix(a)
    if m.shape[0] != m.shape[1]:
        raise ValueError(f"expm needs a square matrix, got shape {m.shape}")
    return sla.expm(m)


# ------------------------------------------------------------
# Spectra
# ------------------------------------------------------------
def is_hermitian(a, tol: float | None = None) -> bool:
    m = as_matrix(a)
    if m.shape[0] != m.shape[1]:
        return False
    tol = DEFAULT_TOLERANCES.hermitian if tol is None else tol
    return bool(np.max(np.abs(m - m.conj().T), initial=0.0) <= tol)


def _checked_hermitian(h, tol: float | None) -> ComplexMatrix:
    m = as_matrix(h)
    if not is_hermitian(m, tol):
        raise ValueError("Matrix is not Hermitian within tolerance")
    # symmetrize so LAPACK sees an exactly Hermitian input
    return 0.5 * (m + m.conj().T)


def herm_eigvals(h, tol: float | None = None) -> np.ndarray:
    """Real eigenvalues of a Hermitian matrix, ascending."""
    return sla.eigvalsh(_checked_hermitian(h, tol))


def herm_eig(h, tol: float | None = None) -> tuple[np.ndarray, ComplexMatrix]:
    """Ascending eigenvalues and orthonormal eigenvectors (columns) of a Hermitian matrix."""
    return sla.eigh(_checked_hermitian(h, tol))


def eigvals_general(a) -> np.ndarray:
    """Full complex spectrum of a square matrix."""
    m = as_matrix(a)
    if m.shape[0] != m.shape[1]:
        raise ValueError(f"eigvals_general needs a square matrix, got shape {m.shape}")
    return sla.eigvals(m)


# ------------------------------------------------------------
# Multipartite structure
# ------------------------------------------------------------
def normalize_cut(cut: CutLike, n: int) -> tuple[int, ...]:
    """Return the sorted, de-duplicated subsystem indices of `cut`."""
    idx = (cut,) if isinstance(cut, (int, np.integer)) else tuple(cut)
    if not idx:
        raise ValueError("cut must name at least one subsystem")
    for k in idx:
        if not 0 <= k < n:
            raise ValueError(f"Invalid subsystem index {k} for {n} subsystems")
    return tuple(sorted({int(k) for k in idx}))


def partial_transpose(rho: _Multipartite, cut: CutLike) -> ComplexMatrix:
    """Transpose the tensor factor(s) named by `cut`, leave the others untouched."""
    dims = tuple(rho.dims)
    n = len(dims)
    axes = normalize_cut(cut, n)

    t = np.asarray(rho.mat).reshape(dims + dims)
    perm = list(range(2 * n))
    for k in axes:
        perm[k], perm[n + k] = perm[n + k], perm[k]
    return t.transpose(perm).reshape(np.asarray(rho.mat).shape)


def partial_trace(rho: M, keep: Iterable[int]) -> M:
    """Trace out every subsystem not in `keep`; returns the same type as `rho`."""
    dims = tuple(rho.dims)
    n = len(dims)
    keep_idx = tuple(keep)
    if not keep_idx:
        raise ValueError("keep set must be nonempty")
    kept = normalize_cut(keep_idx, n)

    rows = list(range(n))
    cols = [n + k if k in kept else k for k in range(n)]
    out = [k for k in kept] + [n + k for k in kept]

    t = np.asarray(rho.mat).reshape(dims + dims)
    reduced = np.einsum(t, rows + cols, out)

    kept_dims = tuple(dims[k] for k in kept)
    size = int(np.prod(kept_dims))
    return type(rho)(dims=kept_dims, mat=reduced.reshape(size, size))

