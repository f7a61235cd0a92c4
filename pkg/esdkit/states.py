"""Constructors for the pure and mixed states used throughout esdkit."""
from __future__ import annotations
from typing import Sequence

import numpy as np
from scipy.stats import unitary_group

from .density import DensityMatrix, PureState

Seed = int | np.random.SeedSequence | None


# ------------------------------------------------------------
# Named pure states
# ------------------------------------------------------------
def bell_phi_plus() -> PureState:
    """(|00> + |11>) / sqrt(2)."""
    return PureState((2, 2), np.array([1.0, 0.0, 0.0, 1.0]) / np.sqrt(2.0))


def schmidt_pure(p: float, d: int = 2) -> PureState:
    """d x 2 state sqrt(p)|00> + sqrt(1-p)|11>."""
    if not 0.0 < p < 1.0:
        raise ValueError(f"Schmidt weight p must lie in (0, 1), got {p!r}")
    if d < 2:
        raise ValueError(f"Side A dimension must be >= 2, got {d!r}")
    vec = np.zeros(2 * d, dtype=complex)
    vec[0] = np.sqrt(p)
    vec[1 * 2 + 1] = np.sqrt(1.0 - p)
    return PureState((d, 2), vec)


def schmidt_state(coefficients: Sequence[float]) -> PureState:
    """d x d state sum_i sqrt(p_i)|ii> for weights p_i summing to one."""
    p = np.asarray(coefficients, dtype=float)
    d = p.size
    if d < 2 or np.any(p < 0) or abs(p.sum() - 1.0) > 1e-12:
        raise ValueError("Schmidt weights must be >= 2 nonnegative numbers summing to 1")
    vec = np.zeros(d * d, dtype=complex)
    vec[np.arange(d) * (d + 1)] = np.sqrt(p)
    return PureState((d, d), vec)


def basis_state(dims: Sequence[int], index: int) -> PureState:
    size = int(np.prod(tuple(dims)))
    if not 0 <= index < size:
        raise ValueError(f"Basis index {index} out of range for dims {tuple(dims)}")
    vec = np.zeros(size, dtype=complex)
    vec[index] = 1.0
    return PureState(tuple(dims), vec)


def product_state(*vectors) -> PureState:
    """Tensor product of normalized local vectors."""
    if not vectors:
        raise ValueError("product_state needs at least one factor")
    locals_ = [np.asarray(v, dtype=complex).reshape(-1) for v in vectors]
    vec = locals_[0]
    for v in locals_[1:]:
        vec = np.kron(vec, v)
    return PureState(tuple(v.size for v in locals_), vec / np.linalg.norm(vec))


def ghz(n: int) -> PureState:
    """(|0...0> + |1...1>) / sqrt(2) on n qubits."""
    if n < 2:
        raise ValueError("GHZ state needs n >= 2")
    vec = np.zeros(2**n, dtype=complex)
    vec[0] = vec[-1] = 1.0 / np.sqrt(2.0)
    return PureState((2,) * n, vec)


def w_state(n: int) -> PureState:
    """Equal superposition of the n single-excitation basis states."""
    if n < 2:
        raise ValueError("W state needs n >= 2")
    vec = np.zeros(2**n, dtype=complex)
    vec[[1 << k for k in range(n)]] = 1.0 / np.sqrt(n)
    return PureState((2,) * n, vec)


# ------------------------------------------------------------
# X states
# ------------------------------------------------------------
def x_state(diag: Sequence[float], anti: Sequence[complex]) -> DensityMatrix:
    """
    Two-qubit state supported on the diagonal and anti-diagonal.

    `diag` are the populations (rho00, rho11, rho22, rho33); `anti` is the pair
    (rho12, rho03), the inner and outer anti-diagonal coherences.
    """
    d = np.asarray(diag, dtype=float)
    inner, outer = (complex(a) for a in anti)
    if d.shape != (4,) or np.any(d < 0) or abs(d.sum() - 1.0) > 1e-12:
        raise ValueError("X-state populations must be 4 nonnegative numbers summing to 1")
    if abs(inner) > np.sqrt(d[1] * d[2]) + 1e-15:
        raise ValueError("X-state positivity violated: |rho12| > sqrt(rho11 rho22)")
    if abs(outer) > np.sqrt(d[0] * d[3]) + 1e-15:
        raise ValueError("X-state positivity violated: |rho03| > sqrt(rho00 rho33)")

    mat = np.diag(d).astype(complex)
    mat[1, 2], mat[2, 1] = inner, np.conj(inner)
    mat[0, 3], mat[3, 0] = outer, np.conj(outer)
    return DensityMatrix((2, 2), mat)


# ------------------------------------------------------------
# Random states
# ------------------------------------------------------------
def _haar_vector(rng: np.random.Generator, size: int) -> np.ndarray:
    v = rng.standard_normal(size) + 1j * rng.standard_normal(size)
    return v / np.linalg.norm(v)


def random_pure(dims: Sequence[int], seed: Seed = None) -> PureState:
    """Haar-random pure state; identical for identical seeds."""
    dims = tuple(dims)
    if not dims:
        raise ValueError("dims must be nonempty")
    rng = np.random.default_rng(seed)
    return PureState(dims, _haar_vector(rng, int(np.prod(dims))))


def random_density(dims: Sequence[int], seed: Seed = None, rank: int | None = None) -> DensityMatrix:
    """Mixture of `rank` Haar-random pure states with Dirichlet(1, ..., 1) weights."""
    dims = tuple(dims)
    if not dims:
        raise ValueError("dims must be nonempty")
    size = int(np.prod(dims))
    k = size if rank is None else rank
    if k < 1:
        raise ValueError("rank must be >= 1")

    rng = np.random.default_rng(seed)
    weights = rng.dirichlet(np.ones(k))
    mat = np.zeros((size, size), dtype=complex)
    for w in weights:
        v = _haar_vector(rng, size)
        mat += w * np.outer(v, v.conj())
    return DensityMatrix.normalized(dims, mat)


def random_unitary(dim: int, seed: Seed = None) -> np.ndarray:
    """Haar-random unitary matrix."""
    rng = np.random.default_rng(seed)
    return np.asarray(unitary_group.rvs(dim, random_state=rng), dtype=complex)
