"""
Superoperators in the row-major convention of `esdkit.matlin`.

For a qubit the basis order is (rho00, rho01, rho10, rho11), |0> is the ground
state and sigma_plus = |1><0|.
"""
from __future__ import annotations
from dataclasses import dataclass
from typing import Iterable, Sequence, Tuple

import numpy as np

from .. import matlin
from ..density import DensityMatrix
from ..tolerances import DEFAULT_TOLERANCES

SIGMA_PLUS = np.array([[0, 0], [1, 0]], dtype=complex)   # |1><0|
SIGMA_MINUS = SIGMA_PLUS.T.copy()                        # |0><1|


# ======================================================================
# Superoperator
# ======================================================================

@dataclass(frozen=True, eq=False)
class Superoperator:
    """d^2 x d^2 matrix acting on row-major vectorized d x d matrices."""

    dim: int
    mat: np.ndarray

    def __post_init__(self):
        mat = matlin.as_matrix(self.mat)
        if mat.shape != (self.dim**2, self.dim**2):
            raise ValueError(f"Superoperator on dimension {self.dim} needs shape {(self.dim**2,) * 2}, got {mat.shape}")
        object.__setattr__(self, "mat", mat)

    @classmethod
    def identity(cls, dim: int) -> Superoperator:
        return cls(dim, np.eye(dim * dim, dtype=complex))

    def __matmul__(self, other: Superoperator) -> Superoperator:
        """Composition: `(a @ b)` applies `b` first."""
        if self.dim != other.dim:
            raise ValueError(f"Cannot compose superoperators on dimensions {self.dim} and {other.dim}")
        return Superoperator(self.dim, self.mat @ other.mat)

    def apply(self, rho) -> np.ndarray:
        """Act on a single d x d matrix."""
        m = matlin.as_matrix(rho)
        return (self.mat @ m.reshape(-1)).reshape(self.dim, self.dim)

    def trace_preservation_error(self) -> float:
        """max over basis inputs |tr V(E_kl) - tr E_kl|."""
        vec_identity = np.eye(self.dim, dtype=complex).reshape(-1)
        return float(np.max(np.abs(vec_identity @ self.mat - vec_identity)))

    def is_trace_preserving(self, tol: float = 1e-11) -> bool:
        return self.trace_preservation_error() <= tol


# ------------------------------------------------------------
# Generators
# ------------------------------------------------------------
def sandwich(a, b) -> np.ndarray:
    """Matrix of rho -> a @ rho @ b."""
    return matlin.kron(a, matlin.as_matrix(b).T)


def dissipator(c) -> np.ndarray:
    """Matrix of rho -> c rho c^dag - {c^dag c, rho} / 2."""
    c = matlin.as_matrix(c)
    cdc = c.conj().T @ c
    eye = np.eye(c.shape[0], dtype=complex)
    return sandwich(c, c.conj().T) - 0.5 * sandwich(cdc, eye) - 0.5 * sandwich(eye, cdc)


def lindblad_generator(collapse: Iterable[Tuple[float, np.ndarray]], dim: int) -> Superoperator:
    """Generator sum_k rate_k D[c_k] from (rate, operator) pairs."""
    mat = np.zeros((dim * dim, dim * dim), dtype=complex)
    for rate, c in collapse:
        if rate < 0:
            raise ValueError(f"Lindblad rates must be >= 0, got {rate!r}")
        mat += rate * dissipator(c)
    return Superoperator(dim, mat)


def propagator(l: Superoperator, t: float) -> Superoperator:
    """V(t) = exp(L t)."""
    if t < 0:
        raise ValueError(f"Propagation time must be >= 0, got {t!r}")
    return Superoperator(l.dim, matlin.expm(l.mat * t))


# ------------------------------------------------------------
# Reference channels
# ------------------------------------------------------------
def identity_channel(dim: int = 2) -> Superoperator:
    return Superoperator.identity(dim)


def depolarizing(dim: int, p: float) -> Superoperator:
    """rho -> (1 - p) rho + p tr(rho) I / d."""
    if not 0.0 <= p <= 1.0:
        raise ValueError(f"Depolarizing weight must lie in [0, 1], got {p!r}")
    vec_identity = np.eye(dim, dtype=complex).reshape(-1)
    mat = (1 - p) * np.eye(dim * dim, dtype=complex) + (p / dim) * np.outer(vec_identity, vec_identity)
    return Superoperator(dim, mat)


def free_rotation(omega: float, t: float) -> Superoperator:
    """Free qubit evolution: rho01 -> e^{i omega t} rho01, rho10 -> e^{-i omega t} rho10."""
    phase = np.exp(1j * omega * t)
    return Superoperator(2, np.diag([1.0, phase, np.conj(phase), 1.0]))


# ======================================================================
# Choi states and local application
# ======================================================================

def choi(v: Superoperator) -> DensityMatrix:
    """(I x V)(|phi+><phi+|) with the normalized maximally entangled state; trace one."""
    d = v.dim
    # V[k*d + l, i*d + j] = <k| V(|i><j|) |l>  ->  C[(i, k), (j, l)]
    c = v.mat.reshape(d, d, d, d).transpose(2, 0, 3, 1).reshape(d * d, d * d) / d
    return DensityMatrix((d, d), c)


def apply_to_subsystem(v: Superoperator, rho: DensityMatrix, which: int) -> DensityMatrix:
    """Apply `v` to tensor factor `which` of `rho`."""
    dims = rho.dims
    n = len(dims)
    if not 0 <= which < n:
        raise ValueError(f"Invalid subsystem index {which} for {n} subsystems")
    if dims[which] != v.dim:
        raise ValueError(f"Channel on dimension {v.dim} cannot act on subsystem of dimension {dims[which]}")

    d = v.dim
    t = rho.mat.reshape(dims + dims)
    out = np.tensordot(v.mat.reshape(d, d, d, d), t, axes=([2, 3], [which, n + which]))
    out = np.moveaxis(out, [0, 1], [which, n + which])
    return DensityMatrix(dims, out.reshape(rho.mat.shape), tolerances=rho.tolerances)


def apply_to_all(v: Superoperator, rho: DensityMatrix, which: Sequence[int] | None = None) -> DensityMatrix:
    """Apply `v` to each listed factor in turn (default: every factor)."""
    targets = range(len(rho.dims)) if which is None else which
    for k in targets:
        rho = apply_to_subsystem(v, rho, k)
    return rho


def schmidt_filtered_choi(v: Superoperator, coefficients: Sequence[float]) -> DensityMatrix:
    """
    Output of (I x V) on sum_i sqrt(p_i)|ii>, obtained from choi(V) by the local
    filter M = sum_i sqrt(d p_i)|i><i| on the reference side.
    """
    p = np.asarray(coefficients, dtype=float)
    d = v.dim
    if p.shape != (d,) or np.any(p < 0) or abs(p.sum() - 1.0) > 1e-12:
        raise ValueError(f"Need {d} nonnegative Schmidt weights summing to 1")
    filt = matlin.kron(np.diag(np.sqrt(d * p)), np.eye(d))
    return DensityMatrix.normalized((d, d), filt @ choi(v).mat @ filt.conj().T)


def is_entanglement_breaking(v: Superoperator, tol: float | None = None) -> bool:
    """Qubit test: the channel breaks entanglement iff its Choi state is PPT."""
    if v.dim != 2:
        raise ValueError("is_entanglement_breaking is exact only for qubit channels; use esd_sufficient_general")
    tol = DEFAULT_TOLERANCES.positivity if tol is None else tol
    pt = matlin.partial_transpose(choi(v), 1)
    return bool(matlin.herm_eigvals(pt)[0] >= -tol)
