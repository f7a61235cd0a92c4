from __future__ import annotations
from dataclasses import dataclass, field
from typing import Iterable, Sequence

import numpy as np

from . import matlin
from .tolerances import DEFAULT_TOLERANCES, Tolerances


def _as_dims(dims: Sequence[int]) -> tuple[int, ...]:
    out = tuple(int(d) for d in dims)
    if not out or any(d < 1 for d in out):
        raise ValueError(f"dims must be a nonempty list of positive integers, got {dims!r}")
    return out


# ======================================================================
# PureState
# ======================================================================

@dataclass(frozen=True, eq=False)
class PureState:
    """Unit vector on a tensor product of subsystems with dimensions `dims`."""

    dims: tuple[int, ...]
    vec: np.ndarray
    tolerances: Tolerances = field(default=DEFAULT_TOLERANCES, repr=False)

    def __post_init__(self):
        dims = _as_dims(self.dims)
        vec = np.asarray(self.vec, dtype=complex).reshape(-1)
        if vec.size != int(np.prod(dims)):
            raise ValueError(f"Vector of length {vec.size} does not match dims {dims}")
        norm = np.linalg.norm(vec)
        if abs(norm - 1.0) > self.tolerances.unit_norm:
            raise ValueError(f"PureState must have unit norm, got {norm!r}")
        object.__setattr__(self, "dims", dims)
        object.__setattr__(self, "vec", vec)

    def to_density(self) -> DensityMatrix:
        return DensityMatrix(self.dims, np.outer(self.vec, self.vec.conj()), tolerances=self.tolerances)

    def as_matrix(self) -> np.ndarray:
        """Amplitudes reshaped to (dims[0], prod(dims[1:])), the bipartite coefficient matrix."""
        return self.vec.reshape(self.dims[0], -1)


# ======================================================================
# DensityMatrix
# ======================================================================

@dataclass(frozen=True, eq=False)
class DensityMatrix:
    """
    Positive semidefinite, unit-trace matrix on a tensor product of subsystems.
    Construction validates Hermiticity, trace and the minimum eigenvalue.
    """

    dims: tuple[int, ...]
    mat: np.ndarray
    tolerances: Tolerances = field(default=DEFAULT_TOLERANCES, repr=False)

    def __post_init__(self):
        dims = _as_dims(self.dims)
        mat = matlin.as_matrix(self.mat)
        size = int(np.prod(dims))
        if mat.shape != (size, size):
            raise ValueError(f"Matrix of shape {mat.shape} does not match dims {dims}")

        tol = self.tolerances
        if not matlin.is_hermitian(mat, tol.hermitian):
            raise ValueError("DensityMatrix must be Hermitian")
        trace = np.trace(mat)
        if abs(trace - 1.0) > tol.unit_trace:
            raise ValueError(f"DensityMatrix must have unit trace, got {trace!r}")
        lowest = matlin.herm_eigvals(mat, tol.hermitian)[0]
        if lowest < -tol.state_psd:
            raise ValueError(f"DensityMatrix must be positive semidefinite, min eigenvalue {lowest!r}")

        object.__setattr__(self, "dims", dims)
        object.__setattr__(self, "mat", mat)

    @classmethod
    def normalized(cls, dims: Sequence[int], mat, **kwargs) -> DensityMatrix:
        """Build from an unnormalized positive matrix by dividing out its trace."""
        m = matlin.as_matrix(mat)
        trace = np.trace(m).real
        if trace <= 0:
            raise ValueError("Cannot normalize a matrix with nonpositive trace")
        return cls(dims, m / trace, **kwargs)

    # --------------------------------------------------------
    # Properties
    # --------------------------------------------------------
    def eigvals(self) -> np.ndarray:
        return matlin.herm_eigvals(self.mat, self.tolerances.hermitian)

    def purity(self) -> float:
        return float(np.real(np.trace(self.mat @ self.mat)))

    # --------------------------------------------------------
    # Multipartite operations
    # --------------------------------------------------------
    def partial_transpose(self, cut: int | Iterable[int]) -> np.ndarray:
        return matlin.partial_transpose(self, cut)

    def partial_trace(self, keep: Iterable[int]) -> DensityMatrix:
        return matlin.partial_trace(self, keep)
