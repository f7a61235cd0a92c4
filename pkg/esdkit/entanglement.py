"""
Entanglement quantifiers and separability tests.

Two-qubit states use the (|00>, |01>, |10>, |11>) basis of `esdkit.matlin`.
"""
from __future__ import annotations
from itertools import combinations
from typing import Optional
import logging
import math

import numpy as np
import scipy.linalg as sla
from scipy.special import entr

from . import matlin
from .channels.superop import Superoperator, apply_to_subsystem, choi
from .density import DensityMatrix, PureState
from .tolerances import DEFAULT_TOLERANCES, Tolerances

logger = logging.getLogger(__name__)

# sigma_y (x) sigma_y is real
_SIGMA_YY = np.array(
    [
        [0, 0, 0, -1],
        [0, 0, 1, 0],
        [0, 1, 0, 0],
        [-1, 0, 0, 0],
    ],
    dtype=complex,
)

_X_FORM_REL_TOL = 1e-14


def _require_two_qubits(rho: DensityMatrix, what: str) -> None:
    if tuple(rho.dims) != (2, 2):
        raise ValueError(f"{what} needs a two-qubit state with dims (2, 2), got {tuple(rho.dims)}")


# ======================================================================
# Concurrence
# ======================================================================

def spin_flip_spectrum(rho: DensityMatrix) -> np.ndarray:
    """
    Descending real spectrum of rho rho~ with rho~ = (sy x sy) rho* (sy x sy).
    Negative real parts are clamped to zero.
    """
    _require_two_qubits(rho, "spin_flip_spectrum")
    rho_tilde = _SIGMA_YY @ rho.mat.conj() @ _SIGMA_YY
    lam = matlin.eigvals_general(rho.mat @ rho_tilde)

    scale = max(1.0, float(np.max(np.abs(lam))))
    if np.max(np.abs(lam.imag)) > 1e-8 * scale:
        logger.warning("Spin-flip spectrum has imaginary parts up to %.3e", np.max(np.abs(lam.imag)))

    re = lam.real
    if np.any(re < -1e-10):
        logger.debug("Clamping spin-flip eigenvalues %s to zero", re[re < 0])
    return np.sort(np.clip(re, 0.0, None))[::-1]


def _tau_singular_values(rho: DensityMatrix, tol: Tolerances) -> np.ndarray:
    # rho = W W^dag and tau = W^T (sy x sy) W has singular values sqrt(spec(rho rho~))
    p, u = matlin.herm_eig(rho.mat, tol.hermitian)
    p = np.where(p < tol.rank_cutoff, 0.0, p)
    w = u * np.sqrt(p)
    return sla.svdvals(w.T @ _SIGMA_YY @ w)


def concurrence(rho: DensityMatrix, method: str = "tau", tolerances: Optional[Tolerances] = None) -> float:
    """
    Wootters concurrence max(0, s1 - s2 - s3 - s4) of a two-qubit state, with s the
    descending square roots of the spectrum of rho rho~.

    `method="tau"` takes s as singular values of the symmetric matrix W^T (sy x sy) W;
    `method="product"` square-roots the eigenvalues of rho rho~ directly.
    """
    _require_two_qubits(rho, "concurrence")
    tol = tolerances or rho.tolerances
    if method == "tau":
        s = _tau_singular_values(rho, tol)
    elif method == "product":
        s = np.sqrt(spin_flip_spectrum(rho))
    else:
        raise NotImplementedError(f"Unknown concurrence method: {method}")
    return float(max(0.0, s[0] - np.sum(s[1:])))


def concurrence_pure_d2(chi: PureState) -> float:
    """2 s0 s1 from the Schmidt coefficients of a d x 2 pure state."""
    if len(chi.dims) != 2 or chi.dims[1] != 2:
        raise ValueError(f"concurrence_pure_d2 needs dims (d, 2), got {chi.dims}")
    s = sla.svdvals(chi.as_matrix())
    return float(2.0 * s[0] * s[1])


# ======================================================================
# Partial transpose
# ======================================================================

def is_x_form(rho: DensityMatrix, rel_tol: float = _X_FORM_REL_TOL) -> bool:
    """True for a two-qubit matrix supported on its diagonal and anti-diagonal."""
    if tuple(rho.dims) != (2, 2):
        return False
    m = np.abs(rho.mat)
    off = m.copy()
    idx = np.arange(4)
    off[idx, idx] = 0.0
    off[idx, 3 - idx] = 0.0
    return bool(off.max() <= rel_tol * m.max())


def _x_blocks(rho: DensityMatrix) -> tuple[tuple[float, float, float], tuple[float, float, float]]:
    # the partial transpose swaps the two anti-diagonal coherences between the
    # population blocks (rho00, rho33) and (rho11, rho22)
    m = rho.mat
    return (
        (m[0, 0].real, m[3, 3].real, abs(m[1, 2])),
        (m[1, 1].real, m[2, 2].real, abs(m[0, 3])),
    )


def _block_min_eigenvalue(a: float, b: float, c: float) -> float:
    lam_max = 0.5 * (a + b) + math.hypot(0.5 * (a - b), c)
    if lam_max == 0.0:
        return 0.0
    # (ab - c^2) / lam_max, divided first so c^2 cannot underflow
    return a * (b / lam_max) - c * (c / lam_max)


def x_state_ppt_margin(rho: DensityMatrix) -> float:
    """
    Normalized PPT margin of an X state, min over blocks of
    (sqrt(ab) - |c|) / (sqrt(ab) + |c|), in [-1, 1]. A block with all three
    entries zero contributes 0.
    """
    if not is_x_form(rho):
        raise ValueError("x_state_ppt_margin needs a two-qubit X state")
    margins = []
    for a, b, c in _x_blocks(rho):
        s = math.sqrt(max(a, 0.0) * max(b, 0.0))
        margins.append(0.0 if s + c == 0.0 else (s - c) / (s + c))
    return min(margins)


def min_pt_eigenvalue(rho: DensityMatrix, cut: matlin.CutLike = 1) -> float:
    """Smallest eigenvalue of the partial transpose over `cut`; closed form for X states."""
    if is_x_form(rho) and len(matlin.normalize_cut(cut, 2)) == 1:
        return min(_block_min_eigenvalue(*block) for block in _x_blocks(rho))
    pt = matlin.partial_transpose(rho, cut)
    return float(matlin.herm_eigvals(pt, rho.tolerances.hermitian)[0])


def separability_margin(rho: DensityMatrix, cut: matlin.CutLike = 1) -> float:
    """Normalized X-state margin when applicable, else the minimum PT eigenvalue."""
    if is_x_form(rho) and len(matlin.normalize_cut(cut, 2)) == 1:
        return x_state_ppt_margin(rho)
    return min_pt_eigenvalue(rho, cut)


def is_ppt(rho: DensityMatrix, cut: matlin.CutLike = 1, tol: Optional[float] = None) -> bool:
    tol = rho.tolerances.positivity if tol is None else tol
    return min_pt_eigenvalue(rho, cut) >= -tol


def negativity(rho: DensityMatrix, cut: matlin.CutLike = 1) -> float:
    """Sum of the magnitudes of the negative PT eigenvalues."""
    pt = matlin.partial_transpose(rho, cut)
    lam = matlin.herm_eigvals(pt, rho.tolerances.hermitian)
    return float(np.sum(np.abs(lam[lam < 0])))


def bipartitions(n: int) -> list[tuple[int, ...]]:
    """Every nontrivial bipartition of n subsystems once, as the side holding subsystem 0."""
    if n < 2:
        raise ValueError("bipartitions needs n >= 2")
    cuts = []
    for k in range(n - 1):
        for rest in combinations(range(1, n), k):
            cuts.append((0,) + rest)
    return cuts


# ======================================================================
# Entanglement of formation
# ======================================================================

def binary_entropy(p: float) -> float:
    """h(p) in bits."""
    if not 0.0 <= p <= 1.0:
        raise ValueError(f"Probability must lie in [0, 1], got {p!r}")
    return float((entr(p) + entr(1.0 - p)) / math.log(2.0))


def eof_from_concurrence(c: float) -> float:
    if not 0.0 <= c <= 1.0 + 1e-10:
        raise ValueError(f"Concurrence must lie in [0, 1], got {c!r}")
    c = min(c, 1.0)
    return binary_entropy(0.5 * (1.0 + math.sqrt(1.0 - c * c)))


def eof_two_qubit(rho: DensityMatrix) -> float:
    return eof_from_concurrence(concurrence(rho))


# ======================================================================
# Factorization law
# ======================================================================

def _compressed_output(chi: PureState, out: DensityMatrix) -> DensityMatrix:
    # rotate side A so its Schmidt support is span{|0>, |1>}, then drop the rest
    d = chi.dims[0]
    u, _, _ = sla.svd(chi.as_matrix())
    rot = matlin.kron(matlin.dagger(u), np.eye(2))
    rotated = (rot @ out.mat @ matlin.dagger(rot)).reshape(d, 2, d, 2)
    block = rotated[:2, :, :2, :].reshape(4, 4)
    return DensityMatrix.normalized((2, 2), block)


def factorization_residual(chi: PureState, v: Superoperator) -> float:
    """|C((I x v)(chi)) - C(chi) C(choi(v))| for a d x 2 pure state and a qubit channel on side B."""
    if len(chi.dims) != 2 or chi.dims[1] != 2:
        raise ValueError(f"factorization_residual needs dims (d, 2), got {chi.dims}")
    if v.dim != 2:
        raise ValueError(f"factorization_residual needs a qubit channel, got dimension {v.dim}")

    out = apply_to_subsystem(v, chi.to_density(), 1)
    if chi.dims[0] == 2:
        lhs = concurrence(out)
    else:
        lhs = concurrence(_compressed_output(chi, out))
    rhs = concurrence_pure_d2(chi) * concurrence(choi(v))
    return abs(lhs - rhs)
