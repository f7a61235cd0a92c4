from __future__ import annotations
import math

import numpy as np

from .base import BathModel
from .params import BathParams
from .superop import (
    SIGMA_MINUS,
    SIGMA_PLUS,
    Superoperator,
    free_rotation,
    lindblad_generator,
    propagator,
    sandwich,
)


def lindblad_squeezed(params: BathParams) -> Superoperator:
    """
    Squeezed thermal bath generator (interaction picture, Hamiltonian dropped): the
    thermal dissipators at the effective occupation N plus the anomalous terms
    -gamma_0 M sigma_plus rho sigma_plus - gamma_0 M* sigma_minus rho sigma_minus.
    """
    g, n, m = params.gamma, params.n_mean, params.m
    base = lindblad_generator([(g * (n + 1), SIGMA_MINUS), (g * n, SIGMA_PLUS)], 2).mat
    anomalous = g * m * sandwich(SIGMA_PLUS, SIGMA_PLUS) + g * np.conj(m) * sandwich(SIGMA_MINUS, SIGMA_MINUS)
    return Superoperator(2, base - anomalous)


def squeezed_v_closed(params: BathParams, t: float) -> Superoperator:
    """
    Closed-form squeezed-bath propagator, followed by the free rotation at omega.

    Populations relax as in the thermal case at occupation N; the coherences mix
    through y = cosh(gamma_0 a t / 2) x and z = sinh(gamma_0 a t / 2) x e^{i Phi},
    with z feeding rho10 from rho01 and z* feeding rho01 from rho10.
    """
    if t < 0:
        raise ValueError(f"Propagation time must be >= 0, got {t!r}")
    g, n = params.gamma, params.n_mean
    x2 = math.exp(-g * (2 * n + 1) * t)
    alpha = (n * (1 + x2) + x2) / (2 * n + 1)
    beta = n * (1 - x2) / (2 * n + 1)
    mu = (n + 1) * (1 - x2) / (2 * n + 1)
    nu = (n * (1 + x2) + 1) / (2 * n + 1)

    # cosh(k) x and sinh(k) x without overflowing cosh at large t
    u = 0.5 * g * (2 * n + 1) * t
    k = 0.5 * g * params.a * t
    grow, shrink = math.exp(k - u), math.exp(-k - u)
    y = 0.5 * (grow + shrink)
    z = 0.5 * (grow - shrink) * complex(math.cos(params.z_phase), math.sin(params.z_phase))

    mat = np.zeros((4, 4), dtype=complex)
    mat[0, 0], mat[0, 3] = nu, mu
    mat[3, 0], mat[3, 3] = beta, alpha
    mat[1, 1], mat[1, 2] = y, np.conj(z)
    mat[2, 1], mat[2, 2] = z, y
    return free_rotation(params.omega, t) @ Superoperator(2, mat)


class SqueezedBath(BathModel):
    """Qubit coupled to a squeezed thermal reservoir."""

    family = "squeezed"

    def __init__(self, params: BathParams, method: str = "closed"):
        if method not in ("closed", "expm"):
            raise NotImplementedError(f"Unknown propagation method: {method}")
        self.params = params
        self.method = method

    def generator(self) -> Superoperator:
        return lindblad_squeezed(self.params)

    def propagator(self, t: float) -> Superoperator:
        if self.method == "expm":
            return free_rotation(self.params.omega, t) @ propagator(self.generator(), t)
        return squeezed_v_closed(self.params, t)

    def describe(self) -> dict:
        p = self.params
        return {"family": self.family, "gamma": p.gamma, "n_mean": p.n_mean, "n_th": p.n_th, "r": p.r, "phi": p.phi}
