from __future__ import annotations

import numpy as np

from .base import BathModel
from .params import BathParams
from .superop import SIGMA_MINUS, SIGMA_PLUS, Superoperator, lindblad_generator, propagator


def lindblad_thermal(params: BathParams) -> Superoperator:
    """
    Generator of the thermal master equation without its Hamiltonian part:
    decay sigma_minus at rate gamma (N + 1), excitation sigma_plus at rate gamma N.
    """
    g, n = params.gamma, params.n_mean
    return lindblad_generator([(g * (n + 1), SIGMA_MINUS), (g * n, SIGMA_PLUS)], 2)


def thermal_v_closed(params: BathParams, t: float) -> Superoperator:
    """
    Closed-form propagator of `lindblad_thermal`.

    With x = exp(-gamma (1 + 2N) t / 2) and cot(theta) = (1 - x^2) / (2x(1 + 2N)),
    the population block carries (1 + x^2)/2 +- x cot(theta) on the diagonal and the
    transfer weights y1 = 2x cot(theta) N (ground -> excited), y2 = 2x cot(theta) (1 + N).
    """
    if t < 0:
        raise ValueError(f"Propagation time must be >= 0, got {t!r}")
    n = params.n_mean
    x = params.x(t)
    x_cot = (1 - x * x) / (2 * (1 + 2 * n))
    y1 = 2 * x_cot * n
    y2 = 2 * x_cot * (1 + n)

    mat = np.zeros((4, 4), dtype=complex)
    mat[0, 0] = (1 + x * x) / 2 + x_cot
    mat[0, 3] = y2
    mat[1, 1] = x
    mat[2, 2] = x
    mat[3, 0] = y1
    mat[3, 3] = (1 + x * x) / 2 - x_cot
    return Superoperator(2, mat)


class ThermalBath(BathModel):
    """Qubit coupled to a thermal reservoir with mean occupation N."""

    family = "thermal"

    def __init__(self, params: BathParams, method: str = "closed"):
        if params.r != 0:
            raise ValueError("Thermal bath needs r = 0; use the squeezed family for r > 0")
        if method not in ("closed", "expm"):
            raise NotImplementedError(f"Unknown propagation method: {method}")
        self.params = params
        self.method = method

    def generator(self) -> Superoperator:
        return lindblad_thermal(self.params)

    def propagator(self, t: float) -> Superoperator:
        if self.method == "expm":
            return propagator(self.generator(), t)
        return thermal_v_closed(self.params, t)

    def describe(self) -> dict:
        return {"family": self.family, "gamma": self.params.gamma, "n_mean": self.params.n_mean}
