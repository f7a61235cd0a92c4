from __future__ import annotations
from typing import Callable
import math

import numpy as np

from .base import BathModel
from .superop import Superoperator, free_rotation


def qnd_v(omega: float, gamma_fn: Callable[[float], float], t: float) -> Superoperator:
    """
    Dephasing channel of a qubit in QND contact with its bath: populations are
    frozen and both coherences are damped by exp(-g(t)) and rotated at omega.
    `gamma_fn` returns g(t), the decay exponent with the (hbar omega)^2 scale folded in.
    """
    if t < 0:
        raise ValueError(f"Propagation time must be >= 0, got {t!r}")
    g = float(gamma_fn(t))
    if g < 0:
        raise ValueError(f"QND decay exponent g(t) must be >= 0, got {g!r} at t = {t!r}")
    damp = math.exp(-g)
    return free_rotation(omega, t) @ Superoperator(2, np.diag([1.0, damp, damp, 1.0]))


def power_profile(scale: float = 1.0, power: float = 1.0) -> Callable[[float], float]:
    """g(t) = scale * t**power."""
    if scale < 0:
        raise ValueError(f"QND profile scale must be >= 0, got {scale!r}")

    def g(t: float) -> float:
        return scale * t**power

    return g


class QndBath(BathModel):
    """Qubit in quantum non-demolition interaction with its bath."""

    family = "qnd"

    def __init__(self, omega: float, gamma_fn: Callable[[float], float]):
        self.omega = omega
        self.gamma_fn = gamma_fn

    def propagator(self, t: float) -> Superoperator:
        return qnd_v(self.omega, self.gamma_fn, t)

    def choi_margin(self, t: float) -> float:
        g = float(self.gamma_fn(t))
        if not math.isfinite(g):
            return 0.0
        if math.exp(-g) > 0.0:
            return super().choi_margin(t)
        # The |01>, |10> populations of the Choi state vanish identically, so the
        # corner coherence e^{-g}/2 keeps it NPT after it underflows.
        return -1.0

    def describe(self) -> dict:
        return {"family": self.family, "omega": self.omega}
