from __future__ import annotations
from dataclasses import dataclass
from typing import Optional
import math

import numpy as np

_RELATION_TOL = 1e-12


def planck_occupation(omega: float, temperature: float) -> float:
    """Thermal photon number 1 / (exp(omega / T) - 1) in units hbar = k_B = 1."""
    if omega <= 0:
        raise ValueError(f"omega must be > 0, got {omega!r}")
    if temperature < 0:
        raise ValueError(f"temperature must be >= 0, got {temperature!r}")
    if temperature == 0:
        return 0.0
    return float(1.0 / np.expm1(omega / temperature))


@dataclass(frozen=True)
class BathParams:
    """
    Physical parameters of a local bath acting on one qubit.

    The effective occupation `n_mean` (N) and the thermal occupation `n_th`
    are tied together by the squeezing magnitude `r`:
    2N + 1 = cosh(2r)(2N_th + 1).
    """

    gamma: float                   # decay rate (gamma, gamma_0), 1/time
    n_mean: float = 0.0            # N
    n_th: float = 0.0              # N_th
    r: float = 0.0                 # squeezing magnitude
    phi: float = 0.0               # squeezing phase
    omega: float = 0.0             # system frequency, only enters free-rotation phases
    big_phi: Optional[float] = None  # phase of z in the squeezed closed form, defaults to phi

    def __post_init__(self):
        if not self.gamma > 0:
            raise ValueError(f"gamma must be > 0, got {self.gamma!r}")
        if self.n_mean < 0:
            raise ValueError(f"N must be >= 0, got {self.n_mean!r}")
        if self.n_th < 0:
            raise ValueError(f"N_th must be >= 0, got {self.n_th!r}")
        if self.r < 0:
            raise ValueError(f"r must be >= 0, got {self.r!r}")

        lhs = 2 * self.n_mean + 1
        rhs = math.cosh(2 * self.r) * (2 * self.n_th + 1)
        if abs(lhs - rhs) > _RELATION_TOL * max(1.0, abs(lhs)):
            raise ValueError(
                f"2N+1 = cosh(2r)(2N_th+1) violated: 2N+1 = {lhs!r}, cosh(2r)(2N_th+1) = {rhs!r}"
            )

    # --------------------------------------------------------
    # Constructors
    # --------------------------------------------------------
    @classmethod
    def thermal(cls, gamma: float, n_mean: float, omega: float = 0.0) -> BathParams:
        return cls(gamma=gamma, n_mean=n_mean, n_th=n_mean, omega=omega)

    @classmethod
    def squeezed(
        cls,
        gamma: float,
        n_th: float,
        r: float,
        phi: float = 0.0,
        omega: float = 0.0,
        big_phi: Optional[float] = None,
    ) -> BathParams:
        """Squeezed thermal bath given the thermal occupation; N follows from the relation."""
        n_mean = (math.cosh(2 * r) * (2 * n_th + 1) - 1) / 2
        return cls(gamma=gamma, n_mean=n_mean, n_th=n_th, r=r, phi=phi, omega=omega, big_phi=big_phi)

    @classmethod
    def from_mean(
        cls,
        gamma: float,
        n_mean: float,
        r: float = 0.0,
        phi: float = 0.0,
        omega: float = 0.0,
        big_phi: Optional[float] = None,
    ) -> BathParams:
        """Squeezed thermal bath given the effective occupation N; N_th follows from the relation."""
        n_th = ((2 * n_mean + 1) / math.cosh(2 * r) - 1) / 2
        if n_th < -_RELATION_TOL:
            raise ValueError(
                f"2N+1 = cosh(2r)(2N_th+1) needs N_th >= 0: N = {n_mean!r} is too small for r = {r!r}"
            )
        return cls(gamma=gamma, n_mean=n_mean, n_th=max(n_th, 0.0), r=r, phi=phi, omega=omega, big_phi=big_phi)

    @classmethod
    def from_temperature(cls, gamma: float, omega: float, temperature: float, r: float = 0.0, phi: float = 0.0) -> BathParams:
        return cls.squeezed(gamma, planck_occupation(omega, temperature), r, phi=phi, omega=omega)

    # --------------------------------------------------------
    # Derived quantities
    # --------------------------------------------------------
    @property
    def a(self) -> float:
        """Squeezing amplitude sinh(2r)(2N_th + 1); |M| = a / 2."""
        return math.sinh(2 * self.r) * (2 * self.n_th + 1)

    @property
    def m(self) -> complex:
        """Anomalous correlation M = -sinh(2r) e^{i phi} (2N_th + 1) / 2."""
        return -0.5 * self.a * complex(math.cos(self.phi), math.sin(self.phi))

    @property
    def z_phase(self) -> float:
        return self.phi if self.big_phi is None else self.big_phi

    def x(self, t: float) -> float:
        """Coherence decay factor exp(-gamma (1 + 2N) t / 2)."""
        return math.exp(-0.5 * self.gamma * (1 + 2 * self.n_mean) * t)
