from __future__ import annotations
from abc import ABC, abstractmethod
from typing import Callable, ClassVar, Optional

from ..density import DensityMatrix
from .params import BathParams
from .superop import Superoperator, choi


class BathModel(ABC):
    """One bath family together with its parameters: a one-parameter family of qubit channels V(t)."""

    family: ClassVar[str] = ""

    # ------------------------------------------------------------
    # Abstract channel interface
    # ------------------------------------------------------------
    @abstractmethod
    def propagator(self, t: float) -> Superoperator:
        """Return the channel V(t) acting on one qubit."""
        ...

    # ------------------------------------------------------------
    # Common utilities
    # ------------------------------------------------------------
    def generator(self) -> Optional[Superoperator]:
        """Time-independent Lindblad generator, if the family has one."""
        return None

    def choi(self, t: float) -> DensityMatrix:
        return choi(self.propagator(t))

    def choi_margin(self, t: float) -> float:
        """
        Sign-faithful separability margin of choi(V(t)): negative while the Choi
        state is NPT, nonnegative once it is PPT.
        """
        from ..entanglement import separability_margin

        return separability_margin(self.choi(t))

    def describe(self) -> dict:
        return {"family": self.family}


def bath_model(
    family: str,
    params: BathParams,
    *,
    gamma_fn: Optional[Callable[[float], float]] = None,
    method: str = "closed",
) -> BathModel:
    """Look a bath family up by name."""
    from .thermal import ThermalBath
    from .squeezed import SqueezedBath
    from .qnd import QndBath

    if family == "thermal":
        return ThermalBath(params, method=method)
    elif family == "squeezed":
        return SqueezedBath(params, method=method)
    elif family == "qnd":
        if gamma_fn is None:
            raise ValueError("The qnd family needs a dephasing profile gamma_fn(t)")
        return QndBath(params.omega, gamma_fn)
    raise NotImplementedError(f"Unknown bath family: {family}")
