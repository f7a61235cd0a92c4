from __future__ import annotations
from dataclasses import dataclass, replace


@dataclass(frozen=True)
class Tolerances:
    """Numerical thresholds shared by the linear algebra, state and separability code."""

    # Matrix structure
    hermitian: float = 1e-10          # max |A - A^dagger| accepted as Hermitian
    positivity: float = 1e-10         # PT / Choi eigenvalues >= -positivity count as PSD

    # DensityMatrix / PureState invariants
    state_psd: float = 1e-9           # min eigenvalue of a valid density matrix
    unit_trace: float = 1e-10
    unit_norm: float = 1e-12

    # Spectra
    rank_cutoff: float = 1e-13        # eigenvalues of rho below this are structural zeros

    def with_overrides(self, **kwargs: float) -> "Tolerances":
        """Return a copy with the given thresholds replaced."""
        return replace(self, **kwargs)


DEFAULT_TOLERANCES = Tolerances()
