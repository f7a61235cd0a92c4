from .tolerances import Tolerances, DEFAULT_TOLERANCES
from .density import DensityMatrix, PureState
from .states import (
    bell_phi_plus, schmidt_pure, schmidt_state, basis_state, product_state, ghz, w_state,
    x_state, random_pure, random_density, random_unitary,
)
from .channels import (
    BathParams, BathModel, Superoperator, ThermalBath, SqueezedBath, QndBath,
    bath_model, choi, lindblad_thermal, lindblad_squeezed, thermal_v_closed,
    squeezed_v_closed, qnd_v, propagator, apply_to_subsystem, apply_to_all,
    is_entanglement_breaking,
)
from .entanglement import (
    concurrence, concurrence_pure_d2, is_ppt, negativity, min_pt_eigenvalue,
    eof_two_qubit, factorization_residual, bipartitions,
)
from .esd import (
    EsdReport, EsdVerdict, NQubitCertificate, SqueezedConditions, choi_ppt_time,
    thermal_threshold_paper, thermal_threshold_x_state, squeezed_conditions,
    squeezing_effect, nqubit_esd_certificate, esd_sufficient_general,
)
from .config import RunConfig

__all__ = [
    "Tolerances",
    "DEFAULT_TOLERANCES",
    "DensityMatrix",
    "PureState",
    "bell_phi_plus",
    "schmidt_pure",
    "schmidt_state",
    "basis_state",
    "product_state",
    "ghz",
    "w_state",
    "x_state",
    "random_pure",
    "random_density",
    "random_unitary",
    "BathParams",
    "BathModel",
    "Superoperator",
    "ThermalBath",
    "SqueezedBath",
    "QndBath",
    "bath_model",
    "choi",
    "lindblad_thermal",
    "lindblad_squeezed",
    "thermal_v_closed",
    "squeezed_v_closed",
    "qnd_v",
    "propagator",
    "apply_to_subsystem",
    "apply_to_all",
    "is_entanglement_breaking",
    "concurrence",
    "concurrence_pure_d2",
    "is_ppt",
    "negativity",
    "min_pt_eigenvalue",
    "eof_two_qubit",
    "factorization_residual",
    "bipartitions",
    "EsdReport",
    "EsdVerdict",
    "NQubitCertificate",
    "SqueezedConditions",
    "choi_ppt_time",
    "thermal_threshold_paper",
    "thermal_threshold_x_state",
    "squeezed_conditions",
    "squeezing_effect",
    "nqubit_esd_certificate",
    "esd_sufficient_general",
    "RunConfig",
]
