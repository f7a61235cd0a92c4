from .params import BathParams, planck_occupation
from .superop import (
    Superoperator,
    SIGMA_MINUS,
    SIGMA_PLUS,
    apply_to_all,
    apply_to_subsystem,
    choi,
    depolarizing,
    dissipator,
    free_rotation,
    identity_channel,
    is_entanglement_breaking,
    lindblad_generator,
    propagator,
    sandwich,
    schmidt_filtered_choi,
)
from .base import BathModel, bath_model
from .thermal import ThermalBath, lindblad_thermal, thermal_v_closed
from .squeezed import SqueezedBath, lindblad_squeezed, squeezed_v_closed
from .qnd import QndBath, power_profile, qnd_v

__all__ = [
    "BathParams",
    "planck_occupation",
    "Superoperator",
    "SIGMA_MINUS",
    "SIGMA_PLUS",
    "apply_to_all",
    "apply_to_subsystem",
    "choi",
    "depolarizing",
    "dissipator",
    "free_rotation",
    "identity_channel",
    "is_entanglement_breaking",
    "lindblad_generator",
    "propagator",
    "sandwich",
    "schmidt_filtered_choi",
    "BathModel",
    "bath_model",
    "ThermalBath",
    "lindblad_thermal",
    "thermal_v_closed",
    "SqueezedBath",
    "lindblad_squeezed",
    "squeezed_v_closed",
    "QndBath",
    "power_profile",
    "qnd_v",
]
