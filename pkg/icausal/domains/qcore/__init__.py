"""Dense complex linear algebra over multi-subsystem states."""

from .states import Basis, DensityState, PureState, bell_state, ket, plus_state
from .operators import (
    I2, I_SIGMA_Y, SIGMA_X, SIGMA_Y, SIGMA_Z, SWAP,
    KrausChannel, Unitary, cyclic_shift, diagonal,
)
from .ops import (
    MeasurementOutcome, apply_channel, apply_unitary, drop_subsystem, embed_unitary,
    measure_exhaustive, mixture, partial_trace, partial_transpose, permute,
    reduced_density, sample_measurement, tensor, tensor_all,
)
from .measures import entanglement_entropy, fidelity, min_eigenvalue, trace_distance, von_neumann_entropy
from .generators import random_channel, random_density, random_state, random_unitary
from .files import (
    channel_from_dict, channel_to_dict, load_channel, load_state, load_unitary, save_channel, save_state,
    state_from_dict, state_to_dict,
)

__all__ = [
    "Basis", "DensityState", "PureState", "bell_state", "ket", "plus_state",
    "I2", "I_SIGMA_Y", "SIGMA_X", "SIGMA_Y", "SIGMA_Z", "SWAP",
    "KrausChannel", "Unitary", "cyclic_shift", "diagonal",
    "MeasurementOutcome", "apply_channel", "apply_unitary", "drop_subsystem", "embed_unitary",
    "measure_exhaustive", "mixture", "partial_trace", "partial_transpose", "permute",
    "reduced_density", "sample_measurement", "tensor", "tensor_all",
    "entanglement_entropy", "fidelity", "min_eigenvalue", "trace_distance", "von_neumann_entropy",
    "random_channel", "random_density", "random_state", "random_unitary",
    "channel_from_dict", "channel_to_dict", "load_channel", "load_state", "load_unitary", "save_channel", "save_state",
    "state_from_dict", "state_to_dict",
]
