"""Ensemble-averaged and time-averaged entanglement of finite-dimensional
bipartite quantum systems."""

from ._kernels import backend as kernel_backend
from .dynamics import (
    ExactTimeAverage,
    SpectralDecomposition,
    TimeSeries,
    entanglement_series,
    evolve,
    evolve_amplitudes,
    exact_time_average,
    form_ensemble,
    group_energies,
    spectral,
    time_average_exact_linear,
    time_average_numeric,
)
from .ensemble import (
    MeanEntanglementReport,
    MicrocanonicalEnsemble,
    MonteCarloEstimate,
    average_reduced,
    cross_term_matrix,
    mean_entanglement_closed_form,
    phase_average_oracle,
)
from .entropy import EntropyKind, entanglement, entropy
from .errors import DimensionError, InvalidDensityError, ValidationError
from .hilbert import (
    CrossOperator,
    DensityMatrix,
    PureState,
    SchmidtDecomposition,
    cross_operator,
    partial_trace,
    schmidt,
    tensor,
)
from .models import (
    JaynesCummingsModel,
    TwoSpinModel,
    jaynes_cummings,
    jc_excited_fock_state,
    jc_hamiltonian,
    jc_mean_entanglement_reference,
    jc_population_w,
    two_spin,
    two_spin_hamiltonian,
)

__version__ = "0.1.0"

__all__ = [
    "CrossOperator",
    "DensityMatrix",
    "DimensionError",
    "EntropyKind",
    "ExactTimeAverage",
    "InvalidDensityError",
    "JaynesCummingsModel",
    "MeanEntanglementReport",
    "MicrocanonicalEnsemble",
    "MonteCarloEstimate",
    "PureState",
    "SchmidtDecomposition",
    "SpectralDecomposition",
    "TimeSeries",
    "TwoSpinModel",
    "ValidationError",
    "average_reduced",
    "cross_operator",
    "cross_term_matrix",
    "entanglement",
    "entanglement_series",
    "entropy",
    "evolve",
    "evolve_amplitudes",
    "exact_time_average",
    "form_ensemble",
    "group_energies",
    "jaynes_cummings",
    "jc_excited_fock_state",
    "jc_hamiltonian",
    "jc_mean_entanglement_reference",
    "jc_population_w",
    "kernel_backend",
    "mean_entanglement_closed_form",
    "partial_trace",
    "phase_average_oracle",
    "schmidt",
    "spectral",
    "tensor",
    "time_average_exact_linear",
    "time_average_numeric",
    "two_spin",
    "two_spin_hamiltonian",
]
