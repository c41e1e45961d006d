"""Fisher-information analysis of two-point-source superresolution with
entangled versus coherent sources.

Closed-form single-parameter Fisher information, the two-parameter quantum
Fisher information matrix built from symmetric logarithmic derivatives, an
independent position-grid oracle, and deterministic sweep tooling.
"""

from .errors import (
    ConfigurationError,
    ContractViolationError,
    DegenerateGeometryError,
    DomainError,
    OutOfReachError,
)
from .fisher_single import (
    FiRecord,
    f_tot_coherence,
    f_tot_concurrence,
    pure_state_fi,
    weighted_fi_reconstruct,
)
from .numeric_oracle import (
    Grid,
    GridField,
    default_grid,
    hg_coefficients,
    make_sources,
    numeric_concurrence,
    numeric_pure_qfi,
    numeric_qfim,
    two_source_state,
)
from .qfim_two_param import (
    PrecisionPair,
    Qfim2,
    Rho4,
    SldPair,
    commutator_expectation,
    drho_ds,
    drho_dtheta,
    precision,
    precision_concurrence,
    precision_gamma,
    qfim,
    qfim_concurrence,
    qfim_from_slds,
    qfim_gamma,
    rho4,
    sld_pair,
)
from .state_model import (
    ModelParams,
    OverlapTriple,
    SpectralData,
    coherence_of,
    concurrence,
    concurrence_max,
    concurrence_normalized,
    overlap,
    spectral,
    theta_from_concurrence,
)
from .sweep import (
    SweepRecord,
    SweepSpec,
    emit,
    figure_preset,
    max_oracle_delta,
    run_sweep,
)

__version__ = "0.1.0"

__all__ = [
    "ConfigurationError",
    "ContractViolationError",
    "DegenerateGeometryError",
    "DomainError",
    "OutOfReachError",
    "FiRecord",
    "f_tot_coherence",
    "f_tot_concurrence",
    "pure_state_fi",
    "weighted_fi_reconstruct",
    "Grid",
    "GridField",
    "default_grid",
    "hg_coefficients",
    "make_sources",
    "numeric_concurrence",
    "numeric_pure_qfi",
    "numeric_qfim",
    "two_source_state",
    "PrecisionPair",
    "Qfim2",
    "Rho4",
    "SldPair",
    "commutator_expectation",
    "drho_ds",
    "drho_dtheta",
    "precision",
    "precision_concurrence",
    "precision_gamma",
    "qfim",
    "qfim_concurrence",
    "qfim_from_slds",
    "qfim_gamma",
    "rho4",
    "sld_pair",
    "ModelParams",
    "OverlapTriple",
    "SpectralData",
    "coherence_of",
    "concurrence",
    "concurrence_max",
    "concurrence_normalized",
    "overlap",
    "spectral",
    "theta_from_concurrence",
    "SweepRecord",
    "SweepSpec",
    "emit",
    "figure_preset",
    "max_oracle_delta",
    "run_sweep",
]
