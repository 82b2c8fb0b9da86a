"""Two-way quantum state transfer through an XY spin chain."""

from ._duplexchain import (
    ConsistencyError,
    DomainError,
    QubitState,
    ResourceError,
    evolve,
    fidelity,
    figure_config,
    fmax_search,
    mode_energies,
    oracle_check,
    parse_angle,
    propagator,
    run_config,
)

__all__ = [
    "ConsistencyError",
    "DomainError",
    "QubitState",
    "ResourceError",
    "evolve",
    "fidelity",
    "figure_config",
    "fmax_search",
    "mode_energies",
    "oracle_check",
    "parse_angle",
    "propagator",
    "run_config",
]
