"""Python bindings for the tqdfock single-photon source simulator."""

from ._core import (  # noqa: F401
    DegeneracyError,
    IntegrationError,
    IoError,
    ModelMismatchError,
    ParameterError,
    UsageError,
    analytic_eigensystem,
    counterdiabatic_amplitude,
    effective_raman_coupling,
    gaussian_pulse,
    physical_pulse_pair,
    presets,
    run,
    stirap_pair,
    sweep,
)

__all__ = [
    "analytic_eigensystem",
    "counterdiabatic_amplitude",
    "effective_raman_coupling",
    "gaussian_pulse",
    "physical_pulse_pair",
    "presets",
    "run",
    "stirap_pair",
    "sweep",
]
