"""Spontaneous emission in a time-modulated photonic-band-gap environment.

A small numpy/scipy library for the dispersion of a slowly driven
one-dimensional photonic crystal, the band-edge density of states, the
finite-time emission spectrum of an embedded two-level emitter (central line
plus asymmetric satellites at omega0 +/- omega_c) and the reconstruction of
the band edge from the satellite height ratio.
"""

from .crystal import (
    BandEdge,
    CrystalParams,
    EffectiveMassModel,
    ModelBreakdownError,
    ModulationSpec,
    dynamic_gap_edge,
    edge_modulation_amplitude,
    effective_mass_coefficient,
    explicit_dispersion_static,
    gap_edge_static,
    implicit_dispersion_residual,
    lattice_modulation_model,
    refractive_modulation_model,
    tight_binding_dispersion,
    tight_binding_effective_model,
)
from .dos import dos_dynamic, dos_static
from .emission import (
    EmitterParams,
    Peak,
    PeakReport,
    Spectrum,
    adiabatic_phase,
    amplitude_integral_numeric,
    check_weak_coupling,
    find_peaks,
    peak_ratio_closed,
    prob_density_closed_form,
    spectrum,
    static_decay_probability,
    total_probability,
)
from .sweep import SweepResult, fit_gap_edge, perturb_ratios, ratio_model, run_sweep, snap_to_period

__version__ = "0.1.0"

__all__ = [
    "BandEdge",
    "CrystalParams",
    "EffectiveMassModel",
    "EmitterParams",
    "ModelBreakdownError",
    "ModulationSpec",
    "Peak",
    "PeakReport",
    "Spectrum",
    "SweepResult",
    "adiabatic_phase",
    "amplitude_integral_numeric",
    "check_weak_coupling",
    "dos_dynamic",
    "dos_static",
    "dynamic_gap_edge",
    "edge_modulation_amplitude",
    "effective_mass_coefficient",
    "explicit_dispersion_static",
    "find_peaks",
    "fit_gap_edge",
    "gap_edge_static",
    "implicit_dispersion_residual",
    "lattice_modulation_model",
    "peak_ratio_closed",
    "perturb_ratios",
    "prob_density_closed_form",
    "ratio_model",
    "refractive_modulation_model",
    "run_sweep",
    "snap_to_period",
    "spectrum",
    "static_decay_probability",
    "tight_binding_dispersion",
    "tight_binding_effective_model",
    "total_probability",
]
