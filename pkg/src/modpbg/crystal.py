"""One-dimensional photonic-crystal dispersion with a slow periodic modulation.

The crystal is a stack of dielectric slabs of thickness 2a and index n0,
separated by vacuum gaps b, with period L = 2a + b (units c = 1 throughout).
Either the refractive index or the lattice constants can be driven slowly in
time; near a band edge the band reduces to the quadratic form

    omega(k, t) = omega_g(t) +/- A(t) * (k - k0)**2,
    omega_g(t)  = omega_g + xi_bar * sin(omega_c * t),

and this module extracts (omega_g, A, k0, xi_bar, ...) from the crystal
parameters.  A tight-binding coupled-cavity chain with a driven hopping rate
is supported as an alternative realization of the same reduced model.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

import numpy as np
from scipy.optimize import bisect


class ModelBreakdownError(Exception):
    """The effective-mass reduction is singular for these parameters."""


MODULATION_KINDS = ("none", "refractive_index", "lattice_constant", "tight_binding")

# First-order expansions below assume a small drive amplitude; this cap keeps
# the quadratic residuals under ~1%.
MAX_MODULATION_AMPLITUDE = 0.1


@dataclass(frozen=True)
class ModulationSpec:
    """Periodic drive law r(t) = r0 * (1 + amplitude * sin(frequency * t))."""

    kind: str = "none"
    amplitude: float = 0.0
    frequency: float = 0.0

    def __post_init__(self):
        if self.kind not in MODULATION_KINDS:
            raise ValueError(f"unknown modulation kind {self.kind!r}")
        if not 0.0 <= self.amplitude < MAX_MODULATION_AMPLITUDE:
            raise ValueError(
                f"modulation amplitude must lie in [0, {MAX_MODULATION_AMPLITUDE}), "
                f"got {self.amplitude}"
            )
        if self.kind == "none" and self.amplitude != 0.0:
            raise ValueError("kind 'none' requires zero amplitude")
        if self.frequency < 0.0:
            raise ValueError("modulation frequency must be >= 0")

    def value(self, t):
        """Instantaneous relative excursion amplitude * sin(frequency * t)."""
        return self.amplitude * np.sin(self.frequency * t)


@dataclass(frozen=True)
class CrystalParams:
    """Geometry and optics of the stack plus its drive."""

    n0: float
    a: float
    b: float
    modulation: ModulationSpec = ModulationSpec()

    def __post_init__(self):
        if self.n0 < 1.0:
            raise ValueError("mean refractive index must be >= 1")
        if self.a <= 0.0 or self.b <= 0.0:
            raise ValueError("slab half-thickness and spacing must be positive")
        if self.modulation.kind == "refractive_index" and not math.isclose(
            self.b, 2.0 * self.n0 * self.a, rel_tol=1e-12
        ):
            # The explicit band inversion needs matched optical path lengths.
            raise ValueError("refractive-index modulation requires b = 2*n0*a")

    @property
    def L(self) -> float:
        return 2.0 * self.a + self.b

    @classmethod
    def matched(cls, n0, a, modulation=ModulationSpec()):
        """Construct with the matched spacing b = 2*n0*a."""
        return cls(n0=n0, a=a, b=2.0 * n0 * a, modulation=modulation)


@dataclass(frozen=True)
class EffectiveMassModel:
    """Reduced quadratic band model consumed by the dos/emission modules.

    Attributes
    ----------
    omega_g : float
        Static band-edge frequency.
    curvature : float
        Quadratic coefficient A of the dispersion near the edge (> 0).
    k0 : float
        Wavenumber at which the gap opens.
    xi_bar : float
        Oscillation amplitude of the edge frequency.
    xi_prime : float
        Relative oscillation amplitude of the curvature.
    omega_c : float
        Drive angular frequency.
    curvature_mod : float
        Curvature modulation amplitude derived for the lattice drive; kept
        for reporting even when xi_prime is forced to zero.
    """

    omega_g: float
    curvature: float
    k0: float
    xi_bar: float = 0.0
    xi_prime: float = 0.0
    omega_c: float = 0.0
    curvature_mod: float = 0.0

    def __post_init__(self):
        if self.omega_g <= 0.0 or self.curvature <= 0.0 or self.k0 <= 0.0:
            raise ValueError("omega_g, curvature and k0 must be positive")
        if abs(self.xi_bar) >= self.omega_g:
            raise ValueError("edge modulation amplitude must be small against omega_g")
        if self.omega_c < 0.0:
            raise ValueError("omega_c must be >= 0")

    def edge_at(self, t):
        """Instantaneous band edge omega_g + xi_bar*sin(omega_c*t)."""
        return self.omega_g + self.xi_bar * np.sin(self.omega_c * t)

    def curvature_at(self, t):
        """Instantaneous curvature A*(1 + xi_prime*sin(omega_c*t))."""
        return self.curvature * (1.0 + self.xi_prime * np.sin(self.omega_c * t))


@dataclass(frozen=True)
class BandEdge:
    """Edges of the gap opening at k_gap = m*pi/L."""

    band_index: int
    k_gap: float
    omega_lower: float
    omega_upper: float

    @property
    def width(self) -> float:
        return self.omega_upper - self.omega_lower


def _instantaneous_index(params: CrystalParams, t):
    mod = params.modulation
    if mod.kind == "refractive_index":
        return params.n0 * (1.0 + mod.value(t))
    return params.n0


def _length_scale(params: CrystalParams, t):
    """Common scale factor of (a, b, L) under the lattice drive."""
    mod = params.modulation
    if mod.kind == "lattice_constant":
        return 1.0 + mod.value(t)
    return 1.0


def implicit_dispersion_residual(params: CrystalParams, k, omega, t=0.0):
    """cos(k*L(t)) minus the right-hand side of the implicit band condition.

    Zero exactly when (k, omega) lies on a band of the (instantaneous)
    crystal.  Supports the static stack, the refractive-index drive and the
    lattice-constant drive; scalar or ndarray arguments broadcast.
    """
    if params.modulation.kind == "tight_binding":
        raise ValueError("tight-binding chains use tight_binding_dispersion")
    n = _instantaneous_index(params, t)
    s = _length_scale(params, t)
    a = params.a * s
    b = params.b * s
    lhs = np.cos(k * (2.0 * a + b))
    half = omega * b
    full = 2.0 * omega * n * a
    rhs = np.cos(half) * np.cos(full) - (n**2 + 1.0) / (2.0 * n) * np.sin(half) * np.sin(full)
    return lhs - rhs


def _gap_cos_value(n0: float) -> float:
    """cos of the branch angle at the zone boundary, where the first gap opens."""
    return (1.0 + n0**2 - 6.0 * n0) / (1.0 + n0**2 + 2.0 * n0)


def explicit_dispersion_static(params: CrystalParams, k, band_index: int = 1):
    """Closed-form static band omega(k) for the matched stack (b = 2*n0*a).

    The inverse cosine is lifted to band `band_index` by alternating
    reflection: odd bands rise from (m-1)*pi, even bands fall from m*pi.
    """
    if band_index < 1:
        raise ValueError("band index must be >= 1")
    n0, a = params.n0, params.a
    if not math.isclose(params.b, 2.0 * n0 * a, rel_tol=1e-12):
        raise ValueError("explicit inversion requires b = 2*n0*a")
    y = (4.0 * n0 * np.cos(2.0 * np.asarray(k) * a * (1.0 + n0)) + (1.0 - n0) ** 2) / (1.0 + n0) ** 2
    y = np.clip(y, -1.0, 1.0)
    branch = np.arccos(y)
    m = band_index
    theta = (m - 1) * np.pi + branch if m % 2 == 1 else m * np.pi - branch
    omega = theta / (4.0 * n0 * a)
    return float(omega) if np.isscalar(k) else omega


def gap_edge_static(params: CrystalParams, band_index: int = 1) -> BandEdge:
    """Locate the edges of the gap at k = m*pi/L for the matched stack.

    The lower edge comes from the closed-form inversion; the upper edge is
    found by bisection of the implicit relation on the next branch (tolerance
    1e-12).  The vacuum stack (n0 = 1) and the zone-center gaps (even m) are
    reported as degenerate, zero-width edges.
    """
    if band_index < 1:
        raise ValueError("band index must be >= 1")
    n0, a = params.n0, params.a
    if not math.isclose(params.b, 2.0 * n0 * a, rel_tol=1e-12):
        raise ValueError("gap edges require the matched stack b = 2*n0*a")
    m = band_index
    k_gap = m * np.pi / params.L
    scale = 1.0 / (4.0 * n0 * a)
    if m % 2 == 0:
        w = m * np.pi * scale
        return BandEdge(m, k_gap, w, w)
    y_gap = _gap_cos_value(n0)
    theta_l = (m - 1) * np.pi + math.acos(y_gap)
    omega_l = theta_l * scale
    if n0 == 1.0:
        return BandEdge(m, k_gap, omega_l, omega_l)

    def residual(w):
        return implicit_dispersion_residual(params, k_gap, w)

    lo = omega_l + 1e-9 * scale
    hi = (m + 1) * np.pi * scale  # next branch angle, strictly inside band m+1
    omega_u = bisect(residual, lo, hi, xtol=1e-12)
    return BandEdge(m, k_gap, omega_l, float(omega_u))


def _edge_response(params: CrystalParams, band_index: int = 1):
    """First-order edge response (alpha, beta, x_g) to the index drive.

    alpha/beta is d(x_edge)/d(xi_instantaneous); beta ~ sin(2*x_g) vanishes at
    the degenerate gaps, where the reduction breaks down.
    """
    n0 = params.n0
    omega_l = gap_edge_static(params, band_index).omega_lower
    xg = 2.0 * omega_l * n0 * params.a
    beta = (n0 + 1.0) ** 2 / (2.0 * n0) * math.sin(2.0 * xg)
    if abs(beta) < 1e-12:
        raise ModelBreakdownError(
            f"sin(2*x_g) = 0 at band {band_index}: edge response is singular"
        )
    alpha = (
        -((n0 + 1.0) ** 2) / (2.0 * n0) * xg * math.sin(xg) * math.cos(xg)
        - (n0**2 - 1.0) / (2.0 * n0) * math.sin(xg) ** 2
    )
    return alpha, beta, xg


def edge_modulation_amplitude(params: CrystalParams, band_index: int = 1) -> float:
    """Edge oscillation amplitude xi_bar induced by the refractive-index drive."""
    mod = params.modulation
    if mod.kind not in ("none", "refractive_index"):
        raise ValueError("edge modulation amplitude is defined for the index drive")
    alpha, beta, _ = _edge_response(params, band_index)
    return alpha / beta / (2.0 * params.n0 * params.a) * mod.amplitude


def dynamic_gap_edge(params: CrystalParams, t, band_index: int = 1):
    """Instantaneous gap-edge frequency under the refractive-index drive.

    First order in the drive amplitude:
    omega_g(t) = omega_g + xi_bar * sin(omega_c * t).
    """
    omega_l = gap_edge_static(params, band_index).omega_lower
    xi_bar = edge_modulation_amplitude(params, band_index)
    return omega_l + xi_bar * np.sin(params.modulation.frequency * t)


def effective_mass_coefficient(params: CrystalParams, band_index: int = 1) -> float:
    """Curvature A of the quadratic band expansion at the gap edge.

    A = L**2 / (2*a*(n0+1)**2 * sin(4*n0*a*omega_g)), positive in the
    validity regime of the reduction.
    """
    n0, a = params.n0, params.a
    omega_l = gap_edge_static(params, band_index).omega_lower
    s = math.sin(4.0 * n0 * a * omega_l)
    if abs(s) < 1e-12:
        raise ModelBreakdownError("band curvature is singular at this edge")
    A = params.L**2 / (2.0 * a * (n0 + 1.0) ** 2 * s)
    if A <= 0.0:
        raise ModelBreakdownError("non-positive band curvature: quadratic expansion invalid")
    return A


def refractive_modulation_model(params: CrystalParams, band_index: int = 1) -> EffectiveMassModel:
    """Reduce the index-driven crystal to its quadratic edge model.

    At first order the drive only moves the edge; the curvature stays at its
    static value (xi_prime = 0).
    """
    edge = gap_edge_static(params, band_index)
    return EffectiveMassModel(
        omega_g=edge.omega_lower,
        curvature=effective_mass_coefficient(params, band_index),
        k0=edge.k_gap,
        xi_bar=edge_modulation_amplitude(params, band_index),
        xi_prime=0.0,
        omega_c=params.modulation.frequency,
    )


def lattice_modulation_model(
    params: CrystalParams,
    band_index: int = 1,
    include_curvature_modulation: bool = False,
) -> EffectiveMassModel:
    """Reduce the lattice-driven crystal (a, b scaled together, 2*n0*a(t) = b(t)).

    The edge scales inversely with the lattice constant, xi_bar = -omega_g*eta,
    while the curvature picks up the relative amplitude
    eta_bar = eta * (1 - X*cot(X)) with X = 4*omega_g*n0*a.  The curvature
    drive is negligible for the emission problem, so xi_prime is zeroed
    unless `include_curvature_modulation` is set; eta_bar is always reported.
    """
    mod = params.modulation
    if mod.kind not in ("none", "lattice_constant"):
        raise ValueError("lattice model requires a lattice-constant modulation")
    edge = gap_edge_static(params, band_index)
    A = effective_mass_coefficient(params, band_index)
    X = 4.0 * edge.omega_lower * params.n0 * params.a
    if abs(math.sin(X)) < 1e-12:
        raise ModelBreakdownError("cot singularity in the curvature modulation amplitude")
    eta = mod.amplitude
    eta_bar = eta * (1.0 - X / math.tan(X))
    return EffectiveMassModel(
        omega_g=edge.omega_lower,
        curvature=A,
        k0=edge.k_gap,
        xi_bar=-edge.omega_lower * eta,
        xi_prime=eta_bar if include_curvature_modulation else 0.0,
        omega_c=mod.frequency,
        curvature_mod=eta_bar,
    )


def tight_binding_dispersion(omega_cav, J, a, k, t=0.0, modulation: ModulationSpec | None = None):
    """Cosine band of a coupled-cavity chain with a driven hopping rate.

    omega(k, t) = omega_cav - J(t)*cos(k*a), J(t) = J*(1 + amp*sin(omega_c*t)).
    """
    if np.any(np.abs(np.asarray(k) * a) > np.pi + 1e-12):
        raise ValueError("k must lie in the first Brillouin zone, |k*a| <= pi")
    amp = 0.0
    wc = 0.0
    if modulation is not None:
        if modulation.kind not in ("none", "tight_binding"):
            raise ValueError("hopping drive requires a tight-binding modulation")
        amp, wc = modulation.amplitude, modulation.frequency
    Jt = J * (1.0 + amp * np.sin(np.asarray(t, dtype=float) * wc))
    result = omega_cav - Jt * np.cos(np.asarray(k, dtype=float) * a)
    return float(result) if np.ndim(result) == 0 else result


def tight_binding_effective_model(
    omega_cav, J, a, modulation: ModulationSpec | None = None
) -> EffectiveMassModel:
    """Quadratic reduction of the cosine band at its top (k0 = pi/a).

    The band maximum is the lower edge of the gap above the band:
    omega_g(t) = omega_cav + J(t), curvature A(t) = J(t)*a**2/2, so both the
    edge and the curvature oscillate with the hopping drive.
    """
    if J <= 0.0:
        raise ValueError("hopping amplitude must be positive")
    amp = 0.0
    wc = 0.0
    if modulation is not None:
        if modulation.kind not in ("none", "tight_binding"):
            raise ValueError("hopping drive requires a tight-binding modulation")
        amp, wc = modulation.amplitude, modulation.frequency
    return EffectiveMassModel(
        omega_g=omega_cav + J,
        curvature=J * a**2 / 2.0,
        k0=np.pi / a,
        xi_bar=J * amp,
        xi_prime=amp,
        omega_c=wc,
        curvature_mod=amp,
    )
