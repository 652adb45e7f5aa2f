"""Photon density of states for the isotropic quadratic band-edge model.

Above an isotropic band edge the mode density per unit frequency diverges as
1/sqrt(omega - omega_g) (Van Hove edge); under a slow drive the edge itself
moves, omega_g(t) = omega_g + xi_bar*sin(omega_c*t).  The overall volume
factor is normalized out; emission spectra carry their own prefactor.
"""

from __future__ import annotations

import numpy as np

from .crystal import EffectiveMassModel

_TWO_PI_CUBED = (2.0 * np.pi) ** 3


def _shape(model: EffectiveMassModel, omega, edge, drive_factor=1.0):
    omega = np.asarray(omega, dtype=float)
    gap = omega - edge
    if np.any(gap == 0.0):
        raise ValueError("density of states diverges at the band edge; offset the grid")
    rho = np.where(
        gap > 0.0,
        model.k0**2 / (2.0 * np.sqrt(model.curvature) * np.sqrt(np.abs(gap)) * _TWO_PI_CUBED),
        0.0,
    )
    rho = rho * drive_factor
    return float(rho) if rho.ndim == 0 else rho


def dos_static(model: EffectiveMassModel, omega):
    """Static density of states k0**2 / (2*sqrt(A)*sqrt(omega-omega_g)) / (2*pi)**3.

    Zero below the edge; raises ValueError exactly at the edge where the
    Van Hove divergence sits.  Scalar or ndarray `omega`.
    """
    return _shape(model, omega, model.omega_g)


def dos_dynamic(model: EffectiveMassModel, omega, t):
    """Instantaneous density of states under the drive.

    The edge is evaluated at time t and the curvature drive contributes a
    factor (1 - xi_prime/2 * sin(omega_c*t)); with xi_prime = 0 the value at
    fixed omega - omega_g(t) is time independent.
    """
    factor = 1.0 - 0.5 * model.xi_prime * np.sin(model.omega_c * t)
    return _shape(model, omega, model.edge_at(t), factor)
