"""Band structure of the matched dielectric stack and its first gap.

Sweeps the wavenumber across the first Brillouin zone for a few index
contrasts, marks the gap edges, and overlays the quadratic edge expansion
omega_g - A*(k - k0)**2 to show where the effective-mass picture holds.
"""

import matplotlib

matplotlib.use("Agg")
import matplotlib.pyplot as plt
import numpy as np

from modpbg import (
    CrystalParams,
    effective_mass_coefficient,
    explicit_dispersion_static,
    gap_edge_static,
)

fig, ax = plt.subplots(figsize=(6, 4.5))

for n0, color in [(1.5, "tab:blue"), (2.0, "tab:orange"), (3.0, "tab:green")]:
    params = CrystalParams.matched(n0, 1.0)
    k = np.linspace(0.0, np.pi / params.L, 400)
    for band in (1, 2):
        omega = explicit_dispersion_static(params, k, band)
        ax.plot(k * params.L / np.pi, omega, color=color,
                label=f"n0 = {n0}" if band == 1 else None)
    edge = gap_edge_static(params)
    ax.axhspan(edge.omega_lower, edge.omega_upper, color=color, alpha=0.12)
    print(f"n0 = {n0}: gap [{edge.omega_lower:.5f}, {edge.omega_upper:.5f}], "
          f"width {edge.width:.5f}, curvature A = {effective_mass_coefficient(params):.4f}")

# quadratic edge expansion for the n0 = 2 stack
params = CrystalParams.matched(2.0, 1.0)
edge = gap_edge_static(params)
A = effective_mass_coefficient(params)
k = np.linspace(0.75 * edge.k_gap, edge.k_gap, 100)
ax.plot(k * params.L / np.pi, edge.omega_lower - A * (k - edge.k_gap) ** 2,
        "k--", lw=1, label="quadratic edge fit")

ax.set_xlabel(r"$k L / \pi$")
ax.set_ylabel(r"$\omega$  (units $c/a$)")
ax.set_title("Stack bands fold back at the zone edge; gaps open at $k_0 = \\pi/L$")
ax.legend(loc="upper left", fontsize=8)
fig.tight_layout()
fig.savefig("band_structure.png", dpi=150)
print("wrote band_structure.png")
