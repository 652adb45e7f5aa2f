"""Van Hove density of states above the band edge, static and driven.

The mode density diverges as 1/sqrt(omega - omega_g) at an isotropic edge.
Under a slow drive the whole profile rides on the oscillating edge: at a
fixed distance from the instantaneous edge nothing changes (for a pure edge
drive), which is exactly why the emitted satellite lines probe the static
profile at their own frequencies.
"""

import matplotlib

matplotlib.use("Agg")
import matplotlib.pyplot as plt
import numpy as np

from modpbg import EffectiveMassModel, dos_dynamic, dos_static

model = EffectiveMassModel(omega_g=0.5, curvature=1.0, k0=1.0, xi_bar=0.02, omega_c=0.1)

fig, (ax1, ax2) = plt.subplots(1, 2, figsize=(9, 3.8))

w = np.linspace(0.501, 1.6, 800)
ax1.plot(w, dos_static(model, w), "k", label="static")
period = 2 * np.pi / model.omega_c
for frac, style in [(0.25, "tab:red"), (0.75, "tab:blue")]:
    t = frac * period
    ax1.plot(w, dos_dynamic(model, w, t), style, lw=1,
             label=f"t = {frac:.2f} period (edge at {model.edge_at(t):.3f})")
ax1.set_xlabel(r"$\omega/\omega_0$")
ax1.set_ylabel(r"$\rho(\omega)$")
ax1.set_title("edge rides the drive")
ax1.legend(fontsize=8)

# time trace at fixed distance from the instantaneous edge: flat line
ts = np.linspace(0.0, 2 * period, 200)
for offset in (0.05, 0.2):
    trace = [dos_dynamic(model, model.edge_at(t) + offset, t) for t in ts]
    ax2.plot(ts / period, trace, label=f"edge + {offset}")
    print(f"offset {offset}: spread over two periods = {max(trace) - min(trace):.2e}")
ax2.set_xlabel("t / period")
ax2.set_ylabel(r"$\rho(\omega_g(t) + \delta, t)$")
ax2.set_title("constant at fixed offset")
ax2.legend(fontsize=8)

fig.tight_layout()
fig.savefig("density_of_states.png", dpi=150)
print("wrote density_of_states.png")
