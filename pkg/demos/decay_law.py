"""Total emission probability grows linearly, drive or no drive.

In the weak-coupling regime the integrated emission probability follows the
linear law 2*N*t/(omega0*sqrt(omega0 - omega_g)); the drive redistributes
weight into the satellites without changing the overall rate at first order.
"""

import numpy as np

from modpbg import EffectiveMassModel, EmitterParams, static_decay_probability, total_probability

emitter = EmitterParams()
static = EffectiveMassModel(omega_g=0.5, curvature=1.0, k0=1.0)
driven = EffectiveMassModel(omega_g=0.5, curvature=1.0, k0=1.0, xi_bar=0.01, omega_c=0.1)

print(f"{'t':>6} {'P static':>12} {'P driven':>12} {'linear law':>12} {'dev':>8}")
rows = []
for t in (200.0, 500.0, 1000.0, 1500.0, 2000.0):
    p_static = total_probability(static, emitter, t)
    p_driven = total_probability(driven, emitter, t)
    law = static_decay_probability(static, emitter, t)
    rows.append((t, p_static, p_driven, law))
    print(f"{t:6.0f} {p_static:12.2f} {p_driven:12.2f} {law:12.2f} "
          f"{p_static / law - 1:+8.3%}")

np.savetxt("decay_law.csv", np.array(rows), delimiter=",",
           header="t,P_static,P_driven,linear_law", comments="")
print("wrote decay_law.csv")
print(f"slope 2*N/(omega0*sqrt(omega0-omega_g)) = {2.0 / np.sqrt(0.5):.6f}")
