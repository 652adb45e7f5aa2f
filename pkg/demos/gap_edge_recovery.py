"""Reconstruct the band edge by sweeping the drive frequency.

The satellite height ratio measured at each drive frequency traces the mode
density of the environment; fitting the exact ratio law to the sweep
recovers the gap edge.  A seeded 1% multiplicative noise run shows the
estimator's robustness.
"""

import numpy as np

from modpbg import (
    EffectiveMassModel,
    EmitterParams,
    fit_gap_edge,
    perturb_ratios,
    ratio_model,
    run_sweep,
)

true_edge = 0.5
emitter = EmitterParams()
model = EffectiveMassModel(omega_g=true_edge, curvature=1.0, k0=1.0, xi_bar=0.01, omega_c=0.1)

omega_c_grid = np.linspace(0.05, 0.2, 10)
sweep = run_sweep(model, emitter, omega_c_grid, 1200.0)

print("omega_c   measured ratio   exact-law ratio   flag")
for wc, r, flag in zip(sweep.omega_c_values, sweep.ratios, sweep.flags):
    print(f"{wc:7.3f} {r:16.5f} {ratio_model(1.0, wc, true_edge):17.5f}   {flag}")

estimate, residual = fit_gap_edge(sweep)
print(f"\nfitted edge (noiseless): {estimate:.5f}  (true {true_edge}, "
      f"error {abs(estimate - true_edge):.2e}, rms residual {residual:.2e})")

errors = []
for seed in range(50):
    noisy_estimate, _ = fit_gap_edge(perturb_ratios(sweep, 0.01, seed))
    errors.append(noisy_estimate - true_edge)
errors = np.array(errors)
print(f"under 1% ratio noise (50 seeds): mean error {errors.mean():+.4f}, "
      f"spread {errors.std():.4f}, worst {np.abs(errors).max():.4f}")
