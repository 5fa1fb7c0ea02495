"""
Checking the closed forms with finite differences
=================================================

An independent solver for u'' = psi^2 u with the head and tip boundary
conditions. Halving the grid spacing should cut the error by four.
"""

import numpy as np

from energy_pile import (
    LoadCase,
    convergence_study,
    field_errors,
    find_displacement_zero,
    solve_bvp,
    reference_pile,
    thermal_null_point,
)

pile = reference_pile(tip_stiffness=16.7e6)
load = LoadCase(-1e6, 10.0)

sol = solve_bvp(pile, load, 10_000)
print("nodes:", sol.n, " residual:", sol.residual_norm)
for field, err in field_errors(sol).items():
    print(f"  {field:12s} max relative error {err:.2e}")

study = convergence_study(pile, load, (250, 500, 1000, 2000, 4000))
for n, e in zip(study.n, study.errors):
    print(f"  n = {n:5d}  error = {e:.3e} m")
print("observed orders:", np.round(study.orders, 3))

# the thermal null point moves below mid-length once the tip is restrained
heat = solve_bvp(pile, load.thermal_part(), 10_000)
print(f"thermal null point: closed form {thermal_null_point(pile):.4f} m, "
      f"finite difference {find_displacement_zero(heat):.4f} m")
