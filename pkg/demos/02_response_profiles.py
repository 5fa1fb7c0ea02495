"""
Displacement, strain and stress along the pile
===============================================

Four combinations of head force and temperature change on the fully floating
pile. Cooling plus compression leaves part of the shaft in tension; the
profiles are written as three-panel SVG files next to this script.
"""

from pathlib import Path

import numpy as np

from energy_pile import LoadCase, sample_profile, reference_pile, tension_zone
from energy_pile.reporting import profile_svg

pile = reference_pile()
out = Path(__file__).with_name("out")
out.mkdir(exist_ok=True)

cases = {
    "cooling_0.5MN": LoadCase(-0.5e6, -10.0),
    "cooling_1MN": LoadCase(-1e6, -10.0),
    "heating_0.5MN": LoadCase(-0.5e6, 10.0),
    "heating_1MN": LoadCase(-1e6, 10.0),
}

for name, load in cases.items():
    profile = sample_profile(pile, load, 2001)
    sig = profile.stress.combined
    zone = tension_zone(profile)
    print(f"{name:15s} scenario {load.scenario.value:3s} "
          f"head u = {profile.displacement.combined[-1] * 1e3:+.3f} mm, "
          f"min sigma = {sig.min() / 1e6:+.3f} MPa, max sigma = {sig.max() / 1e6:+.3f} MPa")
    if zone is not None:
        print(f"{'':15s} tension from {zone.start:.2f} m to {zone.end:.2f} m above the tip, "
              f"peak {zone.peak_stress / 1e3:.1f} kPa at {zone.peak_location:.2f} m")
    (out / f"{name}.svg").write_text(profile_svg(profile, name))

# heating alone: displacement is antisymmetric about mid-length, stress symmetric
thermal = sample_profile(pile, LoadCase(0.0, 10.0), 2001)
u = thermal.displacement.combined
print("thermal only: u(0) + u(L) =", u[0] + u[-1], " u(L/2) =", u[len(u) // 2])
print("largest antisymmetry defect:", np.max(np.abs(u + u[::-1])))
