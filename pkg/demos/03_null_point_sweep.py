"""
Where the combined null point sits
==================================

The point of zero displacement under force plus temperature change, traced
over eta. Same-sign loads (compression with cooling, tension with heating)
push it up from the tip; opposite-sign loads push it down from the head.
Both approach mid-length as the thermal load dominates.
"""

from pathlib import Path

import numpy as np

from energy_pile import (
    LoadCase,
    ScenarioPair,
    build_null_point_report,
    existence_thresholds,
    sweep_eta,
    reference_pile,
)
from energy_pile.nullpoint import eta_grid
from energy_pile.reporting import sweep_svg

pile = reference_pile()

for pair in ScenarioPair:
    printed, in_pile = existence_thresholds(pile, pair)
    print(f"{pair.value:14s} null point exists for eta >= {in_pile:.4f} (closed-form bound {printed:.4f})")

etas = eta_grid(1.0, 1e3, 121)
results = [sweep_eta(pile, pair, etas) for pair in ScenarioPair]
for res in results:
    x = res.null_points
    first = np.flatnonzero(np.isfinite(x))[0]
    print(f"{res.pair.value:14s} first at eta = {res.etas[first]:.3f}: x = {x[first]:.3f} m; "
          f"at eta = 1000: x = {x[-1]:.4f} m")

out = Path(__file__).with_name("out")
out.mkdir(exist_ok=True)
(out / "null_point_sweep.svg").write_text(sweep_svg(results, pile.L, "combined null point"))

# one report in detail: cooling with 0.5 MN compression
report = build_null_point_report(pile, LoadCase(-0.5e6, -10.0))
for key, value in report.as_dict().items():
    print(f"  {key:24s} {value}")

# the largest |sigma| sits at the head until eta is large enough for the
# interior extremum at the null point to overtake F / A
for eta in (4.0, 8.0, 9.0, 50.0):
    r = build_null_point_report(pile, LoadCase.from_eta(pile, eta, ScenarioPair.SAME_SIGN, axial_force=-0.5e6))
    print(f"eta = {eta:5.1f}: null point {r.combined_null:.3f} m, max |sigma| at {r.max_stress_location:.3f} m")
