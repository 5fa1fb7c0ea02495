"""
Stiffness parameter and equivalent loads
========================================

Build the reference pile (26 m long, 1 m diameter, shaft springs of
16.7 MPa/m) and look at the numbers that control its response.
"""

from energy_pile import LoadCase, equivalent_thermal_load, reference_pile

pile = reference_pile()
print(pile.geometry)
print(pile.material)
print(pile.springs)

# psi sets the decay length of the response; psi * L is the only shape parameter
print(f"psi      = {pile.psi:.6f} 1/m")
print(f"psi * L  = {pile.psi_l:.6f}")

# a head force and a temperature change that give the same strain in an end-bearing pile
for force in (1e6, 0.5e6):
    print(f"F = {force / 1e6:g} MN  ->  dT_eq = {equivalent_thermal_load(force, pile):.3f} degC")

# eta compares an actual temperature change with the equivalent one
for force in (-1e6, -0.5e6):
    load = LoadCase(force, -10.0)
    print(f"F = {force / 1e6:g} MN, dT = -10 degC  ->  scenario {load.scenario.value}, eta = {load.eta(pile):.3f}")
