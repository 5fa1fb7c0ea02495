"""Thermo-mechanical response and null points of single energy piles.

Closed-form displacement, strain and stress for semi-floating and fully
floating piles under an axial head force and a uniform temperature change,
combined null-point analysis, and an independent finite-difference solver
for cross-checking.
"""

from .analytic import (
    FieldComponents,
    ResponseProfile,
    Variant,
    fully_floating_fields,
    sample_profile,
    semi_floating_fields,
    thermal_null_point,
)
from .fd_oracle import (
    ConvergenceStudy,
    FdSolution,
    convergence_study,
    displacement_error,
    field_errors,
    find_displacement_zero,
    solve_bvp,
    solve_robin_chain,
)
from .model import (
    DomainError,
    LoadCase,
    NumericError,
    PileGeometry,
    PileMaterial,
    PileSystem,
    Scenario,
    ScenarioPair,
    SoilSprings,
    ValidationError,
    build_pile_system,
    classify_scenario,
    equivalent_thermal_load,
    eta_ratio,
    reference_pile,
)
from .nullpoint import (
    Existence,
    NullPointReport,
    SweepResult,
    bisect_null_point,
    build_null_point_report,
    classify_existence,
    combined_null_opposite_sign,
    combined_null_point,
    combined_null_same_sign,
    eta_grid,
    existence_thresholds,
    load_null_point,
    locate_max_stress_magnitude,
    sweep_eta,
    tension_zone,
)

__version__ = "0.1.0"
