"""
Physical data model for a single energy pile.

Pile geometry, pile material and soil springs are combined into an
immutable :class:`PileSystem` carrying the characteristic inverse length
``psi``. A :class:`LoadCase` holds the axial head force and the uniform
temperature change of the pile relative to the soil.

All quantities are strict SI: meters, pascals, newtons and degrees Celsius.
Sign conventions used throughout the package:

- x is measured upward from the pile tip (x = 0) to the head (x = L)
- displacement is positive upward
- stress and force are positive in tension
- temperature change is positive for heating
"""

import enum
import math
import numbers
from dataclasses import dataclass, field
from typing import Optional

# cosh/sinh of psi*L must stay finite in double precision
MAX_PSI_L = 700.0


class ValidationError(ValueError):
    """Invalid physical input; the message names the offending field."""


class DomainError(ValueError):
    """Evaluation requested outside the domain of a formula."""


class NumericError(ArithmeticError):
    """A numerical procedure failed or produced an inconsistent result."""


def _require_positive(name, value):
    if not (isinstance(value, numbers.Real) and math.isfinite(value)):
        raise ValidationError(f"{name} must be a finite number, got {value!r}")
    if value <= 0:
        raise ValidationError(f"{name} must be positive, got {value!r}")


@dataclass(frozen=True)
class PileGeometry:
    """Circular pile of length ``length`` (m) and diameter ``diameter`` (m)."""

    length: float
    diameter: float
    perimeter: float = field(init=False)
    cross_section: float = field(init=False)

    def __post_init__(self):
        _require_positive("length", self.length)
        _require_positive("diameter", self.diameter)
        object.__setattr__(self, "perimeter", math.pi * self.diameter)
        object.__setattr__(self, "cross_section", math.pi * self.diameter**2 / 4.0)


@dataclass(frozen=True)
class PileMaterial:
    """Elastic modulus (Pa) and linear thermal expansion coefficient (1/degC)."""

    elastic_modulus: float
    thermal_expansion: float

    def __post_init__(self):
        _require_positive("elastic_modulus", self.elastic_modulus)
        _require_positive("thermal_expansion", self.thermal_expansion)


@dataclass(frozen=True)
class SoilSprings:
    """Shaft shear spring and tip normal spring stiffnesses, both in Pa/m.

    ``tip_stiffness = 0`` is the fully floating limit.
    """

    shaft_stiffness: float
    tip_stiffness: float = 0.0

    def __post_init__(self):
        _require_positive("shaft_stiffness", self.shaft_stiffness)
        kb = self.tip_stiffness
        if not (isinstance(kb, numbers.Real) and math.isfinite(kb)):
            raise ValidationError(f"tip_stiffness must be a finite number, got {kb!r}")
        if kb < 0:
            raise ValidationError(f"tip_stiffness must be non-negative, got {kb!r}")


@dataclass(frozen=True)
class PileSystem:
    """A pile embedded in a homogeneous elastic soil layer.

    ``psi`` is derived from ``psi**2 = (p / A) * (k_s / E)``.
    """

    geometry: PileGeometry
    material: PileMaterial
    springs: SoilSprings
    psi: float = field(init=False)

    def __post_init__(self):
        g, m, s = self.geometry, self.material, self.springs
        psi = math.sqrt((g.perimeter / g.cross_section) * (s.shaft_stiffness / m.elastic_modulus))
        psi_l = psi * g.length
        if not math.isfinite(psi_l) or psi_l <= 0.0 or psi_l > MAX_PSI_L:
            raise ValidationError(
                f"psi*L = {psi_l!r} is outside the representable range (0, {MAX_PSI_L}]"
            )
        object.__setattr__(self, "psi", psi)

    # Short aliases used heavily by the solvers.
    @property
    def L(self) -> float:
        return self.geometry.length

    @property
    def A(self) -> float:
        return self.geometry.cross_section

    @property
    def E(self) -> float:
        return self.material.elastic_modulus

    @property
    def alpha(self) -> float:
        return self.material.thermal_expansion

    @property
    def k_b(self) -> float:
        return self.springs.tip_stiffness

    @property
    def psi_l(self) -> float:
        return self.psi * self.geometry.length

    def with_tip_stiffness(self, tip_stiffness: float) -> "PileSystem":
        """Copy of this system with a different tip spring."""
        springs = SoilSprings(self.springs.shaft_stiffness, tip_stiffness)
        return PileSystem(self.geometry, self.material, springs)


def build_pile_system(geometry: PileGeometry, material: PileMaterial, springs: SoilSprings) -> PileSystem:
    return PileSystem(geometry, material, springs)


def reference_pile(tip_stiffness: float = 0.0) -> PileSystem:
    """Reference pile: L = 26 m, D = 1 m, k_s = 16.7 MPa/m, E = 29.2 GPa,
    alpha = 1e-5 1/degC."""
    return PileSystem(
        PileGeometry(length=26.0, diameter=1.0),
        PileMaterial(elastic_modulus=29.2e9, thermal_expansion=1e-5),
        SoilSprings(shaft_stiffness=16.7e6, tip_stiffness=tip_stiffness),
    )


class Scenario(enum.Enum):
    I = "I"  # compression + cooling
    II = "II"  # compression + heating
    III = "III"  # tension + cooling
    IV = "IV"  # tension + heating
    THERMAL_ONLY = "THERMAL_ONLY"
    MECHANICAL_ONLY = "MECHANICAL_ONLY"
    NULL_LOAD = "NULL_LOAD"

    @property
    def pair(self) -> Optional["ScenarioPair"]:
        if self in (Scenario.I, Scenario.IV):
            return ScenarioPair.SAME_SIGN
        if self in (Scenario.II, Scenario.III):
            return ScenarioPair.OPPOSITE_SIGN
        return None


class ScenarioPair(enum.Enum):
    """Whether the temperature change and the axial force share a sign."""

    SAME_SIGN = "same-sign"  # scenarios I and IV
    OPPOSITE_SIGN = "opposite-sign"  # scenarios II and III


def classify_scenario(axial_force: float, delta_T: float) -> Scenario:
    if axial_force == 0 and delta_T == 0:
        return Scenario.NULL_LOAD
    if axial_force == 0:
        return Scenario.THERMAL_ONLY
    if delta_T == 0:
        return Scenario.MECHANICAL_ONLY
    if axial_force < 0:
        return Scenario.I if delta_T < 0 else Scenario.II
    return Scenario.III if delta_T < 0 else Scenario.IV


def equivalent_thermal_load(axial_force: float, system: PileSystem) -> float:
    """Magnitude (degC) of the temperature change equivalent to ``axial_force``.

    ``|F| / (A E alpha)``; in an end-bearing pile this temperature change and
    the force produce equal strain and displacement magnitudes.
    """
    return abs(axial_force) / (system.A * system.E * system.alpha)


def eta_ratio(delta_T: float, axial_force: float, system: PileSystem) -> float:
    """Ratio of the actual to the equivalent thermal load magnitude."""
    if axial_force == 0:
        raise DomainError("eta undefined: thermal-only case")
    if delta_T == 0:
        raise DomainError("eta undefined: mechanical-only case")
    return abs(delta_T) / equivalent_thermal_load(axial_force, system)


@dataclass(frozen=True)
class LoadCase:
    """Axial head force ``axial_force`` (N, tension positive) and uniform
    temperature change ``delta_T`` (degC, heating positive)."""

    axial_force: float = 0.0
    delta_T: float = 0.0

    def __post_init__(self):
        for name in ("axial_force", "delta_T"):
            v = getattr(self, name)
            if not (isinstance(v, numbers.Real) and math.isfinite(v)):
                raise ValidationError(f"{name} must be a finite number, got {v!r}")

    @property
    def scenario(self) -> Scenario:
        return classify_scenario(self.axial_force, self.delta_T)

    def delta_T_eq(self, system: PileSystem) -> float:
        return equivalent_thermal_load(self.axial_force, system)

    def eta(self, system: PileSystem) -> Optional[float]:
        """Thermal/mechanical load ratio, or None when either load is zero."""
        if self.axial_force == 0 or self.delta_T == 0:
            return None
        return eta_ratio(self.delta_T, self.axial_force, system)

    def thermal_part(self) -> "LoadCase":
        return LoadCase(0.0, self.delta_T)

    def mechanical_part(self) -> "LoadCase":
        return LoadCase(self.axial_force, 0.0)

    @classmethod
    def from_eta(
        cls,
        system: PileSystem,
        eta: float,
        pair: ScenarioPair,
        axial_force: Optional[float] = None,
        delta_T: Optional[float] = None,
    ) -> "LoadCase":
        """Build the load case with ratio ``eta`` in scenario ``pair``.

        Exactly one of ``axial_force`` / ``delta_T`` anchors the absolute
        magnitude; the other load is derived from ``eta``.
        """
        if not eta > 0:
            raise ValidationError(f"eta must be positive, got {eta!r}")
        if (axial_force is None) == (delta_T is None):
            raise ValidationError("exactly one of axial_force or delta_T must anchor the load")
        scale = system.A * system.E * system.alpha
        same = pair is ScenarioPair.SAME_SIGN
        if axial_force is not None:
            if axial_force == 0:
                raise ValidationError("axial_force anchor must be non-zero")
            magnitude = eta * abs(axial_force) / scale
            sign = math.copysign(1.0, axial_force) * (1.0 if same else -1.0)
            return cls(axial_force, sign * magnitude)
        if delta_T == 0:
            raise ValidationError("delta_T anchor must be non-zero")
        magnitude = abs(delta_T) * scale / eta
        sign = math.copysign(1.0, delta_T) * (1.0 if same else -1.0)
        return cls(sign * magnitude, delta_T)
