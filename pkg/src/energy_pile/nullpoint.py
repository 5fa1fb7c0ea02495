"""
Combined null point of a fully floating energy pile.

Under thermal load alone the fully floating pile has its zero-displacement
point at mid-length. An axial head force shifts it; depending on the ratio
``eta`` of thermal to equivalent-thermal load the combined null point either
lies inside the pile or does not exist.

Same-sign loads (scenarios I and IV) move the null point below mid-length;
it emerges at the tip. Opposite-sign loads (II and III) move it above
mid-length; it emerges at the head. Both branches approach L/2 as eta grows.

Because ``d(sigma)/dx = E psi**2 u``, the axial stress has an interior
extremum exactly at the combined null point.
"""

import enum
import math
import numbers
from dataclasses import dataclass, field
from typing import Optional, Sequence

import numpy as np
from scipy import optimize

from ._hyperbolic import atanh_from_parts, inv_sinh, one_minus_tanh
from .analytic import fully_floating_fields
from .model import LoadCase, PileSystem, Scenario, ScenarioPair, ValidationError

# AT_TIP / AT_HEAD classification, relative to L
POSITION_TOL = 1e-9


class Existence(enum.Enum):
    EXISTS_INTERIOR = "EXISTS_INTERIOR"
    AT_TIP = "AT_TIP"
    AT_HEAD = "AT_HEAD"
    ABSENT = "ABSENT"

    @property
    def exists(self) -> bool:
        return self is not Existence.ABSENT


def _check_eta(eta):
    if not (isinstance(eta, numbers.Real) and eta > 0):
        raise ValidationError(f"eta must be positive, got {eta!r}")


def combined_null_same_sign(system: PileSystem, eta: float) -> Optional[float]:
    """Null point height for scenarios I and IV, or None if it lies below the tip.

    ``x = atanh[tanh(psi L / 2) - 1 / (eta sinh psi L)] / psi``
    """
    _check_eta(eta)
    half = 0.5 * system.psi_l
    q = inv_sinh(system.psi_l) / eta
    one_plus = 1.0 + math.tanh(half) - q
    if one_plus <= 0.0:
        return None
    x = atanh_from_parts(one_plus, one_minus_tanh(half) + q) / system.psi
    if x < -POSITION_TOL * system.L:
        return None
    return max(x, 0.0)


def combined_null_opposite_sign(system: PileSystem, eta: float) -> Optional[float]:
    """Null point height for scenarios II and III, or None if it lies above the head.

    ``x = atanh[tanh(psi L / 2) + 1 / (eta sinh psi L)] / psi``
    """
    _check_eta(eta)
    half = 0.5 * system.psi_l
    q = inv_sinh(system.psi_l) / eta
    one_minus = one_minus_tanh(half) - q
    if one_minus <= 0.0:
        return None
    x = atanh_from_parts(1.0 + math.tanh(half) + q, one_minus) / system.psi
    if x > (1.0 + POSITION_TOL) * system.L:
        return None
    return min(x, system.L)


def combined_null_point(system: PileSystem, eta: float, pair: ScenarioPair) -> Optional[float]:
    if ScenarioPair(pair) is ScenarioPair.SAME_SIGN:
        return combined_null_same_sign(system, eta)
    return combined_null_opposite_sign(system, eta)


def existence_thresholds(system: PileSystem, pair: ScenarioPair) -> tuple:
    """Lower bounds on eta for a combined null point.

    Returns
    -------
    printed : float
        ``1 / (sinh psiL * tanh(psiL/2))`` for the same-sign pair and
        ``1 / (sinh psiL * (1 - tanh(psiL/2)))`` for the opposite-sign pair.
    in_pile : float
        The eta at which the null point reaches the pile end, i.e. the bound
        implied by requiring ``0 <= x <= L``. For the same-sign pair this
        equals ``printed``; for the opposite-sign pair it is
        ``1 / (sinh psiL * (tanh psiL - tanh(psiL/2)))``.
    """
    half = 0.5 * system.psi_l
    t = math.tanh(half)
    inv_s = inv_sinh(system.psi_l)
    if ScenarioPair(pair) is ScenarioPair.SAME_SIGN:
        thr = inv_s / t
        return thr, thr
    omt = one_minus_tanh(half)
    printed = inv_s / omt
    # tanh(2h) - tanh(h) = t (1 - t^2) / (1 + t^2)
    gap = t * omt * (1.0 + t) / (1.0 + t * t)
    return printed, inv_s / gap


def classify_existence(x: Optional[float], length: float) -> Existence:
    if x is None:
        return Existence.ABSENT
    if x <= POSITION_TOL * length:
        return Existence.AT_TIP
    if x >= length - POSITION_TOL * length:
        return Existence.AT_HEAD
    return Existence.EXISTS_INTERIOR


def load_null_point(system: PileSystem, load: LoadCase) -> Optional[float]:
    """Closed-form combined null point for an arbitrary (F, dT) pair."""
    scenario = load.scenario
    if scenario is Scenario.THERMAL_ONLY:
        return 0.5 * system.L
    if scenario.pair is None:
        return None
    return combined_null_point(system, load.eta(system), scenario.pair)


def locate_max_stress_magnitude(system: PileSystem, load: LoadCase) -> tuple:
    """Height and signed value of the largest ``|sigma|`` along the fully floating pile.

    Stress extrema lie at the pile ends or where the displacement vanishes,
    so only these candidates are compared. Ties resolve to the lowest height.
    """
    candidates = [0.0]
    x_null = load_null_point(system, load)
    if x_null is not None and 0.0 < x_null < system.L:
        candidates.append(x_null)
    candidates.append(system.L)
    xs = np.array(candidates)
    sigma = fully_floating_fields(xs, system, load)[2].combined
    i = int(np.argmax(np.abs(sigma)))
    return float(xs[i]), float(sigma[i])


def bisect_null_point(system: PileSystem, load: LoadCase) -> Optional[float]:
    """Zero of the fully floating combined displacement by bisection on [0, L].

    Independent of the closed-form null-point expressions; returns None when
    the displacement does not change sign over the pile.
    """
    L = system.L

    def u(x):
        return float(fully_floating_fields(x, system, load)[0].combined)

    u0, uL = u(0.0), u(L)
    if u0 == 0.0:
        return 0.0
    if uL == 0.0:
        return L
    if u0 * uL > 0.0:
        return None
    return optimize.bisect(u, 0.0, L, xtol=1e-12 * L, rtol=4 * np.finfo(float).eps, maxiter=200)


@dataclass(frozen=True)
class NullPointReport:
    """Null-point summary for one load case on the fully floating pile.

    ``max_stress_*`` give the global maximum of ``|sigma|``;
    ``null_point_stress`` is the stress at the combined null point, which is
    the interior stress extremum.
    """

    scenario: Scenario
    eta: Optional[float]
    thermal_null: float
    combined_null: Optional[float]
    existence: Existence
    eta_threshold_printed: Optional[float]
    eta_threshold_in_pile: Optional[float]
    max_stress_location: float
    max_stress_value: float
    null_point_stress: Optional[float]

    def as_dict(self) -> dict:
        return {
            "scenario": self.scenario.value,
            "eta": self.eta,
            "thermal_null_m": self.thermal_null,
            "combined_null_m": self.combined_null,
            "existence": self.existence.value,
            "eta_threshold_printed": self.eta_threshold_printed,
            "eta_threshold_in_pile": self.eta_threshold_in_pile,
            "max_stress_location_m": self.max_stress_location,
            "max_stress_Pa": self.max_stress_value,
            "null_point_stress_Pa": self.null_point_stress,
        }


def build_null_point_report(system: PileSystem, load: LoadCase) -> NullPointReport:
    scenario = load.scenario
    pair = scenario.pair
    eta = load.eta(system)
    printed = in_pile = None
    if pair is not None:
        printed, in_pile = existence_thresholds(system, pair)
    x_null = load_null_point(system, load)
    existence = classify_existence(x_null, system.L)
    x_max, sig_max = locate_max_stress_magnitude(system, load)
    sig_null = None
    if x_null is not None:
        sig_null = float(fully_floating_fields(x_null, system, load)[2].combined)
    return NullPointReport(
        scenario=scenario,
        eta=eta,
        thermal_null=0.5 * system.L,
        combined_null=x_null,
        existence=existence,
        eta_threshold_printed=printed,
        eta_threshold_in_pile=in_pile,
        max_stress_location=x_max,
        max_stress_value=sig_max,
        null_point_stress=sig_null,
    )


def eta_grid(eta_min: float, eta_max: float, count: int, spacing: str = "log") -> np.ndarray:
    """Strictly increasing eta values, linearly or logarithmically spaced."""
    if not (0 < eta_min < eta_max) or count < 2:
        raise ValidationError("eta grid needs 0 < eta_min < eta_max and count >= 2")
    if spacing == "log":
        return np.geomspace(eta_min, eta_max, count)
    if spacing == "linear":
        return np.linspace(eta_min, eta_max, count)
    raise ValidationError(f"spacing must be 'log' or 'linear', got {spacing!r}")


@dataclass(frozen=True)
class SweepRecord:
    eta: float
    load: LoadCase
    combined_null: Optional[float]
    existence: Existence
    max_stress_value: float
    max_stress_location: float


@dataclass(frozen=True)
class SweepResult:
    pair: ScenarioPair
    records: tuple = field(default_factory=tuple)

    @property
    def etas(self) -> np.ndarray:
        return np.array([r.eta for r in self.records])

    @property
    def null_points(self) -> np.ndarray:
        """Null-point heights with NaN where absent (for plotting)."""
        return np.array([np.nan if r.combined_null is None else r.combined_null for r in self.records])


def sweep_eta(
    system: PileSystem,
    pair: ScenarioPair,
    etas: Sequence[float],
    axial_force: Optional[float] = -0.5e6,
    delta_T: Optional[float] = None,
) -> SweepResult:
    """Null point and peak stress over a range of eta for one scenario pair.

    The absolute loads are anchored by a fixed ``axial_force`` (default
    -0.5 MN) or, if ``delta_T`` is given, by a fixed temperature change.
    """
    pair = ScenarioPair(pair)
    etas = [float(e) for e in etas]
    for e in etas:
        _check_eta(e)
    if any(b <= a for a, b in zip(etas, etas[1:])):
        raise ValidationError("eta values must be strictly increasing")
    if delta_T is not None:
        axial_force = None
    records = []
    for eta in etas:
        load = LoadCase.from_eta(system, eta, pair, axial_force=axial_force, delta_T=delta_T)
        x_null = load_null_point(system, load)
        x_max, sig_max = locate_max_stress_magnitude(system, load)
        records.append(
            SweepRecord(eta, load, x_null, classify_existence(x_null, system.L), sig_max, x_max)
        )
    return SweepResult(pair, tuple(records))


@dataclass(frozen=True)
class TensionZone:
    start: float
    end: float
    peak_stress: float
    peak_location: float

    @property
    def length(self) -> float:
        return self.end - self.start


def tension_zone(profile) -> Optional[TensionZone]:
    """Extent of the region where the sampled combined stress is tensile.

    The bounds are the outermost grid points with ``sigma > 0``; None when the
    pile is nowhere in tension.
    """
    sig = np.asarray(profile.stress.combined)
    idx = np.flatnonzero(sig > 0.0)
    if idx.size == 0:
        return None
    k = int(np.argmax(sig))
    return TensionZone(float(profile.x[idx[0]]), float(profile.x[idx[-1]]), float(sig[k]), float(profile.x[k]))
