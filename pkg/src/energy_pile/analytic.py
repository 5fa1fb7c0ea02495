"""
Closed-form axial response of a single energy pile.

Two model variants are provided:

- semi-floating: a shaft shear spring ``k_s`` plus a tip normal spring ``k_b``
- fully floating: the ``k_b = 0`` limit, whose thermal null point sits at
  mid-length

Each field is returned split into its thermal part (from the temperature
change), its mechanical part (from the head force) and their sum. The pile
obeys ``sigma = E * (eps - alpha * dT)`` and its displacement satisfies
``u'' = psi**2 * u`` with ``sigma(L) = F / A`` at the free head and
``sigma(0) = k_b * u(0)`` at the tip.
"""

import enum
import math
from dataclasses import dataclass

import numpy as np

from ._hyperbolic import atanh_from_parts, cosh_ratio, inv_sinh, one_minus_tanh, sinh_cosh_ratio
from .model import DomainError, LoadCase, PileSystem, ValidationError

DEFAULT_POINTS = 1001


class Variant(enum.Enum):
    FULLY_FLOATING = "fully-floating"
    SEMI_FLOATING = "semi-floating"


@dataclass(frozen=True)
class FieldComponents:
    """Thermal, mechanical and combined values of one field.

    Arrays (or floats) in m for displacement, dimensionless for strain and Pa
    for stress.
    """

    thermal: np.ndarray
    mechanical: np.ndarray
    combined: np.ndarray


@dataclass(frozen=True)
class ResponseProfile:
    x: np.ndarray
    displacement: FieldComponents
    strain: FieldComponents
    stress: FieldComponents
    system: PileSystem
    load: LoadCase
    variant: Variant

    def __len__(self):
        return len(self.x)

    @property
    def depth(self) -> np.ndarray:
        """Depth below the pile head, ``L - x``."""
        return self.system.L - self.x


def thermal_null_point(system: PileSystem) -> float:
    """Height above the tip of the zero-displacement point under thermal load.

    ``x0 = atanh[(cosh psiL - 1) / (sinh psiL + k_b / (E psi))] / psi``, which
    lies in (0, L/2] and equals L/2 when ``k_b = 0``.
    """
    psi_l = system.psi_l
    half = 0.5 * psi_l
    t = math.tanh(half)
    # (cosh psiL - 1)/(sinh psiL + c) == tanh(psiL/2) / (1 + s), s = c / sinh psiL
    s = system.k_b / (system.E * system.psi) * inv_sinh(psi_l)
    one_plus = (1.0 + s + t) / (1.0 + s)
    one_minus = (one_minus_tanh(half) + s) / (1.0 + s)
    return atanh_from_parts(one_plus, one_minus) / system.psi


def _check_domain(x, length):
    x = np.asarray(x, dtype=float)
    if np.any(~np.isfinite(x)) or np.any(x < 0.0) or np.any(x > length):
        raise DomainError(f"x must lie within [0, {length}] m")
    return x


def _unwrap(arr):
    return arr[()] if arr.ndim == 0 else arr


def _fields(x, system: PileSystem, load: LoadCase, k_b: float, x0: float):
    psi, L, A, E, alpha = system.psi, system.L, system.A, system.E, system.alpha
    dT, F = load.delta_T, load.axial_force

    # thermal part, ratios referenced to the head
    b = psi * (L - x0)
    a = psi * (x - x0)
    u_t = alpha * dT / psi * sinh_cosh_ratio(a, b)
    ch = cosh_ratio(a, b)
    eps_t = alpha * dT * ch
    sig_t = E * alpha * dT * (ch - 1.0)

    # mechanical part: [E psi {cosh|sinh}(psi x) + k_b {sinh|cosh}(psi x)]
    #                  / [E psi sinh(psi L) + k_b cosh(psi L)], scaled by exp(-psi L)
    s = E * psi
    ex = np.exp(-2.0 * psi * x)
    emx = -np.expm1(-2.0 * psi * x)
    eL = math.exp(-2.0 * psi * L)
    emL = -math.expm1(-2.0 * psi * L)
    denom = s * emL + k_b * (1.0 + eL)
    decay = np.exp(psi * (x - L))
    r_u = decay * (s * (1.0 + ex) + k_b * emx) / denom
    r_e = decay * (s * emx + k_b * (1.0 + ex)) / denom
    u_m = F / (A * E * psi) * r_u
    eps_m = F / (A * E) * r_e
    sig_m = F / A * r_e

    def pack(t, m):
        t = np.broadcast_to(t, x.shape).astype(float)
        m = np.broadcast_to(m, x.shape).astype(float)
        return FieldComponents(_unwrap(t), _unwrap(m), _unwrap(t + m))

    return pack(u_t, u_m), pack(eps_t, eps_m), pack(sig_t, sig_m)


def semi_floating_fields(x, system: PileSystem, load: LoadCase):
    """Displacement, strain and stress at heights ``x`` for a pile with a tip spring.

    Parameters
    ----------
    x : float or array_like
        Height above the pile tip in m, within [0, L].
    system : PileSystem
        Uses ``system.springs.tip_stiffness`` as the tip spring.
    load : LoadCase

    Returns
    -------
    tuple of FieldComponents
        ``(displacement, strain, stress)``.
    """
    x = _check_domain(x, system.L)
    return _fields(x, system, load, system.k_b, thermal_null_point(system))


def fully_floating_fields(x, system: PileSystem, load: LoadCase):
    """Displacement, strain and stress of the fully floating pile.

    The tip spring of ``system`` is ignored (taken as zero) and the thermal
    null point is placed exactly at mid-length.
    """
    x = _check_domain(x, system.L)
    return _fields(x, system, load, 0.0, 0.5 * system.L)


def evaluate(x, system: PileSystem, load: LoadCase, variant: Variant = Variant.FULLY_FLOATING):
    if Variant(variant) is Variant.FULLY_FLOATING:
        return fully_floating_fields(x, system, load)
    return semi_floating_fields(x, system, load)


def sample_profile(
    system: PileSystem,
    load: LoadCase,
    n_points: int = DEFAULT_POINTS,
    variant: Variant = Variant.FULLY_FLOATING,
) -> ResponseProfile:
    """Evaluate the response on ``n_points`` uniformly spaced heights from tip to head."""
    if int(n_points) != n_points or n_points < 2:
        raise ValidationError(f"n_points must be an integer >= 2, got {n_points!r}")
    variant = Variant(variant)
    x = np.linspace(0.0, system.L, int(n_points))
    x[-1] = system.L
    u, eps, sig = evaluate(x, system, load, variant)
    return ResponseProfile(x, u, eps, sig, system, load, variant)
