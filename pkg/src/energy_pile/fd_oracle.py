"""
Finite-difference solution of the pile boundary value problem.

Solves ``u'' = psi**2 u`` on [0, L] with the Robin conditions

    E (u'(0) - alpha dT) = k_b u(0)      (tip spring)
    E (u'(L) - alpha dT) = F / A         (free head under force F)

on a uniform grid, using the three-point stencil and ghost nodes at both
ends so that the scheme is second order everywhere. The solver shares only
the data model with the closed-form engine and never evaluates it.
"""

import math
from dataclasses import dataclass
from typing import Optional, Sequence

import numpy as np

from .model import LoadCase, NumericError, PileSystem, ValidationError


def solve_robin_chain(n: int, shift: float, tip_excess: float, rhs_tip: float, rhs_head: float):
    """Solve the symmetric tridiagonal system of the discretized pile.

    The ``n`` equations are::

        (1 + shift/2 + tip_excess) u[0] - u[1]       = rhs_tip
        -u[i-1] + (2 + shift) u[i] - u[i+1]           = 0        (0 < i < n-1)
        -u[n-2] + (1 + shift/2) u[n-1]                = rhs_head

    with ``shift = (h psi)**2``. Forward elimination with back substitution
    (Thomas algorithm), except that each pivot is carried as its excess over
    one, ``q = p - 1``. Forming ``2 + shift`` directly would round away most of
    ``shift`` when ``h psi`` is small; the excess recursion only adds positive
    terms, so no digits are lost.
    """
    if n < 2:
        raise ValidationError("need at least two unknowns")
    if not (shift > 0.0 and tip_excess >= 0.0):
        raise NumericError(f"singular system (shift {shift!r}, tip term {tip_excess!r})")
    q = np.empty(n)  # pivot excess, p = 1 + q (except the last row)
    d = np.empty(n)
    q[0] = 0.5 * shift + tip_excess
    d[0] = rhs_tip / (1.0 + q[0])
    for i in range(1, n - 1):
        q[i] = shift + q[i - 1] / (1.0 + q[i - 1])
        d[i] = d[i - 1] / (1.0 + q[i])
    last = 0.5 * shift + q[n - 2] / (1.0 + q[n - 2])
    if not (last > 0.0 and math.isfinite(last)):
        raise NumericError(f"singular system (last pivot {last!r})")
    u = np.empty(n)
    u[-1] = (rhs_head + d[n - 2]) / last
    for i in range(n - 2, -1, -1):
        u[i] = d[i] + u[i + 1] / (1.0 + q[i])
    return u


@dataclass(frozen=True)
class FdSolution:
    x: np.ndarray
    u: np.ndarray
    strain: np.ndarray
    stress: np.ndarray
    residual_norm: float
    system: PileSystem
    load: LoadCase

    @property
    def n(self) -> int:
        return len(self.x)

    @property
    def h(self) -> float:
        return self.system.L / (self.n - 1)


def solve_bvp(system: PileSystem, load: LoadCase, n_nodes: int = 10_000) -> FdSolution:
    """Solve for the nodal displacements on ``n_nodes`` uniform nodes.

    Strain is obtained from the displacements by second-order differencing
    (central inside, one-sided at the ends) and stress from
    ``E * (strain - alpha * dT)``.
    """
    if int(n_nodes) != n_nodes or n_nodes < 3:
        raise ValidationError(f"n_nodes must be an integer >= 3, got {n_nodes!r}")
    n = int(n_nodes)
    L, E, psi = system.L, system.E, system.psi
    h = L / (n - 1)
    free_strain = system.alpha * load.delta_T
    head_strain = free_strain + load.axial_force / (system.A * E)

    shift = (h * psi) ** 2
    # ghost nodes u[-1] = u[1] - 2h (alpha dT + k_b u[0] / E) and
    # u[n] = u[n-2] + 2h (alpha dT + F / (A E)); end rows halved
    u = solve_robin_chain(n, shift, h * system.k_b / E, -h * free_strain, h * head_strain)

    if not np.all(np.isfinite(u)):
        raise NumericError("non-finite displacement in finite-difference solve")
    scale = np.max(np.abs(u))
    res = u[:-2] - 2.0 * u[1:-1] + u[2:] - shift * u[1:-1]
    residual = float(np.max(np.abs(res)) / scale) if scale > 0 and n > 2 else 0.0

    x = np.linspace(0.0, L, n)
    x[-1] = L
    strain = np.gradient(u, h, edge_order=2)
    stress = E * (strain - free_strain)
    return FdSolution(x, u, strain, stress, residual, system, load)


def find_displacement_zero(solution: FdSolution) -> Optional[float]:
    """Height of the single zero crossing of the nodal displacement.

    Linear interpolation between the two nodes that bracket the sign change.
    Returns None when the displacement does not change sign.
    """
    x, u = solution.x, solution.u
    if not np.any(u):
        return None
    exact = list(np.flatnonzero(u == 0.0))
    crossings = np.flatnonzero(u[:-1] * u[1:] < 0.0)
    roots = [float(x[i]) for i in exact]
    for i in crossings:
        t = u[i] / (u[i] - u[i + 1])
        roots.append(float(x[i] + t * (x[i + 1] - x[i])))
    if len(roots) > 1:
        raise NumericError("unexpected nonmonotone displacement: multiple sign changes")
    return roots[0] if roots else None


def _analytic(x, system, load):
    # imported lazily: the solver above must not depend on the closed forms
    from .analytic import semi_floating_fields

    return semi_floating_fields(x, system, load)


def displacement_error(x, u, system: PileSystem, load: LoadCase) -> float:
    """Max absolute difference between nodal displacements ``u`` and the closed form."""
    return float(np.max(np.abs(np.asarray(u) - _analytic(x, system, load)[0].combined)))


def field_errors(solution: FdSolution, reference: Optional[PileSystem] = None) -> dict:
    """Max error of each field relative to the field's max magnitude.

    The closed form is evaluated for ``reference`` (default: the system the
    solution was computed for).
    """
    system = solution.system if reference is None else reference
    u, eps, sig = _analytic(solution.x, system, solution.load)
    out = {}
    for name, fd, exact in (
        ("displacement", solution.u, u.combined),
        ("strain", solution.strain, eps.combined),
        ("stress", solution.stress, sig.combined),
    ):
        scale = np.max(np.abs(exact))
        err = np.max(np.abs(fd - exact))
        out[name] = float(err / scale) if scale > 0 else float(err)
    return out


@dataclass(frozen=True)
class ConvergenceStudy:
    n: tuple
    h: tuple
    errors: tuple

    @property
    def orders(self) -> tuple:
        """Observed order between consecutive refinements."""
        return tuple(
            math.log(e0 / e1) / math.log(h0 / h1)
            for e0, e1, h0, h1 in zip(self.errors, self.errors[1:], self.h, self.h[1:])
        )

    @property
    def reductions(self) -> tuple:
        return tuple(e0 / e1 for e0, e1 in zip(self.errors, self.errors[1:]))


def convergence_study(
    system: PileSystem, load: LoadCase, n_list: Sequence[int] = (250, 500, 1000, 2000)
) -> ConvergenceStudy:
    """Max displacement error against the closed form for each grid in ``n_list``."""
    n_list = [int(n) for n in n_list]
    if any(n < 3 for n in n_list) or any(b <= a for a, b in zip(n_list, n_list[1:])):
        raise ValidationError("n_list must be ascending with every entry >= 3")
    hs, errs = [], []
    for n in n_list:
        sol = solve_bvp(system, load, n)
        hs.append(sol.h)
        errs.append(displacement_error(sol.x, sol.u, system, load))
    return ConvergenceStudy(tuple(n_list), tuple(hs), tuple(errs))
