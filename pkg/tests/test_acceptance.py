"""Acceptance criteria, one test each, at the stated tolerances.

Every test prints a single ``criterion N: PASS|FAIL ...`` line before it
asserts, so ``pytest -s`` or the captured output shows the full tally.
"""

import numpy as np
import pytest

from energy_pile import (
    Existence,
    LoadCase,
    ScenarioPair,
    Variant,
    combined_null_point,
    equivalent_thermal_load,
    existence_thresholds,
    field_errors,
    fully_floating_fields,
    load_null_point,
    sample_profile,
    semi_floating_fields,
    solve_bvp,
    sweep_eta,
    reference_pile,
    tension_zone,
    thermal_null_point,
)
from energy_pile.fd_oracle import convergence_study
from energy_pile.specfile import example_spec_path, load_spec

from conftest import random_systems

SAME, OPP = ScenarioPair.SAME_SIGN, ScenarioPair.OPPOSITE_SIGN


@pytest.fixture
def verdict(capsys):
    def emit(number, ok, detail):
        with capsys.disabled():
            print(f"\ncriterion {number}: {'PASS' if ok else 'FAIL'}  {detail}")
        assert ok, detail
    return emit


@pytest.fixture(scope="module")
def pile():
    return reference_pile()


def test_criterion_1_equivalent_thermal_load(pile, verdict):
    got = {f: equivalent_thermal_load(f, pile) for f in (1e6, 0.5e6)}
    ok = all(abs(got[f] - want) <= 0.005 * want for f, want in ((1e6, 4.36), (0.5e6, 2.18)))
    verdict(1, ok, f"|dT_eq| = {got[1e6]:.4f} / {got[0.5e6]:.4f} degC (targets 4.36 / 2.18, 0.5%)")


def test_criterion_2_eta(pile, verdict):
    got = {}
    for force, want in ((-1e6, 2.29), (-0.5e6, 4.58)):
        for dT in (10.0, -10.0):
            got[(force, dT)] = (LoadCase(force, dT).eta(pile), want)
    ok = all(abs(v - w) <= 0.005 * w for v, w in got.values())
    verdict(2, ok, f"eta = {got[(-1e6, 10.0)][0]:.5f} / {got[(-0.5e6, 10.0)][0]:.5f} (targets 2.29 / 4.58, 0.5%)")


def test_criterion_3_thermal_null(pile, verdict):
    x0 = thermal_null_point(pile)
    ok = abs(x0 - 13.0) <= 1e-9 * pile.L
    verdict(3, ok, f"x0 = {x0!r} m (target 13.0 to 1e-9 L)")


def test_criterion_4_thresholds(pile, verdict):
    printed_opp, in_pile_opp = existence_thresholds(pile, OPP)
    printed_same, in_pile_same = existence_thresholds(pile, SAME)
    ok = (abs(in_pile_opp - 2.14) <= 0.01
          and abs(printed_opp - 1.405) <= 1e-3
          and abs(in_pile_same - 1.139) <= 1e-3 and printed_same == in_pile_same)
    verdict(4, ok, f"II/III in-pile {in_pile_opp:.4f} (2.14 +/- 0.01), printed {printed_opp:.4f}; "
                   f"I/IV {in_pile_same:.4f}")


def test_criterion_5_null_point_max_stress(pile, verdict):
    n = 100_000
    x = np.linspace(0.0, pile.L, n)
    h = x[1] - x[0]
    misses = {}
    worst = {}
    for pair in (SAME, OPP):
        thr = existence_thresholds(pile, pair)[1]
        etas = np.geomspace(thr, 1e3, 51)[1:]
        bad = []
        for eta in etas:
            load = LoadCase.from_eta(pile, float(eta), pair, axial_force=-0.5e6)
            sig = fully_floating_fields(x, pile, load)[2].combined
            x_null = load_null_point(pile, load)
            gap = abs(x[np.argmax(np.abs(sig))] - x_null)
            worst[pair] = max(worst.get(pair, 0.0), gap)
            if gap > h:
                bad.append(float(eta))
        misses[pair] = bad
    ok = not misses[SAME] and not misses[OPP]
    detail = (f"grid n = {n}; same-sign {50 - len(misses[SAME])}/50 within one cell "
              f"(worst {worst[SAME]:.3f} m), opposite-sign {50 - len(misses[OPP])}/50 "
              f"(worst {worst[OPP]:.2e} m)")
    if misses[SAME]:
        detail += (f"; same-sign misses for eta in [{min(misses[SAME]):.3f}, {max(misses[SAME]):.3f}]"
                   " where |F/A| at the head exceeds the null-point stress")
    verdict(5, ok, detail)


def test_criterion_6_oracle(verdict):
    rng = np.random.default_rng(6)
    systems = random_systems(rng, 20)
    worst_field = 0.0
    orders = []
    for k, system in enumerate(systems):
        load = LoadCase(rng.choice([-1, 1]) * rng.uniform(0.1e6, 5e6),
                        rng.choice([-1, 1]) * rng.uniform(1.0, 30.0))
        sol = solve_bvp(system, load, 10_000)
        worst_field = max(worst_field, *field_errors(sol).values())
        if system.k_b == 0:
            # also against the fully floating closed forms
            ff = fully_floating_fields(sol.x, system, load)
            for fd, exact in zip((sol.u, sol.strain, sol.stress), ff):
                worst_field = max(worst_field, np.max(np.abs(fd - exact.combined)) / np.max(np.abs(exact.combined)))
        orders.extend(convergence_study(system, load).orders)
    ok = worst_field < 1e-4 and all(1.8 <= p <= 2.2 for p in orders)
    verdict(6, ok, f"20 random systems, k_b in {{0, k_s, 100 k_s}}: worst field error {worst_field:.2e} (< 1e-4), "
                   f"orders {min(orders):.3f}..{max(orders):.3f} (in [1.8, 2.2])")


def test_criterion_7_invariants(verdict):
    rng = np.random.default_rng(7)
    systems = random_systems(rng, 60)
    worst = dict(head=0.0, tip_free=0.0, tip_spring=0.0, constitutive=0.0, ode=0.0,
                 superposition=0.0, antisymmetry=0.0, symmetry=0.0)
    for system in systems:
        load = LoadCase(rng.uniform(-5e6, 5e6), rng.uniform(-30.0, 30.0))
        n = max(1001, int(system.psi_l * 1000) + 1)
        for variant in Variant:
            p = sample_profile(system, load, n, variant)
            u, eps, sig = p.displacement.combined, p.strain.combined, p.stress.combined
            scale = np.max(np.abs(sig))
            worst["head"] = max(worst["head"], abs(sig[-1] - load.axial_force / system.A) / scale)
            worst["constitutive"] = max(worst["constitutive"],
                                        np.max(np.abs(sig - system.E * (eps - system.alpha * load.delta_T))) / scale)
            h = p.x[1] - p.x[0]
            upp = (u[:-2] - 2 * u[1:-1] + u[2:]) / h**2
            worst["ode"] = max(worst["ode"],
                               np.max(np.abs(upp - system.psi**2 * u[1:-1])) / (system.psi**2 * np.max(np.abs(u))))
            parts = [sample_profile(system, q, n, variant) for q in (load.mechanical_part(), load.thermal_part())]
            for name in ("displacement", "strain", "stress"):
                total = getattr(p, name).combined
                split = sum(getattr(q, name).combined for q in parts)
                worst["superposition"] = max(worst["superposition"],
                                             np.max(np.abs(total - split)) / np.max(np.abs(total)))
            if variant is Variant.FULLY_FLOATING:
                worst["tip_free"] = max(worst["tip_free"], abs(sig[0]) / scale)
                t = sample_profile(system, load.thermal_part(), n, variant)
                tu, ts = t.displacement.combined, t.stress.combined
                worst["antisymmetry"] = max(worst["antisymmetry"], np.max(np.abs(tu + tu[::-1])) / np.max(np.abs(tu)))
                worst["symmetry"] = max(worst["symmetry"], np.max(np.abs(ts - ts[::-1])) / np.max(np.abs(ts)))
            else:
                worst["tip_spring"] = max(worst["tip_spring"], abs(sig[0] - system.k_b * u[0]) / scale)
    tol = dict(head=1e-9, tip_free=1e-9, tip_spring=1e-9, constitutive=1e-10, ode=1e-6,
               superposition=1e-12, antisymmetry=1e-12, symmetry=1e-12)
    failing = [k for k in worst if not worst[k] <= tol[k]]
    ok = not failing
    summary = ", ".join(f"{k} {worst[k]:.1e}" for k in worst)
    verdict(7, ok, f"60 random systems x 2 variants: {summary}" + (f"; failing {failing}" if failing else ""))


def test_criterion_8_figure7_sweep(pile, verdict):
    spec = load_spec(example_spec_path())
    sw, = spec.sweeps
    checks = []
    limits = {}
    for pair, start, sign in ((SAME, 0.0, 1), (OPP, pile.L, -1)):
        thr = existence_thresholds(pile, pair)[1]
        etas = sorted(set(sw.etas) | {thr})
        res = sweep_eta(pile, pair, etas, axial_force=sw.axial_force)
        present = [r for r in res.records if r.combined_null is not None]
        x = np.array([r.combined_null for r in present])
        checks.append(abs(x[0] - start) <= 1e-9 * pile.L)
        checks.append(present[0].existence in (Existence.AT_TIP, Existence.AT_HEAD))
        checks.append(bool(np.all(sign * np.diff(x) > 0)))
        checks.append(bool(np.all(sign * (pile.L / 2 - x) >= 0)))
        limits[pair] = combined_null_point(pile, 1e3, pair)
        checks.append(abs(limits[pair] - 13.0) <= 0.05)
    checks.append(existence_thresholds(pile, SAME)[1] < existence_thresholds(pile, OPP)[1])
    ok = all(checks)
    verdict(8, ok, f"branches start at 0 m / 26 m, monotone toward 13 m; at eta = 1e3: "
                   f"{limits[SAME]:.4f} / {limits[OPP]:.4f} m (13 +/- 0.05); same-sign emerges first")


def test_criterion_9_tension_zone(pile, verdict):
    zones = {f: tension_zone(sample_profile(pile, LoadCase(f, -10.0), 100_001)) for f in (-1e6, -0.5e6)}
    big, small = zones[-1e6], zones[-0.5e6]
    ok = small.peak_stress > big.peak_stress and small.length > big.length
    verdict(9, ok, f"|F| 1 -> 0.5 MN: peak tension {big.peak_stress / 1e3:.1f} -> {small.peak_stress / 1e3:.1f} kPa, "
                   f"zone length {big.length:.2f} -> {small.length:.2f} m")
