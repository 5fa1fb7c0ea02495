import math

import pytest
from hypothesis import given
from hypothesis import strategies as st

from energy_pile import (
    DomainError,
    LoadCase,
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
)

from conftest import systems


def test_table1_psi(pile):
    # sqrt((4 / 1 m) * (16.7e6 / 29.2e9)) evaluated by hand
    psi = math.sqrt(4.0 * 16.7e6 / 29.2e9)
    assert pile.psi == pytest.approx(psi, rel=1e-14)
    assert pile.psi == pytest.approx(0.047830, abs=5e-7)
    assert pile.psi_l == pytest.approx(1.2436, abs=5e-5)


def test_perimeter_over_area():
    g = PileGeometry(26.0, 1.0)
    assert g.perimeter / g.cross_section == pytest.approx(4.0, rel=1e-15)
    assert g.perimeter == pytest.approx(math.pi, rel=1e-12)
    assert g.cross_section == pytest.approx(math.pi / 4, rel=1e-12)


def test_psi_square_root_homogeneity(pile):
    g, m = pile.geometry, pile.material
    stiffer = build_pile_system(g, m, SoilSprings(4 * 16.7e6))
    assert stiffer.psi == pytest.approx(2 * pile.psi, rel=1e-14)


@given(systems())
def test_psi_definition(system):
    g = system.geometry
    lhs = system.psi**2 * g.cross_section * system.E
    rhs = g.perimeter * system.springs.shaft_stiffness
    assert abs(lhs - rhs) <= 1e-10 * rhs


@pytest.mark.parametrize("field, kwargs", [
    ("length", dict(geometry=(0.0, 1.0))),
    ("diameter", dict(geometry=(26.0, -1.0))),
    ("elastic_modulus", dict(material=(0.0, 1e-5))),
    ("thermal_expansion", dict(material=(29.2e9, 0.0))),
    ("shaft_stiffness", dict(springs=(0.0, 0.0))),
    ("tip_stiffness", dict(springs=(16.7e6, -1.0))),
])
def test_validation_names_field(field, kwargs):
    with pytest.raises(ValidationError, match=field):
        PileSystem(
            PileGeometry(*kwargs.get("geometry", (26.0, 1.0))),
            PileMaterial(*kwargs.get("material", (29.2e9, 1e-5))),
            SoilSprings(*kwargs.get("springs", (16.7e6, 0.0))),
        )


def test_unrepresentable_psi_l_rejected():
    with pytest.raises(ValidationError, match="psi"):
        PileSystem(PileGeometry(1e6, 1.0), PileMaterial(29.2e9, 1e-5), SoilSprings(16.7e6))


@pytest.mark.parametrize("force, expected", [(1e6, 4.36), (0.5e6, 2.18), (-1e6, 4.36)])
def test_equivalent_thermal_load(pile, force, expected):
    assert equivalent_thermal_load(force, pile) == pytest.approx(expected, rel=5e-3)


def test_equivalent_thermal_load_zero(pile):
    assert equivalent_thermal_load(0.0, pile) == 0.0


@pytest.mark.parametrize("dT", [10.0, -10.0])
@pytest.mark.parametrize("force, expected", [(-1e6, 2.29), (-0.5e6, 4.58)])
def test_eta_reference(pile, dT, force, expected):
    assert eta_ratio(dT, force, pile) == pytest.approx(expected, rel=5e-3)


def test_eta_unity(pile):
    dT = equivalent_thermal_load(0.7e6, pile)
    assert eta_ratio(-dT, 0.7e6, pile) == pytest.approx(1.0, rel=1e-15)


def test_eta_undefined(pile):
    with pytest.raises(DomainError, match="thermal-only"):
        eta_ratio(10.0, 0.0, pile)
    with pytest.raises(DomainError, match="mechanical-only"):
        eta_ratio(0.0, 1e6, pile)


@given(
    st.floats(0.1, 50).map(lambda v: v * (1 if v > 25 else -1)),
    st.floats(1e3, 5e6),
    st.floats(1e-3, 1e3),
)
def test_eta_scale_invariant(dT, force, c):
    from energy_pile import reference_pile

    s = reference_pile()
    assert eta_ratio(c * dT, c * force, s) == pytest.approx(eta_ratio(dT, force, s), rel=1e-13)


@pytest.mark.parametrize("force, dT, scenario", [
    (-1e6, -10.0, Scenario.I),
    (-1e6, 10.0, Scenario.II),
    (1e6, -10.0, Scenario.III),
    (1e6, 10.0, Scenario.IV),
    (0.0, 10.0, Scenario.THERMAL_ONLY),
    (1e6, 0.0, Scenario.MECHANICAL_ONLY),
    (0.0, 0.0, Scenario.NULL_LOAD),
])
def test_classify(force, dT, scenario):
    assert classify_scenario(force, dT) is scenario
    assert LoadCase(force, dT).scenario is scenario


def test_classification_exhaustive():
    signs = (-1.0, 0.0, 1.0)
    seen = [classify_scenario(f, t) for f in signs for t in signs]
    assert set(seen) == set(Scenario)


def test_opposite_sign_pairs_are_ii_and_iii():
    assert Scenario.II.pair is ScenarioPair.OPPOSITE_SIGN
    assert Scenario.III.pair is ScenarioPair.OPPOSITE_SIGN
    assert Scenario.I.pair is Scenario.IV.pair is ScenarioPair.SAME_SIGN
    assert Scenario.THERMAL_ONLY.pair is None


@pytest.mark.parametrize("pair, force, scenario", [
    (ScenarioPair.SAME_SIGN, -0.5e6, Scenario.I),
    (ScenarioPair.OPPOSITE_SIGN, -0.5e6, Scenario.II),
    (ScenarioPair.OPPOSITE_SIGN, 0.5e6, Scenario.III),
    (ScenarioPair.SAME_SIGN, 0.5e6, Scenario.IV),
])
def test_from_eta_force_anchor(pile, pair, force, scenario):
    load = LoadCase.from_eta(pile, 3.0, pair, axial_force=force)
    assert load.scenario is scenario
    assert load.eta(pile) == pytest.approx(3.0, rel=1e-14)
    assert load.axial_force == force


def test_from_eta_temperature_anchor(pile):
    load = LoadCase.from_eta(pile, 2.0, ScenarioPair.OPPOSITE_SIGN, delta_T=-10.0)
    assert load.scenario is Scenario.III
    assert load.delta_T == -10.0
    assert load.eta(pile) == pytest.approx(2.0, rel=1e-14)


def test_from_eta_needs_one_anchor(pile):
    with pytest.raises(ValidationError):
        LoadCase.from_eta(pile, 2.0, ScenarioPair.SAME_SIGN)
    with pytest.raises(ValidationError):
        LoadCase.from_eta(pile, 2.0, ScenarioPair.SAME_SIGN, axial_force=1.0, delta_T=1.0)
    with pytest.raises(ValidationError):
        LoadCase.from_eta(pile, -2.0, ScenarioPair.SAME_SIGN, axial_force=1.0)


def test_system_is_immutable(pile):
    with pytest.raises(AttributeError):
        pile.psi = 1.0
