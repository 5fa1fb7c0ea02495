import math

import numpy as np
import pytest
from hypothesis import strategies as st

from energy_pile import LoadCase, PileGeometry, PileMaterial, PileSystem, SoilSprings, reference_pile


@pytest.fixture
def pile():
    return reference_pile()


@pytest.fixture
def pile_semi():
    """Reference pile with a tip spring equal to the shaft spring."""
    return reference_pile(tip_stiffness=16.7e6)


def make_system(length, diameter, modulus, alpha, psi_l, tip_ratio):
    """System with prescribed psi*L; tip stiffness given as a multiple of k_s."""
    k_s = (psi_l / length) ** 2 * modulus * diameter / 4.0
    return PileSystem(
        PileGeometry(length, diameter),
        PileMaterial(modulus, alpha),
        SoilSprings(k_s, tip_ratio * k_s),
    )


@st.composite
def systems(draw, tip_ratios=(0.0, 1.0, 100.0), max_psi_l=20.0):
    length = draw(st.floats(5.0, 60.0))
    diameter = draw(st.floats(0.3, 2.0))
    modulus = draw(st.floats(10e9, 50e9))
    alpha = draw(st.floats(5e-6, 1.5e-5))
    psi_l = math.exp(draw(st.floats(math.log(0.1), math.log(max_psi_l))))
    tip = draw(st.sampled_from(tip_ratios))
    return make_system(length, diameter, modulus, alpha, psi_l, tip)


@st.composite
def loads(draw, allow_zero=True):
    force = draw(st.floats(-5e6, 5e6))
    dT = draw(st.floats(-30.0, 30.0))
    if not allow_zero:
        force = math.copysign(max(abs(force), 1e3), force)
        dT = math.copysign(max(abs(dT), 0.1), dT)
    else:
        force = draw(st.sampled_from([force, force, 0.0]))
        dT = draw(st.sampled_from([dT, dT, 0.0]))
    return LoadCase(force, dT)


def random_systems(rng, count, tip_ratios=(0.0, 1.0, 100.0)):
    """Seeded batch of systems, log-uniform psi*L in [0.1, 20]."""
    out = []
    for k in range(count):
        out.append(make_system(
            length=rng.uniform(5.0, 60.0),
            diameter=rng.uniform(0.3, 2.0),
            modulus=rng.uniform(10e9, 50e9),
            alpha=rng.uniform(5e-6, 1.5e-5),
            psi_l=float(np.exp(rng.uniform(np.log(0.1), np.log(20.0)))),
            tip_ratio=tip_ratios[k % len(tip_ratios)],
        ))
    return out
