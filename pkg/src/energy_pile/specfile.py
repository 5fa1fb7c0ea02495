"""
Declarative run specification files.

A spec file is UTF-8 text made of ``[section]`` headers and ``key = value``
lines; ``#`` starts a comment. Every physical quantity carries a unit token::

    [pile]
    length = 26 m
    diameter = 1 m
    elastic_modulus = 29.2 GPa
    thermal_expansion = 1e-5 1/degC
    shaft_stiffness = 16.7 MPa/m
    tip_stiffness = 0 MPa/m

    [load cool_05]
    axial_force = -0.5 MN
    delta_T = -10 degC

    [load case_eta]
    scenario = I
    eta = 2.0
    axial_force = -0.5 MN

    [sweep eta]
    pair = both
    eta_min = 1
    eta_max = 1000
    eta_count = 200
    spacing = log
    axial_force = -0.5 MN

    [output]
    grid = 1001
    variant = fully-floating
    depth_from = tip

A load given as ``scenario`` + ``eta`` is anchored by one absolute load
whose sign is set by the scenario.
"""

import math
from dataclasses import dataclass
from importlib import resources
from pathlib import Path
from typing import Optional

from .analytic import DEFAULT_POINTS, Variant
from .model import (
    LoadCase,
    PileGeometry,
    PileMaterial,
    PileSystem,
    Scenario,
    ScenarioPair,
    SoilSprings,
    ValidationError,
)
from .nullpoint import eta_grid
from .units import Quantity, parse_quantity


class SpecError(ValidationError):
    """Malformed spec file; carries the offending line number when known."""

    def __init__(self, message, line=None, source=None):
        self.line = line
        self.source = source
        where = ""
        if source is not None and line is not None:
            where = f"{source}:{line}: "
        elif line is not None:
            where = f"line {line}: "
        super().__init__(where + message)


PILE_KEYS = {
    "length": "length",
    "diameter": "length",
    "elastic_modulus": "pressure",
    "thermal_expansion": "expansion",
    "shaft_stiffness": "stiffness",
    "tip_stiffness": "stiffness",
}
LOAD_KEYS = {"axial_force", "delta_T", "scenario", "eta"}
SWEEP_KEYS = {"pair", "eta", "eta_min", "eta_max", "eta_count", "spacing", "axial_force", "delta_T"}
OUTPUT_KEYS = {"grid", "variant", "depth_from"}
SECTION_KEYS = {"pile": PILE_KEYS, "load": LOAD_KEYS, "sweep": SWEEP_KEYS, "output": OUTPUT_KEYS}

_SCENARIO_SIGNS = {
    # scenario -> (sign of F, sign of dT)
    Scenario.I: (-1.0, -1.0),
    Scenario.II: (-1.0, 1.0),
    Scenario.III: (1.0, -1.0),
    Scenario.IV: (1.0, 1.0),
}


@dataclass(frozen=True)
class NamedLoad:
    name: str
    load: LoadCase


@dataclass(frozen=True)
class SweepSpec:
    name: str
    pairs: tuple
    etas: tuple
    axial_force: Optional[float] = None
    delta_T: Optional[float] = None


@dataclass(frozen=True)
class RunSpec:
    system: PileSystem
    pile_quantities: dict
    loads: tuple = ()
    sweeps: tuple = ()
    grid: int = DEFAULT_POINTS
    variant: Variant = Variant.FULLY_FLOATING
    depth_from: str = "tip"

    def echo(self) -> str:
        """The pile block as spec text, in the units it was written in."""
        lines = ["[pile]"]
        for key in PILE_KEYS:
            if key in self.pile_quantities:
                lines.append(f"{key} = {self.pile_quantities[key]}")
        return "\n".join(lines) + "\n"


@dataclass
class _Entry:
    value: str
    line: Optional[int]


def _tokenize(text: str, source):
    sections = {}
    order = []
    current = None
    for lineno, raw in enumerate(text.splitlines(), start=1):
        line = raw.split("#", 1)[0].strip()
        if not line:
            continue
        if line.startswith("["):
            if not line.endswith("]"):
                raise SpecError(f"malformed section header {raw.strip()!r}", lineno, source)
            parts = line[1:-1].split()
            if not parts or parts[0] not in SECTION_KEYS:
                raise SpecError(f"unknown section {line!r}", lineno, source)
            kind = parts[0]
            if kind in ("load", "sweep"):
                if len(parts) != 2:
                    raise SpecError(f"[{kind}] needs exactly one name, e.g. [{kind} case1]", lineno, source)
                key = (kind, parts[1])
            else:
                if len(parts) != 1:
                    raise SpecError(f"[{kind}] takes no name", lineno, source)
                key = (kind, None)
            if key in sections:
                raise SpecError(f"duplicate section {line!r}", lineno, source)
            sections[key] = {"__line__": _Entry("", lineno)}
            order.append(key)
            current = key
            continue
        if "=" not in line:
            raise SpecError(f"expected 'key = value', got {raw.strip()!r}", lineno, source)
        if current is None:
            raise SpecError("key outside of any section", lineno, source)
        k, v = (s.strip() for s in line.split("=", 1))
        if k not in SECTION_KEYS[current[0]]:
            raise SpecError(f"unknown key {k!r} in [{current[0]}]", lineno, source)
        if k in sections[current]:
            raise SpecError(f"duplicate key {k!r}", lineno, source)
        sections[current][k] = _Entry(v, lineno)
    return sections, order


def _apply_override(sections, order, assignment: str):
    """Apply ``section[.name].key=value`` from the command line."""
    if "=" not in assignment:
        raise SpecError(f"override must look like section.key=value, got {assignment!r}")
    path, value = (s.strip() for s in assignment.split("=", 1))
    parts = path.split(".")
    if len(parts) == 2:
        skey = (parts[0], None)
    elif len(parts) == 3:
        skey = (parts[0], parts[1])
    else:
        raise SpecError(f"override path must be section.key or section.name.key, got {path!r}")
    kind, key = parts[0], parts[-1]
    if kind not in SECTION_KEYS or key not in SECTION_KEYS[kind]:
        raise SpecError(f"unknown override target {path!r}")
    if skey not in sections:
        sections[skey] = {"__line__": _Entry("", None)}
        order.append(skey)
    sections[skey][key] = _Entry(value, None)


def _quantity(entry: _Entry, dimension: str, key: str, source) -> Quantity:
    try:
        q = parse_quantity(entry.value)
    except ValidationError as exc:
        raise SpecError(f"{key}: {exc}", entry.line, source) from None
    if q.dimension != dimension:
        raise SpecError(f"{key}: unit {q.unit!r} is a {q.dimension}, expected a {dimension}", entry.line, source)
    if not math.isfinite(q.value):
        raise SpecError(f"{key}: value must be finite", entry.line, source)
    return q


def _number(entry: _Entry, key: str, source) -> float:
    try:
        v = float(entry.value)
    except ValueError:
        raise SpecError(f"{key}: not a number: {entry.value!r}", entry.line, source) from None
    if not math.isfinite(v):
        raise SpecError(f"{key}: value must be finite", entry.line, source)
    return v


def _build_pile(sec, source):
    if sec is None:
        raise SpecError("missing [pile] section", None, source)
    quantities = {}
    for key, dim in PILE_KEYS.items():
        if key in sec:
            quantities[key] = _quantity(sec[key], dim, key, source)
        elif key != "tip_stiffness":
            raise SpecError(f"[pile] is missing {key!r}", sec["__line__"].line, source)
    try:
        system = PileSystem(
            PileGeometry(quantities["length"].si, quantities["diameter"].si),
            PileMaterial(quantities["elastic_modulus"].si, quantities["thermal_expansion"].si),
            SoilSprings(
                quantities["shaft_stiffness"].si,
                quantities["tip_stiffness"].si if "tip_stiffness" in quantities else 0.0,
            ),
        )
    except ValidationError as exc:
        raise SpecError(str(exc), sec["__line__"].line, source) from None
    return system, quantities


def _anchor(sec, source):
    force = _quantity(sec["axial_force"], "force", "axial_force", source).si if "axial_force" in sec else None
    dT = _quantity(sec["delta_T"], "temperature", "delta_T", source).si if "delta_T" in sec else None
    return force, dT


def _build_load(name, sec, system, source):
    line = sec["__line__"].line
    force, dT = _anchor(sec, source)
    if "eta" not in sec and "scenario" not in sec:
        return NamedLoad(name, LoadCase(force or 0.0, dT or 0.0))
    if "eta" not in sec or "scenario" not in sec:
        raise SpecError(f"[load {name}]: 'scenario' and 'eta' must be given together", line, source)
    try:
        scenario = Scenario(sec["scenario"].value.upper())
    except ValueError:
        raise SpecError("scenario must be one of I, II, III, IV", sec["scenario"].line, source) from None
    if scenario not in _SCENARIO_SIGNS:
        raise SpecError("scenario must be one of I, II, III, IV", sec["scenario"].line, source)
    eta = _number(sec["eta"], "eta", source)
    if (force is None) == (dT is None):
        raise SpecError(f"[load {name}]: give exactly one of axial_force or delta_T with eta", line, source)
    f_sign, t_sign = _SCENARIO_SIGNS[scenario]
    anchor_sign = f_sign if force is not None else t_sign
    anchor = force if force is not None else dT
    if anchor == 0 or math.copysign(1.0, anchor) != anchor_sign:
        raise SpecError(f"[load {name}]: anchor sign contradicts scenario {scenario.value}", line, source)
    try:
        load = LoadCase.from_eta(system, eta, scenario.pair, axial_force=force, delta_T=dT)
    except ValidationError as exc:
        raise SpecError(f"[load {name}]: {exc}", line, source) from None
    return NamedLoad(name, load)


def _build_sweep(name, sec, source):
    line = sec["__line__"].line
    pair_text = sec["pair"].value if "pair" in sec else "both"
    if pair_text == "both":
        pairs = (ScenarioPair.SAME_SIGN, ScenarioPair.OPPOSITE_SIGN)
    else:
        try:
            pairs = (ScenarioPair(pair_text),)
        except ValueError:
            raise SpecError("pair must be same-sign, opposite-sign or both", sec["pair"].line, source) from None
    if "eta" in sec:
        try:
            etas = [float(v) for v in sec["eta"].value.replace(",", " ").split()]
        except ValueError:
            raise SpecError("eta must be a list of numbers", sec["eta"].line, source) from None
    else:
        missing = [k for k in ("eta_min", "eta_max", "eta_count") if k not in sec]
        if missing:
            raise SpecError(f"[sweep {name}] needs 'eta' or eta_min/eta_max/eta_count", line, source)
        count = _number(sec["eta_count"], "eta_count", source)
        spacing = sec["spacing"].value if "spacing" in sec else "log"
        try:
            etas = list(eta_grid(_number(sec["eta_min"], "eta_min", source),
                                 _number(sec["eta_max"], "eta_max", source), int(count), spacing))
        except ValidationError as exc:
            raise SpecError(str(exc), line, source) from None
    if not etas or any(not (math.isfinite(e) and e > 0) for e in etas):
        raise SpecError("eta values must be positive", line, source)
    if any(b <= a for a, b in zip(etas, etas[1:])):
        raise SpecError("eta values must be strictly increasing", line, source)
    force, dT = _anchor(sec, source)
    if force is not None and dT is not None:
        raise SpecError(f"[sweep {name}]: give at most one of axial_force or delta_T", line, source)
    if force is None and dT is None:
        force = -0.5e6
    if (force is not None and force == 0) or (dT is not None and dT == 0):
        raise SpecError(f"[sweep {name}]: anchor load must be non-zero", line, source)
    return SweepSpec(name, pairs, tuple(etas), force, dT)


def parse_spec(text: str, source=None, overrides=()) -> RunSpec:
    """Build a :class:`RunSpec` from spec-file text.

    ``overrides`` are ``section[.name].key=value`` strings applied after
    parsing, as given by ``--set`` on the command line.
    """
    sections, order = _tokenize(text, source)
    for assignment in overrides:
        _apply_override(sections, order, assignment)

    system, quantities = _build_pile(sections.get(("pile", None)), source)
    loads = [_build_load(n, sections[(k, n)], system, source) for k, n in order if k == "load"]
    sweeps = [_build_sweep(n, sections[(k, n)], source) for k, n in order if k == "sweep"]
    if not loads and not sweeps:
        raise SpecError("spec needs at least one [load] or [sweep] section", None, source)

    out = sections.get(("output", None), {})
    grid = DEFAULT_POINTS
    if "grid" in out:
        g = _number(out["grid"], "grid", source)
        if g != int(g) or g < 2:
            raise SpecError("grid must be an integer >= 2", out["grid"].line, source)
        grid = int(g)
    variant = Variant.FULLY_FLOATING
    if "variant" in out:
        try:
            variant = Variant(out["variant"].value)
        except ValueError:
            raise SpecError("variant must be fully-floating or semi-floating", out["variant"].line, source) from None
    depth_from = out["depth_from"].value if "depth_from" in out else "tip"
    if depth_from not in ("tip", "head"):
        raise SpecError("depth_from must be tip or head", out["depth_from"].line, source)

    return RunSpec(system, quantities, tuple(loads), tuple(sweeps), grid, variant, depth_from)


def load_spec(path, overrides=()) -> RunSpec:
    path = Path(path)
    return parse_spec(path.read_text(encoding="utf-8"), source=str(path), overrides=overrides)


def example_spec_path() -> Path:
    """Path of the shipped spec with the reference pile and its load cases."""
    return Path(str(resources.files("energy_pile") / "data" / "reference.pile"))
