"""CSV, JSON and SVG renderings of profiles, null-point reports and sweeps.

CSV text uses the shortest round-trip float representation, a fixed column
order and LF line endings, independent of locale.
"""

import io
import json

import numpy as np

from . import svg
from .analytic import ResponseProfile
from .model import ScenarioPair
from .nullpoint import NullPointReport, SweepResult

PROFILE_COLUMNS = (
    "u_thermal", "u_mech", "u_combined",
    "eps_thermal", "eps_mech", "eps_combined",
    "sig_thermal_Pa", "sig_mech_Pa", "sig_combined_Pa",
)
SWEEP_COLUMNS = ("eta", "combined_null_m", "exists_flag", "max_sigma_Pa", "max_sigma_location_m")

THERMAL_STYLE = {"color": "#c0392b", "dash": "6,4"}
MECH_STYLE = {"color": "#2e6da4", "dash": "2,3"}
COMBINED_STYLE = {"color": "#000000"}
BRANCH_COLORS = {ScenarioPair.SAME_SIGN: "#2e6da4", ScenarioPair.OPPOSITE_SIGN: "#c0392b"}


def fmt(v) -> str:
    # + 0.0 turns -0.0 into 0.0
    return repr(float(v) + 0.0)


def _coordinate(x, length, depth_from):
    return length - np.asarray(x) if depth_from == "head" else np.asarray(x)


def _coord_name(depth_from):
    return "depth_m" if depth_from == "head" else "x_m"


def _csv(header, rows) -> str:
    buf = io.StringIO()
    buf.write(",".join(header) + "\n")
    for row in rows:
        buf.write(",".join(row) + "\n")
    return buf.getvalue()


def profile_csv(profile: ResponseProfile, depth_from: str = "tip") -> str:
    u, e, s = profile.displacement, profile.strain, profile.stress
    cols = [
        _coordinate(profile.x, profile.system.L, depth_from),
        u.thermal, u.mechanical, u.combined,
        e.thermal, e.mechanical, e.combined,
        s.thermal, s.mechanical, s.combined,
    ]
    order = np.arange(len(profile.x))
    if depth_from == "head":
        order = order[::-1]
    rows = ([fmt(c[i]) for c in cols] for i in order)
    return _csv((_coord_name(depth_from),) + PROFILE_COLUMNS, rows)


def profile_json(profile: ResponseProfile, depth_from: str = "tip") -> str:
    u, e, s = profile.displacement, profile.strain, profile.stress
    doc = {
        "variant": profile.variant.value,
        "axial_force_N": profile.load.axial_force,
        "delta_T_degC": profile.load.delta_T,
        "scenario": profile.load.scenario.value,
        "coordinate": _coord_name(depth_from),
        "coordinate_values": _coordinate(profile.x, profile.system.L, depth_from).tolist(),
    }
    for name, comp in zip(("u", "eps", "sig"), (u, e, s)):
        doc[name] = {
            "thermal": np.asarray(comp.thermal).tolist(),
            "mechanical": np.asarray(comp.mechanical).tolist(),
            "combined": np.asarray(comp.combined).tolist(),
        }
    return json.dumps(doc, indent=1, sort_keys=True) + "\n"


def profile_svg(profile: ResponseProfile, title: str = "", depth_from: str = "tip") -> str:
    """Three panels (displacement, strain, stress) against position along the pile."""
    y = _coordinate(profile.x, profile.system.L, depth_from)
    ylabel = "Depth below head (m)" if depth_from == "head" else "Height above tip x (m)"
    invert = depth_from == "head"
    specs = (
        ("Displacement", "u (mm), upward positive", profile.displacement, 1e3),
        ("Strain", "strain (microstrain), extension positive", profile.strain, 1e6),
        ("Stress", "stress (MPa), tension positive", profile.stress, 1e-6),
    )
    panels = []
    for ttl, xl, comp, scale in specs:
        series = [
            svg.Series("thermal", np.asarray(comp.thermal) * scale, y, **THERMAL_STYLE),
            svg.Series("mechanical", np.asarray(comp.mechanical) * scale, y, **MECH_STYLE),
            svg.Series("combined", np.asarray(comp.combined) * scale, y, **COMBINED_STYLE),
        ]
        panels.append(svg.Panel(ttl, xl, ylabel, series, invert_y=invert))
    return svg.render(panels, title)


def report_table(rows) -> str:
    """Fixed-width text table of ``(name, NullPointReport)`` rows."""
    header = ("case", "scenario", "eta", "x0_thermal_m", "x0_combined_m", "existence",
              "eta_thr_in_pile", "eta_thr_printed", "max|sig|_at_m", "max_sig_MPa")

    def opt(v, f="{:.4f}"):
        return "-" if v is None else f.format(v)

    lines = []
    for name, r in rows:
        lines.append((
            name, r.scenario.value, opt(r.eta), f"{r.thermal_null:.4f}",
            "ABSENT" if r.combined_null is None else f"{r.combined_null:.4f}",
            r.existence.value, opt(r.eta_threshold_in_pile), opt(r.eta_threshold_printed),
            f"{r.max_stress_location:.4f}", f"{r.max_stress_value * 1e-6:.6f}",
        ))
    widths = [max(len(h), *(len(l[i]) for l in lines)) if lines else len(h) for i, h in enumerate(header)]
    out = ["  ".join(h.ljust(w) for h, w in zip(header, widths)).rstrip()]
    out.append("  ".join("-" * w for w in widths))
    for l in lines:
        out.append("  ".join(c.ljust(w) for c, w in zip(l, widths)).rstrip())
    return "\n".join(out) + "\n"


_DEPTH_KEYS = {
    "thermal_null_m": "thermal_null_depth_m",
    "combined_null_m": "combined_null_depth_m",
    "max_stress_location_m": "max_stress_depth_m",
}


def report_dict(report: NullPointReport, length: float, depth_from: str = "tip") -> dict:
    d = report.as_dict()
    if depth_from == "head":
        for key, new in _DEPTH_KEYS.items():
            v = d.pop(key)
            d[new] = None if v is None else length - v
    return d


def report_csv(rows, length: float, depth_from: str = "tip") -> str:
    dicts = [(name, report_dict(r, length, depth_from)) for name, r in rows]
    if not dicts:
        return ""
    keys = list(dicts[0][1])
    body = []
    for name, d in dicts:
        cells = [name]
        for k in keys:
            v = d[k]
            cells.append("" if v is None else (v if isinstance(v, str) else fmt(v)))
        body.append(cells)
    return _csv(["case"] + keys, body)


def sweep_csv(result: SweepResult, length: float, depth_from: str = "tip") -> str:
    header = list(SWEEP_COLUMNS)
    if depth_from == "head":
        header[1] = "combined_null_depth_m"
        header[4] = "max_sigma_depth_m"
    rows = []
    for r in result.records:
        x_null = "" if r.combined_null is None else fmt(_coordinate(r.combined_null, length, depth_from))
        rows.append([
            fmt(r.eta), x_null, "1" if r.existence.exists else "0",
            fmt(r.max_stress_value), fmt(_coordinate(r.max_stress_location, length, depth_from)),
        ])
    return _csv(header, rows)


def sweep_svg(results, length: float, title: str = "", depth_from: str = "tip") -> str:
    """Null-point location against eta, one curve per scenario pair."""
    series = []
    etas = []
    for res in results:
        y = _coordinate(res.null_points, length, depth_from)
        label = "scenarios I / IV" if res.pair is ScenarioPair.SAME_SIGN else "scenarios II / III"
        series.append(svg.Series(label, res.etas, y, color=BRANCH_COLORS[res.pair], width=2.0))
        etas.extend(res.etas.tolist())
    log_x = bool(etas) and min(etas) > 0 and max(etas) / min(etas) > 100
    ylabel = "Null point depth below head (m)" if depth_from == "head" else "Null point height above tip (m)"
    panel = svg.Panel("Combined null point", "eta = |dT| / |dT_eq| (-)", ylabel, series,
                      invert_y=depth_from == "head", log_x=log_x, hlines=(0.0, 0.5 * length, length))
    return svg.render([panel], title)
