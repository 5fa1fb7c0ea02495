"""Command line interface: ``energy-pile {solve,nullpoint,sweep,oracle-check}``.

Exit codes: 0 success, 1 validation error, 2 numeric or tolerance failure.
"""

import argparse
import copy
import json
import sys
from pathlib import Path

from . import reporting
from .analytic import sample_profile, thermal_null_point
from .fd_oracle import (
    ConvergenceStudy,
    displacement_error,
    field_errors,
    find_displacement_zero,
    solve_bvp,
)
from .model import LoadCase, NumericError, ValidationError
from .nullpoint import build_null_point_report, load_null_point, sweep_eta
from .specfile import NamedLoad, load_spec

EXIT_OK = 0
EXIT_VALIDATION = 1
EXIT_NUMERIC = 2

ORACLE_GRID = 10_000
ORACLE_FIELD_TOL = 1e-4
ORACLE_RESIDUAL_TOL = 1e-12
ORDER_RANGE = (1.8, 2.2)
MIN_REDUCTION = 3.5
CONVERGENCE_GRIDS = (250, 500, 1000, 2000)
FORMATS = ("csv", "json", "svg")


def _formats(text, default):
    if text is None:
        return set(default)
    chosen = {t.strip() for t in text.split(",") if t.strip()}
    bad = chosen - set(FORMATS)
    if bad:
        raise ValidationError(f"unknown format(s): {', '.join(sorted(bad))}")
    return chosen


def _write(path: Path, text: str, written: list):
    path.parent.mkdir(parents=True, exist_ok=True)
    with open(path, "w", encoding="utf-8", newline="\n") as f:
        f.write(text)
    written.append(path)


def _depth_from(args, spec):
    return args.depth_from or spec.depth_from


def cmd_solve(spec, args) -> int:
    out = Path(args.out)
    formats = _formats(args.format, ("csv", "svg"))
    grid = args.grid or spec.grid
    depth_from = _depth_from(args, spec)
    written = []
    if not spec.loads:
        raise ValidationError("solve needs at least one [load] section")
    for named in spec.loads:
        profile = sample_profile(spec.system, named.load, grid, spec.variant)
        load = named.load
        title = (f"{named.name}: F = {load.axial_force * 1e-6:g} MN, dT = {load.delta_T:g} degC "
                 f"({spec.variant.value}, scenario {load.scenario.value})")
        if "csv" in formats:
            _write(out / f"{named.name}_profile.csv", reporting.profile_csv(profile, depth_from), written)
        if "json" in formats:
            _write(out / f"{named.name}_profile.json", reporting.profile_json(profile, depth_from), written)
        if "svg" in formats:
            _write(out / f"{named.name}_profile.svg", reporting.profile_svg(profile, title, depth_from), written)
    for p in written:
        print(p)
    return EXIT_OK


def cmd_nullpoint(spec, args) -> int:
    out = Path(args.out)
    formats = _formats(args.format, ("json",))
    depth_from = _depth_from(args, spec)
    if not spec.loads:
        raise ValidationError("nullpoint needs at least one [load] section")
    system = spec.system
    rows = [(n.name, build_null_point_report(system, n.load)) for n in spec.loads]
    table = reporting.report_table(rows)
    if system.k_b > 0:
        table += (f"note: combined null points are for the fully floating pile (k_b = 0); "
                  f"thermal null point with the given tip spring: {thermal_null_point(system):.4f} m\n")
    print(table, end="")
    written = []
    _write(out / "nullpoint_report.txt", table, written)
    if "json" in formats:
        doc = {
            "pile": {"length_m": system.L, "psi_per_m": system.psi, "psi_L": system.psi_l,
                     "thermal_null_with_tip_spring_m": thermal_null_point(system)},
            "cases": {
                name: dict(reporting.report_dict(r, system.L, depth_from),
                           axial_force_N=n.load.axial_force, delta_T_degC=n.load.delta_T)
                for (name, r), n in zip(rows, spec.loads)
            },
        }
        _write(out / "nullpoint_report.json", json.dumps(doc, indent=2, sort_keys=True) + "\n", written)
    if "csv" in formats:
        _write(out / "nullpoint_report.csv", reporting.report_csv(rows, system.L, depth_from), written)
    for p in written:
        print(p)
    return EXIT_OK


def cmd_sweep(spec, args) -> int:
    out = Path(args.out)
    formats = _formats(args.format, ("csv", "svg"))
    depth_from = _depth_from(args, spec)
    if not spec.sweeps:
        raise ValidationError("sweep needs at least one [sweep] section")
    written = []
    for sw in spec.sweeps:
        results = [
            sweep_eta(spec.system, pair, sw.etas, axial_force=sw.axial_force, delta_T=sw.delta_T)
            for pair in sw.pairs
        ]
        for res in results:
            stem = f"{sw.name}_{res.pair.value}_sweep"
            if "csv" in formats:
                _write(out / f"{stem}.csv", reporting.sweep_csv(res, spec.system.L, depth_from), written)
            if "json" in formats:
                doc = [
                    {"eta": r.eta, "combined_null_m": r.combined_null, "existence": r.existence.value,
                     "max_sigma_Pa": r.max_stress_value, "max_sigma_location_m": r.max_stress_location,
                     "axial_force_N": r.load.axial_force, "delta_T_degC": r.load.delta_T}
                    for r in res.records
                ]
                _write(out / f"{stem}.json", json.dumps(doc, indent=1) + "\n", written)
        if "svg" in formats:
            title = f"{sw.name}: combined null point against eta"
            _write(out / f"{sw.name}_sweep.svg",
                   reporting.sweep_svg(results, spec.system.L, title, depth_from), written)
    for p in written:
        print(p)
    return EXIT_OK


def _corrupted(system, psi_factor):
    # test hook: a system whose psi no longer matches its inputs
    bad = copy.copy(system)
    object.__setattr__(bad, "psi", system.psi * psi_factor)
    return bad


def oracle_checks(spec, n_nodes=ORACLE_GRID, psi_factor=None):
    """Cross-validate the closed forms against the finite-difference solver.

    Returns a list of ``(name, passed, detail)`` tuples.
    """
    system = spec.system
    fd_system = _corrupted(system, psi_factor) if psi_factor else system
    checks = []
    loads = list(spec.loads) or [NamedLoad("thermal_only", LoadCase(0.0, 10.0))]
    for named in loads:
        load = named.load
        sol = solve_bvp(fd_system, load, n_nodes)
        errs = field_errors(sol, reference=system)
        for field, err in errs.items():
            checks.append((f"{named.name}: {field} error (n={n_nodes})", err < ORACLE_FIELD_TOL,
                           f"{err:.3e} < {ORACLE_FIELD_TOL:g}"))
        checks.append((f"{named.name}: discrete residual", sol.residual_norm < ORACLE_RESIDUAL_TOL,
                       f"{sol.residual_norm:.3e} < {ORACLE_RESIDUAL_TOL:g}"))
        if load.axial_force == 0 and load.delta_T == 0:
            continue
        errors, hs = [], []
        for n in CONVERGENCE_GRIDS:
            s = solve_bvp(fd_system, load, n)
            errors.append(displacement_error(s.x, s.u, system, load))
            hs.append(s.h)
        study = ConvergenceStudy(CONVERGENCE_GRIDS, tuple(hs), tuple(errors))
        for k, (order, red) in enumerate(zip(study.orders, study.reductions)):
            ok = ORDER_RANGE[0] <= order <= ORDER_RANGE[1] and red >= MIN_REDUCTION
            checks.append((f"{named.name}: order n={study.n[k]}->{study.n[k + 1]}", ok,
                           f"p = {order:.3f}, reduction {red:.2f}x"))
        # null point
        zero = find_displacement_zero(sol)
        if system.k_b == 0:
            expected = load_null_point(system, load)
            what = "combined null point"
        else:
            zero = find_displacement_zero(solve_bvp(fd_system, load.thermal_part(), n_nodes)) \
                if load.delta_T != 0 else None
            expected = thermal_null_point(system) if load.delta_T != 0 else None
            what = "thermal null point"
        if expected is None or zero is None:
            ok = expected is None and zero is None
            detail = f"closed form {expected}, finite difference {zero}"
        else:
            ok = abs(zero - expected) <= sol.h
            detail = f"|{zero:.6f} - {expected:.6f}| <= h = {sol.h:.3e}"
        checks.append((f"{named.name}: {what}", ok, detail))
    return checks


def cmd_oracle_check(spec, args) -> int:
    n = args.grid or ORACLE_GRID
    checks = oracle_checks(spec, n, psi_factor=args.perturb_psi)
    failed = 0
    for name, ok, detail in checks:
        print(f"{'PASS' if ok else 'FAIL'}  {name}: {detail}")
        failed += not ok
    print(f"{len(checks) - failed}/{len(checks)} checks passed")
    return EXIT_OK if failed == 0 else EXIT_NUMERIC


COMMANDS = {
    "solve": (cmd_solve, "write displacement/strain/stress profiles"),
    "nullpoint": (cmd_nullpoint, "report thermal and combined null points"),
    "sweep": (cmd_sweep, "trace the combined null point over eta"),
    "oracle-check": (cmd_oracle_check, "cross-validate against the finite-difference solver"),
}


def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--spec", required=True, help="run specification file")
    common.add_argument("--out", default="out", help="output directory (default: out)")
    common.add_argument("--grid", type=int, help="number of grid points / finite-difference nodes")
    common.add_argument("--depth-from", choices=("tip", "head"), help="report positions from the tip or the head")
    common.add_argument("--format", help="comma separated subset of csv,json,svg")
    common.add_argument("--set", action="append", default=[], metavar="SECTION.KEY=VALUE",
                        help="override one spec field, e.g. pile.tip_stiffness='16.7 MPa/m'")
    common.add_argument("--perturb-psi", type=float, default=None, help=argparse.SUPPRESS)

    parser = argparse.ArgumentParser(prog="energy-pile", description=__doc__.splitlines()[0])
    sub = parser.add_subparsers(dest="command", required=True)
    for name, (_, help_text) in COMMANDS.items():
        sub.add_parser(name, parents=[common], help=help_text)
    return parser


def main(argv=None) -> int:
    args = build_parser().parse_args(argv)
    try:
        spec = load_spec(args.spec, overrides=args.set)
        if args.grid is not None and args.grid < (3 if args.command == "oracle-check" else 2):
            raise ValidationError(f"--grid too small: {args.grid}")
        return COMMANDS[args.command][0](spec, args)
    except (ValidationError, OSError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_VALIDATION
    except NumericError as exc:
        print(f"numeric error: {exc}", file=sys.stderr)
        return EXIT_NUMERIC


if __name__ == "__main__":
    sys.exit(main())
