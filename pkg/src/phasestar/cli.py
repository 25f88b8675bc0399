"""Command-line interface.

Subcommands: star, commutator, oscillator, spectrum, modes, checks.
Output is deterministic given the arguments and seed.  Exit status 0 on
success, 1 on domain or parse errors, 2 when an internal check fails.
Tabular output (spectrum, modes, level tables) supports text, CSV
(RFC-4180-style with a header row) and JSON (an array of flat objects);
polynomial results print canonically in text or wrapped in JSON.
"""

from __future__ import annotations

import argparse
import csv
import json
import math
import sys
import warnings

from .blackbody import (SPECTRUM_FIELDS, dimensionless_x,
                        spectral_density_ladder_sum, spectrum_sweep)
from .cavity import (MODE_FIELDS, CavitySpec, ModeCapExceeded,
                     enumerate_modes, mode_count_vs_asymptotic)
from .checks import run_all_checks
from .expressions import (GRAMMAR_HELP, ParseError, format_canonical,
                          parse_expression, validate_bindings)
from .oscillator import OscillatorSpec, energy_level, ladder, oscillator_star_energy
from .star import DeformationParameter, poisson_bracket, star_commutator, \
    star_first_order, star_product
from .units import UnitSystem

# Mode tables above this row count are replaced by the asymptotic report.
MODE_LIST_LIMIT = 5000


def _parse_deformation_constant(text: str) -> float:
    if text.lower() in ("infinity", "inf"):
        return math.inf
    try:
        value = float(text)
    except ValueError:
        raise argparse.ArgumentTypeError(
            f"N must be a positive number or 'infinity', got {text!r}")
    if not value > 0:
        raise argparse.ArgumentTypeError(f"N must be positive, got {text!r}")
    return value


def _parse_binding(text: str):
    name, separator, value = text.partition("=")
    if not separator or not name:
        raise argparse.ArgumentTypeError(
            f"expected name=value, got {text!r}")
    try:
        return name, float(value)
    except ValueError:
        raise argparse.ArgumentTypeError(f"binding value must be a number, got {text!r}")


def _build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--units", choices=("natural", "si"), default="natural",
                        help="unit system (default natural: hbar=k=c=1)")
    common.add_argument("--N", type=_parse_deformation_constant, default=2.0,
                        metavar="N", dest="deformation",
                        help="deformation constant, a positive number or "
                             "'infinity' for the exact commutative limit "
                             "(default 2)")
    common.add_argument("--dims", type=int, default=1,
                        help="phase-space dimension d (default 1)")
    common.add_argument("--param", type=_parse_binding, action="append",
                        default=[], metavar="NAME=VALUE",
                        help="bind an identifier to a number (repeatable)")
    common.add_argument("--format", choices=("text", "csv", "json"),
                        default="text", help="output format (default text)")
    common.add_argument("--precision", type=int, default=12,
                        help="significant digits for numeric output, 3..17 "
                             "(default 12)")
    common.add_argument("--seed", type=int, default=0,
                        help="seed for randomized checks (default 0)")

    parser = argparse.ArgumentParser(
        prog="phasestar",
        description="Phase-space star products, the deformed oscillator "
                    "ladder, cavity mode counting and the radiation law "
                    "with zero-point term.",
        epilog=GRAMMAR_HELP,
        formatter_class=argparse.RawDescriptionHelpFormatter)
    subparsers = parser.add_subparsers(dest="command", required=True)

    star = subparsers.add_parser(
        "star", parents=[common], epilog=GRAMMAR_HELP,
        formatter_class=argparse.RawDescriptionHelpFormatter,
        help="star product of two expressions")
    star.add_argument("expr1")
    star.add_argument("expr2")
    star.add_argument("--first-order", action="store_true",
                      help="truncate the series at first order in hbar/N")

    commutator = subparsers.add_parser(
        "commutator", parents=[common], epilog=GRAMMAR_HELP,
        formatter_class=argparse.RawDescriptionHelpFormatter,
        help="star commutator (or Poisson bracket) of two expressions")
    commutator.add_argument("expr1")
    commutator.add_argument("expr2")
    commutator.add_argument("--poisson", action="store_true",
                            help="print the Poisson bracket instead")

    oscillator = subparsers.add_parser(
        "oscillator", parents=[common],
        help="deformed oscillator energy and ladder")
    oscillator.add_argument("--omega", type=float, default=1.0,
                            help="angular frequency (default 1)")
    oscillator.add_argument("--levels", type=int, default=3,
                            help="print levels 0..LEVELS (default 3)")

    spectrum = subparsers.add_parser(
        "spectrum", parents=[common],
        help="spectral energy density sweep")
    spectrum.add_argument("--temperature", "-T", type=float, required=True)
    spectrum.add_argument("--omega-min", type=float, required=True)
    spectrum.add_argument("--omega-max", type=float, required=True)
    spectrum.add_argument("--points", type=int, default=50)
    spectrum.add_argument("--spacing", choices=("log", "linear"), default="log")
    spectrum.add_argument("--oracle", action="store_true",
                          help="add the ladder-sum column and report the "
                               "maximum relative deviation on stderr")
    spectrum.add_argument("--no-zero-point", dest="zero_point",
                          action="store_false",
                          help="drop the hbar*w/2 term (textbook law)")

    modes = subparsers.add_parser(
        "modes", parents=[common],
        help="cavity mode table and asymptotic count report")
    modes.add_argument("--side-length", "-L", type=float, default=1.0)
    modes.add_argument("--omega-max", type=float, required=True)
    modes.add_argument("--convention", choices=("standing", "periodic"),
                       default="standing")

    checks = subparsers.add_parser(
        "checks", parents=[common],
        help="run the internal invariant suite")
    checks.add_argument("--inject-fault", action="store_true",
                        help=argparse.SUPPRESS)

    return parser


def _number_formatter(precision: int):
    if not 3 <= precision <= 17:
        raise ValueError(f"precision must be in [3, 17], got {precision}")

    def render(value):
        if isinstance(value, float):
            return f"{value:.{precision}g}"
        return str(value)

    return render


def _emit_rows(rows: list, fields: tuple, fmt: str, render, out) -> None:
    if fmt == "json":
        payload = [
            {key: (float(render(value)) if isinstance(value, float) else value)
             for key, value in row.items()}
            for row in rows
        ]
        json.dump(payload, out, indent=2)
        out.write("\n")
    elif fmt == "csv":
        writer = csv.writer(out)
        writer.writerow(fields)
        for row in rows:
            writer.writerow([render(row[key]) for key in fields])
    else:
        widths = {key: max(len(key), 14) for key in fields}
        out.write("  ".join(key.ljust(widths[key]) for key in fields).rstrip() + "\n")
        for row in rows:
            out.write("  ".join(render(row[key]).ljust(widths[key])
                                for key in fields).rstrip() + "\n")


def _polynomial_output(poly, fmt: str, out) -> None:
    text = format_canonical(poly)
    if fmt == "json":
        json.dump({"canonical": text}, out)
        out.write("\n")
    else:
        out.write(text + "\n")


def _units_from_args(args) -> UnitSystem:
    return UnitSystem.si() if args.units == "si" else UnitSystem.natural()


def _cmd_star(args, out, err) -> int:
    bindings = validate_bindings(dict(args.param))
    f = parse_expression(args.expr1, args.dims, bindings)
    g = parse_expression(args.expr2, args.dims, bindings)
    param = DeformationParameter(N=args.deformation)
    combine = star_first_order if args.first_order else star_product
    _polynomial_output(combine(f, g, param), args.format, out)
    return 0


def _cmd_commutator(args, out, err) -> int:
    bindings = validate_bindings(dict(args.param))
    f = parse_expression(args.expr1, args.dims, bindings)
    g = parse_expression(args.expr2, args.dims, bindings)
    if args.poisson:
        result = poisson_bracket(f, g)
    else:
        result = star_commutator(f, g, DeformationParameter(N=args.deformation))
    _polynomial_output(result, args.format, out)
    return 0


def _cmd_oscillator(args, out, err) -> int:
    units = _units_from_args(args)
    spec = OscillatorSpec(omega=args.omega, N=args.deformation, units=units)
    if args.levels < 0:
        raise ValueError(f"--levels must be non-negative, got {args.levels}")
    render = _number_formatter(args.precision)
    energy = format_canonical(oscillator_star_energy(spec))
    ground = energy_level(0, spec)
    levels = ladder(args.levels, spec)
    if args.format == "json":
        json.dump({
            "energy": energy,
            "ground_state": float(render(ground)),
            "levels": [{"n": n, "energy": float(render(value))}
                       for n, value in enumerate(levels)],
        }, out, indent=2)
        out.write("\n")
    elif args.format == "csv":
        err.write(f"energy = {energy}\n")
        writer = csv.writer(out)
        writer.writerow(("n", "energy"))
        for n, value in enumerate(levels):
            writer.writerow((n, render(value)))
    else:
        out.write(f"energy = {energy}\n")
        out.write(f"ground_state = {render(ground)}\n")
        out.write("levels: " + " ".join(render(value) for value in levels) + "\n")
    return 0


def _cmd_spectrum(args, out, err) -> int:
    units = _units_from_args(args)
    render = _number_formatter(args.precision)
    points = spectrum_sweep(args.temperature, args.omega_min, args.omega_max,
                            args.points, args.spacing, units, args.zero_point)
    fields = SPECTRUM_FIELDS
    rows = []
    worst = 0.0
    for point in points:
        row = {
            "omega": point.omega,
            "temperature": point.temperature,
            "thermal_density": point.thermal_density,
            "zero_point_density": point.zero_point_density,
            "total_density": point.total_density,
            "x": dimensionless_x(point.omega, point.temperature, units),
        }
        if args.oracle:
            summed = spectral_density_ladder_sum(
                point.omega, point.temperature, units,
                include_zero_point=args.zero_point)
            scale = point.total_density or 1.0
            deviation = abs(summed.total_density - point.total_density) / scale
            worst = max(worst, deviation)
            row["oracle_total_density"] = summed.total_density
            row["oracle_rel_error"] = deviation
        rows.append(row)
    if args.oracle:
        fields = fields + ("oracle_total_density", "oracle_rel_error")
    _emit_rows(rows, fields, args.format, render, out)
    if args.oracle:
        err.write(f"max_relative_deviation = {worst:.3e}\n")
    return 0


def _cmd_modes(args, out, err) -> int:
    units = _units_from_args(args)
    render = _number_formatter(args.precision)
    spec = CavitySpec(side_length=args.side_length,
                      boundary_convention=args.convention)
    with warnings.catch_warnings(record=True) as advisories:
        warnings.simplefilter("always")
        report = mode_count_vs_asymptotic(spec, args.omega_max, units)
    for advisory in advisories:
        err.write(f"advisory: {advisory.message}\n")
    lattice_points = report.exact_count // spec.polarizations_per_mode
    if lattice_points <= MODE_LIST_LIMIT:
        modes = enumerate_modes(spec, args.omega_max, units)
        rows = [
            {"n1": mode.lattice_triple[0], "n2": mode.lattice_triple[1],
             "n3": mode.lattice_triple[2], "omega": mode.omega,
             "polarizations": mode.polarization_count,
             "convention": spec.boundary_convention}
            for mode in modes
        ]
        _emit_rows(rows, MODE_FIELDS, args.format, render, out)
    else:
        err.write(f"{lattice_points} lattice modes; table suppressed above "
                  f"{MODE_LIST_LIMIT}\n")
    err.write(f"exact_count = {report.exact_count}\n")
    err.write(f"asymptotic_count = {render(report.asymptotic_count)}\n")
    err.write(f"relative_error = {render(report.relative_error)}\n")
    return 0


def _cmd_checks(args, out, err) -> int:
    units = _units_from_args(args)
    results = run_all_checks(seed=args.seed, units=units,
                             inject_fault=args.inject_fault)
    failed = False
    for result in results:
        status = "PASS" if result.passed else "FAIL"
        out.write(f"{status} {result.name}: {result.detail}\n")
        failed = failed or not result.passed
    return 2 if failed else 0


_COMMANDS = {
    "star": _cmd_star,
    "commutator": _cmd_commutator,
    "oscillator": _cmd_oscillator,
    "spectrum": _cmd_spectrum,
    "modes": _cmd_modes,
    "checks": _cmd_checks,
}


def main(argv=None, out=None, err=None) -> int:
    out = sys.stdout if out is None else out
    err = sys.stderr if err is None else err
    parser = _build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exit_request:
        # argparse uses status 2 for usage errors; domain errors are 1 here.
        return 0 if exit_request.code in (0, None) else 1
    try:
        return _COMMANDS[args.command](args, out, err)
    except (ParseError, ModeCapExceeded, ValueError) as error:
        err.write(f"error: {error}\n")
        return 1


def console_entry() -> None:
    sys.exit(main())


if __name__ == "__main__":
    console_entry()
