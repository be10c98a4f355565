# PyHetSpec: heterodyne spectrometer sensitivity limits in Python.
# Copyright (C) 2026  The PyHetSpec developers  (GNU GPLv3)
"""Command-line interface: `pyhetspec <command> ...`."""

import argparse
import logging
import os
import re
import sys
import time
from . import api, config, convert, meta, modes, report, scan, units
from .chain import simulate
from .chain.fields import ASESpec
from .exceptions import AssumptionViolation, ConfigError, PyHetSpecError

_log = logging.getLogger(__name__)

__all__ = ["EXIT_OK", "EXIT_USAGE", "EXIT_ASSUMPTION", "build_parser", "main"]

EXIT_OK = 0
EXIT_USAGE = 2
EXIT_ASSUMPTION = 3

UNIT_HELP = (
    "Quantities take unit suffixes: lengths 1550nm 20pm 0.8fm, frequencies "
    "1MHz 193.4THz, times 1s 1.2ms, powers 1mW -89dBm."
)


class _Parser(argparse.ArgumentParser):
    """Argument parser whose usage errors exit with `EXIT_USAGE`."""

    def error(self, message):
        self.print_usage(sys.stderr)
        self.exit(EXIT_USAGE, "{}: error: {}\n".format(self.prog, message))


def _limit(args):
    wavelength = units.parse_optical(args.wavelength)
    bandwidth = units.parse_bandwidth(args.bandwidth, wavelength)
    power = modes.quantum_limit_power(convert.wavelength_to_frequency(wavelength), bandwidth)
    print("P_min = {:.6g} W ({:.2f} dBm)".format(power, convert.watts_to_dbm(power)))
    return EXIT_OK


def _modes(args):
    wavelength = units.parse_optical(args.wavelength)
    bandwidth = units.parse_bandwidth(args.bandwidth, wavelength)
    window = modes.ModeWindow(
        bandwidth=bandwidth,
        duration=units.parse_quantity(args.time, "time"),
        polarizations=args.polarizations,
    )
    n = modes.mode_count(window)
    print("N = {:.6g} (about {:.0e})".format(n, modes.round_to_decade(n) if n > 0 else 0))
    return EXIT_OK


def _rescale(args):
    wavelength = units.parse_optical(args.wavelength)
    power = convert.watts_to_dbm(units.parse_power(args.power))
    bandwidth_from = units.parse_bandwidth(getattr(args, "from"), wavelength)
    bandwidth_to = units.parse_bandwidth(args.to, wavelength)
    dbm = modes.rescale_sensitivity(power, bandwidth_from, bandwidth_to)
    print("{:.2f} dBm per {}".format(dbm, args.to))
    return EXIT_OK


def _sources(args):
    setup = config.load_scenario(args.scenario)
    table = api.verdict_table(
        setup["sources"],
        setup["detectors"],
        duration=setup["duration"],
        threshold=setup["threshold"],
    )
    if args.format == "csv":
        sys.stdout.write(table.to_csv(index=False, float_format="%.6g", lineterminator="\n"))
    elif args.format == "json":
        sys.stdout.write(table.to_json(orient="records", indent=2) + "\n")
    else:
        print(report.format_table(table.drop(columns="rationale")))
    return EXIT_OK


def _simulate(args):
    start = time.perf_counter()
    sim = config.load_simulation(args.config)
    command = "simulate {} --seed {}".format(args.config, args.seed)
    spectrum, measured = simulate(sim, seed=args.seed, workers=args.workers)
    directory = report.output_dir(args.output_dir)
    outputs = [
        report.write_csv(
            report.rf_table(spectrum),
            os.path.join(directory, "rf_spectrum.csv"),
            command,
            seed=args.seed,
            attrs=spectrum.attrs,
        ),
        report.write_json(measured, os.path.join(directory, "measurement.json")),
    ]
    record = report.RunRecord(
        command=command,
        config=report.plain(config.load(args.config)),
        seed=args.seed,
        outputs=outputs,
        duration=time.perf_counter() - start,
    )
    record.write(directory)
    print(
        "measured {:.4g} photons/mode ({:.2f} dB above shot), predicted {:.4g}".format(
            measured["measured_photons_per_mode"],
            measured["db_above_shot"],
            measured["predicted_photons_per_mode"],
        )
    )
    if not measured["shot_noise_limited"]:
        print(
            "not shot-noise limited: shot floor {:.2f} dB above electronics".format(
                measured["shot_over_electronics_db"]
            ),
            file=sys.stderr,
        )
        return EXIT_ASSUMPTION
    return EXIT_OK


def _scan_metrics(plan, spec, result):
    """Edge widths of a top-hat input, or linewidths of a laser line, in m.

    The OSA trace is widened by three resolutions so its edges settle.
    """
    x = result["wavelength"].values
    try:
        osa = scan.emulate_osa_for_plan(plan, spec, margin=3 * plan.osa_resolution)
        if isinstance(spec, ASESpec):
            return {
                "scan_edge_width": scan.edge_width(x, result["psd"].values),
                "osa_edge_width": scan.edge_width(osa["wavelength"].values, osa["psd"].values),
            }
        elif spec is not None:
            return {
                "scan_fwhm": scan.lorentzian_fwhm(x, result["psd"].values),
                "osa_fwhm": scan.fwhm(osa["wavelength"].values, osa["psd"].values),
            }
    except (PyHetSpecError, RuntimeError) as error:
        _log.warning("Could not measure the spectral shape: %s", error)
    return {}


def _scan(args):
    start = time.perf_counter()
    plan = config.load_scan_plan(args.plan)
    spec = config.load_input(
        args.input,
        wavelength=plan.center_wavelength,
        efficiency=plan.detector.quantum_efficiency,
    )
    command = "scan {} {} --seed {}".format(args.plan, args.input, args.seed)
    result = scan.run_scan(plan, spec, seed=args.seed, workers=args.workers)
    osa = scan.emulate_osa_for_plan(plan, spec)
    comparison = scan.compare_sensitivity(result, osa, snspd=plan.snspd)
    comparison["metrics"] = _scan_metrics(plan, spec, result)
    directory = report.output_dir(args.output_dir)
    outputs = [
        report.write_csv(
            report.optical_table(result),
            os.path.join(directory, "optical_spectrum.csv"),
            command,
            seed=args.seed,
            attrs=result.attrs,
        ),
        report.write_csv(
            report.optical_table(osa),
            os.path.join(directory, "osa_spectrum.csv"),
            command,
            seed=args.seed,
            attrs=osa.attrs,
        ),
        report.write_json(comparison, os.path.join(directory, "comparison.json")),
    ]
    record = report.RunRecord(
        command=command,
        config={
            "plan": report.plain(config.load(args.plan)),
            "input": report.plain(config.load(args.input)),
        },
        seed=args.seed,
        outputs=outputs,
        duration=time.perf_counter() - start,
    )
    record.write(directory)
    print(report.format_table(api.comparison_table(comparison).reset_index()))
    for name, value in comparison["metrics"].items():
        print("{} = {:.4g} pm".format(name, value * 1e12))
    print("winner: {}".format(comparison["winner"] or "none"))
    return EXIT_OK


def build_parser():
    parser = _Parser(
        prog="pyhetspec",
        description="Heterodyne spectrometer sensitivity limits. " + UNIT_HELP,
    )
    parser.add_argument("--version", action="version", version=meta.version)
    parser.add_argument(
        "--log-level",
        default="WARNING",
        choices=["DEBUG", "INFO", "WARNING", "ERROR"],
        help="logging threshold (default WARNING)",
    )
    parser.add_argument(
        "--output-dir",
        default=None,
        help="where to write results (default ${} or .)".format(
            report.OUTPUT_DIR_VARIABLE
        ),
    )
    commands = parser.add_subparsers(dest="command", parser_class=_Parser)
    commands.required = True

    limit = commands.add_parser("limit", help="quantum-limited minimum power h nu B")
    limit.add_argument("--wavelength", default="1550nm", help="e.g. 1550nm or 193.4THz")
    limit.add_argument("--bandwidth", required=True, help="e.g. 1MHz or 20pm")
    limit.set_defaults(func=_limit)

    count = commands.add_parser("modes", help="number of spectral-temporal modes")
    count.add_argument("--bandwidth", required=True, help="e.g. 1kHz or 1nm")
    count.add_argument("--time", required=True, help="e.g. 1s")
    count.add_argument("--wavelength", default="1550nm")
    count.add_argument("--polarizations", type=int, default=1, choices=[1, 2])
    count.set_defaults(func=_modes)

    rescale = commands.add_parser("rescale", help="re-express dBm per bandwidth")
    rescale.add_argument("--power", required=True, help="e.g. -89dBm")
    rescale.add_argument("--from", required=True, help="e.g. 0.8fm or 100kHz")
    rescale.add_argument("--to", required=True, help="e.g. 20pm")
    rescale.add_argument("--wavelength", default="1550nm")
    rescale.set_defaults(func=_rescale)

    sources = commands.add_parser("sources", help="dim-source detectability table")
    sources.add_argument("scenario", help="YAML file or bundled name, e.g. dim_sources")
    sources.add_argument("--format", default="pretty", choices=["pretty", "csv", "json"])
    sources.set_defaults(func=_sources)

    sim = commands.add_parser("simulate", help="Monte-Carlo heterodyne measurement")
    sim.add_argument("config", help="YAML file or bundled name, e.g. one_photon")
    sim.add_argument("--seed", type=int, default=0)
    sim.add_argument("--workers", type=int, default=1)
    sim.set_defaults(func=_simulate)

    sweep = commands.add_parser("scan", help="LO scan versus grating OSA")
    sweep.add_argument("plan", help="YAML scan plan or bundled name, e.g. tophat_plan")
    sweep.add_argument("input", help="YAML input or bundled name, e.g. tophat_input")
    sweep.add_argument("--seed", type=int, default=0)
    sweep.add_argument("--workers", type=int, default=1)
    sweep.set_defaults(func=_scan)
    return parser


# A value such as -89dBm, which argparse would otherwise take for an option
_NEGATIVE_QUANTITY = re.compile(r"^-\.?\d")


def _attach_negative_values(argv):
    """Rewrite `--power -89dBm` as `--power=-89dBm`."""
    joined = []
    for token in argv:
        previous = joined[-1] if joined else ""
        if (
            previous.startswith("--")
            and "=" not in previous
            and _NEGATIVE_QUANTITY.match(token)
        ):
            joined[-1] = previous + "=" + token
        else:
            joined.append(token)
    return joined


def main(argv=None):
    """Run the command line and return its exit code."""
    parser = build_parser()
    if argv is None:
        argv = sys.argv[1:]
    args = parser.parse_args(_attach_negative_values(argv))
    logging.basicConfig(
        level=getattr(logging, args.log_level),
        format="%(levelname)s %(name)s: %(message)s",
    )
    try:
        return args.func(args)
    except AssumptionViolation as error:
        print("assumption violated: {}".format(error), file=sys.stderr)
        return EXIT_ASSUMPTION
    except (ConfigError, PyHetSpecError, ValueError) as error:
        print("error: {}".format(error), file=sys.stderr)
        return EXIT_USAGE


if __name__ == "__main__":
    sys.exit(main())
