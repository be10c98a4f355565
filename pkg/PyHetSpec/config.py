# PyHetSpec: heterodyne spectrometer sensitivity limits in Python.
# Copyright (C) 2026  The PyHetSpec developers  (GNU GPLv3)
"""Read YAML configurations into validated simulation, scan and scenario objects."""

import logging
import os
import yaml
from . import constants, convert, modes, units
from .chain import SimulationConfig
from .chain.detect import DetectorSpec, electronics_noise_for_margin
from .chain.esa import ESASpec
from .chain.fields import ASESpec, LaserSpec
from .exceptions import ConfigError, DomainError
from .scan import ScanPlan
from .sources import (
    DetectorNoiseModel,
    QuantumDotSource,
    RamanChannel,
    SfwmSource,
    SpdcSource,
)

_log = logging.getLogger(__name__)

__all__ = [
    "SCENARIO_DIR",
    "bundled",
    "load",
    "simulation_config",
    "scan_plan",
    "input_spec",
    "scenario",
    "load_simulation",
    "load_scan_plan",
    "load_input",
    "load_scenario",
]

SCENARIO_DIR = os.path.join(os.path.dirname(__file__), "scenarios")

# Marks a schema field without a default
REQUIRED = object()


def _join(path, key):
    return "{}.{}".format(path, key) if path else str(key)


# Field parsers take the raw value and a context holding the wavelength at
# which wavelength bandwidths convert to frequency.
def _length(value, ctx):
    return units.parse_quantity(value, "length")


def _optical(value, ctx):
    return units.parse_optical(value)


def _frequency(value, ctx):
    return units.parse_quantity(value, "frequency")


def _optional_frequency(value, ctx):
    return None if value is None else _frequency(value, ctx)


def _time(value, ctx):
    return units.parse_quantity(value, "time")


def _power(value, ctx):
    return units.parse_power(value)


def _dbm(value, ctx):
    return float(convert.watts_to_dbm(units.parse_power(value)))


def _psd(value, ctx):
    return units.parse_psd(value, ctx["wavelength"])


def _wavelength_bandwidth(value, ctx):
    return units.parse_wavelength_bandwidth(value, ctx["wavelength"])


def _number(value, ctx):
    return units.parse_number(value)


def _db(value, ctx):
    return units.parse_db(value)


def _rin(value, ctx):
    return units.parse_rin(value)


def _integer(value, ctx):
    if isinstance(value, bool) or not isinstance(value, int):
        raise ConfigError("must be an integer, not {!r}.".format(value))
    return value


def _flag(value, ctx):
    if not isinstance(value, bool):
        raise ConfigError("must be true or false, not {!r}.".format(value))
    return value


def _text(value, ctx):
    if not isinstance(value, str):
        raise ConfigError("must be text, not {!r}.".format(value))
    return value


def _quantity(kind):
    def parse(value, ctx):
        return units.parse_quantity(value, kind)

    return parse


def _optional(parser):
    def parse(value, ctx):
        return None if value is None else parser(value, ctx)

    return parse


def _number_list(value, ctx):
    if not isinstance(value, list):
        raise ConfigError("must be a list of numbers.")
    return tuple(units.parse_number(v) for v in value)


def _read(section, schema, path, ctx):
    """Validate a mapping against `schema` and parse each field.

    Unknown keys and missing required keys raise `ConfigError`; the missing
    keys are listed together.
    """
    if section is None:
        section = {}
    if not isinstance(section, dict):
        raise ConfigError("must be a mapping.", path=path or None)
    unknown = sorted(str(k) for k in section if k not in schema)
    if unknown:
        raise ConfigError(
            "unknown key; expected one of {}.".format(", ".join(schema)),
            path=_join(path, unknown[0]),
        )
    missing = [k for k, (_, default) in schema.items() if default is REQUIRED and k not in section]
    if missing:
        raise ConfigError(
            "missing required fields: {}.".format(
                ", ".join(_join(path, k) for k in missing)
            ),
            path=path or None,
        )
    values = {}
    for key, (parser, default) in schema.items():
        if key not in section:
            values[key] = default
            continue
        values[key] = _field(parser, section[key], _join(path, key), ctx)
    return values


def _field(parser, value, path, ctx):
    """Parse one value, reporting errors under its dotted `path`."""
    try:
        return parser(value, ctx)
    except ConfigError as error:
        raise type(error)(
            error.message, path=_join(path, error.path) if error.path else path
        )


def _build(cls, path, **kwargs):
    """Construct a dataclass, reporting its validation errors under `path`."""
    try:
        return cls(**kwargs)
    except ConfigError as error:
        raise ConfigError(error.message, path=_join(path, error.path) if error.path else path)
    except DomainError as error:
        raise ConfigError(str(error), path=path)


LASER = {
    "power": (_power, REQUIRED),
    "wavelength": (_optional(_optical), None),
    "detuning": (_frequency, 0.0),
    "linewidth": (_frequency, 0.0),
    "dither_span": (_frequency, 0.0),
    "dither_rate": (_frequency, 0.0),
    "dither_waveform": (_text, "sine"),
    "rin": (_optional(_rin), None),
}

ASE = {
    "center_wavelength": (_optical, REQUIRED),
    "bandwidth": (_wavelength_bandwidth, 0.0),
    "psd": (_optional(_psd), None),
    "photons_per_mode": (_optional(_number), None),
    "edge_width": (_wavelength_bandwidth, 0.08e-12),
    "detuning": (_frequency, 0.0),
    "table": (None, None),
}

TABLE = {
    "wavelength": (None, REQUIRED),
    "psd": (None, REQUIRED),
}

DETECTOR = {
    "quantum_efficiency": (_number, 1.0),
    "responsivity": (_optional(_quantity("responsivity")), None),
    "gain_stages": (_number_list, (1e4,)),
    "lowpass_corner": (_optional_frequency, 10e6),
    "electronics_noise": (_quantity("current_density"), 0.0),
    "electronics_margin_db": (_optional(_db), None),
    "detection_bandwidth": (_optional_frequency, None),
}

ESA = {
    "center_rf": (_frequency, 6e6),
    "span": (_frequency, 0.0),
    "rbw": (_frequency, 1e6),
    "vbw": (_frequency, 1e3),
    "sweep_points": (_integer, 1001),
    "per_point_integration": (_optional(_time), None),
    "sweep_time": (_optional(_time), None),
    "detector": (_text, "sample"),
    "load_impedance": (_quantity("resistance"), constants.load_impedance),
}

SIMULATION = {
    "wavelength": (_optical, REQUIRED),
    "lo": (None, REQUIRED),
    "signal": (None, None),
    "detector": (None, None),
    "esa": (None, None),
    "sample_rate": (_frequency, 64e6),
    "duration": (_time, 1.2e-3),
    "trials": (_integer, 100),
    "min_shot_margin_db": (_db, 3.0),
}

SCAN = {
    "start": (_optical, REQUIRED),
    "stop": (_optical, REQUIRED),
    "step": (_wavelength_bandwidth, REQUIRED),
    "trials": (_integer, 1),
    "disable_dither": (_flag, True),
    "sample_rate": (_frequency, 64e6),
}

OSA = {
    "resolution": (_wavelength_bandwidth, constants.reference_resolution),
    "noise_floor": (_dbm, -90.0),
}

SNSPD = {
    "dark_rate": (_frequency, 100.0),
    "filter_bandwidth": (_wavelength_bandwidth, constants.reference_resolution),
    "efficiency": (_number, 1.0),
    "name": (_text, ""),
}

SCAN_PLAN = {
    "scan": (None, REQUIRED),
    "lo": (None, REQUIRED),
    "detector": (None, None),
    "esa": (None, None),
    "osa": (None, None),
    "snspd": (None, None),
}

SCENARIO = {
    "wavelength": (_optical, constants.reference_wavelength),
    "duration": (_time, 1.0),
    "threshold": (_number, 10.0),
    "sources": (None, REQUIRED),
    "detectors": (None, REQUIRED),
}

SOURCES = {
    "spdc": (
        SpdcSource,
        {
            "name": (_text, "SPDC"),
            "pair_rate_density": (_quantity("pair_rate_density"), REQUIRED),
            "pump_power": (_power, REQUIRED),
            "bandwidth": (_wavelength_bandwidth, REQUIRED),
        },
    ),
    "raman": (
        RamanChannel,
        {
            "name": (_text, "Raman"),
            "pump_power": (_power, REQUIRED),
            "fiber_length": (_length, REQUIRED),
            "cross_section": (_quantity("cross_section"), REQUIRED),
            "attenuation": (lambda v, ctx: units.parse_attenuation(v), REQUIRED),
            "attenuation_sign": (_integer, 1),
        },
    ),
    "sfwm": (
        SfwmSource,
        {
            "name": (_text, "SFWM"),
            "gamma": (_quantity("nonlinearity"), REQUIRED),
            "pump_power": (_power, REQUIRED),
            "fiber_length": (_length, REQUIRED),
        },
    ),
    "quantum_dot": (
        QuantumDotSource,
        {
            "name": (_text, "quantum dot"),
            "photons_per_mode": (_number, 1.0),
        },
    ),
}

DETECTORS = {
    "name": (_text, ""),
    "sensitivity": (_dbm, -90.0),
    "resolution": (_wavelength_bandwidth, constants.reference_resolution),
    "dark_rate": (_frequency, 100.0),
    "filter_bandwidth": (_wavelength_bandwidth, constants.reference_resolution),
    "efficiency": (_number, 1.0),
}


def _parsed(schema):
    """Schema entries that `_read` parses itself, the rest are sub-sections."""
    return {
        k: (parser, default) if parser is not None else (lambda v, ctx: v, default)
        for k, (parser, default) in schema.items()
    }


def bundled(name):
    """Path of a bundled scenario or configuration, by bare name."""
    path = os.path.join(SCENARIO_DIR, name if name.endswith(".yaml") else name + ".yaml")
    if not os.path.isfile(path):
        available = sorted(
            os.path.splitext(f)[0] for f in os.listdir(SCENARIO_DIR) if f.endswith(".yaml")
        )
        raise ConfigError(
            "no such file or bundled scenario; bundled: {}.".format(", ".join(available)),
            path=name,
        )
    return path


def load(source):
    """Read a YAML file, or a bundled file by bare name, into a dict."""
    path = source if os.path.isfile(source) else bundled(source)
    _log.debug("Reading configuration from %s.", path)
    with open(path, "r") as f:
        try:
            data = yaml.load(f, yaml.SafeLoader)
        except yaml.YAMLError as error:
            raise ConfigError("invalid YAML: {}".format(error), path=source)
    return {} if data is None else data


def _laser(section, path, ctx):
    values = _read(section, LASER, path, ctx)
    values["rin_dbc_per_hz"] = values.pop("rin")
    return _build(LaserSpec, path, **values)


def _ase(section, path, ctx):
    if isinstance(section, dict) and "center_wavelength" in section:
        center = _field(
            _optical, section["center_wavelength"], _join(path, "center_wavelength"), ctx
        )
        ctx = dict(ctx, wavelength=center)
    values = _read(section, _parsed(ASE), path, ctx)
    table = values.pop("table")
    n = values.pop("photons_per_mode")
    if table is not None:
        rows = _read(table, _parsed(TABLE), _join(path, "table"), ctx)
        values["shape"] = "table"
        values["table_wavelength"] = tuple(
            _optical(v, ctx) for v in rows["wavelength"]
        )
        values["table_psd"] = tuple(_psd(v, ctx) for v in rows["psd"])
        values["psd"] = 0.0
    elif (values["psd"] is None) == (n is None):
        raise ConfigError("give exactly one of psd and photons_per_mode.", path=path or None)
    elif n is not None:
        # Photons per mode as detected, through the detector efficiency
        values["psd"] = float(
            modes.psd_from_photons_per_mode(
                n,
                convert.wavelength_to_frequency(ctx["wavelength"]),
                ctx.get("efficiency", 1.0),
            )
        )
    return _build(ASESpec, path, **values)


def _signal(section, path, ctx):
    if not isinstance(section, dict):
        raise ConfigError("must be a mapping.", path=path or None)
    kind = section.get("type")
    rest = {k: v for k, v in section.items() if k != "type"}
    if kind == "ase":
        return _ase(rest, path, ctx)
    elif kind == "laser":
        return _laser(rest, path, ctx)
    raise ConfigError("must be 'ase' or 'laser', not {!r}.".format(kind), path=_join(path, "type"))


def _detector(section, path, ctx, lo_power):
    values = _read(section, DETECTOR, path, ctx)
    margin = values.pop("electronics_margin_db")
    if margin is not None:
        if section.get("electronics_noise") is not None:
            raise ConfigError(
                "give electronics_noise or electronics_margin_db, not both.", path=path
            )
        det = _build(DetectorSpec, path, **values)
        values["electronics_noise"] = electronics_noise_for_margin(
            lo_power, det, margin, convert.wavelength_to_frequency(ctx["wavelength"])
        )
    return _build(DetectorSpec, path, **values)


def _esa(section, path, ctx, per_point_default):
    values = _read(section, ESA, path, ctx)
    sweep_time = values.pop("sweep_time")
    if sweep_time is not None:
        if values["per_point_integration"] is not None:
            raise ConfigError(
                "give per_point_integration or sweep_time, not both.", path=path
            )
        values["per_point_integration"] = sweep_time / values["sweep_points"]
    elif values["per_point_integration"] is None:
        values["per_point_integration"] = per_point_default
    return _build(ESASpec, path, **values)


def simulation_config(data):
    """Build a `SimulationConfig` from a parsed YAML mapping."""
    top = _read(data, _parsed(SIMULATION), "", {})
    ctx = {"wavelength": top["wavelength"]}
    lo = _laser(top["lo"], "lo", ctx)
    detector = _detector(top["detector"] or {}, "detector", ctx, lo.power)
    ctx["efficiency"] = detector.quantum_efficiency
    signal = None if top["signal"] is None else _signal(top["signal"], "signal", ctx)
    return _build(
        SimulationConfig,
        "",
        wavelength=top["wavelength"],
        lo=lo,
        signal=signal,
        detector=detector,
        esa=_esa(top["esa"], "esa", ctx, ESASpec.per_point_integration),
        sample_rate=top["sample_rate"],
        duration=top["duration"],
        trials=top["trials"],
        min_shot_margin_db=top["min_shot_margin_db"],
    )


def scan_plan(data):
    """Build a `ScanPlan` from a parsed YAML mapping."""
    top = _read(data, _parsed(SCAN_PLAN), "", {})
    scan = _read(top["scan"], SCAN, "scan", {"wavelength": constants.reference_wavelength})
    ctx = {"wavelength": (scan["start"] + scan["stop"]) / 2}
    # Steps given as frequencies convert at the centre of the scan
    scan = _read(top["scan"], SCAN, "scan", ctx)
    lo = _laser(top["lo"], "lo", ctx)
    osa = _read(top["osa"], OSA, "osa", ctx)
    snspd = None
    if top["snspd"] is not None:
        values = _read(top["snspd"], SNSPD, "snspd", ctx)
        snspd = _build(
            DetectorNoiseModel,
            "snspd",
            kind="snspd-filtered",
            wavelength=ctx["wavelength"],
            **values,
        )
    return _build(
        ScanPlan,
        "scan",
        lo=lo,
        detector=_detector(top["detector"] or {}, "detector", ctx, lo.power),
        esa=_esa(top["esa"], "esa", ctx, 1e-3),
        osa_resolution=osa["resolution"],
        osa_noise_floor_dbm=osa["noise_floor"],
        snspd=snspd,
        **scan,
    )


def input_spec(data, wavelength=constants.reference_wavelength, efficiency=1.0):
    """Build the `ASESpec` or `LaserSpec` of a scan input file."""
    if data == {}:
        return None
    return _signal(data, "", {"wavelength": wavelength, "efficiency": efficiency})


def scenario(data):
    """Sources, detectors, duration and threshold of a brightness scenario."""
    top = _read(data, _parsed(SCENARIO), "", {})
    ctx = {"wavelength": top["wavelength"]}
    sources = []
    if not isinstance(top["sources"], list) or not top["sources"]:
        raise ConfigError("must be a non-empty list.", path="sources")
    for i, section in enumerate(top["sources"]):
        path = "sources[{}]".format(i)
        if not isinstance(section, dict) or section.get("type") not in SOURCES:
            raise ConfigError(
                "type must be one of {}.".format(", ".join(SOURCES)), path=path
            )
        cls, schema = SOURCES[section["type"]]
        schema = dict(schema, wavelength=(_optical, top["wavelength"]))
        rest = {k: v for k, v in section.items() if k != "type"}
        sources.append(_build(cls, path, **_read(rest, schema, path, ctx)))
    detectors = []
    if not isinstance(top["detectors"], list) or not top["detectors"]:
        raise ConfigError("must be a non-empty list.", path="detectors")
    for i, section in enumerate(top["detectors"]):
        path = "detectors[{}]".format(i)
        if not isinstance(section, dict):
            raise ConfigError("must be a mapping.", path=path)
        schema = dict(DETECTORS, wavelength=(_optical, top["wavelength"]))
        rest = {k: v for k, v in section.items() if k != "type"}
        values = _read(rest, schema, path, ctx)
        values["sensitivity_dbm"] = values.pop("sensitivity")
        detectors.append(
            _build(DetectorNoiseModel, path, kind=section.get("type"), **values)
        )
    return {
        "sources": sources,
        "detectors": detectors,
        "duration": top["duration"],
        "threshold": top["threshold"],
    }


def load_simulation(source):
    return simulation_config(load(source))


def load_scan_plan(source):
    return scan_plan(load(source))


def load_input(source, wavelength=constants.reference_wavelength, efficiency=1.0):
    return input_spec(load(source), wavelength=wavelength, efficiency=efficiency)


def load_scenario(source):
    return scenario(load(source))
