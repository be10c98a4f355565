# PyHetSpec: heterodyne spectrometer sensitivity limits in Python.
# Copyright (C) 2026  The PyHetSpec developers  (GNU GPLv3)
"""Parse quantities with unit suffixes, such as "1550nm", "1MHz" or "-64dBm/20pm"."""

import re
from functools import lru_cache
import pint
from . import constants, convert
from .exceptions import UnitError

__all__ = [
    "HINTS",
    "registry",
    "split_quantity",
    "parse_quantity",
    "parse_number",
    "parse_db",
    "parse_power",
    "parse_psd",
    "parse_bandwidth",
    "parse_wavelength_bandwidth",
    "parse_optical",
    "parse_attenuation",
    "parse_rin",
]

# Target SI unit of each kind of quantity
SI_UNITS = {
    "length": "m",
    "frequency": "Hz",
    "time": "s",
    "power": "W",
    "psd": "W/Hz",
    "current_density": "A/Hz**0.5",
    "current": "A",
    "resistance": "ohm",
    "responsivity": "A/W",
    "pair_rate_density": "1/s/W/m",
    "cross_section": "1/m**2",
    "nonlinearity": "1/W/m",
}

HINTS = {
    "length": "1550nm, 20pm, 0.8fm, 25km",
    "frequency": "1MHz, 6 MHz, 193.4THz",
    "time": "1s, 1.2ms, 120us",
    "power": "1mW, -89dBm",
    "psd": "-64dBm/20pm, -150dBm/Hz, 1e-19 W/Hz, 8e-11 W/nm",
    "current_density": "10pA/Hz**0.5",
    "current": "1mA",
    "resistance": "50ohm",
    "responsivity": "1.25A/W",
    "pair_rate_density": "3e8/s/mW/nm",
    "cross_section": "1e-9/nm/km",
    "nonlinearity": "10/W/km",
    "bandwidth": "1MHz, 1nm, 20pm",
    "optical": "1550nm, 193.4THz",
    "db": "3dB, 10",
    "attenuation": "0.2dB/km",
    "rin": "-150dBc/Hz",
}

_NUMBER = r"[+-]?(?:\d+(?:\.\d*)?|\.\d+)(?:[eE][+-]?\d+)?"
_QUANTITY = re.compile(r"^\s*({})\s*(.*?)\s*$".format(_NUMBER))
_DB_PER = re.compile(r"^(dBm|dBc|dB)\s*(?:/\s*(.*))?$")


@lru_cache(maxsize=None)
def registry():
    """The shared pint unit registry."""
    return pint.UnitRegistry()


def _fail(text, kind, reason):
    raise UnitError(
        "cannot read {!r} as {}: {}. Examples: {}.".format(
            text, kind.replace("_", " "), reason, HINTS[kind]
        )
    )


def split_quantity(text, kind="db"):
    """Split "12.5 MHz" into (12.5, "MHz"); numbers pass through with no unit."""
    if isinstance(text, bool):
        _fail(text, kind, "not a number")
    if isinstance(text, (int, float)):
        return float(text), ""
    match = _QUANTITY.match(str(text))
    if match is None:
        _fail(text, kind, "it does not start with a number")
    return float(match.group(1)), match.group(2)


def _to_si(value, unit, target, text, kind):
    if unit.startswith("/"):
        unit = "1" + unit
    try:
        return float(registry().Quantity(value, unit).to(target).magnitude)
    except pint.DimensionalityError:
        _fail(text, kind, "wrong dimension for {}".format(target))
    except (pint.errors.PintError, AttributeError, TypeError, ValueError, SyntaxError):
        _fail(text, kind, "unknown unit {!r}".format(unit))


def parse_quantity(text, kind):
    """Read a quantity of `kind` (a key of `SI_UNITS`) in SI units.

    Bare numbers are taken to be in SI units already.
    """
    value, unit = split_quantity(text, kind)
    if not unit:
        return value
    if unit.startswith("dB"):
        _fail(text, kind, "decibels are not accepted here")
    return _to_si(value, unit, SI_UNITS[kind], text, kind)


def parse_number(text, kind="db"):
    """Read a dimensionless number."""
    value, unit = split_quantity(text, kind)
    if unit:
        _fail(text, kind, "expected a plain number")
    return value


def parse_db(text):
    """Read a level in dB, with or without the suffix."""
    value, unit = split_quantity(text, "db")
    if unit not in ("", "dB"):
        _fail(text, "db", "expected dB")
    return value


def parse_power(text):
    """Read an optical or electrical power in W, accepting dBm."""
    value, unit = split_quantity(text, "power")
    if unit == "dBm":
        return float(convert.dbm_to_watts(value))
    return parse_quantity(text, "power")


def _bandwidth_hz(text, bandwidth, wavelength, kind):
    """A bandwidth given as length or frequency, in Hz."""
    if not bandwidth:
        _fail(text, kind, "the bandwidth after '/' is missing")
    if not _QUANTITY.match(bandwidth):
        bandwidth = "1 " + bandwidth
    value, unit = split_quantity(bandwidth, kind)
    try:
        return _to_si(value, unit, "Hz", text, kind)
    except UnitError:
        pass
    metres = _to_si(value, unit, "m", text, kind)
    return float(convert.bandwidth_freq_from_wl(metres, wavelength))


def parse_psd(text, wavelength=constants.reference_wavelength):
    """Read a PSD in W/Hz.

    Accepts dBm per bandwidth ("-64dBm/20pm", "-150dBm/Hz"), W/Hz, or W per
    wavelength ("8e-11 W/nm"); wavelength bandwidths are taken at `wavelength`.
    """
    value, unit = split_quantity(text, "psd")
    match = _DB_PER.match(unit)
    if match is not None:
        if match.group(1) != "dBm":
            _fail(text, "psd", "expected dBm per bandwidth")
        bandwidth = _bandwidth_hz(text, match.group(2), wavelength, "psd")
        return float(convert.dbm_to_watts(value)) / bandwidth
    if not unit:
        return value
    try:
        return _to_si(value, unit, "W/Hz", text, "psd")
    except UnitError:
        per_metre = _to_si(value, unit, "W/m", text, "psd")
        return float(convert.psd_per_m_to_per_hz(per_metre, wavelength))


def parse_bandwidth(text, wavelength=constants.reference_wavelength):
    """Read a bandwidth in Hz, given as a frequency or as a wavelength span."""
    value, unit = split_quantity(text, "bandwidth")
    if not unit:
        return value
    return _bandwidth_hz(text, "{!r} {}".format(value, unit), wavelength, "bandwidth")


def parse_wavelength_bandwidth(text, wavelength=constants.reference_wavelength):
    """Read a bandwidth in m of wavelength, given as a wavelength span or frequency."""
    value, unit = split_quantity(text, "bandwidth")
    if not unit:
        return value
    try:
        return _to_si(value, unit, "m", text, "bandwidth")
    except UnitError:
        hertz = _to_si(value, unit, "Hz", text, "bandwidth")
        return float(convert.bandwidth_wl_from_freq(hertz, wavelength))


def parse_optical(text):
    """Read an optical wavelength or frequency, returning the wavelength in m."""
    value, unit = split_quantity(text, "optical")
    if not unit:
        return value
    try:
        return _to_si(value, unit, "m", text, "optical")
    except UnitError:
        hertz = _to_si(value, unit, "Hz", text, "optical")
        if not hertz > 0:
            _fail(text, "optical", "frequency must be positive")
        return constants.c / hertz


def parse_attenuation(text):
    """Read a fibre attenuation in dB/m, e.g. "0.2dB/km"."""
    value, unit = split_quantity(text, "attenuation")
    if not unit:
        return value
    match = _DB_PER.match(unit)
    if match is None or match.group(1) != "dB" or not match.group(2):
        _fail(text, "attenuation", "expected dB per length")
    per = match.group(2)
    if not _QUANTITY.match(per):
        per = "1 " + per
    length_value, length_unit = split_quantity(per, "attenuation")
    return value / _to_si(length_value, length_unit, "m", text, "attenuation")


def parse_rin(text):
    """Read a relative intensity noise level in dBc/Hz."""
    value, unit = split_quantity(text, "rin")
    if unit.replace(" ", "") not in ("", "dBc/Hz", "dB/Hz"):
        _fail(text, "rin", "expected dBc/Hz")
    return value
