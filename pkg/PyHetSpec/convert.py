# PyHetSpec: heterodyne spectrometer sensitivity limits in Python.
# Copyright (C) 2026  The PyHetSpec developers  (GNU GPLv3)
"""Convert units and calculate conversion factors."""

from autograd import numpy as np
from . import constants
from .exceptions import DomainError

__all__ = [
    "wavelength_to_frequency",
    "frequency_to_wavelength",
    "bandwidth_wl_from_freq",
    "bandwidth_freq_from_wl",
    "dbm_to_watts",
    "watts_to_dbm",
    "db_to_ratio",
    "ratio_to_db",
    "photon_energy",
    "psd_per_hz_to_per_m",
    "psd_per_m_to_per_hz",
    "psd_from_dbm_per_bandwidth",
    "psd_to_dbm_per_bandwidth",
]


def _require_positive(value, name):
    if np.any(value <= 0):
        raise DomainError("{} must be positive.".format(name))


def _require_non_negative(value, name):
    if np.any(value < 0):
        raise DomainError("{} must not be negative.".format(name))


def wavelength_to_frequency(wavelength):
    """Convert vacuum wavelength in m to optical frequency in Hz."""
    _require_positive(wavelength, "Wavelength")
    return constants.c / wavelength


def frequency_to_wavelength(frequency):
    """Convert optical frequency in Hz to vacuum wavelength in m."""
    _require_positive(frequency, "Frequency")
    return constants.c / frequency


def bandwidth_wl_from_freq(bandwidth, wavelength):
    """Convert a bandwidth in Hz to a wavelength bandwidth in m at `wavelength`."""
    _require_non_negative(bandwidth, "Bandwidth")
    _require_positive(wavelength, "Wavelength")
    return wavelength ** 2 * bandwidth / constants.c


def bandwidth_freq_from_wl(bandwidth_wl, wavelength):
    """Convert a wavelength bandwidth in m at `wavelength` to a bandwidth in Hz."""
    _require_non_negative(bandwidth_wl, "Bandwidth")
    _require_positive(wavelength, "Wavelength")
    return constants.c * bandwidth_wl / wavelength ** 2


def dbm_to_watts(dbm):
    """Convert power from dBm to W."""
    return 10.0 ** ((dbm - 30.0) / 10.0)


def watts_to_dbm(watts):
    """Convert power from W to dBm.

    Zero power maps to -inf, which is the sentinel for "no power" throughout.
    """
    _require_non_negative(watts, "Power")
    with np.errstate(divide="ignore"):
        return 10.0 * np.log10(watts) + 30.0


def db_to_ratio(db):
    """Convert a level in dB to a linear power ratio."""
    return 10.0 ** (db / 10.0)


def ratio_to_db(ratio):
    """Convert a linear power ratio to dB."""
    with np.errstate(divide="ignore"):
        return 10.0 * np.log10(ratio)


def photon_energy(wavelength):
    """Energy of one photon in J at vacuum `wavelength` in m."""
    _require_positive(wavelength, "Wavelength")
    return constants.h * constants.c / wavelength


def psd_per_hz_to_per_m(psd, wavelength):
    """Convert a PSD in W/Hz to W/m of wavelength bandwidth."""
    return psd * constants.c / wavelength ** 2


def psd_per_m_to_per_hz(psd_wl, wavelength):
    """Convert a PSD in W/m of wavelength bandwidth to W/Hz."""
    return psd_wl * wavelength ** 2 / constants.c


def psd_from_dbm_per_bandwidth(dbm, bandwidth_wl, wavelength):
    """Convert a "dBm per wavelength bin" reading, e.g. dBm/20 pm, to W/Hz."""
    _require_positive(bandwidth_wl, "Bandwidth")
    return dbm_to_watts(dbm) / bandwidth_freq_from_wl(bandwidth_wl, wavelength)


def psd_to_dbm_per_bandwidth(psd, bandwidth_wl, wavelength):
    """Convert a PSD in W/Hz to a "dBm per wavelength bin" reading."""
    _require_positive(bandwidth_wl, "Bandwidth")
    return watts_to_dbm(psd * bandwidth_freq_from_wl(bandwidth_wl, wavelength))
