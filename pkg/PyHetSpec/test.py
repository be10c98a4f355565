# PyHetSpec: heterodyne spectrometer sensitivity limits in Python.
# Copyright (C) 2026  The PyHetSpec developers  (GNU GPLv3)
"""Test the internal consistency of PyHetSpec against the headline figures quoted
for heterodyne spectrometer sensitivity.
"""

import pandas as pd
from . import constants, convert, modes, sources
from .scan import resolution_from_detection


def _headline_sources():
    """The dim sources of the brightness comparison, in SI units."""
    return {
        "spdc": sources.SpdcSource(
            pair_rate_density=3e20, pump_power=1e-3, bandwidth=1e-9
        ),
        "raman": sources.RamanChannel(
            pump_power=1e-3, fiber_length=25e3, cross_section=1e-3, attenuation=2e-4
        ),
        "sfwm": sources.SfwmSource(gamma=0.01, pump_power=1e-3, fiber_length=1e3),
    }


def headline_check():
    """Recompute every quoted headline figure.

    Returns a pd.DataFrame with one row per figure: the computed value, the
    quoted value, their relative difference and the quoted precision.
    """
    wl = constants.reference_wavelength
    nu = convert.wavelength_to_frequency(wl)
    res = constants.reference_resolution
    src = _headline_sources()
    spdc = sources.spdc_brightness(src["spdc"])
    raman = sources.raman_brightness(src["raman"])
    fine = convert.bandwidth_wl_from_freq(100e3, wl)
    rows = [
        # name, computed, quoted, relative tolerance
        (
            "photons per mode at -64 dBm/20 pm",
            modes.photons_per_mode(convert.psd_from_dbm_per_bandwidth(-64, res, wl), nu),
            1.25,
            0.05,
        ),
        ("modes in 1 kHz for 1 s", modes.modes(1e3, 1.0), 1000, 0),
        (
            "modes in 1 nm for 1 s",
            modes.mode_count(modes.ModeWindow.from_wavelength(1e-9, wl, 1.0)),
            1e11,
            0.5,
        ),
        ("SPDC photons per mode", spdc["photons_per_mode_rounded"], 0.003, 0.5),
        ("Raman output PSD in W/nm", raman["psd_w_per_nm"], 8e-11, 0.5),
        ("Raman photon rate per nm", raman["photon_rate_per_nm"], 6e8, 0.5),
        ("Raman photons per mode", raman["photons_per_mode_rounded"], 0.006, 0.5),
        ("SFWM photons per mode", sources.sfwm_photons_per_mode(src["sfwm"]), 1e-4, 0.5),
        (
            "SNSPD noise per mode",
            sources.snspd_noise_per_mode(100, res, wl),
            4e-8,
            0.05,
        ),
        (
            "grating OSA noise per mode",
            sources.grating_osa_noise_per_mode(-90, res, wl),
            3.1e-3,
            0.05,
        ),
        ("dB above shot at one photon per mode", modes.db_above_shot(1.0), 3.0, 0.01),
        (
            "-89 dBm/0.8 fm per 20 pm",
            modes.rescale_sensitivity(-89, 0.8e-15, res),
            -45,
            0.1 / 45,
        ),
        (
            "-109 dBm/0.8 fm per 20 pm",
            modes.rescale_sensitivity(-109, 0.8e-15, res),
            -65,
            0.1 / 65,
        ),
        (
            "signal over shot floor, -65.5 vs -68.5 dBm",
            modes.photons_from_db_above_shot(-65.5 - -68.5),
            1.0,
            0.01,
        ),
        ("100 kHz in fm", fine * 1e15, 0.8, 0.01),
        ("resolution advantage, 20 pm vs 1 pm", modes.resolution_advantage(res, 1e-12), 20, 0),
        (
            "resolution advantage, 20 pm vs 0.1 pm",
            modes.resolution_advantage(res, 0.1e-12),
            200,
            1e-9,
        ),
        (
            "heterodyne resolution at 6 MHz, 1 MHz RBW, in pm",
            resolution_from_detection(6e6, 1e6, 0.0, wl) * 1e12,
            0.1,
            0.5,
        ),
    ]
    table = pd.DataFrame(rows, columns=["figure", "computed", "quoted", "tolerance"])
    table["computed"] = table["computed"].astype(float)
    table["relative_difference"] = (table.computed - table.quoted) / table.quoted
    table["agrees"] = table.relative_difference.abs() <= table.tolerance + 1e-12
    return table
