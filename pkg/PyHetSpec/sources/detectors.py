# PyHetSpec: heterodyne spectrometer sensitivity limits in Python.
# Copyright (C) 2026  The PyHetSpec developers  (GNU GPLv3)
"""Noise per spectral-temporal mode of competing spectrometer detectors."""

from dataclasses import dataclass
from autograd import numpy as np
from .. import constants, convert, modes
from ..exceptions import DomainError

__all__ = [
    "KINDS",
    "DetectorNoiseModel",
    "snspd_noise_per_mode",
    "grating_osa_noise_per_mode",
    "noise_per_mode",
]

KINDS = ("heterodyne", "grating-osa", "snspd-filtered")


@dataclass(frozen=True)
class DetectorNoiseModel:
    """Noise model of one detector kind.

    Only the parameters of the chosen `kind` are used: `sensitivity_dbm` and
    `resolution` (m) for a grating OSA, `dark_rate` (counts/s) and
    `filter_bandwidth` (m) for a filtered SNSPD. Heterodyne detection always
    carries one shot-noise photon per mode.
    """

    kind: str
    sensitivity_dbm: float = -90.0
    resolution: float = constants.reference_resolution
    dark_rate: float = 100.0
    filter_bandwidth: float = constants.reference_resolution
    wavelength: float = constants.reference_wavelength
    efficiency: float = 1.0
    name: str = ""

    def __post_init__(self):
        if self.kind not in KINDS:
            raise DomainError(
                "Detector kind must be one of {}, not {!r}.".format(
                    ", ".join(KINDS), self.kind
                )
            )
        for field in ("resolution", "dark_rate", "filter_bandwidth", "wavelength"):
            if getattr(self, field) < 0:
                raise DomainError("Detector {} must not be negative.".format(field))
        if not 0 < self.efficiency <= 1:
            raise DomainError("Detector efficiency must be in (0, 1].")

    @property
    def label(self):
        return self.name or self.kind


def snspd_noise_per_mode(dark_rate, filter_bandwidth, wavelength):
    """Dark counts per mode of an SNSPD behind a `filter_bandwidth` (m) filter."""
    if np.any(filter_bandwidth <= 0):
        raise DomainError("Filter bandwidth must be positive.")
    modes_per_second = modes.modes(
        convert.bandwidth_freq_from_wl(filter_bandwidth, wavelength), 1.0
    )
    return dark_rate / modes_per_second


def grating_osa_noise_per_mode(sensitivity_dbm, resolution, wavelength):
    """Noise-equivalent photons per mode of a grating OSA's sensitivity floor."""
    if np.any(resolution <= 0):
        raise DomainError("Resolution must be positive.")
    psd = convert.psd_from_dbm_per_bandwidth(sensitivity_dbm, resolution, wavelength)
    return modes.photons_per_mode(psd, convert.wavelength_to_frequency(wavelength))


def noise_per_mode(model):
    """Noise photons per mode of a `DetectorNoiseModel`."""
    if model.kind == "heterodyne":
        return 1.0
    elif model.kind == "grating-osa":
        return grating_osa_noise_per_mode(
            model.sensitivity_dbm, model.resolution, model.wavelength
        )
    else:
        return snspd_noise_per_mode(
            model.dark_rate, model.filter_bandwidth, model.wavelength
        )
