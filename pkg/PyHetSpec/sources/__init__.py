# PyHetSpec: heterodyne spectrometer sensitivity limits in Python.
# Copyright (C) 2026  The PyHetSpec developers  (GNU GPLv3)
"""Modal brightness of dim light sources used in quantum networking."""

from dataclasses import dataclass
from autograd import numpy as np
from .. import constants, convert, modes
from ..exceptions import DomainError
from . import detectors, verdicts
from .detectors import (
    DetectorNoiseModel,
    grating_osa_noise_per_mode,
    noise_per_mode,
    snspd_noise_per_mode,
)
from .verdicts import Verdict, quantum_dot_assessment, verdict

__all__ = [
    "detectors",
    "verdicts",
    "SpdcSource",
    "RamanChannel",
    "SfwmSource",
    "QuantumDotSource",
    "DetectorNoiseModel",
    "Verdict",
    "spdc_brightness",
    "spdc_photons_per_mode",
    "raman_brightness",
    "raman_output_psd",
    "sfwm_photons_per_mode",
    "source_photons_per_mode",
    "noise_per_mode",
    "snspd_noise_per_mode",
    "grating_osa_noise_per_mode",
    "verdict",
    "quantum_dot_assessment",
    "assess_scenario",
]


def _check_non_negative(obj, signed=()):
    for name, value in vars(obj).items():
        if name in signed:
            continue
        if isinstance(value, (int, float)) and value < 0:
            raise DomainError(
                "{} {} must not be negative.".format(type(obj).__name__, name)
            )


@dataclass(frozen=True)
class SpdcSource:
    """Pair source with a flat pair-rate density across its bandwidth.

    `pair_rate_density` is in pairs/s per W of pump per m of bandwidth, so
    3e8 pairs/s/mW/nm is 3e20.
    """

    pair_rate_density: float
    pump_power: float
    bandwidth: float
    wavelength: float = constants.reference_wavelength
    name: str = "SPDC"

    def __post_init__(self):
        _check_non_negative(self)


@dataclass(frozen=True)
class RamanChannel:
    """Spontaneous Raman scattering from a pump in a fibre channel.

    `cross_section` is per m of bandwidth per m of fibre (1e-9 /nm/km is 1e-3
    /m^2), `attenuation` in dB/m. With `attenuation_sign=+1` the loss factor is
    10**(+alpha L / 10) as commonly printed with this formula; -1 gives the
    conventional 10**(-alpha L / 10).
    """

    pump_power: float
    fiber_length: float
    cross_section: float
    attenuation: float
    wavelength: float = constants.reference_wavelength
    attenuation_sign: int = 1
    name: str = "Raman"

    def __post_init__(self):
        _check_non_negative(self, signed=("attenuation_sign",))
        if self.attenuation_sign not in (1, -1):
            raise DomainError("RamanChannel attenuation_sign must be +1 or -1.")


@dataclass(frozen=True)
class SfwmSource:
    """Spontaneous four-wave mixing with `gamma` in /W/m."""

    gamma: float
    pump_power: float
    fiber_length: float
    wavelength: float = constants.reference_wavelength
    name: str = "SFWM"

    def __post_init__(self):
        _check_non_negative(self)


@dataclass(frozen=True)
class QuantumDotSource:
    """A single-photon emitter, at most about one photon per mode."""

    photons_per_mode: float = 1.0
    wavelength: float = constants.reference_wavelength
    name: str = "quantum dot"

    def __post_init__(self):
        _check_non_negative(self)


def spdc_brightness(source, duration=1.0):
    """Pair rate, mode count and photons per mode of an SPDC source.

    The `_rounded` entries use the mode count rounded to a power of ten.
    """
    if not source.bandwidth > 0:
        raise DomainError("SPDC bandwidth must be positive.")
    pair_rate = source.pair_rate_density * source.pump_power * source.bandwidth
    window = modes.ModeWindow.from_wavelength(
        source.bandwidth, source.wavelength, duration
    )
    n_modes = modes.mode_count(window)
    n_modes_rounded = modes.round_to_decade(n_modes)
    return {
        "pair_rate": pair_rate,
        "modes": n_modes,
        "modes_rounded": n_modes_rounded,
        "photons_per_mode": pair_rate * duration / n_modes,
        "photons_per_mode_rounded": pair_rate * duration / n_modes_rounded,
    }


def spdc_photons_per_mode(source, duration=1.0):
    """Photons per mode of an SPDC source with the exact mode count."""
    return spdc_brightness(source, duration)["photons_per_mode"]


def raman_output_psd(channel):
    """Raman output PSD in W per m of wavelength bandwidth."""
    loss_exponent = (
        channel.attenuation_sign * channel.attenuation * channel.fiber_length / 10
    )
    return (
        channel.pump_power
        * channel.fiber_length
        * channel.cross_section
        * 10 ** loss_exponent
    )


def raman_brightness(channel, duration=1.0):
    """Raman output PSD with photon-rate and per-mode views."""
    psd_wl = raman_output_psd(channel)
    photon_rate_wl = psd_wl / convert.photon_energy(channel.wavelength)
    # Modes per unit wavelength bandwidth in the window
    mode_density = modes.modes(
        convert.bandwidth_freq_from_wl(1.0, channel.wavelength), duration
    )
    mode_density_rounded = modes.round_to_decade(mode_density * 1e-9) * 1e9
    return {
        "psd_w_per_m": psd_wl,
        "psd_w_per_nm": psd_wl * 1e-9,
        "photon_rate_per_m": photon_rate_wl,
        "photon_rate_per_nm": photon_rate_wl * 1e-9,
        "photons_per_mode": photon_rate_wl * duration / mode_density,
        "photons_per_mode_rounded": photon_rate_wl * duration / mode_density_rounded,
    }


def sfwm_photons_per_mode(source):
    """Photons per mode from spontaneous four-wave mixing, (gamma P0 L)**2."""
    return np.abs(source.gamma * source.pump_power * source.fiber_length) ** 2


def source_photons_per_mode(source, duration=1.0):
    """Exact and rounded-mode-count photons per mode of any source model."""
    if isinstance(source, SpdcSource):
        result = spdc_brightness(source, duration)
    elif isinstance(source, RamanChannel):
        result = raman_brightness(source, duration)
    elif isinstance(source, SfwmSource):
        n = sfwm_photons_per_mode(source)
        result = {"photons_per_mode": n, "photons_per_mode_rounded": n}
    elif isinstance(source, QuantumDotSource):
        n = source.photons_per_mode
        result = {"photons_per_mode": n, "photons_per_mode_rounded": n}
    else:
        raise TypeError("Unknown source model {!r}.".format(type(source).__name__))
    return result["photons_per_mode"], result["photons_per_mode_rounded"]


def assess_scenario(sources, detectors, duration=1.0, threshold=10.0):
    """Verdict rows for every source against every detector.

    Quantum-dot sources are judged by `quantum_dot_assessment` against
    heterodyne detectors.
    """
    rows = []
    for source in sources:
        n, n_rounded = source_photons_per_mode(source, duration)
        for detector in detectors:
            if isinstance(source, QuantumDotSource) and detector.kind == "heterodyne":
                result = quantum_dot_assessment(n)
            else:
                result = verdict(n, detector, threshold=threshold)
            rows.append(
                {
                    "source": source.name,
                    "detector": result.detector,
                    "photons_per_mode": n,
                    "photons_per_mode_rounded": n_rounded,
                    "noise_per_mode": result.detector_noise_per_mode,
                    "snr": result.snr,
                    "detectable": result.detectable,
                    "marginal": result.marginal,
                    "rationale": result.rationale,
                }
            )
    return rows
