# PyHetSpec: heterodyne spectrometer sensitivity limits in Python.
# Copyright (C) 2026  The PyHetSpec developers  (GNU GPLv3)
"""Count spectral-temporal modes and relate photon numbers to measured noise."""

import logging
from dataclasses import dataclass
from autograd import numpy as np
from . import constants, convert
from .exceptions import AssumptionViolation, DomainError

_log = logging.getLogger(__name__)

__all__ = [
    "ModeWindow",
    "QuadratureStats",
    "mode_count",
    "modes",
    "round_to_decade",
    "quantum_limit_power",
    "photons_per_mode",
    "psd_from_photons_per_mode",
    "snr_from_photons_per_mode",
    "describe_snr",
    "quadrature_stats",
    "photons_from_variance",
    "variance_from_photons",
    "db_above_shot",
    "photons_from_db_above_shot",
    "rescale_sensitivity",
    "resolution_advantage",
]


@dataclass(frozen=True)
class ModeWindow:
    """A bandwidth (Hz) observed for a duration (s) in one or two polarizations."""

    bandwidth: float
    duration: float
    polarizations: int = 1

    def __post_init__(self):
        if self.bandwidth < 0:
            raise DomainError("Mode window bandwidth must not be negative.")
        if not self.duration > 0:
            raise DomainError("Mode window duration must be positive.")
        if self.polarizations not in (1, 2):
            raise DomainError("Mode window polarizations must be 1 or 2.")

    @classmethod
    def from_wavelength(cls, bandwidth_wl, wavelength, duration, polarizations=1):
        """Build a window from a wavelength bandwidth about `wavelength`."""
        return cls(
            bandwidth=convert.bandwidth_freq_from_wl(bandwidth_wl, wavelength),
            duration=duration,
            polarizations=polarizations,
        )


@dataclass(frozen=True)
class QuadratureStats:
    """Means and variances of the two field quadratures in shot-noise units.

    A shot-noise-limited record has `var_x = var_p = 1/2`.
    """

    var_x: float
    var_p: float
    mean_x: float = 0.0
    mean_p: float = 0.0

    def __post_init__(self):
        if self.var_x < 0 or self.var_p < 0:
            raise DomainError("Quadrature variances must not be negative.")


def modes(bandwidth, duration, polarizations=1):
    """Number of spectral-temporal modes in `bandwidth` Hz over `duration` s."""
    return bandwidth * duration * polarizations


def mode_count(window):
    """Number of spectral-temporal modes in a `ModeWindow`."""
    return modes(window.bandwidth, window.duration, window.polarizations)


def round_to_decade(value):
    """Round to the nearest power of ten, e.g. 1.25e11 to 1e11."""
    return 10.0 ** np.round(np.log10(value))


def quantum_limit_power(frequency, bandwidth):
    """Minimum detectable power in W: one photon per resolution time."""
    return constants.h * frequency * bandwidth


def photons_per_mode(psd, frequency, efficiency=1.0):
    """Mean detected photon number per mode for a PSD `psd` in W/Hz."""
    if np.any(efficiency < 0) or np.any(efficiency > 1):
        raise DomainError("Efficiency must be between 0 and 1.")
    if np.any(frequency <= 0):
        raise DomainError("Frequency must be positive.")
    return psd * efficiency / (constants.h * frequency)


def psd_from_photons_per_mode(n, frequency, efficiency=1.0):
    """PSD in W/Hz that gives `n` detected photons per mode."""
    if np.any(efficiency <= 0) or np.any(efficiency > 1):
        raise DomainError("Efficiency must be in (0, 1].")
    return n * constants.h * frequency / efficiency


def snr_from_photons_per_mode(n):
    """Heterodyne SNR against shot noise, which contributes one photon per mode."""
    if np.any(n < 0):
        raise DomainError("Photons per mode must not be negative.")
    return n / 1.0


def describe_snr(snr):
    """Describe an SNR in words."""
    if snr < 0.1:
        return "much less than one"
    elif snr < 1:
        return "less than one"
    elif snr <= 10:
        return "at least one"
    else:
        return "much greater than one"


def quadrature_stats(samples, reference_variance):
    """Quadrature statistics of complex `samples` in shot-noise units.

    `reference_variance` is the mean |sample|^2 of a shot-noise-only record, so
    that such a record gives variances of 1/2 in each quadrature.
    """
    scale = np.sqrt(reference_variance)
    x = np.real(samples) / scale
    p = np.imag(samples) / scale
    return QuadratureStats(
        var_x=float(np.mean(x ** 2)),
        var_p=float(np.mean(p ** 2)),
        mean_x=float(np.mean(x)),
        mean_p=float(np.mean(p)),
    )


def photons_from_variance(
    stats, symmetry_tolerance=0.1, mean_tolerance=0.1, clamp_tolerance=1e-6
):
    """Photons per mode from quadrature variance: <n> = 2<dX^2> - 1.

    The relation assumes <X> = <P> = 0 and equal quadrature variances. The
    tolerances are relative: asymmetry to the mean variance, and means to the
    rms quadrature.
    """
    var_mean = (stats.var_x + stats.var_p) / 2
    if var_mean > 0:
        asymmetry = np.abs(stats.var_x - stats.var_p) / var_mean
        if asymmetry > symmetry_tolerance:
            raise AssumptionViolation(
                "Quadrature variances differ by {:.1%}, beyond the {:.1%} "
                "tolerance.".format(asymmetry, symmetry_tolerance)
            )
        bias = max(np.abs(stats.mean_x), np.abs(stats.mean_p)) / np.sqrt(var_mean)
        if bias > mean_tolerance:
            raise AssumptionViolation(
                "Quadrature means are {:.3g} of the rms quadrature, beyond the "
                "{:.3g} tolerance.".format(bias, mean_tolerance)
            )
    n = 2 * var_mean - 1
    if n < 0:
        if n < -clamp_tolerance:
            raise AssumptionViolation(
                "Variance-derived photon number {:.3g} is below the shot-noise "
                "floor.".format(n)
            )
        _log.warning("Clamping photon number %.3g to zero.", n)
        n = 0.0
    return n


def variance_from_photons(n):
    """Quadrature variance in shot-noise units for `n` photons per mode."""
    return (n + 1) / 2


def db_above_shot(n):
    """Noise variance above the shot-noise floor in dB for `n` photons per mode."""
    return 10 * np.log10(n + 1)


def photons_from_db_above_shot(db):
    """Photons per mode from a noise level `db` above the shot-noise floor."""
    return 10 ** (db / 10) - 1


def rescale_sensitivity(dbm, bandwidth_from, bandwidth_to):
    """Re-express a PSD reading of `dbm` per `bandwidth_from` per `bandwidth_to`."""
    if np.any(bandwidth_from <= 0) or np.any(bandwidth_to <= 0):
        raise DomainError("Both bandwidths must be positive.")
    return dbm + 10 * np.log10(bandwidth_to / bandwidth_from)


def resolution_advantage(coarse, fine):
    """How many times finer resolution `fine` is than `coarse`."""
    if np.any(fine <= 0):
        raise DomainError("Resolution must be positive.")
    return coarse / fine
