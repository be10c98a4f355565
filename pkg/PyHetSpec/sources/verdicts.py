# PyHetSpec: heterodyne spectrometer sensitivity limits in Python.
# Copyright (C) 2026  The PyHetSpec developers  (GNU GPLv3)
"""Judge whether a detector can see a source of given modal brightness."""

from dataclasses import dataclass, replace
from .. import modes
from .detectors import DetectorNoiseModel, noise_per_mode

__all__ = ["Verdict", "verdict", "quantum_dot_assessment"]

# Counting detectors need this many source photons per noise count by default
default_threshold = 10.0


@dataclass(frozen=True)
class Verdict:
    """Detectability of a source by one detector."""

    source_photons_per_mode: float
    detector_noise_per_mode: float
    snr: float
    detectable: bool
    rationale: str
    detector: str = "heterodyne"
    marginal: bool = False


def verdict(source_n, detector, threshold=default_threshold):
    """Pair a source's photons per mode with a detector's noise per mode.

    Heterodyne detection is judged on SNR >= 1. Counting detectors (grating
    OSA, filtered SNSPD) are judged on source/noise >= `threshold`. A verdict
    within a factor of 2 of its boundary is flagged marginal.
    """
    noise_n = noise_per_mode(detector)
    if detector.kind == "heterodyne":
        snr = modes.snr_from_photons_per_mode(source_n)
        detectable = bool(snr >= 1)
        marginal = 0.5 <= snr < 2
        rationale = "LO shot noise of one photon per mode limits: SNR {} ({:.3g}).".format(
            modes.describe_snr(snr), snr
        )
    else:
        snr = source_n / noise_n if noise_n > 0 else float("inf")
        detectable = bool(snr >= threshold)
        marginal = threshold / 2 <= snr < 2 * threshold
        if detector.kind == "grating-osa":
            limit = "sensitivity floor of {:.0f} dBm per {:.3g} pm".format(
                detector.sensitivity_dbm, detector.resolution * 1e12
            )
        else:
            limit = "dark counts of {:.3g}/s in a {:.3g} pm filter".format(
                detector.dark_rate, detector.filter_bandwidth * 1e12
            )
        rationale = "Limited by {}: {:.3g} noise counts per mode, ratio {:.3g} vs threshold {:.3g}.".format(
            limit, noise_n, snr, threshold
        )
    return Verdict(
        source_photons_per_mode=source_n,
        detector_noise_per_mode=noise_n,
        snr=snr,
        detectable=detectable,
        rationale=rationale,
        detector=detector.label,
        marginal=bool(marginal),
    )


def quantum_dot_assessment(photons_per_mode=1.0):
    """Heterodyne verdict for a single-photon emitter.

    Emitters at or below one photon per mode sit at best on the SNR = 1
    boundary, so they are judged not practically detectable unless the
    brightness given is above one.
    """
    result = verdict(photons_per_mode, DetectorNoiseModel("heterodyne"))
    if photons_per_mode <= 1:
        result = replace(
            result,
            detectable=False,
            rationale=(
                "Single-photon emitters give at most one photon per mode, matching "
                "the LO shot noise: not practically detectable (SNR {:.3g}).".format(
                    result.snr
                )
            ),
        )
    return result
