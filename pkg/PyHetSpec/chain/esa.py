# PyHetSpec: heterodyne spectrometer sensitivity limits in Python.
# Copyright (C) 2026  The PyHetSpec developers  (GNU GPLv3)
"""Emulate a swept electronic spectrum analyser with Gaussian RBW and linear VBW."""

import logging
from dataclasses import dataclass
import numpy as np
import xarray as xr
from scipy import signal
from .. import constants, convert
from ..exceptions import ConfigError

_log = logging.getLogger(__name__)

__all__ = [
    "ESASpec",
    "enbw",
    "rbw_response",
    "rbw_output",
    "sweep_frequencies",
    "esa_measure",
]

DETECTORS = ("sample", "average")


@dataclass(frozen=True)
class ESASpec:
    """Spectrum analyser settings, all in SI units.

    `detector="sample"` reports the video output at the end of each point's
    dwell; `"average"` reports its mean over the dwell.
    """

    center_rf: float = 6e6
    span: float = 0.0
    rbw: float = 1e6
    vbw: float = 1e3
    sweep_points: int = 1001
    per_point_integration: float = 0.12 / 1001
    detector: str = "sample"
    load_impedance: float = constants.load_impedance

    def __post_init__(self):
        for name in ("rbw", "vbw", "per_point_integration", "load_impedance"):
            if not getattr(self, name) > 0:
                raise ConfigError("must be positive.", path=name)
        if self.center_rf < 0 or self.span < 0:
            raise ConfigError("center_rf and span must not be negative.", path="span")
        if int(self.sweep_points) != self.sweep_points or self.sweep_points < 1:
            raise ConfigError("must be a positive integer.", path="sweep_points")
        if self.span > 0 and self.rbw > self.span:
            raise ConfigError(
                "RBW of {:.4g} Hz is wider than the {:.4g} Hz span.".format(
                    self.rbw, self.span
                ),
                path="rbw",
            )
        if self.center_rf - self.span / 2 < 0:
            raise ConfigError("sweep reaches below 0 Hz.", path="span")
        if self.detector not in DETECTORS:
            raise ConfigError("must be 'sample' or 'average'.", path="detector")
        if self.vbw > self.rbw:
            _log.warning("VBW %.4g Hz is wider than RBW %.4g Hz.", self.vbw, self.rbw)

    @property
    def sweep_time(self):
        return self.sweep_points * self.per_point_integration


def enbw(rbw):
    """Noise-equivalent bandwidth (Hz) of the Gaussian RBW filter."""
    return rbw / 2 * np.sqrt(np.pi / np.log(2))


def rbw_response(frequency, rf_frequency, rbw):
    """Power response of the Gaussian RBW filter, -3 dB at +/- rbw / 2."""
    return 2.0 ** (-((2 * (frequency - rf_frequency) / rbw) ** 2))


def rbw_output(voltage, sample_rate, rf_frequency, rbw):
    """Complex analytic output of the RBW filter centred on `rf_frequency`.

    A real tone A cos(2 pi f t) at the filter centre gives |y| = A / 2, so the
    electrical power into a load R is 2 |y|^2 / R.
    """
    n = np.size(voltage)
    frequency = np.fft.fftfreq(n, d=1 / sample_rate)
    gain = np.where(
        frequency > 0, np.sqrt(rbw_response(frequency, rf_frequency, rbw)), 0.0
    )
    return np.fft.ifft(np.fft.fft(voltage) * gain)


def sweep_frequencies(esa):
    """RF frequencies (Hz) of the sweep points."""
    if esa.span == 0:
        return np.full(int(esa.sweep_points), float(esa.center_rf))
    return esa.center_rf + np.linspace(-esa.span / 2, esa.span / 2, int(esa.sweep_points))


def esa_measure(trace, esa, seed=None):
    """Sweep the analyser over the voltage of a `CurrentTrace`.

    Point k analyses the k-th dwell-long segment of the trace, reusing segments
    cyclically when the trace is shorter than the sweep. Linear power passes a
    single-pole video filter of bandwidth VBW that runs continuously across
    the sweep. Returns an `xarray.DataArray` of power in dBm.
    """
    fs = trace.sample_rate
    voltage = trace.voltage
    m = int(round(esa.per_point_integration * fs))
    if m < 2:
        raise ConfigError("dwell shorter than two samples.", path="per_point_integration")
    n_segments = voltage.size // m
    if n_segments < 1:
        raise ConfigError(
            "trace of {} samples is shorter than one {}-sample dwell.".format(
                voltage.size, m
            ),
            path="per_point_integration",
        )
    if n_segments < esa.sweep_points:
        _log.debug(
            "Sweep of %d points reuses %d trace segments.", esa.sweep_points, n_segments
        )
    frequencies = sweep_frequencies(esa)
    a = np.exp(-2 * np.pi * esa.vbw / fs)
    readings = np.empty(frequencies.size)
    state = None
    for k, rf in enumerate(frequencies):
        j = k % n_segments
        y = rbw_output(voltage[j * m : (j + 1) * m], fs, rf, esa.rbw)
        power = 2 * np.abs(y) ** 2 / esa.load_impedance
        if state is None:
            # Start the video filter settled at the first point's mean power
            state = np.array([a * power.mean()])
        video, state = signal.lfilter([1 - a], [1, -a], power, zi=state)
        readings[k] = video[-1] if esa.detector == "sample" else video.mean()
    return xr.DataArray(
        convert.watts_to_dbm(readings),
        dims=["rf_frequency"],
        coords={"rf_frequency": frequencies},
        name="power_dbm",
        attrs={
            "units": "dBm",
            "rbw": esa.rbw,
            "vbw": esa.vbw,
            "rbw_shape": "gaussian",
            "vbw_mode": "single-pole linear power",
            "detector": esa.detector,
            "load_impedance": esa.load_impedance,
            "per_point_integration": esa.per_point_integration,
            "seed": -1 if seed is None else int(seed),
        },
    )
