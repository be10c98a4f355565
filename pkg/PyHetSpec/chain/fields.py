# PyHetSpec: heterodyne spectrometer sensitivity limits in Python.
# Copyright (C) 2026  The PyHetSpec developers  (GNU GPLv3)
"""Synthesize complex baseband envelopes of laser and ASE optical fields."""

import logging
from dataclasses import dataclass, field
import numpy as np
from scipy import integrate, signal, special
from .. import constants, convert, engine
from ..exceptions import ConfigError

_log = logging.getLogger(__name__)

__all__ = [
    "MAX_SAMPLES",
    "FieldTrace",
    "LaserSpec",
    "ASESpec",
    "n_samples",
    "laser_offset",
    "ase_psd",
    "synth_laser",
    "synth_ase",
]

# Largest trace, in samples, that the synthesizers will allocate
MAX_SAMPLES = 2 ** 26

# 10-90 % width of the step 0.5 * (1 + erf(x / w)) in units of w
_ERF_EDGE = 2 * special.erfinv(0.8)


@dataclass(frozen=True, eq=False)
class FieldTrace:
    """Complex baseband envelope of an optical field in sqrt(W).

    Baseband zero sits at `reference_frequency + center_frequency_offset` in
    absolute optical frequency (Hz). The samples are read-only.
    """

    samples: np.ndarray
    sample_rate: float
    center_frequency_offset: float = 0.0
    reference_frequency: float = None
    metadata: dict = field(default_factory=dict)

    def __post_init__(self):
        samples = np.array(self.samples, dtype=complex)
        samples.setflags(write=False)
        object.__setattr__(self, "samples", samples)
        if not self.sample_rate > 0:
            raise ConfigError("sample_rate must be positive.")

    @property
    def duration(self):
        return self.samples.size / self.sample_rate

    @property
    def power(self):
        """Instantaneous power in W."""
        return np.abs(self.samples) ** 2

    @property
    def mean_power(self):
        return float(np.mean(self.power))

    @property
    def time(self):
        return np.arange(self.samples.size) / self.sample_rate


@dataclass(frozen=True)
class LaserSpec:
    """A laser line: power (W), detuning from its nominal frequency (Hz),
    Lorentzian linewidth (Hz), peak-to-peak FM dither span (Hz) at
    `dither_rate` (Hz), and optional RIN in dBc/Hz.

    With `wavelength` set, the line sits at c / wavelength + detuning in
    absolute terms; otherwise `detuning` is taken from the trace reference.
    """

    power: float
    detuning: float = 0.0
    linewidth: float = 0.0
    dither_span: float = 0.0
    dither_rate: float = 0.0
    dither_waveform: str = "sine"
    rin_dbc_per_hz: float = None
    wavelength: float = None

    def __post_init__(self):
        for name in ("power", "linewidth", "dither_span", "dither_rate"):
            if getattr(self, name) < 0:
                raise ConfigError("must not be negative.", path=name)
        if self.dither_waveform not in ("sine", "triangle"):
            raise ConfigError("must be 'sine' or 'triangle'.", path="dither_waveform")
        if self.dither_span > 0 and not self.dither_rate > 0:
            raise ConfigError("must be positive with a dither span.", path="dither_rate")
        if self.rin_dbc_per_hz is not None and self.rin_dbc_per_hz > 0:
            raise ConfigError("must not be positive.", path="rin_dbc_per_hz")
        if self.wavelength is not None and not self.wavelength > 0:
            raise ConfigError("must be positive.", path="wavelength")


@dataclass(frozen=True)
class ASESpec:
    """Spectrally shaped ASE, flat at `psd` (W/Hz) across `bandwidth` (m) about
    `center_wavelength` (m) shifted by `detuning` (Hz).

    The top-hat edges are erf-rounded with 10-90 % width `edge_width` (m). With
    `shape="table"` the PSD is interpolated from `table_wavelength` (m) and
    `table_psd` (W/Hz) instead.
    """

    center_wavelength: float
    bandwidth: float = 0.0
    psd: float = 0.0
    edge_width: float = 0.08e-12
    detuning: float = 0.0
    shape: str = "tophat"
    table_wavelength: tuple = None
    table_psd: tuple = None

    def __post_init__(self):
        if not self.center_wavelength > 0:
            raise ConfigError("must be positive.", path="center_wavelength")
        for name in ("bandwidth", "psd", "edge_width"):
            if getattr(self, name) < 0:
                raise ConfigError("must not be negative.", path=name)
        if self.shape not in ("tophat", "table"):
            raise ConfigError("must be 'tophat' or 'table'.", path="shape")
        if self.shape == "table":
            if self.table_wavelength is None or self.table_psd is None:
                raise ConfigError("needs table_wavelength and table_psd.", path="shape")
            wl = np.asarray(self.table_wavelength, dtype=float)
            psd = np.asarray(self.table_psd, dtype=float)
            if wl.shape != psd.shape or wl.size < 2:
                raise ConfigError("must match table_wavelength.", path="table_psd")
            if np.any(np.diff(wl) <= 0):
                raise ConfigError("must increase.", path="table_wavelength")
            if np.any(psd < 0):
                raise ConfigError("must not be negative.", path="table_psd")

    @property
    def center_frequency(self):
        return convert.wavelength_to_frequency(self.center_wavelength) + self.detuning

    @property
    def bandwidth_hz(self):
        if self.shape == "table":
            nu = convert.wavelength_to_frequency(np.asarray(self.table_wavelength))
            return float(nu.max() - nu.min())
        return convert.bandwidth_freq_from_wl(self.bandwidth, self.center_wavelength)

    @property
    def total_power(self):
        if self.shape == "table":
            nu = convert.wavelength_to_frequency(np.asarray(self.table_wavelength))
            order = np.argsort(nu)
            return float(integrate.trapezoid(np.asarray(self.table_psd)[order], nu[order]))
        return self.psd * self.bandwidth_hz


def n_samples(duration, sample_rate, max_samples=MAX_SAMPLES):
    """Number of samples in a trace, checked against the memory budget."""
    if not duration > 0 or not sample_rate > 0:
        raise ConfigError("duration and sample_rate must be positive.")
    n = int(round(duration * sample_rate))
    if n < 2:
        raise ConfigError("a trace needs at least two samples.", path="duration")
    if n > max_samples:
        raise ConfigError(
            "{} samples exceed the budget of {}; shorten the trace or lower the "
            "sample rate.".format(n, max_samples),
            path="duration",
        )
    return n


def laser_offset(spec, reference_frequency=None):
    """Baseband offset (Hz) of a laser line from the trace reference."""
    if spec.wavelength is None:
        return spec.detuning
    if reference_frequency is None:
        raise ConfigError(
            "an absolute laser wavelength needs a reference frequency.",
            path="wavelength",
        )
    return (
        convert.wavelength_to_frequency(spec.wavelength)
        - reference_frequency
        + spec.detuning
    )


def _dither_phase(spec, t):
    """Phase (rad) of the FM dither, zero at t = 0."""
    if spec.dither_span == 0:
        return np.zeros_like(t)
    peak_deviation = spec.dither_span / 2
    if spec.dither_waveform == "sine":
        return (peak_deviation / spec.dither_rate) * (
            1 - np.cos(2 * np.pi * spec.dither_rate * t)
        )
    deviation = peak_deviation * signal.sawtooth(
        2 * np.pi * spec.dither_rate * t + np.pi / 2, width=0.5
    )
    dt = t[1] - t[0]
    return 2 * np.pi * np.concatenate(([0.0], np.cumsum(deviation[:-1]) * dt))


def synth_laser(
    spec,
    duration,
    sample_rate,
    seed=0,
    reference_frequency=None,
    max_samples=MAX_SAMPLES,
):
    """Synthesize a laser envelope sqrt(P(t)) exp(i phi(t)).

    The phase is a Wiener process with increment variance 2 pi linewidth dt,
    giving a Lorentzian line of FWHM `linewidth`, plus the FM dither. RIN is
    white relative-intensity noise at the given dBc/Hz.
    """
    n = n_samples(duration, sample_rate, max_samples)
    offset = laser_offset(spec, reference_frequency)
    if np.abs(offset) + spec.dither_span / 2 > sample_rate / 2:
        raise ConfigError(
            "laser at {:.4g} Hz with {:.4g} Hz dither aliases at a sample rate of "
            "{:.4g} Hz.".format(offset, spec.dither_span, sample_rate),
            path="sample_rate",
        )
    rng = engine.as_generator(seed)
    dt = 1 / sample_rate
    t = np.arange(n) * dt
    # Draw every stream regardless of settings to keep streams aligned
    increments = rng.standard_normal(n) * np.sqrt(2 * np.pi * spec.linewidth * dt)
    rin_noise = rng.standard_normal(n)
    phase = (
        2 * np.pi * offset * t
        + np.concatenate(([0.0], np.cumsum(increments[:-1])))
        + _dither_phase(spec, t)
    )
    power = np.full(n, float(spec.power))
    if spec.rin_dbc_per_hz is not None:
        rin_std = np.sqrt(10 ** (spec.rin_dbc_per_hz / 10) * sample_rate / 2)
        power = power * np.clip(1 + rin_std * rin_noise, 0, None)
    return FieldTrace(
        samples=np.sqrt(power) * np.exp(1j * phase),
        sample_rate=sample_rate,
        reference_frequency=reference_frequency,
        metadata={"source": "laser", "offset": offset},
    )


def ase_psd(spec, frequency):
    """PSD (W/Hz) of an ASE spec at absolute optical `frequency` (Hz)."""
    frequency = np.asarray(frequency, dtype=float)
    if spec.shape == "table":
        wavelength = constants.c / frequency
        return np.interp(
            wavelength,
            np.asarray(spec.table_wavelength, dtype=float),
            np.asarray(spec.table_psd, dtype=float),
            left=0.0,
            right=0.0,
        )
    half_width = spec.bandwidth_hz / 2
    lower = spec.center_frequency - half_width
    upper = spec.center_frequency + half_width
    edge = convert.bandwidth_freq_from_wl(spec.edge_width, spec.center_wavelength)
    if edge == 0:
        inside = (frequency >= lower) & (frequency <= upper)
        return np.where(inside, spec.psd, 0.0)
    w = edge / _ERF_EDGE
    return (
        spec.psd
        * 0.5
        * (special.erf((frequency - lower) / w) - special.erf((frequency - upper) / w))
    )


def synth_ase(
    spec,
    duration,
    sample_rate,
    seed=0,
    reference_frequency=None,
    strict=False,
    max_samples=MAX_SAMPLES,
):
    """Synthesize ASE as circular complex Gaussian noise shaped to the `ASESpec` PSD.

    Each FFT bin k gets W_k sqrt(N fs S_k) with W_k unit complex Gaussian, so
    the realized PSD converges to S as the trace lengthens. Parts of the band
    outside the +/- fs/2 window are dropped, which is an error when `strict`.
    """
    n = n_samples(duration, sample_rate, max_samples)
    if reference_frequency is None:
        reference_frequency = spec.center_frequency
    rng = engine.as_generator(seed)
    white = (rng.standard_normal(n) + 1j * rng.standard_normal(n)) / np.sqrt(2)
    offsets = np.fft.fftfreq(n, d=1 / sample_rate)
    psd = ase_psd(spec, reference_frequency + offsets)
    lower = spec.center_frequency - spec.bandwidth_hz / 2 - reference_frequency
    upper = spec.center_frequency + spec.bandwidth_hz / 2 - reference_frequency
    truncated = spec.total_power > 0 and (
        lower < -sample_rate / 2 or upper > sample_rate / 2
    )
    if truncated:
        if strict:
            raise ConfigError(
                "ASE band from {:.4g} to {:.4g} Hz exceeds the +/-{:.4g} Hz "
                "window.".format(lower, upper, sample_rate / 2),
                path="sample_rate",
            )
        _log.info("ASE band truncated to the +/-%.4g Hz window.", sample_rate / 2)
    samples = np.fft.ifft(white * np.sqrt(n * sample_rate * psd))
    return FieldTrace(
        samples=samples,
        sample_rate=sample_rate,
        reference_frequency=reference_frequency,
        metadata={"source": "ase", "truncated": bool(truncated)},
    )
