# PyHetSpec: heterodyne spectrometer sensitivity limits in Python.
# Copyright (C) 2026  The PyHetSpec developers  (GNU GPLv3)
"""Mix fields on a 50/50 beamsplitter and detect them on a balanced receiver."""

from dataclasses import dataclass, field
import numpy as np
from .. import constants, engine
from ..exceptions import ConfigError
from .fields import FieldTrace

__all__ = [
    "DetectorSpec",
    "CurrentTrace",
    "mix_50_50",
    "responsivity",
    "lowpass_response",
    "transfer_gain",
    "band_limit",
    "shot_noise_psd",
    "electronics_noise_for_margin",
    "balanced_detect",
]


@dataclass(frozen=True)
class DetectorSpec:
    """Balanced receiver with quantum efficiency, responsivity (A/W), voltage
    gain stages, single-pole output low-pass corner (Hz) and input-referred
    current noise density (A/sqrt(Hz)). A `detection_bandwidth` (Hz) removes
    photocurrent content above it.

    `responsivity=None` means the unit-efficiency value q / (h nu) at the trace
    reference frequency; the quantum efficiency is applied on top. The product
    of the gain stages acts as a transimpedance in V/A.
    """

    quantum_efficiency: float = 1.0
    responsivity: float = None
    gain_stages: tuple = (1e4,)
    lowpass_corner: float = 10e6
    electronics_noise: float = 0.0
    detection_bandwidth: float = None

    def __post_init__(self):
        if not 0 <= self.quantum_efficiency <= 1:
            raise ConfigError("must be between 0 and 1.", path="quantum_efficiency")
        if self.responsivity is not None and not self.responsivity > 0:
            raise ConfigError("must be positive.", path="responsivity")
        object.__setattr__(self, "gain_stages", tuple(float(g) for g in self.gain_stages))
        if not self.gain_stages or any(g <= 0 for g in self.gain_stages):
            raise ConfigError("must be a non-empty list of positive gains.", path="gain_stages")
        if self.lowpass_corner is not None and not self.lowpass_corner > 0:
            raise ConfigError("must be positive.", path="lowpass_corner")
        if self.electronics_noise < 0:
            raise ConfigError("must not be negative.", path="electronics_noise")
        if self.detection_bandwidth is not None and not self.detection_bandwidth > 0:
            raise ConfigError("must be positive.", path="detection_bandwidth")

    @property
    def gain(self):
        return float(np.prod(self.gain_stages))


@dataclass(frozen=True, eq=False)
class CurrentTrace:
    """Balanced photocurrent (A) and the amplified, filtered voltage (V)."""

    current: np.ndarray
    voltage: np.ndarray
    sample_rate: float
    gain: float = 1.0
    lowpass_corner: float = None
    metadata: dict = field(default_factory=dict)

    def __post_init__(self):
        for name in ("current", "voltage"):
            values = np.array(getattr(self, name), dtype=float)
            values.setflags(write=False)
            object.__setattr__(self, name, values)


def mix_50_50(signal, lo):
    """Combine signal and LO on a lossless 50/50 beamsplitter."""
    if signal.sample_rate != lo.sample_rate:
        raise ConfigError("signal and LO sample rates differ.")
    if signal.samples.size != lo.samples.size:
        raise ConfigError("signal and LO traces differ in length.")
    if signal.center_frequency_offset != lo.center_frequency_offset:
        raise ConfigError("signal and LO traces use different frequency frames.")
    reference = lo.reference_frequency
    if reference is None:
        reference = signal.reference_frequency
    arms = (
        (signal.samples + lo.samples) / np.sqrt(2),
        (signal.samples - lo.samples) / np.sqrt(2),
    )
    return tuple(
        FieldTrace(
            samples=arm,
            sample_rate=lo.sample_rate,
            center_frequency_offset=lo.center_frequency_offset,
            reference_frequency=reference,
        )
        for arm in arms
    )


def responsivity(det, reference_frequency=None):
    """Responsivity in A/W before the quantum efficiency is applied."""
    if det.responsivity is not None:
        return det.responsivity
    if reference_frequency is None:
        raise ConfigError(
            "the default responsivity needs a reference optical frequency.",
            path="responsivity",
        )
    return constants.q / (constants.h * reference_frequency)


def lowpass_response(det, frequency):
    """Complex response of the single-pole output low-pass."""
    if det.lowpass_corner is None:
        return np.ones_like(np.asarray(frequency, dtype=float), dtype=complex)
    return 1 / (1 + 1j * np.asarray(frequency) / det.lowpass_corner)


def transfer_gain(det, frequency):
    """Magnitude of the current-to-voltage transfer at RF `frequency` (V/A)."""
    gain = det.gain * np.abs(lowpass_response(det, frequency))
    if det.detection_bandwidth is None:
        return gain
    return np.where(np.asarray(frequency) <= det.detection_bandwidth, gain, 0.0)


def band_limit(current, sample_rate, bandwidth):
    """Remove content above `bandwidth` (Hz) from a real current trace."""
    spectrum = np.fft.rfft(current)
    spectrum[np.fft.rfftfreq(current.size, d=1 / sample_rate) > bandwidth] = 0
    return np.fft.irfft(spectrum, n=current.size)


def shot_noise_psd(power, det, reference_frequency=None):
    """One-sided shot-noise current PSD (A^2/Hz) for total detected `power` (W)."""
    r = responsivity(det, reference_frequency)
    return 2 * constants.q * r * det.quantum_efficiency * power


def electronics_noise_for_margin(lo_power, det, margin_db, reference_frequency=None):
    """Input-referred current noise density that puts the LO shot floor
    `margin_db` above the electronics floor.
    """
    if not margin_db > 0:
        raise ConfigError("must be positive.", path="margin_db")
    shot = shot_noise_psd(lo_power, det, reference_frequency)
    return float(np.sqrt(shot / (10 ** (margin_db / 10) - 1)))


def balanced_detect(arm1, arm2, det, seed=0):
    """Balanced detection of two beamsplitter arms.

    The photocurrent is R eta (|arm1|^2 - |arm2|^2) plus white Gaussian shot
    noise of one-sided PSD 2 q R eta (P1 + P2) and white electronics noise at
    the input-referred density, limited to the detection bandwidth when one is
    set. The gain stages and the single-pole low-pass then give the output
    voltage.
    """
    if arm1.sample_rate != arm2.sample_rate or arm1.samples.size != arm2.samples.size:
        raise ConfigError("balanced detector arms are not matched.")
    fs = arm1.sample_rate
    n = arm1.samples.size
    r = responsivity(det, arm1.reference_frequency)
    eta = det.quantum_efficiency
    rng = engine.as_generator(seed)
    shot_draws = rng.standard_normal(n)
    electronics_draws = rng.standard_normal(n)
    p1 = arm1.power
    p2 = arm2.power
    # White noise of one-sided PSD S has per-sample variance S fs / 2
    shot_std = np.sqrt(constants.q * r * eta * (p1 + p2) * fs)
    electronics_std = det.electronics_noise * np.sqrt(fs / 2)
    current = (
        r * eta * (p1 - p2) + shot_std * shot_draws + electronics_std * electronics_draws
    )
    if det.detection_bandwidth is not None:
        current = band_limit(current, fs, det.detection_bandwidth)
    voltage = det.gain * current
    if det.lowpass_corner is not None:
        spectrum = np.fft.rfft(voltage)
        spectrum *= lowpass_response(det, np.fft.rfftfreq(n, d=1 / fs))
        voltage = np.fft.irfft(spectrum, n=n)
    return CurrentTrace(
        current=current,
        voltage=voltage,
        sample_rate=fs,
        gain=det.gain,
        lowpass_corner=det.lowpass_corner,
        metadata={"responsivity": r, "quantum_efficiency": eta},
    )
