# PyHetSpec: heterodyne spectrometer sensitivity limits in Python.
# Copyright (C) 2026  The PyHetSpec developers  (GNU GPLv3)
"""Monte-Carlo simulation of the balanced heterodyne signal chain."""

import logging
from dataclasses import dataclass, field, replace
import numpy as np
import xarray as xr
from .. import constants, convert, engine, modes
from ..exceptions import ConfigError
from . import detect, esa, fields
from .detect import (
    CurrentTrace,
    DetectorSpec,
    balanced_detect,
    electronics_noise_for_margin,
    mix_50_50,
)
from .esa import ESASpec, esa_measure, rbw_output
from .fields import ASESpec, FieldTrace, LaserSpec, ase_psd, synth_ase, synth_laser

_log = logging.getLogger(__name__)

__all__ = [
    "detect",
    "esa",
    "fields",
    "FieldTrace",
    "LaserSpec",
    "ASESpec",
    "DetectorSpec",
    "CurrentTrace",
    "ESASpec",
    "SimulationConfig",
    "synth_laser",
    "synth_ase",
    "mix_50_50",
    "balanced_detect",
    "electronics_noise_for_margin",
    "esa_measure",
    "synth_input",
    "predicted_photons_per_mode",
    "per_sideband",
    "measure_photons_per_mode",
    "simulate",
]


@dataclass(frozen=True)
class SimulationConfig:
    """One heterodyne measurement: LO, optional input, receiver and analyser.

    The LO sits at `wavelength`, which is also the baseband reference of every
    synthesized field. `signal` is an `ASESpec`, a `LaserSpec` or None.
    """

    wavelength: float
    lo: LaserSpec
    signal: object = None
    detector: DetectorSpec = field(default_factory=DetectorSpec)
    esa: ESASpec = field(default_factory=ESASpec)
    sample_rate: float = 64e6
    duration: float = 1.2e-3
    trials: int = 100
    min_shot_margin_db: float = 3.0

    def __post_init__(self):
        if not self.wavelength > 0:
            raise ConfigError("must be positive.", path="wavelength")
        if not isinstance(self.lo, LaserSpec):
            raise ConfigError("must be a laser.", path="lo")
        if self.signal is not None and not isinstance(self.signal, (ASESpec, LaserSpec)):
            raise ConfigError("must be an ASE or laser spec.", path="signal")
        if int(self.trials) != self.trials or self.trials < 1:
            raise ConfigError("must be a positive integer.", path="trials")
        highest = self.esa.center_rf + self.esa.span / 2 + self.esa.rbw
        if self.sample_rate < 2 * highest:
            raise ConfigError(
                "must exceed twice the highest analysed frequency, {:.4g} Hz.".format(
                    highest
                ),
                path="sample_rate",
            )

    @property
    def reference_frequency(self):
        return convert.wavelength_to_frequency(self.wavelength)


def synth_input(spec, duration, sample_rate, seed, reference_frequency):
    """Synthesize an input field, or a dark trace when `spec` is None or the
    input lies outside the simulation window.
    """
    if isinstance(spec, ASESpec):
        return synth_ase(spec, duration, sample_rate, seed, reference_frequency)
    n = fields.n_samples(duration, sample_rate)
    if isinstance(spec, LaserSpec):
        offset = fields.laser_offset(spec, reference_frequency)
        if np.abs(offset) + spec.dither_span / 2 < sample_rate / 2:
            return synth_laser(spec, duration, sample_rate, seed, reference_frequency)
    return FieldTrace(
        samples=np.zeros(n, dtype=complex),
        sample_rate=sample_rate,
        reference_frequency=reference_frequency,
        metadata={"source": "dark"},
    )


def predicted_photons_per_mode(config):
    """Photons per detected mode from the input PSD, averaged over the two
    optical modes at nu_LO +/- center_rf that fold onto the analysed RF bin,
    through the detection efficiency.
    """
    spec = config.signal
    nu = config.reference_frequency
    f = config.esa.center_rf
    eta = config.detector.quantum_efficiency
    if spec is None:
        return 0.0
    if isinstance(spec, ASESpec):
        psd = ase_psd(spec, np.array([nu + f, nu - f])).mean()
    else:
        # A narrow line contributes its power weighted by the RBW response,
        # spread over the noise bandwidth of both sidebands
        offset = fields.laser_offset(spec, nu)
        weight = esa.rbw_response(np.abs(offset), f, config.esa.rbw)
        psd = spec.power * weight / (2 * esa.enbw(config.esa.rbw))
    return float(modes.photons_per_mode(psd, nu, efficiency=eta))


def _trial_fields(config, seed, trial):
    """LO and input fields of one trial."""
    nu = config.reference_frequency
    lo = synth_laser(
        config.lo,
        config.duration,
        config.sample_rate,
        seed=engine.substream(seed, trial, "lo"),
        reference_frequency=nu,
    )
    signal = synth_input(
        config.signal,
        config.duration,
        config.sample_rate,
        engine.substream(seed, trial, "signal"),
        nu,
    )
    return lo, signal


def _measure_trial(config, seed, trial):
    """RBW-filtered quadrature statistics at `center_rf`, in V^2, for the LO
    alone, LO plus input and, with electronics noise, the dark receiver.
    """
    lo, signal = _trial_fields(config, seed, trial)
    dark = FieldTrace(
        samples=np.zeros_like(lo.samples),
        sample_rate=lo.sample_rate,
        reference_frequency=lo.reference_frequency,
    )
    runs = {
        "lo": (dark, lo, ("detector", 0)),
        "signal": (signal, lo, ("detector", 1)),
    }
    if config.detector.electronics_noise > 0:
        runs["dark"] = (dark, dark, ("dark",))
    stats = {}
    for name, (s, l, stream) in runs.items():
        current = balanced_detect(
            *mix_50_50(s, l), config.detector, seed=engine.substream(seed, trial, *stream)
        )
        y = rbw_output(
            current.voltage, current.sample_rate, config.esa.center_rf, config.esa.rbw
        )
        stats[name] = modes.quadrature_stats(y, reference_variance=1.0)
    return stats


def _pool(results, name):
    """Mean of equally long trials' quadrature statistics."""
    if name not in results[0]:
        return modes.QuadratureStats(var_x=0.0, var_p=0.0)
    stats = [result[name] for result in results]
    return modes.QuadratureStats(
        var_x=float(np.mean([s.var_x for s in stats])),
        var_p=float(np.mean([s.var_p for s in stats])),
        mean_x=float(np.mean([s.mean_x for s in stats])),
        mean_p=float(np.mean([s.mean_p for s in stats])),
    )


def per_sideband(stats):
    """Quadrature statistics per optical mode from statistics of the RF bin.

    The bin at `center_rf` holds the modes at nu_LO +/- center_rf, so half the
    excess over the shot variance of 1/2 belongs to each of them.
    """
    return modes.QuadratureStats(
        var_x=0.5 + (stats.var_x - 0.5) / 2,
        var_p=0.5 + (stats.var_p - 0.5) / 2,
        mean_x=stats.mean_x / np.sqrt(2),
        mean_p=stats.mean_p / np.sqrt(2),
    )


def measure_photons_per_mode(config, seed=0, workers=1):
    """Measure photons per mode as the excess noise over the LO shot floor.

    Each trial records the RBW-filtered I/Q at `center_rf` for the LO alone
    and for LO plus input, and for the dark receiver when it has electronics
    noise. The pooled LO+input quadrature statistics, in units of the LO shot
    variance after removing the dark floor, are shared between the two
    sidebands and give the measured photons per mode.
    """
    tasks = [(config, seed, trial) for trial in range(config.trials)]
    results = engine.map_ordered(_measure_trial, tasks, workers)
    dark, lo, signal = (_pool(results, name) for name in ("dark", "lo", "signal"))
    dark_power = dark.var_x + dark.var_p
    lo_power = lo.var_x + lo.var_p
    signal_power = signal.var_x + signal.var_p
    shot_variance = lo_power - dark_power
    if not shot_variance > 0:
        raise ConfigError("the LO gives no shot noise at the detection frequency.", path="lo")
    folded = modes.QuadratureStats(
        var_x=max(signal.var_x - dark.var_x, 0) / shot_variance,
        var_p=max(signal.var_p - dark.var_p, 0) / shot_variance,
        mean_x=signal.mean_x / np.sqrt(shot_variance),
        mean_p=signal.mean_p / np.sqrt(shot_variance),
    )
    stats = per_sideband(folded)
    # Each check allows five Monte-Carlo standard errors of the estimate
    samples = fields.n_samples(config.duration, config.sample_rate) * config.trials
    independent = samples * esa.enbw(config.esa.rbw) / config.sample_rate
    spread = np.hypot(signal_power, lo_power) / shot_variance / np.sqrt(independent)
    var_mean = max((folded.var_x + folded.var_p) / 2, spread)
    measured = modes.photons_from_variance(
        stats,
        symmetry_tolerance=max(0.1, 10 * spread / var_mean),
        mean_tolerance=max(
            0.1, 5 * np.sqrt(signal_power / (shot_variance * independent * var_mean))
        ),
        clamp_tolerance=5 * spread,
    )
    # LO floor over the dark floor, as read off the analyser
    shot_margin_db = (
        float(convert.ratio_to_db(lo_power / dark_power))
        if dark_power > 0
        else float("inf")
    )
    shot_noise_limited = shot_margin_db >= config.min_shot_margin_db
    if not shot_noise_limited:
        _log.warning(
            "Shot floor is only %.2f dB above the electronics floor; the "
            "measurement is not shot-noise limited.",
            shot_margin_db,
        )
    load = config.esa.load_impedance
    # Electrical powers in dBm, 2 <|y|^2> / R
    return {
        "predicted_photons_per_mode": predicted_photons_per_mode(config),
        "measured_photons_per_mode": measured,
        "db_above_shot": float(modes.db_above_shot(measured)),
        "db_above_floor": float(convert.ratio_to_db(signal_power / lo_power)),
        "shot_over_electronics_db": shot_margin_db,
        "shot_noise_limited": bool(shot_noise_limited),
        "var_x": stats.var_x,
        "var_p": stats.var_p,
        "dark_power_dbm": float(convert.watts_to_dbm(2 * dark_power / load)),
        "floor_power_dbm": float(convert.watts_to_dbm(2 * lo_power / load)),
        "signal_power_dbm": float(convert.watts_to_dbm(2 * signal_power / load)),
        "trials": int(config.trials),
        "seed": int(seed),
    }


def _spectrum_trial(config, seed, trial):
    """Linear ESA readings (W) of one trial's LO+input sweep."""
    swept = replace(config, duration=max(config.duration, config.esa.sweep_time))
    lo, signal = _trial_fields(swept, seed, trial)
    current = balanced_detect(
        *mix_50_50(signal, lo),
        config.detector,
        seed=engine.substream(seed, trial, "detector", 0),
    )
    return convert.dbm_to_watts(esa_measure(current, config.esa).values)


def simulate(config, seed=0, workers=1):
    """Trial-averaged ESA sweep of the configured measurement.

    Returns the `RfSpectrum` (an `xarray.DataArray` of dBm over RF frequency)
    and the `measure_photons_per_mode` result.
    """
    tasks = [(config, seed, trial) for trial in range(config.trials)]
    readings = np.mean(engine.map_ordered(_spectrum_trial, tasks, workers), axis=0)
    spectrum = xr.DataArray(
        convert.watts_to_dbm(readings),
        dims=["rf_frequency"],
        coords={"rf_frequency": esa.sweep_frequencies(config.esa)},
        name="power_dbm",
        attrs={
            "units": "dBm",
            "rbw": config.esa.rbw,
            "vbw": config.esa.vbw,
            "rbw_shape": "gaussian",
            "vbw_mode": "single-pole linear power",
            "detector": config.esa.detector,
            "load_impedance": config.esa.load_impedance,
            "per_point_integration": config.esa.per_point_integration,
            "trials": int(config.trials),
            "seed": int(seed),
        },
    )
    return spectrum, measure_photons_per_mode(config, seed=seed, workers=workers)
