# PyHetSpec: heterodyne spectrometer sensitivity limits in Python.
# Copyright (C) 2026  The PyHetSpec developers  (GNU GPLv3)
"""Sweep the LO to build an optical spectrum and compare it with a grating OSA."""

import logging
from dataclasses import dataclass, field, replace
import numpy as np
import xarray as xr
from scipy import ndimage, optimize
from . import constants, convert, engine, modes, report
from .chain import SimulationConfig, detect, esa, fields, synth_input
from .chain.detect import DetectorSpec, balanced_detect, mix_50_50
from .chain.esa import ESASpec, esa_measure
from .chain.fields import ASESpec, LaserSpec
from .exceptions import ConfigError, DomainError
from .sources import DetectorNoiseModel, verdict

_log = logging.getLogger(__name__)

__all__ = [
    "ScanPlan",
    "resolution_from_detection",
    "scan_grid",
    "calibration_factor",
    "run_scan",
    "true_spectrum",
    "grating_osa_emulate",
    "emulate_osa_for_plan",
    "compare_sensitivity",
    "edge_width",
    "fwhm",
    "lorentzian_fwhm",
]

# FWHM of a Gaussian in units of its standard deviation
_GAUSS_FWHM = 2 * np.sqrt(2 * np.log(2))

CALIBRATION = (
    "S = S_floor + (P_rf R_load / (G^2 |H(f_rf)|^2 ENBW 2 R^2 eta^2 P_LO) - S_floor) / 2"
)


@dataclass(frozen=True)
class ScanPlan:
    """An LO sweep from `start` to `stop` (m) in steps of `step` (m).

    Every step is a zero-span, single-point ESA reading at `esa.center_rf`,
    averaged over a dwell of `esa.per_point_integration` and over `trials`.
    The `lo` template's wavelength and detuning are replaced at each step, and
    its dither is removed when `disable_dither` is set.
    """

    start: float
    stop: float
    step: float
    lo: LaserSpec
    detector: DetectorSpec = field(default_factory=DetectorSpec)
    esa: ESASpec = field(
        default_factory=lambda: ESASpec(per_point_integration=1e-3)
    )
    sample_rate: float = 64e6
    trials: int = 1
    disable_dither: bool = True
    osa_resolution: float = constants.reference_resolution
    osa_noise_floor_dbm: float = -90.0
    snspd: DetectorNoiseModel = None

    def __post_init__(self):
        if not self.start > 0:
            raise ConfigError("must be positive.", path="start")
        if not self.stop > self.start:
            raise ConfigError("must be longer than start.", path="stop")
        if not self.step > 0:
            raise ConfigError("must be positive.", path="step")
        if int(self.trials) != self.trials or self.trials < 1:
            raise ConfigError("must be a positive integer.", path="trials")
        if not self.osa_resolution > 0:
            raise ConfigError("must be positive.", path="osa_resolution")
        if self.snspd is not None and self.snspd.kind != "snspd-filtered":
            raise ConfigError("must be an snspd-filtered detector.", path="snspd")
        bandwidth = self.detector.detection_bandwidth
        if bandwidth is not None and bandwidth < self.esa.center_rf + self.esa.rbw / 2:
            raise ConfigError(
                "must cover the detection frequency.", path="detector.detection_bandwidth"
            )

    @property
    def center_wavelength(self):
        return (self.start + self.stop) / 2

    @property
    def step_esa(self):
        return replace(self.esa, span=0.0, sweep_points=1, detector="average")

    @property
    def step_lo(self):
        lo = replace(self.lo, wavelength=None, detuning=0.0)
        if self.disable_dither:
            lo = replace(lo, dither_span=0.0, dither_rate=0.0)
        return lo


def resolution_from_detection(center_rf, rbw, linewidth=0.0, wavelength=None):
    """Effective resolution of a heterodyne reading.

    Both RF sidebands, ν_LO ± f_rf, are detected, each over the RBW, so a
    reading covers 2 (f_rf + rbw / 2) unless the LO linewidth is wider. Returns
    Hz, or m when `wavelength` is given.
    """
    resolution = np.maximum(linewidth, 2 * (center_rf + rbw / 2))
    if wavelength is None:
        return resolution
    return convert.bandwidth_wl_from_freq(resolution, wavelength)


def scan_grid(plan):
    """Wavelengths (m) at which the scan registers its readings."""
    n = int(np.floor((plan.stop - plan.start) / plan.step + 1e-6)) + 1
    return plan.start + plan.step * np.arange(n)


def calibration_factor(plan, frequency):
    """Optical PSD (W/Hz), summed over both sidebands, per W of RF reading with
    the LO at `frequency` (Hz).
    """
    det = plan.detector
    r = detect.responsivity(det, frequency)
    eta = det.quantum_efficiency
    if not eta > 0:
        raise ConfigError("must be positive to calibrate a scan.", path="detector.quantum_efficiency")
    gain = detect.transfer_gain(det, plan.esa.center_rf)
    return plan.esa.load_impedance / (
        gain ** 2 * esa.enbw(plan.esa.rbw) * 2 * r ** 2 * eta ** 2 * plan.lo.power
    )


def _scan_step(plan, spec, seed, k, wavelength):
    """Mean RF power (W) of step `k`, with the LO `center_rf` below `wavelength`."""
    lo_frequency = convert.wavelength_to_frequency(wavelength) - plan.esa.center_rf
    config = SimulationConfig(
        wavelength=constants.c / lo_frequency,
        lo=plan.step_lo,
        signal=spec,
        detector=plan.detector,
        esa=plan.step_esa,
        sample_rate=plan.sample_rate,
        duration=plan.esa.per_point_integration,
        trials=plan.trials,
    )
    readings = []
    for trial in range(plan.trials):
        lo = fields.synth_laser(
            config.lo,
            config.duration,
            config.sample_rate,
            seed=engine.substream(seed, k, trial, "lo"),
            reference_frequency=lo_frequency,
        )
        signal = synth_input(
            config.signal,
            config.duration,
            config.sample_rate,
            engine.substream(seed, k, trial, "signal"),
            lo_frequency,
        )
        current = balanced_detect(
            *mix_50_50(signal, lo),
            config.detector,
            seed=engine.substream(seed, k, trial, "detector"),
        )
        reading = esa_measure(current, config.esa).values[0]
        readings.append(convert.dbm_to_watts(reading))
    return float(np.mean(readings))


def _signal_bandwidth(spec):
    """Optical bandwidth (Hz) of an input spec."""
    if spec is None:
        return 0.0
    if isinstance(spec, ASESpec):
        return spec.bandwidth_hz
    return spec.linewidth + spec.dither_span


def _scan_warnings(plan, spec, step_hz):
    warnings = []
    if step_hz < plan.lo.linewidth:
        warnings.append(
            "scan step of {:.4g} Hz is finer than the {:.4g} Hz LO linewidth".format(
                step_hz, plan.lo.linewidth
            )
        )
    if isinstance(spec, ASESpec) and spec.shape == "tophat" and spec.edge_width < plan.step:
        warnings.append(
            "ASE edges of {:.4g} pm are narrower than the {:.4g} pm step".format(
                spec.edge_width * 1e12, plan.step * 1e12
            )
        )
    elif isinstance(spec, LaserSpec) and _signal_bandwidth(spec) < step_hz:
        warnings.append(
            "laser line of {:.4g} Hz is narrower than the {:.4g} Hz step".format(
                _signal_bandwidth(spec), step_hz
            )
        )
    for message in warnings:
        _log.warning("Scan %s.", message)
    return warnings


def run_scan(plan, spec, seed=0, workers=1):
    """Scan the LO across the plan and assemble the heterodyne optical spectrum.

    Each reading is converted to a folded optical PSD with the known LO power
    and receiver constants, S = P_rf R_load / (G^2 |H(f_rf)|^2 ENBW 2 R^2 eta^2
    P_LO), and registered at ν_LO + center_rf. The RF bin holds both sidebands,
    ν_LO ± center_rf, so half the excess over the floor h ν / eta (1 + S_e /
    S_shot) is assigned to each: a spectrally flat input of n photons per mode
    reads n + 1, and `power_dbm` is the PSD over the noise bandwidth of both
    sidebands, 2 ENBW, so a line inside the RBW reads its power.
    """
    if isinstance(spec, LaserSpec) and spec.wavelength is None:
        raise ConfigError("a scanned laser needs an absolute wavelength.", path="input.wavelength")
    if spec is not None and not isinstance(spec, (ASESpec, LaserSpec)):
        raise ConfigError("must be an ASE or laser spec.", path="input")
    grid = scan_grid(plan)
    frequency = convert.wavelength_to_frequency(grid)
    step_hz = convert.bandwidth_freq_from_wl(plan.step, plan.center_wavelength)
    warnings = _scan_warnings(plan, spec, step_hz)
    _log.info("Scanning %d steps of %.4g pm.", grid.size, plan.step * 1e12)
    tasks = [(plan, spec, seed, k, wavelength) for k, wavelength in enumerate(grid)]
    rf_power = np.array(engine.map_ordered(_scan_step, tasks, workers))
    folded = rf_power * calibration_factor(plan, frequency - plan.esa.center_rf)
    eta = plan.detector.quantum_efficiency
    center_frequency = convert.wavelength_to_frequency(plan.center_wavelength)
    shot = detect.shot_noise_psd(plan.lo.power, plan.detector, center_frequency)
    floor_psd = (
        constants.h * center_frequency / eta
        * (1 + plan.detector.electronics_noise ** 2 / shot)
    )
    psd = floor_psd + (folded - floor_psd) / 2
    noise_bandwidth = 2 * esa.enbw(plan.esa.rbw)
    resolution_hz = resolution_from_detection(
        plan.esa.center_rf, plan.esa.rbw, plan.lo.linewidth
    )
    resolution = convert.bandwidth_wl_from_freq(resolution_hz, plan.center_wavelength)
    return xr.Dataset(
        {
            "psd": ("wavelength", psd, {"units": "W/Hz"}),
            "power_dbm": (
                "wavelength",
                convert.watts_to_dbm(psd * noise_bandwidth),
                {"units": "dBm per double-sideband noise bandwidth"},
            ),
            "photons_per_mode": (
                "wavelength",
                modes.photons_per_mode(psd, frequency, efficiency=eta),
                {"units": "photons"},
            ),
            "rf_power_dbm": ("wavelength", convert.watts_to_dbm(rf_power), {"units": "dBm"}),
        },
        coords={"wavelength": ("wavelength", grid, {"units": "m"})},
        attrs={
            "instrument": "heterodyne",
            "resolution": float(resolution),
            "resolution_hz": float(resolution_hz),
            "noise_bandwidth_hz": float(noise_bandwidth),
            "seed": int(seed),
            "plan": report.as_yaml(plan),
            "floor_psd": float(floor_psd),
            "efficiency": float(eta),
            "calibration": CALIBRATION,
            "registration": "upper sideband, nu_LO + center_rf",
            "lineshape": "gaussian rbw, double sideband",
            "signal_bandwidth": float(_signal_bandwidth(spec)),
            "warnings": warnings,
        },
    )


def _lorentzian_cdf(frequency, center, width):
    return 0.5 + np.arctan((frequency - center) / (width / 2)) / np.pi


def true_spectrum(spec, wavelength):
    """The PSD (W/Hz) of an input spec on a wavelength grid, as a `Spectrum`.

    Laser lines are Lorentzians of width linewidth + dither span integrated over
    each grid bin; a line with no width falls into the nearest bin.
    """
    wavelength = np.asarray(wavelength, dtype=float)
    if wavelength.size < 2 or np.any(np.diff(wavelength) <= 0):
        raise DomainError("The wavelength grid must increase monotonically.")
    frequency = convert.wavelength_to_frequency(wavelength)
    if spec is None:
        psd = np.zeros_like(frequency)
    elif isinstance(spec, ASESpec):
        psd = fields.ase_psd(spec, frequency)
    else:
        if spec.wavelength is None:
            raise ConfigError("a laser spectrum needs an absolute wavelength.", path="wavelength")
        center = convert.wavelength_to_frequency(spec.wavelength) + spec.detuning
        # Bin edges in frequency at the midpoints between grid points
        midpoints = (frequency[1:] + frequency[:-1]) / 2
        edges = np.concatenate(
            (
                [frequency[0] + (frequency[0] - midpoints[0])],
                midpoints,
                [frequency[-1] - (midpoints[-1] - frequency[-1])],
            )
        )
        bin_width = edges[:-1] - edges[1:]
        width = spec.linewidth + spec.dither_span
        if width > 0:
            fraction = _lorentzian_cdf(edges[:-1], center, width) - _lorentzian_cdf(
                edges[1:], center, width
            )
        else:
            fraction = np.zeros_like(frequency)
            inside = (center <= edges[0]) & (center >= edges[-1])
            if inside:
                fraction[np.argmin(np.abs(frequency - center))] = 1.0
        psd = spec.power * fraction / bin_width
    return xr.DataArray(
        psd,
        dims=["wavelength"],
        coords={"wavelength": wavelength},
        name="psd",
        attrs={"units": "W/Hz"},
    )


def grating_osa_emulate(
    spectrum, resolution=constants.reference_resolution, noise_floor_dbm=-90.0, sampling=None
):
    """What a grating OSA of `resolution` (m) would display for `spectrum`.

    The wavelength PSD is convolved with a unit-area Gaussian of FWHM
    `resolution` and multiplied by the resolution, so a flat spectrum reads its
    PSD times the resolution. The fixed noise floor in dBm per resolution is
    added and the result is sampled every `sampling` (m, default the
    resolution).
    """
    if not resolution > 0:
        raise DomainError("Resolution must be positive.")
    wavelength = spectrum["wavelength"].values
    grid_step = np.diff(wavelength)
    if not np.allclose(grid_step, grid_step[0], rtol=1e-6, atol=0):
        raise DomainError("The true spectrum needs a uniform wavelength grid.")
    grid_step = grid_step[0]
    psd_wl = convert.psd_per_hz_to_per_m(spectrum.values, wavelength)
    smoothed = ndimage.gaussian_filter1d(
        psd_wl, resolution / _GAUSS_FWHM / grid_step, mode="constant"
    )
    floor = convert.dbm_to_watts(noise_floor_dbm)
    power = smoothed * resolution + floor
    if sampling is None:
        sampling = resolution
    n = int(np.floor((wavelength[-1] - wavelength[0]) / sampling + 1e-6)) + 1
    sampled = wavelength[0] + sampling * np.arange(n)
    power = np.interp(sampled, wavelength, power)
    resolution_hz = convert.bandwidth_freq_from_wl(resolution, sampled)
    psd = power / resolution_hz
    return xr.Dataset(
        {
            "psd": ("wavelength", psd, {"units": "W/Hz"}),
            "power_dbm": (
                "wavelength",
                convert.watts_to_dbm(power),
                {"units": "dBm per resolution"},
            ),
            "photons_per_mode": (
                "wavelength",
                modes.photons_per_mode(psd, convert.wavelength_to_frequency(sampled)),
                {"units": "photons"},
            ),
        },
        coords={"wavelength": ("wavelength", sampled, {"units": "m"})},
        attrs={
            "instrument": "grating-osa",
            "resolution": float(resolution),
            "resolution_hz": float(
                convert.bandwidth_freq_from_wl(resolution, np.mean(sampled))
            ),
            "seed": -1,
            "noise_floor_dbm": float(noise_floor_dbm),
            "floor_psd": float(floor / np.mean(resolution_hz)),
            "lineshape": "gaussian",
            "warnings": [],
        },
    )


def _margin_db(ratio):
    return float(convert.ratio_to_db(ratio)) if ratio > 0 else -np.inf


def compare_sensitivity(
    scan_result, osa_result, snspd=None, signal_bandwidth=None, threshold=10.0
):
    """Which instrument detects the scanned input, and with what margin.

    The heterodyne scan is judged by the source verdict engine on its peak
    photons per mode above the floor, detecting from an SNR of one. The OSA
    detects when its peak signal above the noise floor reaches the floor.
    The filtered SNSPD is judged by the source verdict engine on the photons
    per filter mode that the OSA signal implies. Margins are in dB above each
    instrument's detection boundary; the winner is the detecting instrument
    with the largest margin, or None.
    """
    wavelength = float(np.mean(scan_result["wavelength"].values))
    frequency = convert.wavelength_to_frequency(wavelength)
    if signal_bandwidth is None:
        signal_bandwidth = scan_result.attrs.get("signal_bandwidth", 0.0)
    eta = scan_result.attrs.get("efficiency", 1.0)
    quantum = constants.h * frequency

    floor_psd = scan_result.attrs["floor_psd"]
    excess = float(np.max(scan_result["psd"].values)) - floor_psd
    het = verdict(
        max(float(modes.photons_per_mode(excess, frequency, efficiency=eta)), 0.0),
        DetectorNoiseModel("heterodyne"),
    )
    instruments = {
        "heterodyne": {
            "min_detectable_psd": quantum / eta,
            "margin_db": _margin_db(het.snr),
            "detects": het.detectable,
            "rationale": het.rationale,
        }
    }

    floor_w = convert.dbm_to_watts(osa_result.attrs["noise_floor_dbm"])
    osa_power = convert.dbm_to_watts(osa_result["power_dbm"].values)
    osa_signal = max(float(np.max(osa_power - floor_w)), 0.0)
    res_hz = osa_result.attrs["resolution_hz"]
    osa_margin = _margin_db(osa_signal / floor_w)
    bandwidth = signal_bandwidth if signal_bandwidth > 0 else res_hz
    instruments["grating-osa"] = {
        "min_detectable_psd": floor_w / min(bandwidth, res_hz),
        "margin_db": osa_margin,
        "detects": bool(osa_margin >= 0),
        "rationale": "peak {:.3g} W above a {:.3g} W floor".format(osa_signal, floor_w),
    }

    if snspd is not None:
        filter_hz = convert.bandwidth_freq_from_wl(snspd.filter_bandwidth, wavelength)
        source_n = osa_signal * snspd.efficiency / (quantum * filter_hz)
        result = verdict(source_n, snspd, threshold=threshold)
        instruments[snspd.label] = {
            "min_detectable_psd": threshold
            * result.detector_noise_per_mode
            * quantum
            / snspd.efficiency
            * max(1.0, filter_hz / bandwidth),
            "margin_db": _margin_db(result.snr / threshold),
            "detects": result.detectable,
            "rationale": result.rationale,
        }

    detecting = [name for name, row in instruments.items() if row["detects"]]
    winner = max(detecting, key=lambda name: instruments[name]["margin_db"], default=None)
    return {
        "wavelength": wavelength,
        "signal_bandwidth": float(signal_bandwidth),
        "instruments": instruments,
        "winner": winner,
    }


def _crossing(x, y, level, start, stop, step):
    """Interpolated x where y first reaches `level` walking from `start`."""
    for i in range(start, stop, step):
        if y[i] >= level:
            if i == start:
                return x[i]
            j = i - step
            return x[j] + (level - y[j]) * (x[i] - x[j]) / (y[i] - y[j])
    raise DomainError("The trace never reaches {:.3g}.".format(level))


def edge_width(x, values, low=0.1, high=0.9):
    """10-90 % width of a single rising or falling edge.

    The step runs between the medians of the first and last quarters of
    `values`; the width is in the units of `x`.
    """
    x = np.asarray(x, dtype=float)
    y = np.asarray(values, dtype=float)
    if y.size < 4:
        raise DomainError("An edge needs at least four points.")
    quarter = y.size // 4
    start, end = np.median(y[:quarter]), np.median(y[-quarter:])
    if start > end:
        x, y = x[::-1], y[::-1]
        start, end = end, start
    if not end > start:
        raise DomainError("The trace has no edge.")
    y = (y - start) / (end - start)
    x_low = _crossing(x, y, low, 0, y.size, 1)
    x_high = _crossing(x, y, high, 0, y.size, 1)
    return float(np.abs(x_high - x_low))


def fwhm(x, values, baseline=0.0):
    """Full width at half maximum of a single peak above `baseline`."""
    x = np.asarray(x, dtype=float)
    y = np.asarray(values, dtype=float) - baseline
    peak = int(np.argmax(y))
    half = y[peak] / 2
    # Walk outwards from the peak on the inverted trace
    left = _crossing(x, -y, -half, peak, -1, -1)
    right = _crossing(x, -y, -half, peak, y.size, 1)
    return float(np.abs(right - left))


def _lorentzian(x, amplitude, center, width, offset):
    return amplitude / (1 + (2 * (x - center) / width) ** 2) + offset


def lorentzian_fwhm(x, values):
    """FWHM of a least-squares Lorentzian fit to a single peak."""
    x = np.asarray(x, dtype=float)
    y = np.asarray(values, dtype=float)
    if y.size < 5:
        raise DomainError("A Lorentzian fit needs at least five points.")
    # Fit in units of the grid step about the peak
    peak = int(np.argmax(y))
    scale = np.abs(x[1] - x[0])
    u = (x - x[peak]) / scale
    guess = [y[peak] - np.min(y), 0.0, fwhm(u, y, baseline=np.min(y)), np.min(y)]
    params, _ = optimize.curve_fit(_lorentzian, u, y, p0=guess, maxfev=10000)
    return float(np.abs(params[2]) * scale)


def emulate_osa_for_plan(plan, spec, margin=0.0):
    """The grating OSA trace of `spec` over the plan's range widened by `margin`
    (m) on each side, sampled at the plan's step.

    The true spectrum is rendered, bin-integrated, on a grid of a twentieth of
    the OSA resolution padded by three resolutions so the edges of the range
    see their neighbours.
    """
    fine = plan.osa_resolution / 20
    margin = np.ceil(margin / plan.step) * plan.step
    start, stop = plan.start - margin, plan.stop + margin
    pad = np.ceil(3 * plan.osa_resolution / plan.step) * plan.step
    n = int(np.floor((stop - start + 2 * pad) / fine + 1e-6)) + 1
    grid = start - pad + fine * np.arange(n)
    result = grating_osa_emulate(
        true_spectrum(spec, grid),
        resolution=plan.osa_resolution,
        noise_floor_dbm=plan.osa_noise_floor_dbm,
        sampling=plan.step,
    )
    tolerance = plan.step / 2
    return result.sel(wavelength=slice(start - tolerance, stop + tolerance))
