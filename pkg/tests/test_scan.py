import numpy as np, pytest, xarray as xr, PyHetSpec as pyhs
from scipy import special
from PyHetSpec import constants, convert, scan, units
from PyHetSpec.chain import ASESpec, LaserSpec
from PyHetSpec.exceptions import ConfigError, DomainError
from PyHetSpec.sources import DetectorNoiseModel

wavelength = constants.reference_wavelength
nu = convert.wavelength_to_frequency(wavelength)
step = 0.1e-12
lo = LaserSpec(power=1e-3)
plan = scan.ScanPlan(start=wavelength - step, stop=wavelength + step, step=step, lo=lo)
snspd = DetectorNoiseModel("snspd-filtered", name="SNSPD")
line = LaserSpec(
    power=convert.dbm_to_watts(-89.0), linewidth=100e3, wavelength=wavelength
)


def test_plan():
    assert np.allclose(scan.scan_grid(plan), wavelength + step * np.array([-1, 0, 1]), rtol=0, atol=1e-20)
    grid = scan.scan_grid(scan.ScanPlan(start=1550.49e-9, stop=1550.51e-9, step=1e-12, lo=lo))
    assert grid.size == 21
    dithered = LaserSpec(power=1e-3, dither_span=1e6, dither_rate=1e3, detuning=5.0)
    assert scan.ScanPlan(1e-6, 2e-6, 1e-7, lo=dithered).step_lo.dither_span == 0
    assert scan.ScanPlan(1e-6, 2e-6, 1e-7, lo=dithered).step_lo.detuning == 0
    kept = scan.ScanPlan(1e-6, 2e-6, 1e-7, lo=dithered, disable_dither=False)
    assert kept.step_lo.dither_span == 1e6
    assert plan.step_esa.span == 0 and plan.step_esa.sweep_points == 1
    for kwargs in [
        dict(start=2e-6, stop=1e-6, step=1e-9),
        dict(start=1e-6, stop=2e-6, step=0.0),
        dict(start=1e-6, stop=2e-6, step=1e-9, trials=0),
        dict(start=1e-6, stop=2e-6, step=1e-9, snspd=DetectorNoiseModel("heterodyne")),
    ]:
        with pytest.raises(ConfigError):
            scan.ScanPlan(lo=lo, **kwargs)


def test_resolution():
    assert scan.resolution_from_detection(6e6, 1e6) == 13e6
    assert np.isclose(scan.resolution_from_detection(6e6, 1e6, 0.0, wavelength) * 1e12, 0.104, atol=1e-3)
    assert scan.resolution_from_detection(6e6, 1e6, 50e6) == 50e6


def test_calibration_floor():
    # With no input the calibrated floor is one photon per mode
    result = scan.run_scan(plan, None, seed=0)
    assert isinstance(result, xr.Dataset)
    assert result.attrs["instrument"] == "heterodyne"
    assert np.isclose(result.attrs["floor_psd"], constants.h * nu, rtol=1e-9, atol=0)
    assert np.allclose(result.photons_per_mode.values, 1.0, atol=0.25)
    # Gain 1e4 through a 10-MHz single pole read at 6 MHz
    gain_squared = 1e8 / (1 + 0.6 ** 2)
    responsivity = constants.q / (constants.h * nu)
    assert np.isclose(
        scan.calibration_factor(plan, nu),
        50 / (gain_squared * pyhs.chain.esa.enbw(1e6) * 2 * responsivity ** 2 * 1e-3),
        rtol=1e-9,
        atol=0,
    )


def test_scan_is_deterministic():
    spec = ASESpec(center_wavelength=wavelength, bandwidth=1e-9, psd=2 * constants.h * nu)
    first = scan.run_scan(plan, spec, seed=3)
    assert first.identical(scan.run_scan(plan, spec, seed=3))
    assert first.identical(scan.run_scan(plan, spec, seed=3, workers=2))
    assert not np.array_equal(first.psd.values, scan.run_scan(plan, spec, seed=4).psd.values)


def test_scan_errors():
    with pytest.raises(ConfigError) as error:
        scan.run_scan(plan, LaserSpec(power=1e-6))
    assert error.value.path == "input.wavelength"
    with pytest.raises(ConfigError):
        scan.run_scan(plan, "laser")


def test_scan_warnings():
    coarse = scan.ScanPlan(
        start=wavelength - step, stop=wavelength + step, step=step, lo=LaserSpec(power=1e-3, linewidth=50e6)
    )
    result = scan.run_scan(coarse, line, seed=0)
    assert len(result.attrs["warnings"]) == 2


def test_true_spectrum():
    grid = wavelength + np.arange(-400, 401) * 0.1e-12
    spectrum = scan.true_spectrum(line, grid)
    assert spectrum.dims == ("wavelength",)
    bins = convert.bandwidth_freq_from_wl(0.1e-12, grid)
    assert np.isclose(np.sum(spectrum.values * bins), line.power, rtol=0.01, atol=0)
    assert int(np.argmax(spectrum.values)) == 400
    delta = scan.true_spectrum(LaserSpec(power=1e-6, wavelength=wavelength), grid)
    assert np.count_nonzero(delta.values) == 1
    flat = scan.true_spectrum(ASESpec(center_wavelength=wavelength, bandwidth=1e-9, psd=1e-18), grid)
    assert np.allclose(flat.values, 1e-18, rtol=1e-6, atol=0)
    assert np.all(scan.true_spectrum(None, grid).values == 0)
    with pytest.raises(DomainError):
        scan.true_spectrum(line, grid[::-1])


def test_grating_osa():
    grid = wavelength + np.arange(-400, 401) * 0.1e-12
    flat = scan.true_spectrum(ASESpec(center_wavelength=wavelength, bandwidth=1e-9, psd=1e-18), grid)
    osa = scan.grating_osa_emulate(flat, noise_floor_dbm=-200)
    res_hz = convert.bandwidth_freq_from_wl(20e-12, wavelength)
    # A flat PSD reads its PSD times the resolution
    assert np.isclose(osa.power_dbm.values[2], convert.watts_to_dbm(1e-18 * res_hz), atol=0.01)
    assert osa.attrs["lineshape"] == "gaussian"
    assert osa.attrs["seed"] == -1
    dark = scan.grating_osa_emulate(scan.true_spectrum(None, grid))
    assert np.allclose(dark.power_dbm.values, -90)
    # A delta-like line broadens to the resolution
    fine = scan.grating_osa_emulate(scan.true_spectrum(line, grid), noise_floor_dbm=-200, sampling=0.1e-12)
    width = scan.fwhm(fine.wavelength.values, fine.psd.values)
    assert np.isclose(width, 20e-12, rtol=0.05)
    uneven = xr.DataArray(np.ones(4), dims=["wavelength"], coords={"wavelength": [1.0, 2.0, 4.0, 8.0]})
    with pytest.raises(DomainError):
        scan.grating_osa_emulate(uneven)


def test_compare_narrow_laser():
    result = scan.run_scan(plan, line, seed=0)
    osa = scan.emulate_osa_for_plan(plan, line)
    comparison = pyhs.compare_sensitivity(result, osa)
    het = comparison["instruments"]["heterodyne"]
    assert het["detects"]
    assert het["margin_db"] > 3
    grating = comparison["instruments"]["grating-osa"]
    assert grating["detects"]
    assert np.isclose(grating["margin_db"], 0.7, atol=0.3)
    assert comparison["winner"] == "heterodyne"
    with_snspd = pyhs.compare_sensitivity(result, osa, snspd=snspd)
    assert with_snspd["instruments"]["SNSPD"]["detects"]


def test_compare_broadband_ase():
    psd = units.parse_psd("-89.8dBm/20pm", wavelength)
    spec = ASESpec(center_wavelength=wavelength, bandwidth=1e-9, psd=psd)
    assert np.isclose(pyhs.photons_per_mode(psd, nu), 0.003, rtol=0.15)
    result = scan.run_scan(plan, spec, seed=1)
    osa = scan.emulate_osa_for_plan(plan, spec)
    comparison = pyhs.compare_sensitivity(result, osa, snspd=snspd)
    instruments = comparison["instruments"]
    assert not instruments["heterodyne"]["detects"]
    assert instruments["grating-osa"]["detects"]
    assert instruments["SNSPD"]["detects"]
    assert comparison["winner"] == "SNSPD"
    assert np.isclose(comparison["signal_bandwidth"], spec.bandwidth_hz)


def test_compare_dark():
    result = scan.run_scan(plan, None, seed=2)
    osa = scan.emulate_osa_for_plan(plan, None)
    comparison = pyhs.compare_sensitivity(result, osa, snspd=snspd)
    assert not any(row["detects"] for row in comparison["instruments"].values())
    assert comparison["winner"] is None


def test_shape_metrics():
    x = np.linspace(-10, 10, 201)
    # erf step with a 10-90 % width of 2
    y = 0.5 * (1 + special.erf(x / (2 / (2 * special.erfinv(0.8)))))
    assert np.isclose(scan.edge_width(x, y), 2.0, rtol=0.02)
    assert np.isclose(scan.edge_width(x, y[::-1]), 2.0, rtol=0.02)
    gauss = np.exp(-(x ** 2) / 2)
    assert np.isclose(scan.fwhm(x, gauss), 2 * np.sqrt(2 * np.log(2)), rtol=0.01)
    lorentz = 3 / (1 + (2 * (x - 0.5) / 1.5) ** 2) + 0.2
    assert np.isclose(scan.lorentzian_fwhm(x, lorentz), 1.5, rtol=0.01)
    with pytest.raises(DomainError):
        scan.edge_width(x, np.ones_like(x))


def test_line_reads_its_power():
    quiet = LaserSpec(power=convert.dbm_to_watts(-70.0), linewidth=10e3, wavelength=wavelength)
    result = scan.run_scan(plan, quiet, seed=5)
    assert np.isclose(result.attrs["noise_bandwidth_hz"], 2 * pyhs.chain.esa.enbw(1e6))
    assert np.isclose(result.power_dbm.values[1], -70.0, atol=0.5)
    # The raw analyser reading is kept alongside
    assert result.rf_power_dbm.values[1] > result.rf_power_dbm.values[0] + 20


def test_input_shift_moves_scan():
    spec = ASESpec(center_wavelength=wavelength, bandwidth=1e-9, psd=1000 * constants.h * nu)
    louder = ASESpec(
        center_wavelength=wavelength, bandwidth=1e-9, psd=10 ** 0.6 * spec.psd
    )
    quiet = scan.run_scan(plan, spec, seed=6)
    loud = scan.run_scan(plan, louder, seed=6)
    floor = quiet.attrs["floor_psd"]
    shift = convert.ratio_to_db(np.mean(loud.psd.values - floor) / np.mean(quiet.psd.values - floor))
    assert np.isclose(shift, 6.0, atol=0.3)


def test_broadband_counts_per_mode():
    spec = ASESpec(center_wavelength=wavelength, bandwidth=1e-9, psd=0.7 * constants.h * nu)
    result = scan.run_scan(plan, spec, seed=7)
    # Both sidebands fill the analyser bin, but each optical mode holds 0.7
    assert np.allclose(result.photons_per_mode.values, 1.7, atol=0.2)
    osa = scan.emulate_osa_for_plan(plan, spec)
    het = pyhs.compare_sensitivity(result, osa)["instruments"]["heterodyne"]
    assert het["detects"] == pyhs.sources.verdict(0.7, DetectorNoiseModel("heterodyne")).detectable
    assert not het["detects"]


def test_detection_bandwidth_covers_reading():
    narrow = pyhs.chain.DetectorSpec(detection_bandwidth=5e6)
    with pytest.raises(ConfigError) as error:
        scan.ScanPlan(start=wavelength - step, stop=wavelength + step, step=step, lo=lo, detector=narrow)
    assert error.value.path == "detector.detection_bandwidth"
    wide = pyhs.chain.DetectorSpec(detection_bandwidth=20e6)
    assert scan.ScanPlan(wavelength - step, wavelength + step, step, lo=lo, detector=wide).detector is wide
