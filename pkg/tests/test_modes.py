import numpy as np, pytest, PyHetSpec as pyhs
from PyHetSpec import constants, convert, modes
from PyHetSpec.exceptions import AssumptionViolation, DomainError

nu = convert.wavelength_to_frequency(constants.reference_wavelength)


def test_mode_count():
    assert modes.modes(1e3, 1.0) == 1000
    assert modes.mode_count(modes.ModeWindow(1e3, 1.0, polarizations=2)) == 2000
    assert modes.mode_count(modes.ModeWindow(0.0, 1.0)) == 0
    window = modes.ModeWindow.from_wavelength(1e-9, constants.reference_wavelength, 1.0)
    assert np.isclose(modes.mode_count(window), 1.2478e11, rtol=5e-3)
    assert modes.round_to_decade(modes.mode_count(window)) == 1e11


def test_mode_window_invariants():
    for kwargs in [
        dict(bandwidth=-1.0, duration=1.0),
        dict(bandwidth=1.0, duration=0.0),
        dict(bandwidth=1.0, duration=1.0, polarizations=3),
    ]:
        with pytest.raises(DomainError):
            modes.ModeWindow(**kwargs)


def test_quantum_limit_power():
    power = modes.quantum_limit_power(nu, 1e6)
    assert np.isclose(power, 1.2816e-13, rtol=1e-4, atol=0)
    assert np.isclose(convert.watts_to_dbm(power), -98.9, atol=0.05)
    assert modes.quantum_limit_power(nu, 0.0) == 0
    res = convert.bandwidth_freq_from_wl(20e-12, constants.reference_wavelength)
    assert np.isclose(convert.watts_to_dbm(modes.quantum_limit_power(nu, res)), -64.95, atol=0.01)


def test_photons_per_mode():
    psd = convert.psd_from_dbm_per_bandwidth(-64, 20e-12, constants.reference_wavelength)
    assert np.isclose(modes.photons_per_mode(psd, nu), 1.25, atol=0.05)
    assert modes.photons_per_mode(0.0, nu) == 0
    assert np.isclose(modes.photons_per_mode(psd, nu, efficiency=0.5), 0.5 * modes.photons_per_mode(psd, nu))
    assert np.isclose(modes.psd_from_photons_per_mode(1.0, nu), constants.h * nu, rtol=1e-12, atol=0)
    with pytest.raises(DomainError):
        modes.photons_per_mode(psd, nu, efficiency=1.5)
    with pytest.raises(DomainError):
        modes.photons_per_mode(psd, 0.0)


def test_snr():
    assert modes.snr_from_photons_per_mode(1.0) == 1
    assert modes.snr_from_photons_per_mode(0.003) == 0.003
    assert modes.describe_snr(0.003) == "much less than one"
    assert modes.describe_snr(0.5) == "less than one"
    assert modes.describe_snr(1.0) == "at least one"
    assert modes.describe_snr(1e3) == "much greater than one"
    with pytest.raises(DomainError):
        modes.snr_from_photons_per_mode(-1.0)


def test_variance_dictionary():
    assert modes.photons_from_variance(modes.QuadratureStats(0.5, 0.5)) == 0
    assert modes.photons_from_variance(modes.QuadratureStats(1.0, 1.0)) == 1
    assert modes.variance_from_photons(0) == 0.5
    assert modes.variance_from_photons(1) == 1
    assert np.isclose(modes.db_above_shot(1.0), 3.0103, atol=1e-4)
    assert modes.db_above_shot(0.0) == 0
    assert np.isclose(modes.photons_from_db_above_shot(-65.5 - -68.5), 1.0, atol=0.01)


def test_variance_assumptions():
    with pytest.raises(AssumptionViolation):
        modes.photons_from_variance(modes.QuadratureStats(0.5, 1.0))
    with pytest.raises(AssumptionViolation):
        modes.photons_from_variance(modes.QuadratureStats(0.5, 0.5, mean_x=0.5))
    with pytest.raises(AssumptionViolation):
        modes.photons_from_variance(modes.QuadratureStats(0.4, 0.4))
    # Tiny excursions below the floor clamp to zero
    assert modes.photons_from_variance(modes.QuadratureStats(0.4999999, 0.4999999)) == 0
    with pytest.raises(DomainError):
        modes.QuadratureStats(-0.1, 0.5)


def test_quadrature_stats():
    rng = np.random.default_rng(7)
    scale = 3e-4
    samples = scale * (rng.standard_normal(200000) + 1j * rng.standard_normal(200000))
    stats = modes.quadrature_stats(samples, reference_variance=2 * scale ** 2)
    assert np.isclose(stats.var_x, 0.5, rtol=0.02)
    assert np.isclose(stats.var_p, 0.5, rtol=0.02)
    assert abs(stats.mean_x) < 0.01
    assert abs(modes.photons_from_variance(stats, clamp_tolerance=0.05)) < 0.05


def test_rescale_sensitivity():
    assert np.isclose(modes.rescale_sensitivity(-89, 0.8e-15, 20e-12), -45, atol=0.1)
    assert np.isclose(modes.rescale_sensitivity(-109, 0.8e-15, 20e-12), -65, atol=0.1)
    assert modes.rescale_sensitivity(-90, 20e-12, 20e-12) == -90
    with pytest.raises(DomainError):
        modes.rescale_sensitivity(-90, 0.0, 20e-12)


def test_resolution_advantage():
    assert modes.resolution_advantage(20e-12, 1e-12) == 20
    assert np.isclose(modes.resolution_advantage(20e-12, 0.1e-12), 200)
    with pytest.raises(DomainError):
        modes.resolution_advantage(20e-12, 0.0)


def test_top_level_aliases():
    assert pyhs.photons_per_mode is modes.photons_per_mode
    assert pyhs.quantum_limit_power is modes.quantum_limit_power
