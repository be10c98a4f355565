import logging
from dataclasses import replace
import numpy as np, pytest, PyHetSpec as pyhs
from PyHetSpec import chain, config, constants, convert
from PyHetSpec.chain import fields
from PyHetSpec.exceptions import ConfigError

one_photon = replace(config.load_simulation("one_photon"), trials=8)
lo_floor = replace(config.load_simulation("lo_floor"), trials=4)
nu = one_photon.reference_frequency
# One photon per mode in the upper sideband only, 1 to 31 MHz above the LO
upper_only = fields.ASESpec(
    center_wavelength=1550e-9,
    bandwidth=convert.bandwidth_wl_from_freq(30e6, 1550e-9),
    psd=constants.h * nu,
    detuning=16e6,
    edge_width=convert.bandwidth_wl_from_freq(1e6, 1550e-9),
)


def test_config_validation():
    with pytest.raises(ConfigError) as error:
        replace(one_photon, sample_rate=20e6)
    assert error.value.path == "sample_rate"
    with pytest.raises(ConfigError):
        replace(one_photon, trials=0)
    with pytest.raises(ConfigError):
        replace(one_photon, signal="ase")


def test_predicted_photons():
    assert np.isclose(chain.predicted_photons_per_mode(one_photon), 1.0, rtol=1e-6)
    assert chain.predicted_photons_per_mode(replace(one_photon, signal=None)) == 0
    # A weak line at the detection frequency spreads over both sidebands
    nu = one_photon.reference_frequency
    line = fields.LaserSpec(power=1e-12, detuning=6e6)
    expected = 1e-12 / (2 * chain.esa.enbw(1e6)) / (constants.h * nu)
    assert np.isclose(
        chain.predicted_photons_per_mode(replace(one_photon, signal=line)), expected
    )
    assert np.isclose(
        chain.predicted_photons_per_mode(replace(one_photon, signal=upper_only)), 0.5, rtol=1e-3
    )


def test_one_photon_per_mode():
    result = chain.measure_photons_per_mode(one_photon, seed=1)
    assert np.isclose(result["measured_photons_per_mode"], 1.0, atol=0.25)
    assert np.isclose(result["db_above_shot"], 3.0, atol=0.5)
    # The analyser bin holds both sidebands: 1 + 2n on the raw floor ratio
    assert np.isclose(result["db_above_floor"], 10 * np.log10(3), atol=0.5)
    assert result["shot_noise_limited"]
    assert result["shot_over_electronics_db"] == np.inf
    assert result["trials"] == 8


def test_one_sideband_counts_half():
    result = chain.measure_photons_per_mode(replace(one_photon, signal=upper_only), seed=5)
    assert np.isclose(result["measured_photons_per_mode"], 0.5, atol=0.15)
    assert np.isclose(result["db_above_floor"], 3.0, atol=0.5)


def test_efficiency_scales_photons():
    lossy = replace(one_photon, detector=replace(one_photon.detector, quantum_efficiency=0.8))
    assert np.isclose(chain.predicted_photons_per_mode(lossy), 0.8, rtol=1e-6)
    result = chain.measure_photons_per_mode(lossy, seed=6)
    assert np.isclose(result["measured_photons_per_mode"], 0.8, atol=0.2)
    assert np.isclose(result["db_above_shot"], 10 * np.log10(1.8), atol=0.5)


def test_per_sideband():
    folded = pyhs.modes.QuadratureStats(var_x=1.5, var_p=1.5, mean_x=0.2)
    stats = chain.per_sideband(folded)
    assert stats.var_x == 1.0 and stats.var_p == 1.0
    assert np.isclose(stats.mean_x, 0.2 / np.sqrt(2))
    shot = chain.per_sideband(pyhs.modes.QuadratureStats(var_x=0.5, var_p=0.5))
    assert shot.var_x == 0.5


def test_dark_input():
    result = chain.measure_photons_per_mode(replace(one_photon, signal=None), seed=2)
    assert 0 <= result["measured_photons_per_mode"] < 0.1
    assert abs(result["db_above_shot"]) < 0.5


def test_electronics_margin():
    result = chain.measure_photons_per_mode(replace(lo_floor, signal=None), seed=3)
    assert np.isclose(result["shot_over_electronics_db"], 10.0, atol=1.0)
    assert result["shot_noise_limited"]


def test_not_shot_noise_limited(caplog):
    det = replace(
        lo_floor.detector,
        electronics_noise=chain.electronics_noise_for_margin(
            1e-3, lo_floor.detector, 1.0, lo_floor.reference_frequency
        ),
    )
    with caplog.at_level(logging.WARNING):
        result = chain.measure_photons_per_mode(replace(lo_floor, detector=det), seed=0)
    assert not result["shot_noise_limited"]
    assert "not shot-noise limited" in caplog.text


def test_measurement_is_deterministic():
    config = replace(one_photon, trials=3)
    serial = chain.measure_photons_per_mode(config, seed=11)
    assert serial == chain.measure_photons_per_mode(config, seed=11)
    assert serial == chain.measure_photons_per_mode(config, seed=11, workers=2)
    assert serial != chain.measure_photons_per_mode(config, seed=12)


def test_dark_outside_window():
    far = fields.LaserSpec(power=1e-3, detuning=1e9)
    trace = chain.synth_input(far, 1e-5, 64e6, 0, one_photon.reference_frequency)
    assert trace.metadata["source"] == "dark"
    assert np.all(trace.samples == 0)
    assert chain.synth_input(None, 1e-5, 64e6, 0, 1.0).mean_power == 0


def test_simulate():
    config = replace(
        lo_floor,
        trials=4,
        esa=replace(lo_floor.esa, sweep_points=11),
    )
    spectrum, measured = pyhs.simulate(config, seed=4)
    assert spectrum.shape == (11,)
    assert np.allclose(spectrum["rf_frequency"].values, np.linspace(1e6, 11e6, 11))
    assert spectrum.attrs["seed"] == 4
    assert spectrum.attrs["vbw_mode"] == "single-pole linear power"
    assert np.all(np.isfinite(spectrum.values))
    # Flat once the low-pass roll-off is removed; each 120-us, 4-trial reading
    # scatters by about 0.2 dB, so 1 dB is five standard errors
    f = spectrum["rf_frequency"].values[3:8]
    rolloff = convert.ratio_to_db(np.abs(chain.detect.lowpass_response(config.detector, f)) ** 2)
    flattened = spectrum.values[3:8] - rolloff
    assert np.all(np.abs(flattened - np.median(flattened)) < 1.0)
    assert measured["seed"] == 4
