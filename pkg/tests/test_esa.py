import logging
import numpy as np, pytest, PyHetSpec as pyhs
from PyHetSpec import constants, convert
from PyHetSpec.chain import detect, esa, fields
from PyHetSpec.exceptions import ConfigError

fs = 64e6


def _tone(amplitude, frequency, duration):
    t = np.arange(int(round(duration * fs))) / fs
    v = amplitude * np.cos(2 * np.pi * frequency * t)
    return detect.CurrentTrace(current=v, voltage=v, sample_rate=fs)


def test_enbw():
    assert np.isclose(esa.enbw(1e6), 1.0645e6, rtol=1e-4)
    assert esa.rbw_response(6.5e6, 6e6, 1e6) == 0.5
    assert esa.rbw_response(6e6, 6e6, 1e6) == 1


def test_rbw_output_tone():
    trace = _tone(1e-3, 6e6, 1e-3)
    y = esa.rbw_output(trace.voltage, fs, 6e6, 1e6)
    assert np.allclose(np.abs(y), 0.5e-3)


def test_zero_span_tone():
    spec = esa.ESASpec(span=0.0, sweep_points=1, per_point_integration=1e-3, detector="average")
    reading = esa.esa_measure(_tone(1e-3, 6e6, 1e-3), spec)
    # A^2 / 2R into 50 ohm
    assert np.isclose(reading.values[0], -50.0, atol=1e-6)
    assert reading.dims == ("rf_frequency",)
    assert reading.attrs["rbw_shape"] == "gaussian"


def test_swept_tone():
    spec = esa.ESASpec(
        span=4e6, rbw=1e6, vbw=1e6, sweep_points=41, per_point_integration=100e-6
    )
    reading = esa.esa_measure(_tone(1e-3, 6e6, 100e-6), spec)
    frequencies = reading["rf_frequency"].values
    assert np.isclose(frequencies[20], 6e6)
    assert int(np.argmax(reading.values)) == 20
    # The Gaussian RBW is 3 dB down half an RBW away
    assert np.isclose(reading.values[20] - reading.values[25], 10 * np.log10(2), atol=0.05)
    assert np.isclose(reading.values[20] - reading.values[15], 10 * np.log10(2), atol=0.05)


def test_white_noise_reading():
    sigma = 1e-3
    rng = np.random.default_rng(0)
    v = sigma * rng.standard_normal(int(10e-3 * fs))
    trace = detect.CurrentTrace(current=v, voltage=v, sample_rate=fs)
    spec = esa.ESASpec(span=0.0, sweep_points=1, per_point_integration=10e-3, detector="average")
    reading = pyhs.convert.dbm_to_watts(esa.esa_measure(trace, spec).values[0])
    expected = 2 * sigma ** 2 * esa.enbw(1e6) / (fs * 50)
    assert np.isclose(reading, expected, rtol=0.05, atol=0)


def test_sweep_frequencies():
    assert np.all(esa.sweep_frequencies(esa.ESASpec(sweep_points=5)) == 6e6)
    swept = esa.sweep_frequencies(esa.ESASpec(span=10e6, sweep_points=11))
    assert np.allclose(swept, np.linspace(1e6, 11e6, 11))
    assert np.isclose(esa.ESASpec().sweep_time, 0.12)


def test_esa_validation(caplog):
    for kwargs in [
        dict(rbw=0.0),
        dict(span=0.5e6, rbw=1e6),
        dict(span=20e6),
        dict(detector="peak"),
        dict(sweep_points=0),
    ]:
        with pytest.raises(ConfigError):
            esa.ESASpec(**kwargs)
    with caplog.at_level(logging.WARNING):
        esa.ESASpec(vbw=3e6)
    assert "wider than RBW" in caplog.text


def test_dwell_too_long():
    spec = esa.ESASpec(sweep_points=1, per_point_integration=2e-3)
    with pytest.raises(ConfigError):
        esa.esa_measure(_tone(1e-3, 6e6, 1e-3), spec)


def test_dithered_beat_needs_fast_video():
    nu = convert.wavelength_to_frequency(constants.reference_wavelength)
    lo = fields.synth_laser(fields.LaserSpec(power=1e-3), 1e-3, fs, seed=0, reference_frequency=nu)
    # The beat sweeps -4 to 16 MHz once per millisecond, crossing 12 MHz twice
    dithered = fields.LaserSpec(power=1e-6, detuning=6e6, dither_span=20e6, dither_rate=1e3)
    signal = fields.synth_laser(dithered, 1e-3, fs, seed=1, reference_frequency=nu)
    trace = detect.balanced_detect(*detect.mix_50_50(signal, lo), detect.DetectorSpec(), seed=2)
    settings = dict(center_rf=12e6, span=0.0, sweep_points=500, per_point_integration=2e-6)
    fast = esa.esa_measure(trace, esa.ESASpec(vbw=1e5, **settings))
    slow = esa.esa_measure(trace, esa.ESASpec(vbw=10, **settings))
    # A slow video filter smears the brief crossings into the dwell average
    assert fast.values.max() - slow.values.max() > 10
    assert fast.values.max() - fast.values.min() > 20
