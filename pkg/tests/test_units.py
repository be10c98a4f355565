import numpy as np, pytest, PyHetSpec as pyhs
from PyHetSpec import constants, convert, units
from PyHetSpec.exceptions import ConfigError, UnitError


def test_split():
    assert units.split_quantity("12.5 MHz") == (12.5, "MHz")
    assert units.split_quantity("-89dBm") == (-89.0, "dBm")
    assert units.split_quantity("1e-9/nm/km") == (1e-9, "/nm/km")
    assert units.split_quantity(3) == (3.0, "")
    with pytest.raises(UnitError):
        units.split_quantity("MHz")
    with pytest.raises(UnitError):
        units.split_quantity(True)


def test_quantities():
    assert np.isclose(units.parse_quantity("1550nm", "length"), 1550e-9, rtol=1e-12, atol=0)
    assert np.isclose(units.parse_quantity("6 MHz", "frequency"), 6e6)
    assert np.isclose(units.parse_quantity("1.2ms", "time"), 1.2e-3, rtol=1e-12, atol=0)
    assert np.isclose(units.parse_quantity("120us", "time"), 120e-6, rtol=1e-12, atol=0)
    assert units.parse_quantity(64e6, "frequency") == 64e6
    assert np.isclose(units.parse_quantity("3e8/s/mW/nm", "pair_rate_density"), 3e20)
    assert np.isclose(units.parse_quantity("1e-9/nm/km", "cross_section"), 1e-3)
    assert np.isclose(units.parse_quantity("10/W/km", "nonlinearity"), 0.01)
    assert np.isclose(units.parse_quantity("10pA/Hz**0.5", "current_density"), 1e-11, rtol=1e-9, atol=0)


def test_powers_and_levels():
    assert np.isclose(units.parse_power("1mW"), 1e-3)
    assert np.isclose(units.parse_power("-90dBm"), 1e-12, rtol=1e-12, atol=0)
    assert units.parse_db("10dB") == 10
    assert units.parse_db(3) == 3
    assert units.parse_number("10") == 10
    assert np.isclose(units.parse_attenuation("0.2dB/km"), 2e-4)
    assert units.parse_rin("-150dBc/Hz") == -150
    with pytest.raises(UnitError):
        units.parse_db("10dBm")
    with pytest.raises(UnitError):
        units.parse_number("10 nm")


def test_psd():
    expected = convert.psd_from_dbm_per_bandwidth(-64, 20e-12, constants.reference_wavelength)
    assert np.isclose(units.parse_psd("-64dBm/20pm"), expected, rtol=1e-9, atol=0)
    assert np.isclose(units.parse_psd("-150dBm/Hz"), 1e-18, rtol=1e-9, atol=0)
    assert np.isclose(units.parse_psd("1e-19 W/Hz"), 1e-19, rtol=1e-9, atol=0)
    per_nm = units.parse_psd("8e-11 W/nm")
    assert np.isclose(
        per_nm, convert.psd_per_m_to_per_hz(8e-2, constants.reference_wavelength), rtol=1e-9, atol=0
    )


def test_bandwidths():
    assert np.isclose(units.parse_bandwidth("1MHz"), 1e6)
    assert np.isclose(units.parse_bandwidth("20pm"), 2.4957e9, rtol=1e-4)
    assert np.isclose(units.parse_wavelength_bandwidth("20pm"), 20e-12, rtol=1e-12, atol=0)
    assert np.isclose(units.parse_wavelength_bandwidth("100kHz") * 1e15, 0.8, rtol=0.01)
    assert np.isclose(units.parse_optical("1550nm"), 1550e-9, rtol=1e-12, atol=0)
    assert np.isclose(units.parse_optical("193.414THz"), 1550e-9, rtol=1e-5, atol=0)


def test_unit_errors():
    for func, text in [
        (lambda t: units.parse_quantity(t, "length"), "5 MHz"),
        (lambda t: units.parse_quantity(t, "frequency"), "5 furlongs per blorp"),
        (lambda t: units.parse_quantity(t, "power"), "-90dBm"),
        (units.parse_power, "1 s"),
        (units.parse_optical, "5 s"),
        (units.parse_attenuation, "0.2 dB"),
        (units.parse_psd, "-64dBc/20pm"),
    ]:
        with pytest.raises(UnitError) as error:
            func(text)
        assert "Examples" in str(error.value)
        assert isinstance(error.value, ConfigError)
