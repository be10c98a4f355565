# Compare derivatives from the uncertainty module with the closed forms
import numpy as np, PyHetSpec as pyhs
from PyHetSpec import constants, convert

wavelength = np.array([1530e-9, 1550e-9, 1565e-9])
psd = np.array([1e-19, 2e-19, 5e-19])
efficiency = np.full(3, 0.8)
results = pyhs.sensitivity(
    wavelength, bandwidth=1e6, duration=2.0, psd=psd, efficiency=efficiency
)


def close_enough(a, b, rtol=1e-8):
    """Assess whether `a` and `b` are similar enough to be acceptable."""
    return np.allclose(a, b, rtol=rtol, atol=0)


def test_forward_photons():
    grads = pyhs.uncertainty.forward(results, "photons_per_mode", ["psd", "efficiency"])
    nu = convert.wavelength_to_frequency(wavelength)
    assert close_enough(grads["photons_per_mode"]["psd"], 0.8 / (constants.h * nu))
    assert close_enough(grads["photons_per_mode"]["efficiency"], psd / (constants.h * nu))


def test_forward_modes():
    grads = pyhs.uncertainty.forward(results, "modes", "all")
    assert close_enough(grads["modes"]["duration"], 1e6)
    assert close_enough(grads["modes"]["bandwidth"], 2.0)
    assert np.allclose(grads["modes"]["wavelength"], 0)


def test_forward_wavelength():
    # d(h nu)/d(lambda) = -h c / lambda^2
    grads = pyhs.uncertainty.forward(results, "photon_energy", "wavelength")
    expected = -constants.h * constants.c / wavelength ** 2
    assert close_enough(grads["photon_energy"]["wavelength"], expected)


def test_all_gradables():
    grads = pyhs.uncertainty.forward(results, "all", "all")
    assert set(grads) == set(pyhs.engine.nd.gradables)
    assert set(grads["snr"]) == set(pyhs.uncertainty.inputs_wrt)


def test_propagate():
    u_psd = 0.1 * psd
    uncertainties, components = pyhs.uncertainty.propagate(
        results, ["photons_per_mode"], {"psd": u_psd, "efficiency": 0.0}
    )
    assert close_enough(uncertainties["photons_per_mode"], 0.1 * results["photons_per_mode"])
    assert np.allclose(components["photons_per_mode"]["efficiency"], 0)
    # Independent components add in quadrature
    uncertainties, components = pyhs.uncertainty.propagate(
        results, ["photons_per_mode"], {"psd": u_psd, "efficiency": 0.08}
    )
    assert close_enough(
        uncertainties["photons_per_mode"],
        np.sqrt(2) * 0.1 * results["photons_per_mode"],
    )
