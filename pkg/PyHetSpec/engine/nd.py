# PyHetSpec: heterodyne spectrometer sensitivity limits in Python.
# Copyright (C) 2026  The PyHetSpec developers  (GNU GPLv3)
"""Closed-form sensitivity calculations in N dimensions."""

from autograd import numpy as np
from .. import constants, convert, modes
from ..exceptions import ConfigError

# Define function input keys that should be converted to floats
input_floats = {
    "wavelength",
    "bandwidth",
    "duration",
    "psd",
    "efficiency",
    "reference_resolution",
}


def condition(args):
    """Condition n-d args for PyHetSpec.

    If NumPy can broadcast the args together, they are a valid combination, and they
    will be combined following NumPy broadcasting rules.

    All array-like args will be broadcast into the same shape.
    Any scalar args will be left as scalars.
    """
    args = {k: v for k, v in args.items() if v is not None}
    try:
        args_broadcast = np.broadcast(*args.values())
    except ValueError:
        raise ConfigError("input shapes cannot be broadcast together.")
    # Broadcast the non-scalar args to a consistent shape
    args_conditioned = {
        k: np.broadcast_to(v, args_broadcast.shape) if not np.isscalar(v) else v
        for k, v in args.items()
    }
    # Convert to float, where needed
    return {
        k: np.float64(v) if k in input_floats else v
        for k, v in args_conditioned.items()
    }


def _sensitivity(
    wavelength, bandwidth, duration, psd, efficiency, polarizations, reference_resolution
):
    """Evaluate every closed-form quantity for conditioned args."""
    frequency = convert.wavelength_to_frequency(wavelength)
    quantum_limit = modes.quantum_limit_power(frequency, bandwidth)
    n = modes.photons_per_mode(psd, frequency, efficiency=efficiency)
    return {
        "wavelength": wavelength,
        "bandwidth": bandwidth,
        "duration": duration,
        "psd": psd,
        "efficiency": efficiency,
        "polarizations": polarizations,
        "reference_resolution": reference_resolution,
        "frequency": frequency,
        "photon_energy": convert.photon_energy(wavelength),
        "bandwidth_wl": convert.bandwidth_wl_from_freq(bandwidth, wavelength),
        "modes": modes.modes(bandwidth, duration, polarizations),
        "quantum_limit_power": quantum_limit,
        "quantum_limit_dbm": convert.watts_to_dbm(quantum_limit),
        "photons_per_mode": n,
        "snr": modes.snr_from_photons_per_mode(n),
        "db_above_shot": modes.db_above_shot(n),
        "detected_photons": n * modes.modes(bandwidth, duration, polarizations),
        "psd_dbm_per_resolution": convert.psd_to_dbm_per_bandwidth(
            psd, reference_resolution, wavelength
        ),
    }


def sensitivity(
    wavelength,
    bandwidth=1e6,
    duration=1.0,
    psd=0.0,
    efficiency=1.0,
    polarizations=1,
    reference_resolution=constants.reference_resolution,
):
    """Calculate the heterodyne quantum sensitivity limit from any combination of
    n-d inputs, all in SI units.

    Arguments:
    wavelength -- vacuum wavelength in m.

    Keyword arguments:
    bandwidth -- detection bandwidth in Hz (default 1 MHz).
    duration -- integration time in s (default 1 s).
    psd -- input power spectral density in W/Hz (default 0).
    efficiency -- detection efficiency from 0 to 1 (default 1).
    polarizations -- 1 or 2 (default 1).
    reference_resolution -- wavelength bin in m for the dBm-per-bin PSD view
        (default 20 pm).

    Returns a dict of arrays broadcast to a common shape.
    """
    args = condition(
        {
            "wavelength": wavelength,
            "bandwidth": bandwidth,
            "duration": duration,
            "psd": psd,
            "efficiency": efficiency,
            "polarizations": polarizations,
            "reference_resolution": reference_resolution,
        }
    )
    if np.any(args["duration"] <= 0):
        raise ConfigError("duration must be positive.")
    if not np.all(np.isin(args["polarizations"], [1, 2])):
        raise ConfigError("polarizations must be 1 or 2.")
    return _sensitivity(**args)


# Define list of gradable output keys
gradables = [
    "frequency",
    "photon_energy",
    "bandwidth_wl",
    "modes",
    "quantum_limit_power",
    "quantum_limit_dbm",
    "photons_per_mode",
    "snr",
    "db_above_shot",
    "detected_photons",
    "psd_dbm_per_resolution",
]
