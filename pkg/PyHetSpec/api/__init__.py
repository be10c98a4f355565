# PyHetSpec: heterodyne spectrometer sensitivity limits in Python.
# Copyright (C) 2026  The PyHetSpec developers  (GNU GPLv3)
"""Alternative APIs returning pandas and xarray objects."""

import numpy as np
import pandas as pd
import xarray as xr
from .. import constants
from ..engine.nd import sensitivity
from ..sources import assess_scenario

__all__ = ["sensitivity_wrap", "verdict_table", "comparison_table"]


def sensitivity_wrap(
    wavelength=constants.reference_wavelength,
    bandwidth=1e6,
    duration=1.0,
    psd=0.0,
    efficiency=1.0,
    polarizations=1,
    reference_resolution=constants.reference_resolution,
):
    """
    A Pythonic API for `engine.nd.sensitivity` that accepts numpy.ndarrays,
    pandas.Series or xarray.DataArrays as inputs.

    Parameters
    ----------
    wavelength : array-like
        vacuum wavelength in m
    bandwidth : array-like
        detection bandwidth in Hz
    duration : array-like
        integration time in s
    psd : array-like
        input power spectral density in W/Hz
    efficiency : array-like
        detection efficiency from 0 to 1
    polarizations : array-like
        number of polarization modes, 1 or 2
    reference_resolution : array-like
        wavelength bin in m for the dBm-per-bin PSD view

    Returns
    -------
    pd.DataFrame, or xr.Dataset if any input is an xr.DataArray, with one
    column or variable per calculated quantity.
    """
    params = {
        "wavelength": wavelength,
        "bandwidth": bandwidth,
        "duration": duration,
        "psd": psd,
        "efficiency": efficiency,
        "polarizations": polarizations,
        "reference_resolution": reference_resolution,
    }
    # The first DataArray input sets the shape and coordinates of the output
    cube = next((v for v in params.values() if isinstance(v, xr.DataArray)), None)
    index = next((v.index for v in params.values() if isinstance(v, pd.Series)), None)
    if cube is not None:
        arrays = {
            k: v.broadcast_like(cube).values if isinstance(v, xr.DataArray) else v
            for k, v in params.items()
        }
    else:
        arrays = {
            k: np.asarray(v) if isinstance(v, pd.Series) else v
            for k, v in params.items()
        }
    results = sensitivity(**arrays)
    if cube is not None:
        return xr.Dataset(
            {
                k: (cube.dims, np.broadcast_to(v, cube.shape))
                for k, v in results.items()
            },
            coords=cube.coords,
        )
    shape = np.broadcast(*results.values()).shape
    columns = {k: np.ravel(np.broadcast_to(v, shape)) for k, v in results.items()}
    return pd.DataFrame(columns, index=index)


def verdict_table(sources, detectors, duration=1.0, threshold=10.0):
    """Source-by-detector detectability table as a pd.DataFrame."""
    return pd.DataFrame(
        assess_scenario(sources, detectors, duration=duration, threshold=threshold)
    )


def comparison_table(comparison):
    """One row per instrument from a `scan.compare_sensitivity` result."""
    table = pd.DataFrame.from_dict(comparison["instruments"], orient="index")
    table.index.name = "instrument"
    table["winner"] = table.index == comparison["winner"]
    return table
