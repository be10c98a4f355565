# PyHetSpec: heterodyne spectrometer sensitivity limits in Python.
# Copyright (C) 2026  The PyHetSpec developers  (GNU GPLv3)
"""Automatic derivatives for uncertainty propagation."""

from autograd import numpy as np
from autograd import elementwise_grad as egrad
from .. import engine

# Keys of the results dict that are passed back into the calculation
_arg_keys = [
    "wavelength",
    "bandwidth",
    "duration",
    "psd",
    "efficiency",
    "polarizations",
    "reference_resolution",
]


def derivative(results, of, wrt):
    """Derivative of `results[of]` with respect to input `wrt`, elementwise."""
    args = {k: results[k] for k in _arg_keys}

    def of_wrt(value):
        return engine.nd._sensitivity(**{**args, wrt: value})[of]

    return egrad(of_wrt)(np.float64(args[wrt]))
