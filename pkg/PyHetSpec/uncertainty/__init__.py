# PyHetSpec: heterodyne spectrometer sensitivity limits in Python.
# Copyright (C) 2026  The PyHetSpec developers  (GNU GPLv3)
"""Propagate uncertainties through the closed-form sensitivity calculations."""

from autograd import numpy as np
from .. import engine
from . import automatic

__all__ = ["automatic", "forward", "propagate"]

# Inputs that derivatives can be taken with respect to
inputs_wrt = ["wavelength", "bandwidth", "duration", "psd", "efficiency"]


def forward(results, grads_of, grads_wrt):
    """Get derivatives of `sensitivity` results with respect to its inputs.

    Arguments:
    results -- output generated by `PyHetSpec.sensitivity`.
    grads_of -- list of keys from `results` that you want to calculate the derivatives
        of, or a single key as a string, or "all".
    grads_wrt -- list of input names that you want to calculate the derivatives with
        respect to, or a single name as a string, or "all".
    """
    if isinstance(grads_of, str):
        grads_of = engine.nd.gradables if grads_of == "all" else [grads_of]
    if isinstance(grads_wrt, str):
        grads_wrt = inputs_wrt if grads_wrt == "all" else [grads_wrt]
    assert np.all(np.isin(grads_of, engine.nd.gradables)), "Invalid `grads_of` requested."
    assert np.all(np.isin(grads_wrt, inputs_wrt)), "Invalid `grads_wrt` requested."
    return {
        of: {wrt: automatic.derivative(results, of, wrt) for wrt in grads_wrt}
        for of in grads_of
    }


def propagate(results, uncertainties_into, uncertainties_from):
    """Propagate independent input uncertainties to outputs in quadrature.

    `uncertainties_from` maps input names to their standard uncertainties.
    Returns the total uncertainties and their per-input components.
    """
    derivs = forward(results, uncertainties_into, list(uncertainties_from))
    components = {
        u_into: {
            u_from: np.abs(derivs[u_into][u_from]) * v_from
            for u_from, v_from in uncertainties_from.items()
        }
        for u_into in uncertainties_into
    }
    uncertainties = {
        u_into: np.sqrt(
            np.sum(
                np.array([component for component in components[u_into].values()]) ** 2,
                axis=0,
            )
        )
        for u_into in uncertainties_into
    }
    return uncertainties, components
