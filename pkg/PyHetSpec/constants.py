# PyHetSpec: heterodyne spectrometer sensitivity limits in Python.
# Copyright (C) 2026  The PyHetSpec developers  (GNU GPLv3)
"""Define universal constants."""

from scipy import constants as _codata

# Exact SI values (CODATA 2018), all in SI units
h = _codata.h  # Planck constant in J s
c = _codata.c  # speed of light in vacuum in m / s
q = _codata.e  # elementary charge in C

# Presentation-layer reference quantities
reference_wavelength = 1550e-9  # m, the telecom C-band reference
reference_resolution = 20e-12  # m, grating spectrometer resolution used for PSD views
load_impedance = 50.0  # ohm, electrical load convention of the spectrum analyser
