# PyHetSpec: heterodyne spectrometer sensitivity limits in Python.
# Copyright (C) 2026  The PyHetSpec developers  (GNU GPLv3)
#
# This program is free software: you can redistribute it and/or modify
# it under the terms of the GNU General Public License as published by
# the Free Software Foundation, either version 3 of the License, or
# (at your option) any later version.
#
# This program is distributed in the hope that it will be useful,
# but WITHOUT ANY WARRANTY; without even the implied warranty of
# MERCHANTABILITY or FITNESS FOR A PARTICULAR PURPOSE.  See the
# GNU General Public License for more details.
#
# You should have received a copy of the GNU General Public License
# along with this program.  If not, see <https://www.gnu.org/licenses/>.
"""Calculate and simulate the sensitivity limits of heterodyne optical spectrometers."""

from . import (
    api,
    chain,
    config,
    constants,
    convert,
    engine,
    exceptions,
    meta,
    modes,
    report,
    scan,
    sources,
    test,
    uncertainty,
    units,
)

__all__ = [
    "api",
    "chain",
    "config",
    "constants",
    "convert",
    "engine",
    "exceptions",
    "meta",
    "modes",
    "report",
    "scan",
    "sources",
    "test",
    "uncertainty",
    "units",
]
__author__ = meta.authors
__version__ = meta.version

# Aliases for top-level access
from .engine.nd import sensitivity
from .api import sensitivity_wrap, verdict_table
from .meta import say_hello
from .modes import photons_per_mode, quantum_limit_power, rescale_sensitivity
from .chain import measure_photons_per_mode, simulate
from .scan import compare_sensitivity, grating_osa_emulate, run_scan
from .test import headline_check
