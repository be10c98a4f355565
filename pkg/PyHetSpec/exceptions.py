# PyHetSpec: heterodyne spectrometer sensitivity limits in Python.
# Copyright (C) 2026  The PyHetSpec developers  (GNU GPLv3)
"""Exceptions raised by PyHetSpec."""

__all__ = [
    "PyHetSpecError",
    "DomainError",
    "ConfigError",
    "UnitError",
    "AssumptionViolation",
]


class PyHetSpecError(Exception):
    """Base class for all PyHetSpec errors."""


class DomainError(PyHetSpecError, ValueError):
    """An argument lies outside the domain of a physical formula."""


class ConfigError(PyHetSpecError, ValueError):
    """A configuration is malformed, incomplete or inconsistent.

    The optional `path` is the dotted location of the offending key.
    """

    def __init__(self, message, path=None):
        self.message = message
        self.path = path
        if path:
            message = "{}: {}".format(path, message)
        super().__init__(message)


class UnitError(ConfigError):
    """A quantity string could not be parsed with the expected dimension."""


class AssumptionViolation(PyHetSpecError, RuntimeError):
    """A measurement breaks an assumption of the shot-noise-limit analysis."""
