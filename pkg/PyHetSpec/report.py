# PyHetSpec: heterodyne spectrometer sensitivity limits in Python.
# Copyright (C) 2026  The PyHetSpec developers  (GNU GPLv3)
"""Write results as CSV with metadata headers, JSON reports and run records."""

import json
import logging
import math
import os
from dataclasses import asdict, dataclass, field, is_dataclass
import numpy as np
import pandas as pd
import yaml
from . import meta

_log = logging.getLogger(__name__)

__all__ = [
    "SCHEMA_VERSION",
    "OUTPUT_DIR_VARIABLE",
    "RunRecord",
    "plain",
    "as_yaml",
    "output_dir",
    "metadata_header",
    "rf_table",
    "optical_table",
    "write_csv",
    "write_json",
    "format_table",
]

SCHEMA_VERSION = 1
OUTPUT_DIR_VARIABLE = "PYHETSPEC_OUTPUT_DIR"


@dataclass
class RunRecord:
    """What a run did, enough to reproduce its outputs from `config` and `seed`."""

    command: str
    config: dict
    seed: int = None
    version: str = meta.version
    outputs: list = field(default_factory=list)
    duration: float = 0.0

    def write(self, directory):
        path = os.path.join(directory, "run_record.json")
        write_json(asdict(self), path)
        return path


def plain(value):
    """Convert dataclasses and numpy values into YAML- and JSON-safe types."""
    if is_dataclass(value) and not isinstance(value, type):
        return {k: plain(v) for k, v in asdict(value).items()}
    if isinstance(value, dict):
        return {str(k): plain(v) for k, v in value.items()}
    if isinstance(value, (list, tuple)):
        return [plain(v) for v in value]
    if isinstance(value, np.ndarray):
        return [plain(v) for v in value.tolist()]
    if isinstance(value, (bool, np.bool_)):
        return bool(value)
    if isinstance(value, (int, np.integer)):
        return int(value)
    if isinstance(value, (float, np.floating)):
        value = float(value)
        # JSON has no infinities
        return value if math.isfinite(value) else repr(value)
    return value


def as_yaml(value):
    """Deterministic YAML text of a (nested) dataclass or dict."""
    return yaml.safe_dump(plain(value), sort_keys=True, default_flow_style=False)


def output_dir(directory=None):
    """The output directory: `directory`, else $PYHETSPEC_OUTPUT_DIR, else ".".

    The directory is created if it does not exist.
    """
    if directory is None:
        directory = os.environ.get(OUTPUT_DIR_VARIABLE, ".")
    os.makedirs(directory, exist_ok=True)
    return directory


def _header_value(value):
    if isinstance(value, str):
        text = value
    elif isinstance(value, float):
        text = repr(value)
    else:
        text = json.dumps(plain(value), sort_keys=True)
    # Multi-line values such as YAML echoes stay on one comment line
    return text.strip().replace("\n", "\\n")


def metadata_header(command, seed, attrs):
    """Lines of `# key: value` metadata, in a fixed order."""
    items = [
        ("schema_version", SCHEMA_VERSION),
        ("generator", "PyHetSpec"),
        ("version", meta.version),
        ("command", command),
        ("seed", seed),
    ]
    items += [(k, attrs[k]) for k in sorted(attrs) if k != "seed"]
    return "".join("# {}: {}\n".format(k, _header_value(v)) for k, v in items)


def rf_table(spectrum):
    """RF spectrum (`power_dbm` over `rf_frequency`) as a table."""
    return pd.DataFrame(
        {
            "frequency_hz": spectrum["rf_frequency"].values,
            "power_dbm": spectrum.values,
        }
    )


def optical_table(result):
    """Optical spectrum result as a table with the wavelength in nm."""
    return pd.DataFrame(
        {
            "wavelength_nm": result["wavelength"].values * 1e9,
            "power_dbm": result["power_dbm"].values,
            "psd_w_per_hz": result["psd"].values,
            "photons_per_mode": result["photons_per_mode"].values,
        }
    )


def write_csv(table, path, command, seed=None, attrs=None):
    """Write `table` under its metadata header; the bytes depend only on the inputs."""
    with open(path, "w", newline="") as f:
        f.write(metadata_header(command, seed, attrs or {}))
        table.to_csv(f, index=False, float_format="%.10g", lineterminator="\n")
    _log.info("Wrote %s.", path)
    return path


def write_json(data, path):
    with open(path, "w") as f:
        json.dump(plain(data), f, indent=2, sort_keys=True)
        f.write("\n")
    _log.info("Wrote %s.", path)
    return path


def format_table(table, float_format="{:.4g}".format):
    """Plain-text rendering of a pd.DataFrame for the terminal."""
    return table.to_string(index=False, float_format=float_format)
