import json
import numpy as np, pandas as pd, yaml, PyHetSpec as pyhs
from PyHetSpec import meta, report
from PyHetSpec.chain.esa import ESASpec


def test_plain():
    value = report.plain(
        {"a": np.float64(1.5), "b": np.arange(3), "c": (np.bool_(True), None), "d": -np.inf}
    )
    assert value == {"a": 1.5, "b": [0, 1, 2], "c": [True, None], "d": "-inf"}
    assert report.plain(ESASpec())["rbw"] == 1e6


def test_yaml_echo():
    text = report.as_yaml(ESASpec())
    assert text.startswith("center_rf:")
    assert "rbw: 1000000.0" in text
    assert text == report.as_yaml(ESASpec())
    # Block style, one key per line, and it reads back
    assert "{" not in text
    assert all(": " in line for line in text.splitlines())
    assert yaml.safe_load(text) == report.plain(ESASpec())


def test_metadata_header():
    header = report.metadata_header("scan a b --seed 1", 1, {"resolution": 1e-13, "plan": "a: 1\nb: 2\n"})
    lines = header.splitlines()
    assert lines[0] == "# schema_version: 1"
    assert lines[2] == "# version: {}".format(meta.version)
    assert lines[3] == "# command: scan a b --seed 1"
    assert lines[4] == "# seed: 1"
    assert lines[5] == "# plan: a: 1\\nb: 2"
    assert lines[6] == "# resolution: 1e-13"
    assert all(line.startswith("# ") for line in lines)


def test_write_csv(tmp_path):
    table = pd.DataFrame({"frequency_hz": [1e6, 2e6], "power_dbm": [-80.123456789012, -np.inf]})
    path = report.write_csv(table, str(tmp_path / "rf.csv"), "simulate x", seed=0)
    with open(path) as f:
        text = f.read()
    assert text.endswith("frequency_hz,power_dbm\n1000000,-80.12345679\n2000000,-inf\n")
    again = report.write_csv(table, str(tmp_path / "again.csv"), "simulate x", seed=0)
    with open(again) as f:
        assert f.read() == text


def test_run_record(tmp_path):
    record = report.RunRecord(command="limit", config={"x": 1}, seed=3, outputs=["a.csv"])
    path = record.write(str(tmp_path))
    with open(path) as f:
        data = json.load(f)
    assert data["seed"] == 3
    assert data["version"] == meta.version
    assert data["outputs"] == ["a.csv"]


def test_output_dir(tmp_path, monkeypatch):
    target = tmp_path / "out"
    monkeypatch.setenv(report.OUTPUT_DIR_VARIABLE, str(target))
    assert report.output_dir() == str(target)
    assert target.is_dir()
    assert report.output_dir(str(tmp_path / "given")) == str(tmp_path / "given")
