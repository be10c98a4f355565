from PyHetSpec import cli

simulation = """\
wavelength: 1550nm
duration: 0.6ms
trials: 8
lo:
  power: 1mW
  linewidth: 100kHz
signal:
  type: ase
  center_wavelength: 1550nm
  detuning: 16MHz
  bandwidth: 30MHz
  edge_width: 1MHz
  photons_per_mode: 1
detector:
  electronics_margin_db: 10dB
esa:
  span: 10MHz
  sweep_points: 11
  per_point_integration: 50us
"""

plan = """\
scan:
  start: 1550.498nm
  stop: 1550.502nm
  step: 1pm
  trials: 2
lo:
  power: 1mW
  linewidth: 100kHz
esa:
  per_point_integration: 0.5ms
snspd:
  name: SNSPD
"""


def outputs(tmp_path, argv, names):
    texts = []
    for workers in [1, 4, 8]:
        directory = tmp_path / "{}-{}".format(argv[0], workers)
        code = cli.main(
            ["--output-dir", str(directory)] + argv + ["--seed", "11", "--workers", str(workers)]
        )
        assert code == cli.EXIT_OK
        texts.append([(directory / name).read_bytes() for name in names])
    return texts


def test_simulate_is_byte_identical(tmp_path):
    path = tmp_path / "simulation.yaml"
    path.write_text(simulation)
    texts = outputs(tmp_path, ["simulate", str(path)], ["rf_spectrum.csv", "measurement.json"])
    assert texts[0] == texts[1] == texts[2]


def test_scan_is_byte_identical(tmp_path):
    path = tmp_path / "plan.yaml"
    path.write_text(plan)
    texts = outputs(
        tmp_path,
        ["scan", str(path), "tophat_input"],
        ["optical_spectrum.csv", "osa_spectrum.csv", "comparison.json"],
    )
    assert texts[0] == texts[1] == texts[2]
