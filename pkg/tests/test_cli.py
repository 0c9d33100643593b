"""Command-line interface: dumps, schema, the property-suite verb, and an
end-to-end smoke run small enough for a unit suite."""

import csv
import warnings

import pytest

from vqekit.cli import main


def run_cli(argv, capsys):
    code = main(argv)
    out = capsys.readouterr()
    return code, out.out, out.err


# ---------------------------------------------------------------------------
# dump / schema / theorem1


def test_dump_model_golden(capsys):
    code, out, _ = run_cli(["dump", "model", "tfim_1d", "n=4", "J=-1", "h=-1.2"],
                           capsys)
    assert code == 0
    lines = out.strip().splitlines()
    assert len(lines) == 8  # 4 ring bonds + 4 transverse fields
    assert sum("Z" in ln for ln in lines) == 4
    assert sum("X" in ln for ln in lines) == 4


def test_dump_circuit_golden(capsys):
    code, out, _ = run_cli(["dump", "circuit", "hea", "n=2", "p=1"], capsys)
    assert code == 0
    lines = out.strip().splitlines()
    # one layer at n=2: RY, RY, RZ, RZ and a single entangling bond
    assert len(lines) == 5
    assert sum(ln.startswith("CNOT") for ln in lines) == 1


def test_dump_encoder(capsys):
    code, out, _ = run_cli(["dump", "encoder", "n=4", "members=0;3;5"], capsys)
    assert code == 0
    text = out.strip()
    assert text
    # 3 members -> 2 merges -> 4 parameter slots referenced
    slots = {tok for ln in text.splitlines() for tok in ln.split()
             if tok.startswith("slot=")}
    assert len(slots) == 4


def test_dump_rejects_bad_input(capsys):
    with pytest.raises(SystemExit) as exc:
        main(["dump", "model", "tfim_9d", "n=4", "J=1", "h=1"])
    assert exc.value.code == 2


def test_schema_lists_all_columns(capsys):
    from vqekit.core import SUMMARY_COLUMNS

    code, out, _ = run_cli(["schema"], capsys)
    assert code == 0
    lines = out.strip().splitlines()
    assert len(lines) == len(SUMMARY_COLUMNS)
    for column, line in zip(SUMMARY_COLUMNS, lines):
        assert line.startswith(f"{column}:")


def test_theorem1_verb_passes(capsys):
    code, out, _ = run_cli(["theorem1", "--n", "4", "--trials", "50"], capsys)
    assert code == 0
    assert out.strip().endswith("PASS")


def test_theorem1_rejects_large_n(capsys):
    with pytest.raises(SystemExit) as exc:
        main(["theorem1", "--n", "11"])
    assert exc.value.code == 2


# ---------------------------------------------------------------------------
# end-to-end smoke run


SMOKE = """
model.family = tfim_1d
model.n = 2
model.J = -1.0
model.h = -1.2
ansatz = hea_ring
depth = 2
optimizer.pretrain_max_iters = 400
optimizer.joint_iters = 100
selection.n_samples = 4
selection.n_selected = 2
"""


@pytest.fixture()
def smoke_config(tmp_path):
    cfg = tmp_path / "smoke.cfg"
    cfg.write_text(SMOKE)
    return cfg


def _read_summary(path):
    with open(path) as fh:
        return list(csv.DictReader(fh))


def test_run_smoke_end_to_end(smoke_config, tmp_path, capsys):
    out_dir = tmp_path / "results"
    with warnings.catch_warnings():
        warnings.simplefilter("ignore")
        code = main(["run", "--config", str(smoke_config), "--seeds", "2",
                     "--out", str(out_dir)])
    capsys.readouterr()
    assert code == 0
    rows = _read_summary(out_dir / "summary.csv")
    assert len(rows) == 4  # 2 arms x 2 seeds
    assert {r["arm"] for r in rows} == {"baseline", "enhanced"}
    for row in rows:
        assert float(row["energy"]) >= float(row["ground_energy"]) - 1e-9
        assert 0.0 <= float(row["fidelity"]) <= 1.0
        assert int(row["cost_c_r"]) == int(row["n_iterations"]) * int(row["n_params"])
    # a 2-qubit circuit at this depth represents the ground state exactly
    base = [float(r["fidelity"]) for r in rows if r["arm"] == "baseline"]
    assert max(base) > 0.999
    assert (out_dir / "trace-0-baseline.jsonl").exists()
    assert (out_dir / "trace-1-enhanced.jsonl").exists()
    assert (out_dir / "resources.txt").read_text().count("\n") >= 3


def test_run_is_byte_deterministic(smoke_config, tmp_path, capsys):
    outs = []
    for name in ("a", "b"):
        out_dir = tmp_path / name
        with warnings.catch_warnings():
            warnings.simplefilter("ignore")
            assert main(["run", "--config", str(smoke_config), "--seeds", "1",
                         "--out", str(out_dir)]) == 0
        outs.append((out_dir / "summary.csv").read_bytes())
    capsys.readouterr()
    assert outs[0] == outs[1]


def test_sweep_m_runs_enhanced_only(smoke_config, tmp_path, capsys):
    cfg = tmp_path / "sweep.cfg"
    cfg.write_text(SMOKE + "sweep.m_values = 1, 2\n")
    out_dir = tmp_path / "sweep"
    with warnings.catch_warnings():
        warnings.simplefilter("ignore")
        code = main(["sweep-m", "--config", str(cfg), "--seeds", "1",
                     "--out", str(out_dir)])
    capsys.readouterr()
    assert code == 0
    rows = _read_summary(out_dir / "summary.csv")
    assert len(rows) == 2
    assert all(r["arm"] == "enhanced" for r in rows)
    sizes = sorted(len(r["selected_states"].split(";")) for r in rows)
    assert sizes == [1, 2]


def test_run_requires_config(capsys):
    with pytest.raises(SystemExit) as exc:
        main(["run"])
    assert exc.value.code == 2


def test_missing_config_file_exits_2(tmp_path, capsys):
    with pytest.raises(SystemExit) as exc:
        main(["run", "--config", str(tmp_path / "nope.cfg")])
    assert exc.value.code == 2


def test_shots_column_populated(smoke_config, tmp_path, capsys):
    out_dir = tmp_path / "shots"
    with warnings.catch_warnings():
        warnings.simplefilter("ignore")
        code = main(["run", "--config", str(smoke_config), "--seeds", "1",
                     "--out", str(out_dir), "--shots", "500"])
    capsys.readouterr()
    assert code == 0
    for row in _read_summary(out_dir / "summary.csv"):
        assert row["energy_sampled"] != ""
        # a 500-shot estimate of a ~unit-scale energy lands within ~5 sigma
        assert abs(float(row["energy_sampled"]) - float(row["energy"])) < 1.0
