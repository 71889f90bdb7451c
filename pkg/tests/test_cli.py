import dataclasses

import pandas as pd
import pytest
import yaml

import tomopt.data.fetch as fetch
import tomopt.data.lookup as lookup
from tomopt.cli.tomopt_cli import main


def write_config(path, mapping):
    path.write_text(yaml.safe_dump(mapping), encoding="utf-8")
    return path


def test_verify_bias(capsys):
    assert main(["verify-bias", "--t", "1", "10"]) == 0
    out = capsys.readouterr().out
    assert "Forecast bias factors (beta1=0.9, beta2=0.99)" in out


def test_missing_config_is_usage_error(tmp_path):
    assert main(["train", "--config", str(tmp_path / "none.yaml")]) == 1


def test_unknown_subcommand():
    with pytest.raises(SystemExit) as info:
        main(["frobnicate"])
    assert info.value.code == 1


def test_missing_forecast_csv_is_data_error(tmp_path):
    args = ["forecast", "--csv", str(tmp_path / "x.csv"), "--column", "y"]
    assert main(args) == 2


def test_forecast_writes_csv(fixtures_dir, tmp_path):
    out = tmp_path / "fc.csv"
    args = ["forecast", "--csv", str(fixtures_dir / "series.csv"),
            "--column", "sales", "--method", "holt", "--out", str(out)]
    assert main(args) == 0
    lines = out.read_text(encoding="utf-8").splitlines()
    assert lines[0] == "t,y,forecast_next"
    assert len(lines) == 13


def test_forecast_missing_column(fixtures_dir):
    args = ["forecast", "--csv", str(fixtures_dir / "series.csv"),
            "--column", "profit"]
    assert main(args) == 2


def test_gradcheck(capsys):
    assert main(["gradcheck", "--cases", "3"]) == 0
    assert capsys.readouterr().out.count("PASS") == 2


def test_train_writes_runs(tmp_path):
    out = tmp_path / "runs"
    config = write_config(tmp_path / "q.yaml", {
        "name": "q",
        "problem": {"kind": "quadratic", "dim": 3, "seed": 0},
        "optimizer": {"kind": "Tom"},
        "epochs": 5,
        "seeds": [0, 1],
        "output_dir": str(out),
    })
    assert main(["--log-level", "WARNING", "train",
                 "--config", str(config)]) == 0
    assert (out / "summary.csv").exists()
    assert (out / "q-Tom-s0.csv").exists() and (out / "q-Tom-s1.yaml").exists()


@pytest.mark.filterwarnings("ignore::RuntimeWarning")
def test_divergence_exit_code(tmp_path):
    config = write_config(tmp_path / "bad.yaml", {
        "problem": {"kind": "rosenbrock", "dim": 2},
        "optimizer": {"kind": "SGD", "alpha": 1.0},
        "epochs": 50,
        "output_dir": str(tmp_path / "runs"),
    })
    assert main(["train", "--config", str(config)]) == 3


def test_forecast_stdout_is_only_csv(fixtures_dir, capsys):
    args = ["forecast", "--csv", str(fixtures_dir / "series.csv"),
            "--column", "sales", "--method", "ses"]
    assert main(args) == 0
    lines = capsys.readouterr().out.splitlines()
    assert lines[0] == "t,y,forecast_next"
    assert len(lines) == 13


def test_verify_bias_stdout_has_no_log_lines(capsys):
    args = ["--log-level", "DEBUG", "verify-bias", "--t", "1",
            "--monte-carlo", "--trials", "500"]
    assert main(args) == 0
    out = capsys.readouterr().out
    assert out.startswith("Forecast bias factors")
    assert " INFO " not in out and " DEBUG " not in out


def test_forecast_header_only_is_data_error(tmp_path):
    path = tmp_path / "empty.csv"
    path.write_text("month,sales\n", encoding="utf-8")
    args = ["forecast", "--csv", str(path), "--column", "sales",
            "--method", "ses"]
    assert main(args) == 2


def test_forecast_non_numeric_is_data_error(tmp_path):
    path = tmp_path / "text.csv"
    path.write_text("month,sales\n1,12\n2,lots\n3,11\n", encoding="utf-8")
    args = ["forecast", "--csv", str(path), "--column", "sales"]
    assert main(args) == 2


def test_train_summary_includes_final_epoch(tmp_path):
    out = tmp_path / "runs"
    config = write_config(tmp_path / "q.yaml", {
        "name": "q",
        "problem": {"kind": "quadratic", "dim": 3, "seed": 0},
        "optimizer": {"kind": "Adam"},
        "epochs": 60,
        "seeds": [0],
        "output_dir": str(out),
    })
    assert main(["--log-level", "WARNING", "train",
                 "--config", str(config)]) == 0
    summary = pd.read_csv(out / "summary.csv")
    assert sorted(summary["epoch"].unique()) == [50, 60]
    assert set(summary["metric"]) == {"loss"}


def test_fetch_data_writes_csv(tmp_path, monkeypatch, capsys):
    payload = b"AGE\tSEX\tBMI\tBP\tS1\tS2\tS3\tS4\tS5\tS6\tY\n" + \
        b"59\t2\t32.1\t101\t157\t93.2\t38\t4\t4.8598\t87\t151\n"
    entry = lookup.BUNDLED["diabetes"]
    monkeypatch.setitem(lookup.BUNDLED, "diabetes",
                        dataclasses.replace(entry, rows=1))
    monkeypatch.setattr(fetch, "fetch_bytes", lambda url: payload)
    args = ["fetch-data", "--name", "diabetes", "--dest", str(tmp_path)]
    assert main(args) == 0
    assert (tmp_path / "diabetes.csv").exists()
    assert capsys.readouterr().out.startswith("diabetes: ")


def test_fetch_data_row_mismatch_is_data_error(tmp_path, monkeypatch):
    payload = b"AGE\tSEX\tBMI\tBP\tS1\tS2\tS3\tS4\tS5\tS6\tY\n" + \
        b"59\t2\t32.1\t101\t157\t93.2\t38\t4\t4.8598\t87\t151\n"
    monkeypatch.setattr(fetch, "fetch_bytes", lambda url: payload)
    args = ["fetch-data", "--name", "diabetes", "--dest", str(tmp_path)]
    assert main(args) == 2
    assert not (tmp_path / "diabetes.csv").exists()
