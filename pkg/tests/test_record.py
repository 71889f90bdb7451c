import tomopt.record as record
from tomopt.record.csv import METRICS_HEADER, MetricRow


def test_metrics_csv_format(tmp_path):
    rows = [
        MetricRow("d-Tom-s0", "Tom", "d", 0, 1, "train", "mse", 0.1),
        MetricRow("d-Tom-s0", "Tom", "d", 0, 1, "test", "mse", 2.0),
    ]
    path = record.write_metrics(tmp_path / "out" / "run.csv", rows)
    content = path.read_bytes()
    assert b"\r" not in content
    lines = content.decode("utf-8").split("\n")
    assert lines[0] == ",".join(METRICS_HEADER)
    assert lines[1] == "d-Tom-s0,Tom,d,0,1,train,mse,0.10000000000000001"
    assert lines[2].endswith(",test,mse,2")
    assert lines[3] == ""


def test_format_value_keeps_doubles():
    assert float(record.format_value(1 / 3)) == 1 / 3
    assert record.format_value(0.5) == "0.5"


def test_metadata_round_trip(tmp_path):
    meta = {"run_id": "x", "seed": 3, "layer_sizes": [2, 4, 1],
            "experiment": {"optimizer": {"kind": "Tom", "epsilon": 1e-8}}}
    path = record.write_metadata(tmp_path / "x.yaml", meta)
    assert record.read_metadata(path) == meta
    assert path.read_text(encoding="utf-8").startswith("run_id: x\n")
