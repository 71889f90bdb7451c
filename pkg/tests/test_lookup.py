import shutil

import pytest

import tomopt.data.lookup as lookup
from tomopt.core.config import ROOT
from tomopt.core.errors import InvalidConfig


def test_bundled_registry():
    boston = lookup.bundled_dataset("Boston")
    assert boston.target_column == "MEDV"
    assert len(boston.columns) == 14
    assert lookup.bundled_dataset("diabetes").rows == 442
    assert lookup.bundled_dataset("california").target_column == \
        "MedHouseVal"


def test_unknown_name():
    with pytest.raises(InvalidConfig):
        lookup.bundled_dataset("mnist")


def test_load_bundled_from_configured_dir(tmp_path, monkeypatch,
                                          fixtures_dir):
    shutil.copy(fixtures_dir / "boston_head.csv", tmp_path / "boston.csv")
    monkeypatch.setenv("DATA_DIR", str(tmp_path))
    ds = lookup.load_dataset("boston")
    assert ds.name == "boston"
    assert len(ds) == 5 and ds.n_features == 13


def test_path_needs_target(fixtures_dir):
    with pytest.raises(InvalidConfig):
        lookup.load_dataset(fixtures_dir / "tiny.csv")
    assert len(lookup.load_dataset(fixtures_dir / "tiny.csv", "target")) == 3


def test_committed_diabetes(monkeypatch):
    monkeypatch.setenv("DATA_DIR", str(ROOT / "data"))
    ds = lookup.load_dataset("diabetes")
    assert len(ds) == 442 and ds.n_features == 10
    assert ds.target_name == "Y"
    assert ds.targets[0] == 151
