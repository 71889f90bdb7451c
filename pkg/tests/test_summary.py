import math

import pytest

from tomopt.core.errors import EmptyInput
from tomopt.harness import RunRecord, format_summary, summarize
from tomopt.harness.summary import SUMMARY_COLUMNS, default_epochs


def make_record(optimizer, seed, values, metric="mse"):
    record = RunRecord(f"d-{optimizer}-s{seed}", seed, optimizer, "d")
    for epoch, value in values.items():
        record.add(epoch, "train", metric, value * 2)
        record.add(epoch, "test", metric, value)
    return record


def test_mean_and_sample_std():
    records = [
        make_record("Tom", 0, {50: 0.2}),
        make_record("Tom", 1, {50: 0.4}),
        make_record("Adam", 0, {50: 0.1}),
    ]
    table = summarize(records, [50])
    assert list(table.columns) == SUMMARY_COLUMNS
    tom = table[table["optimizer"] == "Tom"].iloc[0]
    assert tom["mean"] == pytest.approx(0.3, abs=1e-15)
    assert tom["std"] == pytest.approx(math.sqrt(0.02), rel=1e-12)
    assert tom["n"] == 2 and not tom["best"]
    adam = table[table["optimizer"] == "Adam"].iloc[0]
    assert adam["std"] == 0.0 and adam["n"] == 1 and adam["best"]


def test_train_split_and_missing_epochs():
    records = [make_record("Tom", 0, {1: 0.5, 2: 0.25})]
    table = summarize(records, [2, 99], split="train")
    assert table["epoch"].tolist() == [2]
    assert table["mean"].tolist() == [0.5]


def test_accuracy_best_is_highest():
    records = [
        make_record("Tom", 0, {10: 0.9}, metric="accuracy"),
        make_record("Adam", 0, {10: 0.8}, metric="accuracy"),
    ]
    table = summarize(records, [10], metric="accuracy")
    best = table[table["best"]]
    assert best["optimizer"].tolist() == ["Tom"]


def test_default_epochs():
    assert default_epochs([make_record("Tom", 0, {1: 1.0})]) == \
        (50, 100, 150, 200)
    acc = [make_record("Tom", 0, {1: 1.0}, metric="accuracy")]
    assert default_epochs(acc) == (10, 30, 75, 100)


def test_empty_input():
    with pytest.raises(EmptyInput):
        summarize([])


def test_format_summary_marks_best_and_single_seed():
    records = [make_record("Tom", 0, {50: 0.2}),
               make_record("Adam", 0, {50: 0.3})]
    text = format_summary(summarize(records, [50]))
    assert text.startswith("d (test mse)")
    assert "0.2000 ± 0.0000 (n=1) *" in text
    assert "0.3000 ± 0.0000 (n=1)" in text


def test_each_dataset_reports_its_own_metric():
    objective = RunRecord("q-Tom-s0", 0, "Tom", "quadratic3")
    objective.add(50, "test", "loss", 0.5)
    records = [make_record("Tom", 0, {50: 0.2}), objective]
    table = summarize(records, [50])
    assert dict(zip(table["dataset"], table["metric"])) == \
        {"d": "mse", "quadratic3": "loss"}
    assert table["mean"].tolist() == [0.2, 0.5]


def test_explicit_metric_applies_to_all_datasets():
    objective = RunRecord("q-Tom-s0", 0, "Tom", "quadratic3")
    objective.add(50, "test", "loss", 0.5)
    table = summarize([make_record("Tom", 0, {50: 0.2}), objective], [50],
                      metric="loss")
    assert table["dataset"].tolist() == ["quadratic3"]
