import numpy as np
import pytest

import tomopt.data as data
from tomopt.core.errors import InvalidParam, TooFewRows


def make_dataset(n=10, seed=0):
    rng = np.random.default_rng(seed)
    features = rng.normal(5.0, 3.0, size=(n, 4))
    features[:, 2] = 7.0  # constant column
    return data.Dataset("toy", features, rng.normal(size=n),
                        ["a", "b", "c", "d"])


def test_ten_rows_eighty_percent():
    split = data.split_normalize(make_dataset(10), 0.8, seed=1)
    assert len(split.train) == 8 and len(split.test) == 2


def test_split_is_seeded_permutation():
    ds = make_dataset(25)
    a = data.split_normalize(ds, 0.8, seed=3)
    b = data.split_normalize(ds, 0.8, seed=3)
    np.testing.assert_array_equal(a.train_index, b.train_index)
    np.testing.assert_array_equal(a.train.features, b.train.features)
    both = np.sort(np.concatenate([a.train_index, a.test_index]))
    np.testing.assert_array_equal(both, np.arange(25))


def test_train_columns_standardized():
    split = data.split_normalize(make_dataset(40), 0.8, seed=2)
    x = split.train.features
    live = [0, 1, 3]
    assert np.all(np.abs(x[:, live].mean(axis=0)) <= 1e-10)
    assert np.all(np.abs(x[:, live].std(axis=0) - 1) <= 1e-10)
    assert not x[:, 2].any() and not split.test.features[:, 2].any()
    assert abs(split.train.targets.mean()) <= 1e-10


def test_denormalize_round_trip():
    ds = make_dataset(30)
    split = data.split_normalize(ds, 0.7, seed=4)
    back = data.denormalize_features(split, split.test.features)
    live = [0, 1, 3]
    np.testing.assert_allclose(back[:, live],
                               ds.features[split.test_index][:, live],
                               rtol=0, atol=1e-12)
    y = data.denormalize_targets(split, split.train.targets)
    np.testing.assert_allclose(y, ds.targets[split.train_index], atol=1e-12)


def test_labels_left_alone():
    ds = data.Dataset("cls", np.arange(12.0).reshape(6, 2), [0, 1, 2] * 2,
                      ["x", "y"])
    split = data.split_normalize(ds, 0.5, seed=0, standardize_targets=False)
    assert set(split.train.targets) | set(split.test.targets) <= {0, 1, 2}
    assert split.target_std == 1.0


def test_split_errors():
    with pytest.raises(TooFewRows):
        data.split_normalize(make_dataset(1), 0.8, seed=0)
    with pytest.raises(InvalidParam):
        data.split_normalize(make_dataset(10), 1.0, seed=0)


def test_batches():
    full = list(data.batches(5, None))
    assert len(full) == 1
    np.testing.assert_array_equal(full[0], np.arange(5))
    rng = np.random.default_rng(0)
    parts = list(data.batches(10, 4, rng))
    assert [len(p) for p in parts] == [4, 4, 2]
    np.testing.assert_array_equal(np.sort(np.concatenate(parts)),
                                  np.arange(10))
