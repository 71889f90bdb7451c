import numpy as np
import pytest
from hypothesis import given, strategies as st

import tomopt.smoothing as sm
from tomopt.core.errors import EmptySeries, InvalidParam, SeriesTooShort


# single smoothing

def test_ses_fixed_point():
    np.testing.assert_array_equal(sm.ses_levels([10.0], 0.5, 10.0), [10.0])


def test_ses_hand_values():
    np.testing.assert_allclose(sm.ses_levels([0.0, 1.0], 0.5, 0.0),
                               [0.0, 0.5])


def test_ses_constant_series():
    np.testing.assert_allclose(sm.ses_levels([3.0] * 20, 0.3, 3.0),
                               [3.0] * 20, rtol=0, atol=1e-15)


def test_error_form_hand_value():
    np.testing.assert_allclose(sm.ses_error_form([1.0], 0.5, 0.0), [0.5])


def test_error_form_perfect_forecast():
    np.testing.assert_array_equal(sm.ses_error_form([2.0, 2.0], 0.4, 2.0),
                                  [2.0, 2.0])


@given(
    st.lists(st.floats(-100, 100), min_size=1, max_size=60),
    st.floats(0.01, 0.99),
    st.floats(-100, 100),
)
def test_two_forms_agree(series, alpha, l0):
    levels = sm.ses_levels(series, alpha, l0)
    forecasts = sm.ses_error_form(series, alpha, l0)
    np.testing.assert_allclose(forecasts, levels, rtol=0, atol=1e-12)


def test_ses_errors():
    with pytest.raises(EmptySeries):
        sm.ses_levels([], 0.5, 0.0)
    with pytest.raises(InvalidParam):
        sm.ses_levels([1.0], 1.0, 0.0)
    with pytest.raises(InvalidParam):
        sm.ses_levels([1.0, float("nan")], 0.5, 0.0)


# Holt

LINEAR = 2.0 + 3.0 * np.arange(1, 101)


def test_holt_converges_on_linear_series():
    result = sm.holt(LINEAR, 0.5, 0.5, l0=LINEAR[0], b0=3.0)
    assert abs(result.trends[-1] - 3.0) <= 1e-6
    errors = sm.one_step_errors(LINEAR, result.forecasts)
    assert abs(errors[-1]) <= 1e-6
    assert abs(errors[-1]) < abs(errors[0])


def test_holt_exact_init_is_exact():
    result = sm.holt(LINEAR, 0.3, 0.7, l0=2.0, b0=3.0)
    np.testing.assert_allclose(result.trends, 3.0, rtol=0, atol=1e-12)
    np.testing.assert_allclose(result.forecasts[:-1], LINEAR[1:],
                               rtol=1e-13)


def test_holt_constant_series_has_no_trend():
    result = sm.holt([4.0] * 30, 0.2, 0.6, l0=4.0, b0=0.0)
    np.testing.assert_array_equal(result.trends, np.zeros(30))


def test_holt_single_point():
    result = sm.holt([5.0], 0.5, 0.5, l0=5.0, b0=0.0)
    np.testing.assert_array_equal(result.forecasts, [5.0])


def test_default_holt_init():
    assert sm.default_holt_init([5.0, 8.0, 11.0]) == (5.0, 3.0)
    assert sm.default_holt_init([5.0]) == (5.0, 0.0)


# Holt-Winters

def test_zero_seasonality_reduces_to_holt():
    y = LINEAR[:24]
    params = sm.SmoothingParams(0.4, 0.6, 0.3, cycle=4, l0=2.0, b0=3.0,
                                s0=[0.0] * 4)
    hw = sm.holt_winters_additive(y, params)
    plain = sm.holt(y, 0.4, 0.6, l0=2.0, b0=3.0)
    assert np.max(np.abs(hw.seasonals)) <= 1e-12
    np.testing.assert_allclose(hw.forecasts, plain.forecasts, rtol=0,
                               atol=1e-10)


def test_pure_seasonal_series_is_forecast_exactly():
    pattern = np.array([1.0, -2.0, 3.0, -2.0])
    y = np.tile(pattern, 5)
    params = sm.SmoothingParams(0.5, 0.5, 0.5, cycle=4, l0=0.0, b0=0.0,
                                s0=pattern)
    hw = sm.holt_winters_additive(y, params)
    errors = sm.one_step_errors(y, hw.forecasts)
    np.testing.assert_allclose(errors, 0.0, atol=1e-12)


def test_constant_series_constant_forecasts():
    params = sm.SmoothingParams(0.5, 0.5, 0.5, cycle=3, l0=7.0, b0=0.0,
                                s0=[0.0] * 3)
    hw = sm.holt_winters_additive([7.0] * 12, params)
    np.testing.assert_allclose(hw.forecasts, 7.0, rtol=0, atol=1e-12)


def test_default_holt_winters_init():
    y = [1.0, 3.0, 2.0, 5.0, 7.0, 6.0]
    l0, b0, s0 = sm.default_holt_winters_init(y, 3)
    assert l0 == pytest.approx(2.0)
    assert b0 == pytest.approx(4.0 / 3.0)
    np.testing.assert_allclose(s0, [-1.0, 1.0, 0.0])


def test_holt_winters_needs_two_cycles():
    params = sm.SmoothingParams(0.5, 0.5, 0.5, cycle=4)
    with pytest.raises(SeriesTooShort):
        sm.holt_winters_additive([1.0] * 7, params)


@pytest.mark.parametrize("kwargs", [
    {"alpha": 0.0, "beta": 0.5, "gamma": 0.5, "cycle": 4},
    {"alpha": 0.5, "beta": 0.5, "gamma": 0.5, "cycle": 1},
    {"alpha": 0.5, "beta": 0.5, "gamma": 0.5, "cycle": 3, "s0": [0.0]},
])
def test_smoothing_params_validation(kwargs):
    with pytest.raises(InvalidParam):
        sm.SmoothingParams(**kwargs)


def test_one_step_errors_alignment():
    errors = sm.one_step_errors([1.0, 2.0, 4.0], [1.5, 3.0, 9.9])
    np.testing.assert_array_equal(errors, [0.5, 1.0])


@given(
    st.lists(st.floats(-1e6, 1e6), min_size=1, max_size=40),
    st.floats(0.01, 0.99),
    st.floats(-1e6, 1e6),
)
def test_ses_level_between_previous_level_and_observation(ys, alpha, l0):
    levels = sm.ses_levels(ys, alpha, l0)
    previous = np.concatenate([[l0], levels[:-1]])
    lo = np.minimum(previous, ys)
    hi = np.maximum(previous, ys)
    tol = 1e-12 * np.maximum(1.0, np.maximum(np.abs(lo), np.abs(hi)))
    assert np.all(levels >= lo - tol)
    assert np.all(levels <= hi + tol)
