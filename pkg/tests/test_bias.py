import numpy as np
import pytest
from hypothesis import assume, given, strategies as st

import tomopt.verify as vf
from tomopt.core.errors import DegenerateBetas, InvalidParam

# relative gap between the exact forecast factor and 1 - (b1*b2)**t for
# b1 = 0.9, b2 = 0.99, evaluated directly in double precision
FROZEN_GAPS = {
    1: 0.0091743119266055138,
    5: 0.025352214779197035,
    10: 0.041487568214038387,
    50: 0.064816647257356641,
    100: 0.04065086502822781,
}
FROZEN_FORECAST = {
    1: 0.11,
    5: 0.44956556110000001,
    10: 0.71306640822320055,
    50: 1.0614964794515929,
    100: 1.0406407474760393,
}


def test_trend_factor_examples():
    assert vf.trend_bias_factor(0.99, 1) == pytest.approx(0.01)
    assert vf.trend_bias_factor(0.5, 2) == 0.25
    assert vf.trend_bias_factor(0.99, 10000) <= 1e-40


def test_level_factor_first_step():
    assert vf.level_bias_factor(0.9, 0.99, 1) == pytest.approx(0.1)
    assert vf.level_bias_factor(0.7, 0.2, 1) == pytest.approx(0.3)


def test_level_factor_value():
    assert vf.level_bias_factor(0.9, 0.99, 10) == pytest.approx(
        0.70393123574836414, abs=1e-12
    )


@pytest.mark.parametrize("beta1,beta2", [
    (0.9, 0.99), (0.5, 0.9), (0.8, 0.3), (0.95, 0.7), (0.1, 0.6),
])
def test_closed_form_matches_bruteforce(beta1, beta2):
    for t in range(1, 101):
        assert vf.level_bias_factor(beta1, beta2, t) == pytest.approx(
            vf.series_ab_bruteforce(beta1, beta2, t), abs=1e-12
        )


def test_equal_betas_use_limit_or_raise():
    for t in (1, 2, 7, 40):
        assert vf.level_bias_factor(0.9, 0.9, t) == pytest.approx(
            vf.series_ab_bruteforce(0.9, 0.9, t), abs=1e-12
        )
    with pytest.raises(DegenerateBetas):
        vf.level_bias_factor(0.9, 0.9, 5, strict=True)


def test_frozen_approximation_gaps():
    table = vf.approximation_gap_table(0.9, 0.99, FROZEN_GAPS)
    assert list(table.index) == list(FROZEN_GAPS)
    for t, gap in FROZEN_GAPS.items():
        assert abs(table.loc[t, "relative_gap"] - gap) <= 1e-12
        assert abs(table.loc[t, "forecast_factor"] - FROZEN_FORECAST[t]) \
            <= 1e-12


def test_gap_at_ten_steps_is_about_four_percent():
    gap = vf.bias_factors(0.9, 0.99, 10).relative_gap
    assert 0.04 < gap < 0.043


@pytest.mark.parametrize("beta2", [0.5, 0.9, 0.99])
def test_unroll_trend_is_exact(beta2):
    c = 1.3
    _, trends, _ = vf.constant_gradient_unroll(0.9, beta2, c, 200)
    expected = np.array(
        [vf.trend_bias_factor(beta2, t) * c for t in range(1, 201)]
    )
    np.testing.assert_allclose(trends, expected, rtol=1e-14, atol=0)


def test_unroll_forecast_matches_factor():
    c = -2.0
    _, _, forecasts = vf.constant_gradient_unroll(0.9, 0.99, c, 200)
    expected = [vf.forecast_factor(0.9, 0.99, t) * c for t in range(1, 201)]
    np.testing.assert_allclose(forecasts, expected, rtol=0, atol=1e-12)


def test_unroll_zero_gradient():
    for seq in vf.constant_gradient_unroll(0.9, 0.99, 0.0, 50):
        assert not seq.any()


@given(
    st.floats(0.05, 0.95),
    st.floats(0.05, 0.95),
    st.integers(1, 60),
)
def test_telescoping_identity(x, y, n):
    assume(abs(x - y) > 0.01)
    assert vf.telescoping_closed(x, y, n) == pytest.approx(
        vf.telescoping_sum(x, y, n), rel=1e-10
    )


def test_telescoping_needs_distinct_values():
    with pytest.raises(DegenerateBetas):
        vf.telescoping_closed(0.5, 0.5, 3)


@pytest.mark.parametrize("call", [
    lambda: vf.trend_bias_factor(0.99, 0),
    lambda: vf.trend_bias_factor(1.0, 3),
    lambda: vf.level_bias_factor(0.0, 0.5, 3),
    lambda: vf.approx_factor(0.9, 0.99, 2.5),
])
def test_invalid_arguments(call):
    with pytest.raises(InvalidParam):
        call()


def test_render_report_lists_every_step():
    text = vf.render_report(0.9, 0.99, [1, 5, 10])
    assert "relative_gap" in text
    assert "beta1=0.9" in text
    assert len(text.strip().splitlines()) == 1 + 2 + 3
