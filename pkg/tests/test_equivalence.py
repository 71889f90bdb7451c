"""Tom with a frozen trend (beta2 = 1) is Adam."""
import time

import numpy as np
from hypothesis import given, settings, strategies as st

from tomopt.data import make_quadratic
from tomopt.optim import make_optimizer_config, run_steps


def pair(alpha=0.01, beta1=0.9, beta3=0.999):
    tom = make_optimizer_config("Tom", alpha=alpha, beta1=beta1, beta2=1.0,
                                beta3=beta3)
    adam = make_optimizer_config("Adam", alpha=alpha, beta1=beta1,
                                 beta2=beta3)
    return tom, adam


def test_quadratic_trajectories_match():
    problem = make_quadratic(10, 100.0, seed=0)
    theta0 = problem.initial_point(1)
    tom, adam = pair()
    start = time.perf_counter()
    a = run_steps(tom, theta0, lambda theta, t: problem.grad(theta), 1000)
    b = run_steps(adam, theta0, lambda theta, t: problem.grad(theta), 1000)
    elapsed = time.perf_counter() - start
    assert np.max(np.abs(a - b)) <= 1e-12
    assert elapsed < 1.0
    # the run actually made progress
    assert problem.loss(a[-1]) < problem.loss(theta0)


@settings(max_examples=20, deadline=None)
@given(
    st.integers(1, 16),
    st.integers(0, 2**32 - 1),
    st.floats(0.5, 0.99),
    st.floats(1e-4, 0.1),
)
def test_any_gradient_stream(dim, seed, beta1, alpha):
    grads = np.random.default_rng(seed).normal(size=(1000, dim))
    tom, adam = pair(alpha=alpha, beta1=beta1)
    a = run_steps(tom, np.zeros(dim), lambda theta, t: grads[t - 1], 1000)
    b = run_steps(adam, np.zeros(dim), lambda theta, t: grads[t - 1], 1000)
    assert np.max(np.abs(a - b)) <= 1e-12
