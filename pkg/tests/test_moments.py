import math

import mpmath
import numpy as np
import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from circle_wigner import (
    CurvePoint,
    DomainError,
    log_var_L,
    make_state,
    mean_L,
    mean_L2,
    uncertainty_curve,
    var_L,
    var_L_asymptotic,
    var_theta,
    var_theta_asymptotic,
)
from circle_wigner.moments import default_lambdas, var_L_small_lambda


def _var_L_oracle(lam, eps, dps=40):
    # two-sum formula in extended precision over a generous index range
    with mpmath.workdps(dps):
        lam, eps = mpmath.mpf(lam), mpmath.mpf(eps)
        n = range(-300, 301)
        w = [mpmath.exp(-(k - eps) ** 2 / lam) for k in n]
        S = mpmath.fsum(w)
        m1 = mpmath.fsum(k * x for k, x in zip(n, w)) / S
        m2 = mpmath.fsum(k * k * x for k, x in zip(n, w)) / S
        return m2 - m1**2


def _var_theta_oracle(state, marginal):
    # int theta^2 cos(k theta) over [-pi, pi] = 4 pi (-1)^k / k^2, 2 pi^3/3 at k = 0
    c = state.coeffs
    n = state.n_values
    k = np.subtract.outer(n, n)
    kk = np.where(k == 0, 1, k)
    moment = np.where(k == 0, 2 * np.pi**3 / 3, 4 * np.pi * (-1.0) ** kk / kk**2)
    if marginal == "full":
        # averaging with the antipodal density keeps even k only
        moment = np.where(k % 2 == 0, moment, 0.0)
    return float((np.outer(c, c.conj()) * moment).real.sum() / (2 * np.pi))


# -- angular momentum ---------------------------------------------------------

@pytest.mark.parametrize("l", [0, 4, -3])
def test_mean_integer_lbar(l):
    assert mean_L(make_state(0.9, l=l)) == pytest.approx(l, abs=1e-14)


def test_limit_state_angular_momentum():
    s = make_state(1e-3, eps=0.5, l=2)
    assert mean_L(s) == pytest.approx(2.5, abs=1e-6)
    assert var_L(s) == pytest.approx(0.25, abs=1e-6)


@settings(max_examples=40, deadline=None)
@given(lam=st.floats(1e-3, 30.0), eps=st.floats(0.0, 0.999), l=st.integers(-10, 10))
def test_variance_positive_and_consistent(lam, eps, l):
    s = make_state(lam, eps=eps, l=l)
    v = var_L(s)
    # strict positivity lives in log space; var_L itself may underflow (exp(-1000) at eps = 0)
    assert math.isfinite(log_var_L(s)) and v >= 0
    assert mean_L2(s) - mean_L(s) ** 2 == pytest.approx(v, rel=1e-8, abs=1e-12 * (1 + l * l))


@pytest.mark.parametrize("lam,eps", [(1e-3, 0.4), (0.05, 0.1), (0.3, 0.5), (1.0, 0.25), (7.0, 0.8)])
def test_var_L_matches_extended_precision(lam, eps):
    assert var_L(make_state(lam, eps=eps)) == pytest.approx(float(_var_L_oracle(lam, eps)), rel=1e-12)


def test_var_L_small_lambda_form():
    exact = var_L(make_state(1e-3, eps=0.4))
    x = math.exp(-0.2 / 1e-3)
    assert exact == pytest.approx(x / (1 + x) ** 2, rel=0.01)
    assert var_L_small_lambda(1e-3, 0.4) == pytest.approx(x / (1 + x) ** 2, rel=1e-15)


def test_var_L_far_below_epsilon():
    # the variance is ~exp(-800); only the log survives in double precision
    s = make_state(1e-3, eps=0.1)
    assert log_var_L(s) == pytest.approx(-0.8 / 1e-3, rel=1e-9)


def test_var_L_independent_of_l():
    assert var_L(make_state(0.7, eps=0.3)) == pytest.approx(var_L(make_state(0.7, eps=0.3, l=11)), rel=1e-12)


def test_var_L_asymptotic_values():
    val, lo, hi = var_L_asymptotic(2.0, 0.0)
    assert val == pytest.approx(1 - 8 * np.pi**2 * math.exp(-2 * np.pi**2), rel=1e-15)
    assert val == pytest.approx(0.9999997888, abs=1e-10)
    assert lo <= val <= hi
    assert var_L_asymptotic(40.0, 0.3)[0] == pytest.approx(20.0, rel=1e-15)
    with pytest.raises(DomainError):
        var_L_asymptotic(0.5, 0.0)


@pytest.mark.parametrize("eps", [0.0, 0.25, 0.5])
def test_var_L_inside_band_at_two(eps):
    _, lo, hi = var_L_asymptotic(2.0, eps)
    assert lo - 1e-10 <= var_L(make_state(2.0, eps=eps)) <= hi + 1e-10


def test_half_eps_delta_L_at_least_half():
    for lam in default_lambdas(21):
        assert math.sqrt(var_L(make_state(lam, eps=0.5))) >= 0.5 - 1e-12


def test_variance_slope_large_lambda():
    h = 1e-3
    for lam in (5.0, 10.0, 30.0):
        slope = (var_L(make_state(lam + h, eps=0.3)) - var_L(make_state(lam - h, eps=0.3))) / (2 * h)
        assert slope == pytest.approx(0.5, rel=0.05)


# -- angle --------------------------------------------------------------------

@pytest.mark.parametrize("lam,eps", [(1e-3, 0.5), (0.1, 0.2), (0.5, 0.3), (3.0, 0.7), (50.0, 0.5)])
@pytest.mark.parametrize("marginal", ["full", "half"])
def test_var_theta_matches_cosine_moments(lam, eps, marginal):
    s = make_state(lam, eps=eps)
    assert var_theta(s, marginal) == pytest.approx(_var_theta_oracle(s, marginal), rel=1e-11, abs=1e-13)


def test_var_theta_limit_values():
    s = make_state(1e-3, eps=0.5)
    assert var_theta(s, "half") == pytest.approx(np.pi**2 / 3 - 2, rel=1e-9)
    assert var_theta(s, "full") == pytest.approx(np.pi**2 / 3, rel=1e-9)


def test_var_theta_rejects_phase():
    with pytest.raises(DomainError):
        var_theta(make_state(0.5, theta_bar=0.1))


def test_var_theta_independent_of_l():
    a, b = make_state(0.4, eps=0.5), make_state(0.4, eps=0.5, l=6)
    for marginal in ("full", "half"):
        assert var_theta(a, marginal) == pytest.approx(var_theta(b, marginal), rel=1e-12)


def test_var_theta_asymptotic_values():
    assert var_theta_asymptotic(0.2, "half", "small") == pytest.approx(1.269655, abs=1e-6)
    assert var_theta_asymptotic(10.0, "full", "large") == pytest.approx(4.424303079, rel=1e-9)
    assert var_theta_asymptotic(50.0, "half", "large") == pytest.approx(0.01)
    assert var_theta_asymptotic(1e-3, "full", "small") == pytest.approx(np.pi**2 / 3)
    with pytest.raises(DomainError):
        var_theta_asymptotic(1.0, "quarter", "small")
    with pytest.raises(DomainError):
        var_theta_asymptotic(-1.0, "full", "small")


@pytest.mark.parametrize("marginal,regime,lams", [
    ("half", "small", (0.05, 0.1, 0.15)),
    ("full", "small", (0.05, 0.1, 0.15)),
    ("half", "large", (5.0, 20.0, 80.0)),
    ("full", "large", (5.0, 20.0, 80.0)),
])
def test_var_theta_asymptotic_regimes(marginal, regime, lams):
    for lam in lams:
        exact = var_theta(make_state(lam, eps=0.5), marginal)
        assert var_theta_asymptotic(lam, marginal, regime) == pytest.approx(exact, rel=0.02)


# -- curve --------------------------------------------------------------------

def test_curve_point_invariants():
    p = CurvePoint(1.0, 0.7, 1.9, 1.1)
    assert p.gap == pytest.approx(0.8)
    with pytest.raises(ValueError):
        CurvePoint(1.0, -0.1, 1.0, 0.5)
    with pytest.raises(ValueError):
        CurvePoint(1.0, 0.5, 1.0, 1.5)


def test_uncertainty_curve_shape():
    pts = uncertainty_curve(0.5, 0, default_lambdas(15))
    dL = np.array([p.delta_L for p in pts])
    assert np.all(np.diff(dL) >= -1e-12)
    assert all(p.delta_theta_half <= p.delta_theta_full for p in pts)
    assert max(p.delta_theta_full for p in pts) <= np.pi / math.sqrt(2)
    first = pts[0]
    assert first.delta_L == pytest.approx(0.5, abs=1e-6)
    assert first.gap == pytest.approx(np.pi / math.sqrt(3) - math.sqrt(np.pi**2 / 3 - 2), abs=2e-3)


def test_default_curve_grid():
    lams = default_lambdas()
    assert len(lams) == 41 and lams[0] == pytest.approx(1e-3) and lams[-1] == pytest.approx(100.0)
