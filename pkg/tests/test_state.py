import math

import numpy as np
import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from circle_wigner import DomainError, StateParams, coeff, density, eval_psi, make_state, normalize
from circle_wigner.quadrature import QuadratureConfig, integrate
from circle_wigner.state import log_gaussian_sum, reduce_angle


# -- parameters ---------------------------------------------------------------

@pytest.mark.parametrize("kwargs", [
    dict(lam=0.0), dict(lam=-1.0), dict(lam=math.inf), dict(lam=1.0, eps=1.0),
    dict(lam=1.0, eps=-0.1), dict(lam=1.0, theta_bar=4.0), dict(lam=1.0, l=0.5),
])
def test_params_rejects_invalid(kwargs):
    with pytest.raises(DomainError):
        StateParams(**kwargs)


def test_from_q_round_trip():
    p = StateParams.from_q(0.5)
    assert p.lam == pytest.approx(1.0 / (2.0 * math.log(2.0)))
    assert normalize(p).q == pytest.approx(0.5, rel=1e-15)
    with pytest.raises(DomainError):
        StateParams.from_q(1.0)


# -- normalization ------------------------------------------------------------

def test_small_lambda_normalization():
    s = make_state(0.001)
    assert s.norm_N**2 == pytest.approx(0.001, rel=1e-14)


def test_large_lambda_normalization():
    for eps in (0.0, 0.3, 0.5):
        s = make_state(100.0, eps=eps)
        assert s.norm_N**2 == pytest.approx(math.sqrt(100.0 / np.pi), rel=1e-12)


@pytest.mark.parametrize("lam", [0.05, 0.2, 1 / np.pi, 1.0, 5.0])
@pytest.mark.parametrize("eps", [0.0, 0.25, 0.5, 0.9])
def test_gaussian_sum_matches_direct_sum(lam, eps):
    n = np.arange(-200, 201)
    direct = math.log(np.exp(-((n - eps) ** 2) / lam).sum())
    assert log_gaussian_sum(lam, eps) == pytest.approx(direct, rel=1e-13, abs=1e-14)


def test_normalization_independent_of_l_and_phase():
    a = make_state(0.7, eps=0.2)
    b = make_state(0.7, eps=0.2, l=7, theta_bar=1.0)
    assert a.log_norm == b.log_norm
    np.testing.assert_allclose(b.probabilities, a.probabilities, rtol=1e-15)


@settings(max_examples=40, deadline=None)
@given(lam=st.floats(1e-3, 50.0), eps=st.floats(0.0, 0.999), l=st.integers(-20, 20))
def test_probabilities_sum_to_one(lam, eps, l):
    s = make_state(lam, eps=eps, l=l)
    assert abs(s.probabilities.sum() - 1.0) < 1e-12


# -- coefficients -------------------------------------------------------------

def test_limit_state_coefficients():
    s = make_state(1e-3, eps=0.5, l=3)
    assert abs(coeff(s, 3)) ** 2 == pytest.approx(0.5, rel=1e-14)
    assert abs(coeff(s, 4)) ** 2 == pytest.approx(0.5, rel=1e-14)
    others = np.abs(coeff(s, np.array([0, 1, 2, 5, 6, 7]))) ** 2
    assert np.all(others < 1e-100)


def test_coefficients_real_positive_without_phase():
    c = coeff(make_state(0.8, eps=0.4), np.arange(-10, 11))
    assert np.all(c.imag == 0) and np.all(c.real > 0)


def test_coefficient_phase():
    s = make_state(0.8, eps=0.4, theta_bar=0.3)
    n = np.arange(-5, 6)
    np.testing.assert_allclose(np.angle(coeff(s, n) * np.exp(0.3j * n)), 0.0, atol=1e-14)


def test_coeff_matches_window():
    s = make_state(2.0, eps=0.6, l=-4, theta_bar=-2.0)
    np.testing.assert_allclose(coeff(s, s.n_values), s.coeffs, rtol=1e-14)


def test_coeff_rejects_fractional_index():
    with pytest.raises(DomainError):
        coeff(make_state(1.0), 0.5)


def test_small_lambda_branching():
    for eps in (0.5 - 1e-3, 0.5 + 1e-3):
        s = make_state(1e-4, eps=eps)
        assert s.probabilities.max() > 1 - 1e-6


# -- wave function ------------------------------------------------------------

def test_limit_state_psi_at_zero():
    s = make_state(1e-3, eps=0.5)
    # the resummed series cancels catastrophically at small lam, so it is not tried here
    for rep in ("auto", "fourier", "theta_fn"):
        assert eval_psi(s, 0.0, rep) == pytest.approx(1 / math.sqrt(np.pi), rel=1e-12)


def test_limit_state_closed_form():
    s = make_state(1e-3, eps=0.5, l=2)
    th = np.linspace(-np.pi, np.pi, 33)
    expected = (np.exp(2j * th) + np.exp(3j * th)) / math.sqrt(4 * np.pi)
    np.testing.assert_allclose(eval_psi(s, th), expected, atol=1e-13)


@settings(max_examples=50, deadline=None)
@given(theta=st.floats(-20, 20), k=st.integers(-3, 3))
def test_psi_two_pi_periodic(theta, k):
    s = make_state(0.3, eps=0.7, l=1)
    a = eval_psi(s, theta)
    assert abs(eval_psi(s, theta + 2 * np.pi * k) - a) <= 1e-12 * max(abs(a), 1e-3)


@pytest.mark.parametrize("lam", [0.05, 1 / (2 * np.pi), 0.5, 5.0])
def test_representations_agree(lam):
    s = make_state(lam, eps=0.3, l=2)
    th = np.linspace(-np.pi, np.pi, 41)
    ref = eval_psi(s, th, "fourier")
    scale = np.abs(ref).max()
    for rep in ("theta_fn", "poisson"):
        assert np.abs(eval_psi(s, th, rep) - ref).max() < 1e-12 * scale


def test_fourier_vs_poisson_pointwise(rng):
    s = make_state(0.2, eps=0.45)
    th = rng.uniform(-np.pi, np.pi, 20)
    a, b = eval_psi(s, th, "fourier"), eval_psi(s, th, "poisson")
    assert np.all(np.abs(a - b) < 1e-12 * np.abs(a))


def test_phase_covariance(rng):
    a = rng.uniform(-np.pi, np.pi)
    s0 = make_state(0.6, eps=0.2, l=1)
    sa = make_state(0.6, eps=0.2, l=1, theta_bar=a)
    th = rng.uniform(-np.pi, np.pi, 25)
    np.testing.assert_allclose(np.abs(eval_psi(sa, th)), np.abs(eval_psi(s0, th - a)), rtol=1e-12)


def test_unknown_representation():
    with pytest.raises(DomainError):
        eval_psi(make_state(1.0), 0.0, "laurent")


def test_reduce_angle_range():
    x = reduce_angle(np.array([-7.0, -np.pi, 0.0, np.pi, 10.0]))
    assert np.all((x >= -np.pi) & (x < np.pi))


# -- density ------------------------------------------------------------------

@pytest.mark.parametrize("lam,eps", [(1e-3, 0.5), (0.1, 0.0), (0.5, 0.3), (3.0, 0.8), (40.0, 0.5)])
def test_density_matches_psi_and_integrates_to_one(lam, eps):
    s = make_state(lam, eps=eps, theta_bar=0.4)
    th = np.linspace(-np.pi, np.pi, 57)
    rho = density(s, th)
    np.testing.assert_allclose(rho, np.abs(eval_psi(s, th)) ** 2, rtol=1e-12, atol=1e-14 * rho.max())
    cfg = QuadratureConfig(abs_tolerance=1e-13)
    total = integrate(lambda t: density(s, t), -np.pi, 0.4, cfg) + integrate(lambda t: density(s, t), 0.4, np.pi, cfg)
    assert total == pytest.approx(1.0, abs=1e-11)


def test_limit_state_density():
    s = make_state(1e-3, eps=0.5)
    th = np.linspace(-np.pi, np.pi, 21)
    np.testing.assert_allclose(density(s, th), (1 + np.cos(th)) / (2 * np.pi), atol=1e-14)


def test_density_independent_of_l():
    th = np.linspace(-np.pi, np.pi, 31)
    a = density(make_state(0.4, eps=0.35), th)
    for l in (5, 9):
        np.testing.assert_array_equal(density(make_state(0.4, eps=0.35, l=l), th), a)


def test_tiny_lambda_state_is_finite():
    # exp(eps^2 / (2 lam)) and N both leave double range here
    s = make_state(1e-5, eps=0.7)
    assert s.norm_N == math.inf and np.isfinite(s.log_norm)
    th = np.linspace(-np.pi, np.pi, 9)
    # exponents of order eps^2/(2 lam) = 2.4e4 cancel, costing about four digits
    np.testing.assert_allclose(np.abs(eval_psi(s, th)) ** 2, 1 / (2 * np.pi), rtol=1e-10)
