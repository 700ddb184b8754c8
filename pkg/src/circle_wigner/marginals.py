"""Marginal distributions of the two circular Wigner functions.

Momentum marginals (over theta) are sinc-weighted sums of ``|c(n)|^2``;
they reduce to ``|c(p)|^2`` at integer p. Angle marginals over real p have
closed forms; over integer p the sum only converges in the Cesàro sense,
which :func:`cesaro_marginal_theta` evaluates numerically from point
Wigner values.
"""
from __future__ import annotations

import math

import numpy as np

from .errors import DomainError
from .quadrature import QuadratureConfig, integrate
from .special_fn import sinc_pi
from .state import NormalizedState, density
from .wigner import _check_variant, full_integer_p_grid, series_grid


def _sinc_sum(state, p, scale):
    p = np.asarray(p, dtype=float)
    n = state.n_values.astype(float)
    out = sinc_pi(scale * np.subtract.outer(n, p)).T @ state.probabilities
    return out[()] if np.ndim(out) == 0 else out


def marginal_p_full(state: NormalizedState, p):
    """``W[p] = sum_n |c(n)|^2 sinc(2 pi (n - p))``."""
    return _sinc_sum(state, p, 2.0)


def marginal_p_half(state: NormalizedState, p):
    """``W_1/2[p] = sum_n |c(n)|^2 sinc(pi (n - p))``."""
    return _sinc_sum(state, p, 1.0)


def marginal_p(state, p, variant="full"):
    _check_variant(variant)
    return marginal_p_full(state, p) if variant == "full" else marginal_p_half(state, p)


def marginal_theta_full(state: NormalizedState, theta):
    """Integer-p angle marginal ``(|psi(theta)|^2 + |psi(theta + pi)|^2) / 2``."""
    theta = np.asarray(theta, dtype=float)
    return 0.5 * (density(state, theta) + density(state, theta + np.pi))


def marginal_theta_half(state: NormalizedState, theta):
    """Angle marginal of the half-angle function, ``|psi(theta)|^2``."""
    return density(state, theta)


def marginal_theta(state, theta, variant="full"):
    _check_variant(variant)
    if variant == "full":
        return marginal_theta_full(state, theta)
    return marginal_theta_half(state, theta)


def cesaro_partial_sums(state: NormalizedState, theta, M, variant="full"):
    """Partial sums ``sigma_k(theta) = sum_{|p| <= k} W[theta, p]`` for k < M.

    Returns an array of shape ``(M,) + shape(theta)``.
    """
    _check_variant(variant)
    if M < 1:
        raise DomainError(f"Cesàro order must be >= 1, got {M}")
    theta = np.asarray(theta, dtype=float)
    flat = np.atleast_1d(theta).ravel()
    ps = np.arange(-(M - 1), M)
    if variant == "full":
        W, _ = full_integer_p_grid(state, flat, ps)
    else:
        W, _ = series_grid(state, flat, ps, "half")
    centre = M - 1
    partial = np.empty((M, flat.size))
    running = W[:, centre].copy()
    partial[0] = running
    for k in range(1, M):
        running = running + W[:, centre - k] + W[:, centre + k]
        partial[k] = running
    return partial.reshape((M,) + theta.shape)


def cesaro_marginal_theta(state: NormalizedState, theta, M, variant="full"):
    """Fejér (Cesàro) mean ``sigma(M, theta) = (1/M) sum_{k<M} sigma_k(theta)``.

    Tends to :func:`marginal_theta_full` (``variant="full"``) or
    :func:`marginal_theta_half` (``variant="half"``) as M grows, with an
    error of order 1/M.
    """
    out = cesaro_partial_sums(state, theta, M, variant).mean(axis=0)
    return out[()] if out.ndim == 0 else out


def marginal_p_normalization(state: NormalizedState, variant="full", p_cutoff=200.0,
                             center=None, cfg: QuadratureConfig | None = None,
                             tail_correction=False):
    """Integral of the momentum marginal over ``|p - center| <= p_cutoff``.

    Tends to 1/2 for ``variant="full"`` and 1 for ``variant="half"``. The
    integrand decays only like 1/p, so the truncation error is O(1/P); with
    ``tail_correction=True`` the leading asymptotic contribution of the two
    tails, ``sum_n |c(n)|^2 cos(a (P -+ d_n)) / (a^2 (P -+ d_n))``, is added.

    ``center`` defaults to ``l``.
    """
    _check_variant(variant)
    if p_cutoff < 0:
        raise DomainError("p_cutoff must be nonnegative")
    if p_cutoff == 0:
        return 0.0
    if center is None:
        center = float(state.l)
    cfg = cfg or QuadratureConfig(abs_tolerance=1e-11, max_panels=1 << 16)
    # panels no wider than a quarter period of the fastest oscillation
    min_panels = max(2, math.ceil(4.0 * p_cutoff))

    def f(p):
        return marginal_p(state, p, variant)

    total = float(integrate(f, center - p_cutoff, center + p_cutoff, cfg, min_panels))
    if tail_correction:
        total += _tail_estimate(state, variant, p_cutoff, center)
    return total


def _tail_estimate(state, variant, P, center):
    a = 2.0 * np.pi if variant == "full" else np.pi
    d = state.n_values - center
    w = state.probabilities
    # int_X^inf sin(a u)/(a u) du ~ cos(a X) / (a^2 X) for large X
    upper = P - d
    lower = P + d
    return float(np.sum(w * (np.cos(a * upper) / (a**2 * upper) + np.cos(a * lower) / (a**2 * lower))))
