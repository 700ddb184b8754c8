"""Angular-momentum and angle uncertainties, exact and asymptotic."""
from __future__ import annotations

import math
from dataclasses import dataclass

import numpy as np

from .errors import DomainError
from .marginals import marginal_theta
from .quadrature import QuadratureConfig, integrate
from .state import NormalizedState, make_state

_MOMENT_QUADRATURE = QuadratureConfig(abs_tolerance=1e-13, max_panels=4096)


def _log_probabilities(state):
    j = state.offsets.astype(float)
    return -state.log_sum - (j - state.eps) ** 2 / state.lam


def mean_L(state: NormalizedState):
    """``<L> = l + sum_j j |c(l+j)|^2``."""
    return state.l + float(np.sum(state.offsets * state.probabilities))


def mean_L2(state: NormalizedState):
    """``<L^2> = l^2 + sum_j j (j + 2l) |c(l+j)|^2``."""
    j = state.offsets.astype(float)
    return state.l**2 + float(np.sum(j * (j + 2 * state.l) * state.probabilities))


def log_var_L(state: NormalizedState):
    """Natural log of ``(Delta L)^2``.

    Uses the pair form ``sum_{i<j} p_i p_j (i-j)^2``, which equals
    ``<L^2> - <L>^2`` but has no cancellation, so it stays accurate (and
    strictly finite) when the variance is far below machine epsilon, e.g.
    ``exp(-(1 - 2 eps)/lam)`` for tiny ``lam``.
    """
    logp = _log_probabilities(state)
    j = state.offsets.astype(float)
    iu, ju = np.triu_indices(len(j), k=1)
    terms = logp[iu] + logp[ju] + 2.0 * np.log(np.abs(j[iu] - j[ju]))
    top = terms.max()
    return float(top + math.log(np.exp(terms - top).sum()))


def var_L(state: NormalizedState):
    """``(Delta L)^2``; depends on ``(lam, eps)`` only."""
    return math.exp(log_var_L(state))


def var_L_small_lambda(lam, eps):
    """Two-level approximation ``x / (1 + x)^2`` with ``x = exp(-(1 - 2 eps)/lam)``."""
    x = math.exp(-(1.0 - 2.0 * eps) / lam)
    return x / (1.0 + x) ** 2


def var_L_asymptotic(lam, eps):
    """Large-lambda form of ``(Delta L)^2`` and its envelope.

    Returns ``(value, lower, upper)`` with
    ``value = lam/2 - 2 pi^2 lam^2 exp(-pi^2 lam) cos(2 pi eps)`` and bounds
    ``lam/2 -+ 2 pi^2 lam^2 exp(-pi^2 lam)``. Only meaningful for ``lam >= 1``.
    """
    if lam < 1:
        raise DomainError(f"large-lambda asymptotics need lam >= 1, got {lam}")
    amp = 2.0 * np.pi**2 * lam**2 * math.exp(-np.pi**2 * lam)
    return lam / 2.0 - amp * math.cos(2.0 * np.pi * eps), lam / 2.0 - amp, lam / 2.0 + amp


def var_theta(state: NormalizedState, marginal="full", cfg: QuadratureConfig = _MOMENT_QUADRATURE):
    """Second angle moment ``int theta^2 W[theta] dtheta`` over [-pi, pi].

    ``marginal`` selects ``W[theta] = (|psi(theta)|^2 + |psi(theta+pi)|^2)/2``
    (``"full"``) or ``|psi(theta)|^2`` (``"half"``). The moment is taken
    about 0, so ``theta_bar`` must be 0.
    """
    if state.theta_bar != 0.0:
        raise DomainError("angle moments are taken about 0 and need theta_bar = 0")

    def f(t):
        return t * t * marginal_theta(state, t, marginal)

    # split at 0 so the peak of a narrow density sits on a panel edge
    return float(integrate(f, -np.pi, 0.0, cfg) + integrate(f, 0.0, np.pi, cfg))


def var_theta_asymptotic(lam, marginal="full", regime="large"):
    """Closed-form limits of ``(Delta theta)^2`` at ``eps = 1/2``.

    ============  ===========================================
    half, small   ``pi^2/3 - 2 - 3 exp(-1/lam)``
    half, large   ``1 / (2 lam)``
    full, small   ``pi^2/3 + exp(-1/lam)``
    full, large   ``pi^2/2 + 1/(2 lam) - sqrt(pi/lam)``
    ============  ===========================================
    """
    if lam <= 0:
        raise DomainError("lam must be positive")
    if marginal not in ("full", "half") or regime not in ("small", "large"):
        raise DomainError(f"unknown combination {marginal!r}/{regime!r}")
    if regime == "small":
        if marginal == "half":
            return np.pi**2 / 3.0 - 2.0 - 3.0 * math.exp(-1.0 / lam)
        return np.pi**2 / 3.0 + math.exp(-1.0 / lam)
    if marginal == "half":
        return 1.0 / (2.0 * lam)
    return np.pi**2 / 2.0 + 1.0 / (2.0 * lam) - math.sqrt(np.pi / lam)


@dataclass(frozen=True)
class CurvePoint:
    """One point of the ``(Delta L, Delta theta)`` uncertainty curve."""

    lam: float
    delta_L: float
    delta_theta_full: float
    delta_theta_half: float

    def __post_init__(self):
        if self.delta_L < 0:
            raise ValueError("delta_L must be nonnegative")
        if self.delta_theta_half > self.delta_theta_full + 1e-9:
            raise ValueError("half-marginal spread exceeds full-marginal spread")

    @property
    def gap(self):
        return self.delta_theta_full - self.delta_theta_half


def default_lambdas(count=41):
    return np.logspace(-3.0, 2.0, count)


def uncertainty_curve(eps=0.5, l=0, lambdas=None):
    """``(Delta L, Delta theta_full, Delta theta_half)`` along a lambda sweep.

    ``lambdas`` defaults to 41 log-spaced values on [1e-3, 1e2].
    """
    if lambdas is None:
        lambdas = default_lambdas()
    points = []
    for lam in lambdas:
        s = make_state(float(lam), eps=eps, l=l)
        points.append(CurvePoint(
            lam=float(lam),
            delta_L=math.sqrt(var_L(s)),
            delta_theta_full=math.sqrt(var_theta(s, "full")),
            delta_theta_half=math.sqrt(var_theta(s, "half")),
        ))
    return points
