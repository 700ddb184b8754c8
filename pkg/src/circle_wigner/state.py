r"""The Gaussian-coefficient state on the circle.

.. math::

    \psi(\theta) = \sum_n c(n) \frac{e^{in\theta}}{\sqrt{2\pi}}, \qquad
    c(n) = \frac{N}{\sqrt\lambda} e^{-in\bar\theta} e^{-(n-\bar l)^2/2\lambda},

with ``lbar = l + eps``. The normalization, coefficients and wave function
are computed in log space wherever the individual factors (``N``,
``exp(-lbar^2/2 lam)``, theta values) would under- or overflow, so states
with very small ``lam`` are handled without special cases.
"""
from __future__ import annotations

import math
from dataclasses import dataclass, field
from typing import Literal

import numpy as np

from .errors import DomainError
from .special_fn import DEFAULT_SERIES, SeriesConfig, theta3_scaled_lognome

Representation = Literal["auto", "fourier", "theta_fn", "poisson"]

# nomes exp(-1/(2 lam)) and exp(-2 lam pi^2) coincide here
REPRESENTATION_SWITCH = 1.0 / (2.0 * np.pi)
# nomes exp(-1/lam) and exp(-lam pi^2) of the normalization sum coincide here
_NORM_SWITCH = 1.0 / np.pi


@dataclass(frozen=True)
class StateParams:
    """Parameters of the state: width ``lam``, ``lbar = l + eps``, phase ``theta_bar``."""

    lam: float
    l: int = 0
    eps: float = 0.0
    theta_bar: float = 0.0

    def __post_init__(self):
        if not (np.isfinite(self.lam) and self.lam > 0):
            raise DomainError(f"lambda must be positive and finite, got {self.lam!r}")
        if int(self.l) != self.l:
            raise DomainError(f"l must be an integer, got {self.l!r}")
        object.__setattr__(self, "l", int(self.l))
        if not (0.0 <= self.eps < 1.0):
            raise DomainError(f"eps must lie in [0, 1), got {self.eps!r}")
        if not (-np.pi <= self.theta_bar <= np.pi):
            raise DomainError(f"theta_bar must lie in [-pi, pi], got {self.theta_bar!r}")

    @classmethod
    def from_q(cls, q, l=0, eps=0.0, theta_bar=0.0):
        """Build from the nome ``q = exp(-1/(2 lam))``."""
        if not (0.0 < q < 1.0):
            raise DomainError(f"q must lie in (0, 1), got {q!r}")
        return cls(lam=-1.0 / (2.0 * math.log(q)), l=l, eps=eps, theta_bar=theta_bar)

    @property
    def l_bar(self):
        return self.l + self.eps


@dataclass(frozen=True)
class NormalizedState:
    """A normalized state plus its truncated coefficient window.

    ``offsets`` holds ``j = n - l`` for the window, ``coeffs`` the matching
    ``c(l + j)``. Outside the window every ``|c(n)|`` is below
    ``term_tolerance`` relative to the largest one.
    """

    params: StateParams
    q: float
    l_bar: float
    log_norm: float
    log_sum: float
    offsets: np.ndarray = field(repr=False)
    coeffs: np.ndarray = field(repr=False)
    cfg: SeriesConfig = field(default=DEFAULT_SERIES, repr=False)

    @property
    def lam(self):
        return self.params.lam

    @property
    def eps(self):
        return self.params.eps

    @property
    def l(self):
        return self.params.l

    @property
    def theta_bar(self):
        return self.params.theta_bar

    @property
    def log_q(self):
        """``log q = -1/(2 lam)``; use instead of ``q``, which underflows for tiny ``lam``."""
        return -1.0 / (2.0 * self.params.lam)

    @property
    def norm_N(self):
        """Normalization ``N``; overflows to inf for tiny ``lam`` with ``eps > 0`` (see ``log_norm``)."""
        return math.exp(self.log_norm) if self.log_norm < 709.0 else math.inf

    @property
    def n_values(self):
        """Absolute angular-momentum indices ``n`` of the coefficient window."""
        return self.offsets + self.l

    @property
    def probabilities(self):
        """``|c(n)|^2`` over the window."""
        return np.abs(self.coeffs) ** 2


def window_halfwidth(lam, tol):
    """Half-width ``K`` of the index window outside which coefficients are below ``tol``."""
    return math.ceil(math.sqrt(2.0 * lam * math.log(1.0 / tol))) + 5


def log_gaussian_sum(lam, eps, cfg: SeriesConfig = DEFAULT_SERIES):
    """``log sum_n exp(-(n - eps)^2 / lam)``.

    Direct lattice sum for small ``lam``; Poisson-resummed form
    ``sqrt(pi lam) * theta3(pi eps, exp(-pi^2 lam))`` for large ``lam``.
    """
    if lam < _NORM_SWITCH:
        K = window_halfwidth(lam, cfg.term_tolerance)
        j = np.arange(math.floor(eps - K), math.ceil(eps + K) + 1)
        e = -((j - eps) ** 2) / lam
        top = e.max()
        return float(top + math.log(np.exp(e - top).sum()))
    mant, scale = theta3_scaled_lognome(np.pi * eps, -np.pi**2 * lam, 0, cfg)
    return float(0.5 * math.log(np.pi * lam) + scale + math.log(mant.real))


def normalize(params: StateParams, cfg: SeriesConfig = DEFAULT_SERIES) -> NormalizedState:
    """Compute ``N`` and the coefficient window for ``params``.

    ``N^2 = lam / sum_n exp(-(n - eps)^2 / lam)``; independent of ``l`` and
    ``theta_bar``.
    """
    lam, eps = params.lam, params.eps
    log_sum = log_gaussian_sum(lam, eps, cfg)
    log_norm = 0.5 * (math.log(lam) - log_sum)
    K = window_halfwidth(lam, cfg.term_tolerance)
    offsets = np.arange(math.floor(eps - K), math.ceil(eps + K) + 1)
    coeffs = _coeffs(offsets, params, log_norm)
    offsets.setflags(write=False)
    coeffs.setflags(write=False)
    return NormalizedState(
        params=params,
        q=math.exp(-1.0 / (2.0 * lam)),
        l_bar=params.l_bar,
        log_norm=log_norm,
        log_sum=log_sum,
        offsets=offsets,
        coeffs=coeffs,
        cfg=cfg,
    )


def make_state(lam, eps=0.0, l=0, theta_bar=0.0, cfg: SeriesConfig = DEFAULT_SERIES):
    """Shorthand for ``normalize(StateParams(lam, l, eps, theta_bar))``."""
    return normalize(StateParams(lam=lam, l=l, eps=eps, theta_bar=theta_bar), cfg)


def _coeffs(offsets, params, log_norm):
    lam = params.lam
    logmag = log_norm - 0.5 * math.log(lam) - (offsets - params.eps) ** 2 / (2.0 * lam)
    n = offsets + params.l
    return np.exp(logmag) * np.exp(-1j * n * params.theta_bar)


def coeff(state: NormalizedState, n):
    """Fourier coefficient ``c(n)`` for integer ``n`` (scalar or array)."""
    n = np.asarray(n)
    if not np.all(n == np.rint(n)):
        raise DomainError("Fourier coefficients are defined for integer n only")
    out = _coeffs(n.astype(float) - state.l, state.params, state.log_norm)
    return out[()] if out.ndim == 0 else out


def reduce_angle(theta):
    """Map angles into [-pi, pi)."""
    return np.remainder(np.asarray(theta, dtype=float) + np.pi, 2.0 * np.pi) - np.pi


def eval_psi(state: NormalizedState, theta, rep: Representation = "auto"):
    """Evaluate the wave function ``psi(theta)``.

    Parameters
    ----------
    state : NormalizedState
    theta : float or array_like
    rep : {"auto", "fourier", "theta_fn", "poisson"}
        ``fourier`` sums the coefficient window directly; ``theta_fn`` uses
        the theta series with nome ``exp(-1/(2 lam))``; ``poisson`` the
        resummed series with nome ``exp(-2 lam pi^2)``. ``auto`` picks
        ``theta_fn`` below ``lam = 1/(2 pi)`` and ``poisson`` above. Far
        outside its own regime a theta series cancels catastrophically
        (``poisson`` at ``lam = 1e-3`` is useless), so prefer ``auto``.
    """
    phi = reduce_angle(np.asarray(theta, dtype=float) - state.theta_bar)
    if rep == "auto":
        rep = "theta_fn" if state.lam < REPRESENTATION_SWITCH else "poisson"
    lam, eps, l = state.lam, state.eps, state.l
    if rep == "fourier":
        phase = np.exp(1j * np.multiply.outer(phi, state.offsets))
        amp = np.abs(state.coeffs)
        out = (phase @ amp) / math.sqrt(2.0 * np.pi)
    elif rep == "theta_fn":
        mant, scale = theta3_scaled_lognome(
            phi / 2.0 - 1j * eps / (2.0 * lam), state.log_q, 0, state.cfg
        )
        logpre = state.log_norm - 0.5 * math.log(2.0 * np.pi * lam) - eps**2 / (2.0 * lam)
        out = mant * np.exp(logpre + scale)
    elif rep == "poisson":
        mant, scale = theta3_scaled_lognome(
            np.pi * (eps + 1j * lam * phi), -2.0 * lam * np.pi**2, 0, state.cfg
        )
        out = mant * np.exp(state.log_norm - lam * phi**2 / 2.0 + scale + 1j * eps * phi)
    else:
        raise DomainError(f"unknown representation {rep!r}")
    out = out * np.exp(1j * l * phi)
    return out[()] if np.ndim(out) == 0 else out


def density(state: NormalizedState, theta):
    r"""Probability density ``|psi(theta)|^2`` from the closed theta-function form

    .. math:: |\psi|^2 = \frac{|\vartheta_3(\phi/2 - i\epsilon/2\lambda, q)|^2}
                              {2\pi\,\vartheta_3(-i\epsilon/\lambda, q^2)},
              \quad \phi = \theta - \bar\theta .

    Independent of ``l``.
    """
    lam, eps = state.lam, state.eps
    phi = reduce_angle(np.asarray(theta, dtype=float) - state.theta_bar)
    num, num_scale = theta3_scaled_lognome(
        phi / 2.0 - 1j * eps / (2.0 * lam), state.log_q, 0, state.cfg
    )
    den, den_scale = theta3_scaled_lognome(-1j * eps / lam, 2.0 * state.log_q, 0, state.cfg)
    out = np.abs(num) ** 2 / (2.0 * np.pi * den.real) * np.exp(2.0 * num_scale - den_scale)
    return out[()] if np.ndim(out) == 0 else out
