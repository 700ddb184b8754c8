r"""Jacobi theta function, cardinal sine, and the Dirichlet/Fejér kernels.

The theta function uses the convention

.. math:: \vartheta_3(z, q) = \sum_{n=-\infty}^{\infty} q^{n^2} e^{2inz}, \qquad 0 \le q < 1,

with an explicit nome. Callers pass whatever nome their formula needs
(``exp(-1/(2 lam))``, ``exp(-lam pi^2)``, ...); nothing is assumed here.

``sinc`` is the *unnormalized* cardinal sine, ``sin(x)/x``. With this
choice ``sinc(2 pi k)`` vanishes for every nonzero integer ``k``, which is
what makes the momentum marginals reproduce the Born rule at integer
momenta. ``sinc_pi(x) = sinc(pi x)`` is provided for the common case where
the argument is already a multiple of pi; it is exactly zero at nonzero
integers.
"""
from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from .errors import ConvergenceError, DomainError

# log of the largest double, with margin; beyond this exp() overflows
_LOG_OVERFLOW = 700.0
_KERNEL_EPS = 1e-9


@dataclass(frozen=True)
class SeriesConfig:
    """Truncation policy for lattice sums.

    Summation stops once both terms of a symmetric pair fall below
    ``term_tolerance`` times the running scale of the sum.
    """

    term_tolerance: float = 1e-16
    max_terms: int = 10_000

    def __post_init__(self):
        if not self.term_tolerance > 0:
            raise ValueError("term_tolerance must be positive")
        if self.max_terms < 1:
            raise ValueError("max_terms must be at least 1")


DEFAULT_SERIES = SeriesConfig()


@dataclass(frozen=True)
class ThetaArg:
    """A validated (z, q) pair for :func:`theta3`.

    Any complex ``z`` is accepted as long as the largest term of the series
    is representable in double precision; very large ``|Im z|`` relative to
    ``-log q`` should go through :func:`theta3_scaled` instead.
    """

    z: complex
    q: float

    def __post_init__(self):
        _check_nome(self.q)

    def theta3(self, cfg: SeriesConfig = DEFAULT_SERIES) -> complex:
        return theta3(self.z, self.q, cfg)


def _check_nome(q):
    q = float(q)
    if not (0.0 <= q < 1.0) or np.isnan(q):
        raise DomainError(f"theta nome must lie in [0, 1), got {q!r}")
    return q


def theta3_scaled(z, q, order=0, cfg: SeriesConfig = DEFAULT_SERIES):
    """Scaled theta series and its z-derivatives.

    Returns ``(mantissa, log_scale)`` such that the derivative of the given
    ``order`` equals ``mantissa * exp(log_scale)``. ``log_scale`` is the log
    magnitude of the dominant term, so the mantissa is O(1) even when the
    theta value itself would overflow or underflow.

    Parameters
    ----------
    z : complex or array_like
    q : float
        Nome in [0, 1).
    order : {0, 1, 2}
    cfg : SeriesConfig

    Returns
    -------
    mantissa : complex ndarray or complex
    log_scale : float ndarray or float
    """
    q = _check_nome(q)
    if q == 0.0:
        if order not in (0, 1, 2):
            raise DomainError(f"derivative order must be 0, 1 or 2, got {order!r}")
        z = np.asarray(z, dtype=complex)
        mant = np.full(z.shape, 1.0 if order == 0 else 0.0, dtype=complex)
        return mant[()], np.zeros(z.shape)[()]
    return theta3_scaled_lognome(z, np.log(q), order, cfg)


def theta3_scaled_lognome(z, log_q, order=0, cfg: SeriesConfig = DEFAULT_SERIES):
    """:func:`theta3_scaled` parametrized by ``log q`` (< 0).

    Needed when the nome itself underflows, e.g. ``q = exp(-1/lam)`` for
    ``lam`` of order 1e-3.

    Summation starts at the dominant index ``n0 = round(Im z / log q)`` and
    proceeds symmetrically outward (n0, n0 +- 1, n0 +- 2, ...). Term
    magnitudes are unimodal around ``n0``, so the first pair below
    tolerance ends the sum.
    """
    if not (log_q < 0 and np.isfinite(log_q)):
        raise DomainError(f"log of the nome must be negative and finite, got {log_q!r}")
    if order not in (0, 1, 2):
        raise DomainError(f"derivative order must be 0, 1 or 2, got {order!r}")
    z = np.asarray(z, dtype=complex)
    scalar = z.ndim == 0
    z = np.atleast_1d(z)

    a = -float(log_q)
    # the series has period pi in Re z
    x, y = z.real - np.pi * np.rint(z.real / np.pi), z.imag
    n0 = np.rint(-y / a)

    def log_mag(n):
        return -a * n * n - 2.0 * n * y

    log_scale = log_mag(n0)

    def term(n):
        t = np.exp(log_mag(n) - log_scale + 2j * n * x)
        if order:
            t = t * (2j * n) ** order
        return t

    total = term(n0)
    ref = np.abs(total)
    tol = cfg.term_tolerance
    done = np.zeros(z.shape, dtype=bool)
    for k in range(1, cfg.max_terms + 1):
        tp, tm = term(n0 + k), term(n0 - k)
        total = total + np.where(done, 0.0, tp + tm)
        big = np.maximum(np.abs(tp), np.abs(tm))
        ref = np.maximum(ref, np.maximum(big, np.abs(total)))
        # a zero reference means every term so far vanished; keep going
        done |= (big <= tol * ref) & (ref > 0)
        if done.all():
            break
    else:
        raise ConvergenceError(
            f"theta3 series did not converge in {cfg.max_terms} terms (log q={log_q})"
        )
    return (total[0], log_scale[0]) if scalar else (total, log_scale)


def theta3(z, q, cfg: SeriesConfig = DEFAULT_SERIES):
    """Jacobi theta function ``sum_n q**(n*n) * exp(2j*n*z)``.

    Parameters
    ----------
    z : complex or array_like
    q : float
        Nome in [0, 1).
    cfg : SeriesConfig, optional

    Raises
    ------
    DomainError
        If ``q`` is outside [0, 1) or the dominant term overflows.
    ConvergenceError
        If ``cfg.max_terms`` pairs were not enough.

    Examples
    --------
    >>> round(theta3(0.0, 0.1).real, 10)
    1.2002
    """
    return _unscale(*theta3_scaled(z, q, 0, cfg))


def theta3_dz(z, q, order=1, cfg: SeriesConfig = DEFAULT_SERIES):
    """First or second derivative of :func:`theta3` with respect to ``z``.

    Each term picks up a factor ``(2in)**order``.
    """
    if order not in (1, 2):
        raise DomainError(f"derivative order must be 1 or 2, got {order!r}")
    return _unscale(*theta3_scaled(z, q, order, cfg))


def _unscale(mant, log_scale):
    if np.any(np.asarray(log_scale) > _LOG_OVERFLOW):
        raise DomainError(
            "theta3 value overflows double precision; use theta3_scaled"
        )
    return mant * np.exp(log_scale)


def sinpi(x):
    """``sin(pi x)`` with exact zeros at integers."""
    x = np.asarray(x, dtype=float)
    r = x - 2.0 * np.rint(x / 2.0)  # r in [-1, 1]
    r = np.where(np.abs(r) > 0.5, np.sign(r) - r, r)
    return np.sin(np.pi * r)[()]


def sinc_pi(x):
    """``sin(pi x) / (pi x)``, equal to 1 at 0 and exactly 0 at other integers."""
    x = np.asarray(x, dtype=float)
    safe = np.where(x == 0.0, 1.0, x)
    return np.where(x == 0.0, 1.0, sinpi(safe) / (np.pi * safe))[()]


def sinc(x):
    """Unnormalized cardinal sine ``sin(x)/x`` with ``sinc(0) = 1``.

    Note this differs from :func:`numpy.sinc`, which is ``sin(pi x)/(pi x)``.
    """
    x = np.asarray(x, dtype=float)
    safe = np.where(x == 0.0, 1.0, x)
    return np.where(x == 0.0, 1.0, np.sin(safe) / safe)[()]


def dirichlet_kernel(n, theta):
    """Dirichlet kernel ``sin((n + 1/2) theta) / sin(theta / 2)``.

    Equals ``2n + 1`` on the lattice ``theta in 2 pi Z``.
    """
    if n < 0:
        raise DomainError(f"Dirichlet kernel index must be >= 0, got {n}")
    theta = np.asarray(theta, dtype=float)
    s = np.sin(theta / 2.0)
    near = np.abs(s) < _KERNEL_EPS
    safe = np.where(near, 1.0, s)
    return np.where(near, 2.0 * n + 1.0, np.sin((n + 0.5) * theta) / safe)[()]


def fejer_kernel(M, theta):
    """Fejér kernel ``sin^2(M theta / 2) / (M sin^2(theta / 2))``, nonnegative.

    Equals ``M`` on the lattice ``theta in 2 pi Z``.
    """
    if M < 1:
        raise DomainError(f"Fejér kernel order must be >= 1, got {M}")
    theta = np.asarray(theta, dtype=float)
    s = np.sin(theta / 2.0)
    near = np.abs(s) < _KERNEL_EPS
    safe = np.where(near, 1.0, s)
    return np.where(near, float(M), np.sin(M * theta / 2.0) ** 2 / (M * safe * safe))[()]
