r"""The two circular Wigner functions and their evaluation on grids.

Full-range definition (bounded by 1/(2 pi)):

.. math:: W[\theta,p] = \int_{-\pi}^{\pi}\frac{d\theta'}{2\pi}\,
          e^{-2ip\theta'}\psi(\theta+\theta')\psi^*(\theta-\theta')

Half-angle definition (bounded by 1/pi):

.. math:: W_{1/2}[\theta,p] = \frac{1}{2\pi}\int_{-\pi}^{\pi}d\theta'\,
          e^{-ip\theta'}\psi(\theta+\theta'/2)\psi^*(\theta-\theta'/2)

Both are available by direct quadrature and by the coefficient double sum
in which the inner integral is done in closed form (a ``sinc`` matrix).
The full variant also has a theta-function form used for cross-checking.
"""
from __future__ import annotations

from dataclasses import dataclass, field
from typing import Literal

import numpy as np

from .errors import ConsistencyError, DomainError
from .quadrature import DEFAULT_QUADRATURE, QuadratureConfig, integrate
from .special_fn import sinc_pi, theta3_scaled_lognome
from .state import NormalizedState, StateParams, coeff, eval_psi

Variant = Literal["full", "half"]

IMAG_FAIL = 1e-8
SPOT_CHECK_FAIL = 1e-8


def _check_variant(variant):
    if variant not in ("full", "half"):
        raise DomainError(f"variant must be 'full' or 'half', got {variant!r}")


def _check_imag(residue):
    if residue > IMAG_FAIL:
        raise ConsistencyError(
            f"Wigner value has imaginary part {residue:.3g}; expected a real result"
        )


# -- coefficient series -------------------------------------------------------

def _real_part(W):
    residue = float(np.abs(W.imag).max()) if W.size else 0.0
    _check_imag(residue)
    return W.real, residue


def series_grid(state: NormalizedState, thetas, ps, variant: Variant = "full"):
    """Double-sum series on the outer product ``thetas x ps``.

    Returns ``(values, residue)`` where ``values`` has shape
    ``(len(thetas), len(ps))`` and ``residue`` is the largest discarded
    imaginary part.
    """
    return _real_part(_series_complex(state, thetas, ps, variant))


def full_integer_p_grid(state: NormalizedState, thetas, ps):
    """Collapsed single sum for integer ``p``: ``(1/2pi) sum_n c(n) c*(2p-n) e^{2i(n-p)theta}``.

    Same return convention as :func:`series_grid`.
    """
    return _real_part(_collapsed_complex(state, thetas, ps))


def _series_complex(state, thetas, ps, variant):
    _check_variant(variant)
    thetas = np.atleast_1d(np.asarray(thetas, dtype=float))
    ps = np.atleast_1d(np.asarray(ps, dtype=float))
    n = state.n_values.astype(float)
    # only n - m enters the phase, so offsets keep exponents small for large l
    A = state.coeffs[None, :] * np.exp(1j * np.multiply.outer(thetas, state.offsets))
    nsum = n[:, None] + n[None, :]
    if variant == "full":
        S = sinc_pi(nsum[None, :, :] - 2.0 * ps[:, None, None])
    else:
        S = sinc_pi(nsum[None, :, :] / 2.0 - ps[:, None, None])
    return np.einsum("tn,pnm,tm->tp", A, S, A.conj(), optimize=True) / (2.0 * np.pi)


def _collapsed_complex(state, thetas, ps):
    thetas = np.atleast_1d(np.asarray(thetas, dtype=float))
    ps = np.atleast_1d(np.asarray(ps))
    if not np.all(ps == np.rint(ps)):
        raise DomainError("collapsed series requires integer p")
    ps = np.rint(ps).astype(np.int64)
    n = state.n_values.astype(np.int64)
    partner = 2 * ps[:, None] - n[None, :]  # (P, K)
    pair = state.coeffs[None, :] * np.conj(coeff(state, partner))
    # n - m = 2(n - p); subtract l on both to keep the integers small
    k = 2 * ((n[None, :] - state.l) - (ps[:, None] - state.l))
    phase = np.exp(1j * thetas[:, None, None] * k[None, :, :])
    return np.einsum("tpk,pk->tp", phase, pair) / (2.0 * np.pi)


# -- quadrature ---------------------------------------------------------------

def _quad_batch(state, thetas, p, variant, cfg):
    thetas = np.atleast_1d(np.asarray(thetas, dtype=float))
    if variant == "full":
        def f(tp):
            a = eval_psi(state, np.add.outer(tp, thetas))
            b = eval_psi(state, np.subtract.outer(thetas, tp).T)
            return np.exp(-2j * p * tp)[:, None] * a * b.conj() / (2.0 * np.pi)
    else:
        def f(tp):
            a = eval_psi(state, np.add.outer(tp / 2.0, thetas))
            b = eval_psi(state, np.subtract.outer(thetas, tp / 2.0).T)
            return np.exp(-1j * p * tp)[:, None] * a * b.conj() / (2.0 * np.pi)
    return integrate(f, -np.pi, np.pi, cfg)


def _theta_form_batch(state, thetas, p, cfg):
    if state.theta_bar != 0.0:
        raise DomainError("the theta-function form requires theta_bar = 0")
    thetas = np.atleast_1d(np.asarray(thetas, dtype=float))
    lam, eps = state.lam, state.eps
    m = p - state.l
    shift = 1j * eps / (2.0 * lam)
    den, den_scale = theta3_scaled_lognome(-1j * eps / lam, 2.0 * state.log_q, 0, state.cfg)

    def f(tp):
        plus = np.add.outer(tp, thetas) / 2.0
        minus = np.subtract.outer(thetas, tp).T / 2.0
        t1, s1 = theta3_scaled_lognome(plus - shift, state.log_q, 0, state.cfg)
        t2, s2 = theta3_scaled_lognome(minus + shift, state.log_q, 0, state.cfg)
        w = t1 * t2 * np.exp(s1 + s2 - den_scale) / den.real
        return np.exp(-2j * m * tp)[:, None] * w / (4.0 * np.pi**2)

    return integrate(f, -np.pi, np.pi, cfg)


# -- point evaluators ---------------------------------------------------------

def _evaluate(state, theta, p, batch):
    """Broadcast ``theta`` against ``p`` and evaluate ``batch(thetas, p)`` per distinct p."""
    theta_b, p_b = np.broadcast_arrays(np.asarray(theta, dtype=float), np.asarray(p, dtype=float))
    out = np.empty(theta_b.shape)
    residue = 0.0
    for pv in np.unique(p_b):
        sel = p_b == pv
        vals = np.asarray(batch(theta_b[sel], float(pv)))
        residue = max(residue, float(np.abs(vals.imag).max()))
        out[sel] = vals.real
    _check_imag(residue)
    return (out[()] if out.ndim == 0 else out), residue


def wigner_full(state: NormalizedState, theta, p, method="series",
                cfg: QuadratureConfig = DEFAULT_QUADRATURE, return_residue=False):
    """Full-range circular Wigner function ``W[theta, p]``.

    Parameters
    ----------
    state : NormalizedState
    theta, p : float or array_like
        Broadcast against each other.
    method : {"series", "quadrature", "theta_form"}
        ``series`` uses the coefficient double sum (collapsed to a single sum
        at integer ``p``); ``quadrature`` integrates the defining integral;
        ``theta_form`` integrates the product of two theta functions and
        needs ``theta_bar = 0``.
    cfg : QuadratureConfig
        Used by the two quadrature methods.
    return_residue : bool
        Also return the largest imaginary part that was discarded.
    """
    if method == "series":
        def batch(th, pv):
            if pv == round(pv):
                return _collapsed_complex(state, th, [pv])[:, 0]
            return _series_complex(state, th, [pv], "full")[:, 0]
    elif method == "quadrature":
        def batch(th, pv):
            return _quad_batch(state, th, pv, "full", cfg)
    elif method == "theta_form":
        def batch(th, pv):
            return _theta_form_batch(state, th, pv, cfg)
    else:
        raise DomainError(f"unknown method {method!r}")
    value, residue = _evaluate(state, theta, p, batch)
    return (value, residue) if return_residue else value


def wigner_half(state: NormalizedState, theta, p, method="series",
                cfg: QuadratureConfig = DEFAULT_QUADRATURE, return_residue=False):
    """Half-angle circular Wigner function ``W_{1/2}[theta, p]``.

    Same calling convention as :func:`wigner_full`; ``method`` is
    ``"series"`` or ``"quadrature"``.
    """
    if method == "series":
        def batch(th, pv):
            return _series_complex(state, th, [pv], "half")[:, 0]
    elif method == "quadrature":
        def batch(th, pv):
            return _quad_batch(state, th, pv, "half", cfg)
    else:
        raise DomainError(f"unknown method {method!r}")
    value, residue = _evaluate(state, theta, p, batch)
    return (value, residue) if return_residue else value


def wigner_value(state, theta, p, variant: Variant = "full", **kwargs):
    """Dispatch to :func:`wigner_full` or :func:`wigner_half`."""
    _check_variant(variant)
    fn = wigner_full if variant == "full" else wigner_half
    return fn(state, theta, p, **kwargs)


# -- grids --------------------------------------------------------------------

@dataclass
class WignerGrid:
    """Wigner values on a rectangular grid; rows are theta, columns are p."""

    variant: str
    theta_values: np.ndarray
    p_values: np.ndarray
    values: np.ndarray
    state_descriptor: StateParams
    max_abs_imag_residue: float = 0.0
    spot_check_error: float = 0.0
    spot_check_count: int = 0
    extra: dict = field(default_factory=dict)

    @property
    def m_values(self):
        """Momentum offsets ``m = p - l``."""
        return self.p_values - self.state_descriptor.l

    @property
    def bound(self):
        return 1.0 / (2.0 * np.pi) if self.variant == "full" else 1.0 / np.pi

    def check_invariants(self, slack=1e-12):
        if np.abs(self.values).max() > self.bound + slack:
            raise ConsistencyError("Wigner grid exceeds its Cauchy-Schwarz bound")
        if not self.max_abs_imag_residue < 1e-10:
            raise ConsistencyError("Wigner grid imaginary residue too large")


def eval_grid(state: NormalizedState, variant: Variant, theta_count, p_min, p_max, p_count,
              cfg: QuadratureConfig = DEFAULT_QUADRATURE, spot_fraction=0.01):
    """Evaluate a Wigner function on a uniform grid.

    ``theta`` spans [-pi, pi] with ``theta_count`` points, ``p`` spans
    [``p_min``, ``p_max``] with ``p_count`` points. Cells come from the
    coefficient series; a deterministic ``spot_fraction`` of them (at
    least one) is recomputed by quadrature and the largest discrepancy is
    stored in ``spot_check_error``.
    """
    _check_variant(variant)
    if theta_count < 2 or p_count < 2:
        raise DomainError("grid counts must be at least 2")
    if not p_min < p_max:
        raise DomainError("p_min must be smaller than p_max")
    thetas = np.linspace(-np.pi, np.pi, int(theta_count))
    ps = np.linspace(float(p_min), float(p_max), int(p_count))
    values, residue = series_grid(state, thetas, ps, variant)

    cells = values.size
    n_spot = max(1, int(round(spot_fraction * cells)))
    flat = np.unique(np.linspace(0, cells - 1, n_spot).round().astype(int))
    ti, pi_ = np.unravel_index(flat, values.shape)
    spot = wigner_value(state, thetas[ti], ps[pi_], variant, method="quadrature", cfg=cfg)
    spot_err = float(np.abs(spot - values[ti, pi_]).max())
    if spot_err > SPOT_CHECK_FAIL:
        raise ConsistencyError(
            f"series and quadrature disagree by {spot_err:.3g} on the spot-check cells"
        )
    return WignerGrid(
        variant=variant,
        theta_values=thetas,
        p_values=ps,
        values=values,
        state_descriptor=state.params,
        max_abs_imag_residue=residue,
        spot_check_error=spot_err,
        spot_check_count=len(flat),
    )
