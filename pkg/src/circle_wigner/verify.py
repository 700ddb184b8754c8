"""Self-check suite run by ``circle-wigner verify``.

Each check returns ``(passed, detail)``. Identity-type checks compare
against ``tol``; checks of asymptotic or truncated quantities carry their
own fixed tolerances.
"""
from __future__ import annotations

import math

import numpy as np

from . import marginals, moments, wigner
from .quadrature import QuadratureConfig, integrate
from .special_fn import theta3, theta3_scaled_lognome
from .state import StateParams, eval_psi, make_state, normalize


def _rel(a, b):
    return abs(a - b) / max(abs(a), abs(b))


def check_theta_periodicity(tol):
    rng = np.random.default_rng(1)
    z = rng.uniform(-3, 3, 50) + 1j * rng.uniform(-0.3, 0.3, 50)
    q = rng.uniform(0.01, 0.6, 50)
    err = max(_rel(theta3(zi + np.pi, qi), theta3(zi, qi)) for zi, qi in zip(z, q))
    conj = max(_rel(theta3(np.conj(zi), qi), np.conj(theta3(zi, qi))) for zi, qi in zip(z, q))
    worst = max(err, conj)
    return worst <= max(tol, 1e-14), f"max rel err {worst:.2e}"


def check_modular_identity(tol):
    worst = 0.0
    for lam in (0.05, 0.2, 1.0, 5.0):
        for eps in (0.0, 0.25, 0.5):
            direct = sum(math.exp(-(n - eps) ** 2 / lam) for n in range(-60, 61)) / lam
            m1, s1 = theta3_scaled_lognome(-eps * np.pi, -lam * np.pi**2)
            m2, s2 = theta3_scaled_lognome(-1j * eps / lam, -1.0 / lam)
            a = math.sqrt(np.pi / lam) * (m1 * math.exp(s1)).real
            b = (m2 * math.exp(s2 - eps**2 / lam)).real / lam
            worst = max(worst, _rel(a, direct), _rel(b, direct))
    return worst <= max(tol, 1e-12), f"max rel err {worst:.2e}"


def check_representations(tol):
    theta = np.linspace(-np.pi, np.pi, 41)
    worst = 0.0
    for lam in (0.05, 1.0 / (2.0 * np.pi), 0.5, 5.0):
        s = make_state(lam, eps=0.3, l=2)
        ref = eval_psi(s, theta, "fourier")
        scale = np.abs(ref).max()
        for rep in ("theta_fn", "poisson"):
            worst = max(worst, np.abs(eval_psi(s, theta, rep) - ref).max() / scale)
    return worst <= max(tol, 1e-12), f"max rel err {worst:.2e}"


def check_born_rule(tol):
    s = make_state(1.0, eps=0.3, l=2)
    ps = np.arange(s.l - 5, s.l + 6)
    cfg = QuadratureConfig(abs_tolerance=1e-12)
    worst = 0.0
    for variant in ("full", "half"):
        def f(t):
            return wigner.series_grid(s, t, ps, variant)[0]

        integral = integrate(f, -np.pi, np.pi, cfg)
        worst = max(worst, np.abs(integral - s.probabilities[np.searchsorted(s.n_values, ps)]).max())
    total = abs(s.probabilities.sum() - 1.0)
    return worst < 1e-8 and total < 1e-10, f"max err {worst:.2e}, sum err {total:.2e}"


def check_bounds(tol):
    worst = -np.inf
    for q, eps in ((0.5, 0.0), (0.001, 0.5)):
        s = normalize(StateParams.from_q(q, eps=eps))
        for variant, bound in (("full", 1 / (2 * np.pi)), ("half", 1 / np.pi)):
            w, _ = wigner.series_grid(s, np.linspace(-np.pi, np.pi, 101),
                                      np.linspace(-2, 2, 81), variant)
            worst = max(worst, np.abs(w).max() - bound)
    return worst <= 1e-12, f"max excess over bound {worst:.2e}"


def check_limit_state(tol):
    s = make_state(1e-3, eps=0.5)
    th = np.linspace(-np.pi, np.pi, 21)
    errs = [
        np.abs(wigner.wigner_full(s, th, 0.5) - np.cos(th) / (2 * np.pi)).max(),
        np.abs(wigner.wigner_full(s, th, 0.0) - 1 / (4 * np.pi)).max(),
        np.abs(wigner.wigner_half(s, th, 0.5) - (4 / np.pi + 2 * np.cos(th)) / (4 * np.pi)).max(),
        abs(marginals.marginal_p_full(s, 0.5)),
        abs(marginals.marginal_p_half(s, 0.5) - 2 / np.pi),
        abs(marginals.marginal_p_half(s, -1.5) + 2 / (15 * np.pi)),
    ]
    worst = max(errs)
    return worst <= max(tol, 1e-12), f"max err {worst:.2e}"


def check_negativity(tol):
    s = normalize(StateParams.from_q(0.001, eps=0.5))
    th, ps = np.linspace(-np.pi, np.pi, 101), np.linspace(-2, 2, 81)
    full = wigner.series_grid(s, th, ps, "full")[0].min()
    half = wigner.series_grid(s, th, ps, "half")[0].min()
    return full < -0.8 / (2 * np.pi) and half < 0, f"min W {full:.4f}, min W_1/2 {half:.4f}"


def check_symmetry(tol):
    s = normalize(StateParams.from_q(0.5, eps=0.0))
    th, ps = np.linspace(-np.pi, np.pi, 101), np.linspace(-2, 2, 81)
    w = wigner.series_grid(s, th, ps, "full")[0]
    err = max(np.abs(w - w[:, ::-1]).max(), np.abs(w - w[::-1, :]).max())
    return err <= max(tol, 1e-12), f"max asymmetry {err:.2e}"


def check_fejer(tol):
    s = make_state(0.5, eps=0.3)
    th = np.linspace(-np.pi, np.pi, 10, endpoint=False)
    exact = marginals.marginal_theta_full(s, th)
    errs = [np.abs(marginals.cesaro_marginal_theta(s, th, M) - exact) for M in (32, 64, 128)]
    ratio = max((errs[1] / errs[0]).max(), (errs[2] / errs[1]).max())
    return ratio <= 0.6, f"max error ratio {ratio:.3f}"


def check_normalizations(tol):
    s = make_state(1.0, eps=0.3)
    full = marginals.marginal_p_normalization(s, "full", 200.0)
    half = marginals.marginal_p_normalization(s, "half", 200.0)
    return abs(full - 0.5) <= 0.01 and abs(half - 1.0) <= 0.02, f"{full:.5f}, {half:.5f}"


def check_delta_L_band(tol):
    worst = -np.inf
    for eps in (0.0, 0.25, 0.5):
        v = moments.var_L(make_state(2.0, eps=eps))
        _, lo, hi = moments.var_L_asymptotic(2.0, eps)
        worst = max(worst, lo - v, v - hi)
    return worst <= 1e-10, f"max band excess {worst:.2e}"


def check_uncertainty_endpoints(tol):
    s = make_state(1e-3, eps=0.5)
    dl = math.sqrt(moments.var_L(s))
    half = math.sqrt(moments.var_theta(s, "half"))
    full = math.sqrt(moments.var_theta(s, "full"))
    ok = (abs(dl - 0.5) <= 1e-6 and abs(half - math.sqrt(np.pi**2 / 3 - 2)) <= 1e-3
          and abs(full - np.pi / math.sqrt(3)) <= 1e-3)
    return ok, f"dL={dl:.6f}, dth_half={half:.6f}, dth_full={full:.6f}"


CHECKS = [
    ("theta3 periodicity and conjugation", check_theta_periodicity),
    ("modular identity", check_modular_identity),
    ("representation equivalence", check_representations),
    ("Born rule", check_born_rule),
    ("Wigner bounds", check_bounds),
    ("limit-state oracles", check_limit_state),
    ("negativity witness", check_negativity),
    ("reflection symmetry", check_symmetry),
    ("Fejér convergence", check_fejer),
    ("momentum-marginal normalization", check_normalizations),
    ("Delta L asymptotic band", check_delta_L_band),
    ("uncertainty endpoints", check_uncertainty_endpoints),
]


def run_all(tol=1e-10):
    """Run every check; returns a list of ``(name, passed, detail)``."""
    return [(name, *fn(tol)) for name, fn in CHECKS]
