"""
Gaussian states on the circle
=============================

Build a few states, look at their coefficients and compare the three ways
of evaluating the wave function.
"""

import numpy as np

from circle_wigner import coeff, density, eval_psi, make_state

###############################################################################
# A state is fixed by its width ``lam`` and the mean angular momentum
# ``lbar = l + eps``. Narrow states (small ``lam``) sit on one or two
# angular-momentum eigenstates.
for lam in (1e-3, 0.1, 1.0, 10.0):
    s = make_state(lam, eps=0.5)
    top = np.sort(s.probabilities)[::-1][:3]
    print(f"lam={lam:<6g} window={len(s.offsets):3d} terms  largest |c|^2: {np.round(top, 6)}")

###############################################################################
# With eps = 1/2 and tiny lam the state is the equal superposition of
# n = l and n = l + 1, so psi(0) = 1/sqrt(pi).
s = make_state(1e-3, eps=0.5, l=2)
print("c(2), c(3):", coeff(s, [2, 3]).real)
print("psi(0) * sqrt(pi) =", (eval_psi(s, 0.0) * np.sqrt(np.pi)).real)

###############################################################################
# The Fourier sum and the two theta-function forms agree to rounding.
theta = np.linspace(-np.pi, np.pi, 9)
s = make_state(0.5, eps=0.3, l=1)
ref = eval_psi(s, theta, "fourier")
for rep in ("theta_fn", "poisson"):
    print(f"{rep:9s} max deviation {np.abs(eval_psi(s, theta, rep) - ref).max():.1e}")

###############################################################################
# The density does not care about l.
print(np.allclose(density(make_state(0.5, eps=0.3), theta), density(s, theta)))
