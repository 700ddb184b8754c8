"""
Marginals and Fejér summation
=============================

Integrating the Wigner functions over one variable gives marginal
distributions. Over integer p the angle marginal only exists as a Cesàro
mean.
"""

import numpy as np

from circle_wigner import (
    cesaro_marginal_theta,
    coeff,
    make_state,
    marginal_p_full,
    marginal_p_half,
    marginal_p_normalization,
    marginal_theta_full,
)

s = make_state(1.0, eps=0.3, l=2)

###############################################################################
# At integer p both momentum marginals reproduce |c(p)|^2.
p = np.arange(0, 5)
print(np.c_[p, marginal_p_full(s, p), marginal_p_half(s, p), np.abs(coeff(s, p)) ** 2])

###############################################################################
# Between integers they oscillate and can go negative. Their integrals over
# all p are 1/2 and 1, approached slowly because the integrand decays as 1/p.
for P in (10, 50, 200):
    full = marginal_p_normalization(s, "full", P)
    half = marginal_p_normalization(s, "half", P)
    print(f"P={P:4d}  int W[p] = {full:.6f}  int W_1/2[p] = {half:.6f}")
print("with tail estimate:", marginal_p_normalization(s, "full", 200, tail_correction=True))

###############################################################################
# Fejér means of the integer-p sums converge to the closed-form angle
# marginal; the error halves each time M doubles.
theta = np.linspace(-np.pi, np.pi, 10, endpoint=False)
exact = marginal_theta_full(s, theta)
prev = None
for M in (8, 16, 32, 64, 128):
    err = np.abs(cesaro_marginal_theta(s, theta, M) - exact).max()
    print(f"M={M:4d}  error {err:.3e}" + (f"  ratio {err / prev:.3f}" if prev else ""))
    prev = err
