"""
Angle and angular-momentum uncertainties
========================================

Sweep the width parameter and follow Delta L against Delta theta for both
angle marginals.
"""

import math

import numpy as np

from circle_wigner import make_state, uncertainty_curve, var_L, var_L_asymptotic, var_theta_asymptotic

###############################################################################
# The curve at eps = 1/2 runs from the two-level limit (Delta L = 1/2) to the
# wide-Gaussian regime.
points = uncertainty_curve(0.5, 0, np.logspace(-3, 2, 11))
print(f"{'lam':>8} {'dL':>10} {'dth_full':>10} {'dth_half':>10} {'gap':>8}")
for p in points:
    print(f"{p.lam:8.3g} {p.delta_L:10.6f} {p.delta_theta_full:10.6f} {p.delta_theta_half:10.6f} {p.gap:8.5f}")

###############################################################################
# The small-lambda endpoints.
print("sqrt(pi^2/3 - 2) =", math.sqrt(math.pi**2 / 3 - 2), " pi/sqrt(3) =", math.pi / math.sqrt(3))

###############################################################################
# Large-lambda forms.
for lam in (5.0, 20.0, 80.0):
    print(lam, var_theta_asymptotic(lam, "half", "large"), var_theta_asymptotic(lam, "full", "large"))

###############################################################################
# The band around lam/2 is very tight for lam >= 2. At lam = 1 and eps = 1/2
# the exact value sits about 1e-7 above it: the next term of the expansion,
# 4 pi^2 lam^2 exp(-2 pi^2 lam) cos(4 pi eps), is not part of the band.
for lam in (1.0, 2.0):
    v = var_L(make_state(lam, eps=0.5))
    _, lo, hi = var_L_asymptotic(lam, 0.5)
    nxt = 4 * math.pi**2 * lam**2 * math.exp(-2 * math.pi**2 * lam)
    print(f"lam={lam}: exact - upper = {v - hi:+.3e}, next term = {nxt:.3e}")
