"""
Wigner grids and negativity
===========================

Evaluate both circular Wigner functions over the window -2 <= m <= 2 and
look for negative values.
"""

import numpy as np

from circle_wigner import StateParams, eval_grid, normalize, wigner_full, wigner_half

###############################################################################
# q = 0.5 with integer lbar: the grid is symmetric in m and in theta.
s = normalize(StateParams.from_q(0.5, eps=0.0))
g = eval_grid(s, "full", 101, -2, 2, 81)
w = g.values
print("m-symmetry defect     ", np.abs(w - w[:, ::-1]).max())
print("theta-symmetry defect ", np.abs(w - w[::-1, :]).max())
print("spot checks:", g.spot_check_count, "cells, worst", f"{g.spot_check_error:.1e}")

###############################################################################
# q = 0.001 with lbar = l + 1/2: both functions go negative near |theta| = pi,
# at half-integer m.
s = normalize(StateParams.from_q(0.001, eps=0.5))
for variant in ("full", "half"):
    g = eval_grid(s, variant, 101, -2, 2, 81)
    i, j = np.unravel_index(np.argmin(g.values), g.values.shape)
    print(f"{variant}: min {g.values[i, j]:+.5f} at theta={g.theta_values[i]:+.3f}, "
          f"m={g.m_values[j]:+.2f}  (bound {g.bound:.4f})")

###############################################################################
# q = 0.001 is already close to the two-level limit, where the values are
# known in closed form.
theta = np.array([0.0, np.pi / 2, np.pi])
print(wigner_full(s, theta, 0.5), np.cos(theta) / (2 * np.pi))
print(wigner_half(s, theta, 0.5), (4 / np.pi + 2 * np.cos(theta)) / (4 * np.pi))

###############################################################################
# Quadrature of the defining integral gives the same numbers.
print(wigner_full(s, theta, 0.5, method="quadrature"))
