"""Wigner functions of a Gaussian-coefficient state on the circle.

Quick start::

    from circle_wigner import make_state, wigner_full, marginal_theta_full
    s = make_state(0.5, eps=0.3)
    wigner_full(s, 0.0, 0.5)
"""
from .errors import ConsistencyError, ConvergenceError, DomainError
from .marginals import (
    cesaro_marginal_theta,
    marginal_p,
    marginal_p_full,
    marginal_p_half,
    marginal_p_normalization,
    marginal_theta,
    marginal_theta_full,
    marginal_theta_half,
)
from .moments import (
    CurvePoint,
    log_var_L,
    mean_L,
    mean_L2,
    uncertainty_curve,
    var_L,
    var_L_asymptotic,
    var_theta,
    var_theta_asymptotic,
)
from .quadrature import QuadratureConfig, integrate
from .special_fn import (
    SeriesConfig,
    ThetaArg,
    dirichlet_kernel,
    fejer_kernel,
    sinc,
    sinc_pi,
    theta3,
    theta3_dz,
    theta3_scaled,
)
from .state import (
    NormalizedState,
    StateParams,
    coeff,
    density,
    eval_psi,
    make_state,
    normalize,
)
from .wigner import WignerGrid, eval_grid, wigner_full, wigner_half, wigner_value

__version__ = "0.1.0"
