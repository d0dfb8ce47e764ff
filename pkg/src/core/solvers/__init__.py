"""Soluzioni esplicite, implicite, in serie e numeriche"""

from src.core.solvers.lambert import lambert_w0
from src.core.solvers.implicit import (
    BranchedRoot, branch_window, solve_tan_equation, solve_tan_implicit,
    implicit_derivative, endpoint_slope, principal_profile, tan_residual,
)
from src.core.solvers.series import (
    LaurentPoly, SeriesExpansion, series_expand, series_coefficients,
    printed_coefficients, residual_slope,
)
from src.core.solvers.cone import cone_profile, cone_implicit_residual, loglog_slope
from src.core.solvers.closed_forms import g2_closed_form
from src.core.solvers.integrator import (
    InitialData, SampledProfile, integrate_profile, profile_residual,
)
