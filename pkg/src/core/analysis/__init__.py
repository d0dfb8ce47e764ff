"""Chern-Simons, limite di scala e dati dei rami"""

from src.core.analysis.chern_simons import (
    ChernSimonsValue, chern_simons_density, chern_simons_value, normalized_density,
)
from src.core.analysis.limit import (
    LimitReport, scaling_limit_error, scaled_form_residual, limit_profile, c_of_epsilon,
)
from src.core.analysis.branches import branch_sweep, asymptote_value
