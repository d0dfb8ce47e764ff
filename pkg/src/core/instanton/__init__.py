"""Istantoni G2 e G2 deformati: curvatura, residui, sistemi ODE"""

from src.core.instanton.connection import (
    Mode, ConnectionAnsatz, curvature, form_residual, chern_simons_form,
    killing_dual_ansatz,
)
from src.core.instanton.odes import (
    ode_system, ode_residual, residual_scale, normalized_residual,
    derivative_from_system, cone_reduced_residual, check_regular, VARIANTS,
)
from src.core.instanton.crosscheck import (
    EquivalenceReport, ConeReductionReport, crosscheck_equivalence,
    random_ansatze, compare_variants, cone_reduction_check,
)
