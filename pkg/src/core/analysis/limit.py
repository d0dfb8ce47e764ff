"""
Limite di Scala eps -> 0
========================

Con c = arctan(1/eps) la soluzione implicita f_c soddisfa

    f_c / eps -> L(r) = 3 (16r^2 - 81) / (16r^2 - 9)

cioe' l'istantone G2 BGGG con c0 = 3 (errore O(eps^2)). La connessione
B = A_c / eps risolve (eps^2/6) F_B^3 - F_B ^ psi = 0.
"""

from dataclasses import dataclass, field
from typing import Optional, List
import math
import logging

import numpy as np

from src.core.calculus.forms import coefficient_envelope, wedge
from src.core.exceptions import DomainError
from src.core.geometry.profiles import Geometry, make_profiles
from src.core.geometry.structures import g2_forms
from src.core.instanton.connection import ConnectionAnsatz, Mode, form_residual, curvature
from src.core.solvers.implicit import principal_profile
from src.data.constants import DG2

logger = logging.getLogger(__name__)

LIMIT_C0 = 3.0


def limit_profile(r):
    """L(r) = 3 (16r^2 - 81) / (16r^2 - 9)"""
    r = np.asarray(r, dtype=float)
    return LIMIT_C0 * (16 * r ** 2 - 81) / (16 * r ** 2 - 9)


def c_of_epsilon(epsilon: float) -> float:
    if not epsilon > 0:
        raise DomainError(f"eps deve essere positivo: {epsilon}")
    return math.atan(1.0 / epsilon)


def default_grid(count: int = DG2.Griglia.PUNTI_DEFAULT) -> np.ndarray:
    return make_profiles(Geometry.BGGG).interior_grid(count, DG2.Griglia.R_MAX_DEFAULT)


@dataclass
class LimitReport:
    """Errore uniforme di eps^-1 f_c rispetto al limite G2"""
    epsilon: float
    c_of_eps: float
    sup_error: float
    grid: str
    fixed_c: bool = False
    errors: List[float] = field(default_factory=list, repr=False)

    def to_dict(self):
        return {
            'epsilon': self.epsilon,
            'c_of_eps': self.c_of_eps,
            'sup_error': self.sup_error,
            'grid': self.grid,
            'fixed_c': self.fixed_c,
        }


def scaling_limit_error(epsilon: float, r_grid=None,
                        tan_c: Optional[float] = None) -> LimitReport:
    """
    sup_r |eps^-1 f_c(r) - L(r)| sulla griglia.

    Args:
        epsilon: eps > 0
        r_grid: griglia in [9/4, inf); default logaritmica fino a R_MAX_DEFAULT
        tan_c: se indicato, c resta fisso (controllo negativo)
    """
    fixed = tan_c is not None
    c = float(tan_c) if fixed else c_of_epsilon(epsilon)
    if not epsilon > 0:
        raise DomainError(f"eps deve essere positivo: {epsilon}")
    grid = default_grid() if r_grid is None else np.asarray(r_grid, dtype=float)

    f = principal_profile(c)
    errors = np.abs(np.asarray(f.value(grid)) / epsilon - limit_profile(grid))
    report = LimitReport(epsilon, c, float(np.max(errors)),
                         f"[{grid[0]:g}, {grid[-1]:g}] x {len(grid)}",
                         fixed_c=fixed, errors=[float(e) for e in errors])
    logger.debug(f"Limite di scala: eps = {epsilon:g}, c = {c:.12g}, "
                 f"errore = {report.sup_error:.3e}")
    return report


def scaled_form_residual(epsilon: float, c: Optional[float] = None, r_grid=None) -> float:
    """
    Residuo normalizzato di (eps^2/6) F_B^3 - F_B ^ psi per B = A_c / eps.

    La normalizzazione divide punto per punto per 1 + max(|F_B^3 eps^2/6|, |F_B ^ psi|).
    """
    if c is None:
        c = c_of_epsilon(epsilon)
    p = make_profiles(Geometry.BGGG)
    grid = default_grid() if r_grid is None else np.asarray(r_grid, dtype=float)

    f = principal_profile(c)
    B = ConnectionAnsatz.of(f * (1.0 / epsilon), 0.0, 0.0, domain=p.domain)
    residual = form_residual(B, p, Mode.DEFORMED, epsilon=epsilon)

    F = curvature(B.restrict(p.domain))
    psi = g2_forms(p).psi
    scale = np.maximum(coefficient_envelope(wedge(F, F, F) * (epsilon ** 2 / 6.0), grid),
                       coefficient_envelope(wedge(F, psi), grid))
    return float(np.max(coefficient_envelope(residual, grid) / (1.0 + scale)))
