"""
Funzionale di Chern-Simons
==========================

Con A0 = 0 e A_t = t A si ha F_t = dt ^ A + t F; integrando in t la
densita' del funzionale si riduce alla 7-forma

    -1/2 A ^ (F ^ psi - F^3 / 12)

il cui coefficiente lungo dr^p1^p2^p3^m1^m2^m3 e' la densita' radiale.
Il volume delle direzioni compatte S^3 x S^3 non e' incluso.
"""

from dataclasses import dataclass, asdict
from typing import Optional, Tuple
import logging
import math

import numpy as np
from scipy.integrate import quad

from src.core.calculus.forms import wedge, DIMENSION, coefficient_envelope
from src.core.calculus.radial import RadialScalar
from src.core.geometry.profiles import ProfileSet
from src.core.geometry.structures import g2_forms
from src.core.instanton.connection import ConnectionAnsatz, chern_simons_form, curvature
from src.data.constants import DG2

logger = logging.getLogger(__name__)

TOP_MONOMIAL = tuple(range(DIMENSION))

FIBER_NOTE = "densita' radiale per unita' di volume della fibra S^3 x S^3"


@dataclass
class ChernSimonsValue:
    """Integrale radiale della densita' di Chern-Simons"""
    value: float
    abs_error: float
    r_range: Tuple[float, float]
    converged: bool = True
    identically_zero: bool = False
    message: str = ''
    note: str = FIBER_NOTE

    def to_dict(self):
        return asdict(self)


def chern_simons_density(a: ConnectionAnsatz, p: ProfileSet) -> RadialScalar:
    """Coefficiente del monomio di grado massimo della densita'"""
    form = chern_simons_form(a, p)
    if form.is_zero:
        return RadialScalar.const(0.0, p.domain)
    return form.coefficient(TOP_MONOMIAL)


def density_scale(a: ConnectionAnsatz, p: ProfileSet, r_grid) -> np.ndarray:
    """Modulo dei due termini A^F^psi e A^F^3/12, punto per punto"""
    a = a.restrict(p.domain)
    A = a.as_form()
    F = curvature(a)
    psi = g2_forms(p).psi
    linear = wedge(A, F, psi)
    cubic = wedge(A, F, F, F) * (1.0 / 12.0)
    return np.maximum(coefficient_envelope(linear, r_grid), coefficient_envelope(cubic, r_grid))


def normalized_density(a: ConnectionAnsatz, p: ProfileSet, r_grid) -> np.ndarray:
    """|densita'| / (1 + scala dei termini) sulla griglia"""
    r_grid = np.atleast_1d(np.asarray(r_grid, dtype=float))
    density = np.abs(np.broadcast_to(chern_simons_density(a, p).value(r_grid), r_grid.shape))
    return density / (1.0 + density_scale(a, p, r_grid))


def chern_simons_value(a: ConnectionAnsatz, p: ProfileSet,
                       r_range: Optional[Tuple[float, float]] = None,
                       limit: int = DG2.Solver.QUADRATURA_LIMITE,
                       epsabs: float = DG2.Solver.QUADRATURA_EPSABS,
                       epsrel: float = DG2.Solver.QUADRATURA_EPSREL) -> ChernSimonsValue:
    """
    Integrale della densita' su r_range (quadratura adattiva).

    Args:
        r_range: (r_min, r_max) nel dominio; default dall'orbita singolare a R_MAX_DEFAULT

    Returns:
        ChernSimonsValue; converged=False con il messaggio di QUADPACK se
        la quadratura non raggiunge la tolleranza
    """
    if r_range is None:
        r_range = (p.domain.lower + (DG2.Griglia.R_MIN_CONO if p.domain.open_lower else 0.0),
                   DG2.Griglia.R_MAX_DEFAULT)
    r_min, r_max = (float(x) for x in r_range)
    if not r_max > r_min:
        raise ValueError(f"Intervallo di integrazione non valido: {r_range}")

    density = chern_simons_density(a, p)
    if density.is_zero:
        return ChernSimonsValue(0.0, 0.0, (r_min, r_max), identically_zero=True)

    def integrand(r):
        return float(density.value(r))

    result = quad(integrand, r_min, r_max, limit=limit,
                  epsabs=epsabs, epsrel=epsrel, full_output=1)
    value, abs_error = float(result[0]), float(result[1])
    if len(result) > 3:
        logger.warning(f"Quadratura Chern-Simons non convergente: {result[3]}")
        return ChernSimonsValue(value, abs_error, (r_min, r_max), converged=False,
                                message=str(result[3]))
    if not math.isfinite(value):
        return ChernSimonsValue(value, abs_error, (r_min, r_max), converged=False,
                                message="valore non finito")
    return ChernSimonsValue(value, abs_error, (r_min, r_max))
