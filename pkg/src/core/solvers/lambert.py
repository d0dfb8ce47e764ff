"""
Funzione W di Lambert (ramo principale)
=======================================

W(x) e' la soluzione w >= -1 di w e^w = x, definita per x >= -1/e.

Inizializzazione:
- serie nel punto di diramazione sqrt(2(e x + 1)) - 1 vicino a -1/e
- asintotica log(x) - log(log(x)) altrove
e raffinamento con l'iterazione di Halley.
"""

import math
import logging

import numpy as np

from src.core.exceptions import DomainError, ConvergenceError
from src.data.constants import DG2

logger = logging.getLogger(__name__)

INV_E = math.exp(-1.0)


def lambert_w0(x):
    """
    Ramo principale di W su scalari o array, con W(+inf) = +inf.

    Raises:
        DomainError: se qualche x < -1/e
        ConvergenceError: se l'iterazione di Halley non converge
    """
    scalar = np.ndim(x) == 0
    z = np.atleast_1d(np.asarray(x, dtype=float)).copy()

    if np.any(np.isnan(z)):
        raise DomainError("Argomento NaN per W di Lambert")
    if np.any(z < -INV_E - 4 * np.finfo(float).eps):
        raise DomainError(f"W di Lambert non definita per x < -1/e: {z[z < -INV_E][:3]}")
    z = np.maximum(z, -INV_E)
    infinite = np.isposinf(z)
    z = np.where(infinite, 1.0, z)

    # stima iniziale
    log_z = np.log(z + (z == 0) + (z < 0))
    w = np.where(z > math.e, log_z - np.log(np.where(z > math.e, log_z, 1.0)), 0.0)
    near_branch = np.abs(z + INV_E) <= 1.5
    w = np.where(near_branch, np.sqrt(np.maximum(2.0 * (math.e * z + 1.0), 0.0)) - 1.0, w)
    w = np.where(~near_branch & (z <= math.e), np.log1p(np.maximum(z, 0.0)), w)

    branch_point = z == -INV_E
    converged = False
    for _ in range(DG2.Solver.LAMBERT_MAXITER):
        ew = np.exp(w)
        f = w * ew - z
        w1 = w + 1.0
        w1 = np.where(w1 == 0, 1.0, w1)
        dw = f / (ew * w1 - (w + 2.0) * f / (2.0 * w1))
        dw = np.where(branch_point, 0.0, dw)
        w = w - dw
        if np.all(np.abs(dw) < DG2.Solver.LAMBERT_TOL * (2.0 + np.abs(w))):
            converged = True
            break

    w = np.where(branch_point, -1.0, w)
    w = np.where(z == 0, 0.0, w)
    w = np.where(infinite, np.inf, w)

    if not converged:
        # vicino a -1/e il passo ristagna al livello dell'arrotondamento
        finite = ~infinite
        residual = np.abs(w[finite] * np.exp(w[finite]) - z[finite])
        converged = bool(np.all(residual <= 1e-14 * np.maximum(1.0, np.abs(z[finite]))))
    if not converged:
        raise ConvergenceError("Iterazione di Halley non convergente per W di Lambert",
                               partial=w)
    return float(w[0]) if scalar else w
