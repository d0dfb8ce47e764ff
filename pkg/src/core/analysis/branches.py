"""
Rami dell'Equazione Implicita
=============================

Dati per i grafici delle soluzioni di tan(y/3 + c) = C / y, C >= 0,
con C = (16r^2 - 81)/24: per ogni ramo k e ogni valore della griglia la
radice y (equivalentemente f(r)).
"""

import math
import logging

import numpy as np

from src.core.exceptions import DomainError, EmptyWindowError
from src.core.models.dataset import Dataset
from src.core.solvers.implicit import solve_tan_equation, rhs_of, R_SINGULAR

logger = logging.getLogger(__name__)

VARIABLES = ('C', 'r')


def asymptote_value(c: float, branch: int) -> float:
    """Limite del ramo k per C -> inf: 3(pi/2 + k pi) - 3c"""
    if not 0 <= c < math.pi / 2:
        raise DomainError(f"c = {c} fuori da [0, pi/2)")
    if branch < 0:
        raise DomainError(f"Indice di ramo negativo: {branch}")
    return 3.0 * (math.pi / 2 + branch * math.pi) - 3.0 * c


def branch_sweep(c: float, k_max: int, grid, variable: str = 'C') -> Dataset:
    """
    Radici per ogni ramo k <= k_max e ogni punto della griglia.

    Args:
        c: costante in [0, pi/2)
        k_max: ultimo ramo
        grid: valori di C (>= 0) o di r (>= 9/4)
        variable: 'C' oppure 'r'

    Returns:
        Dataset con colonne (variabile, branch, f, residual), ordinato per
        ramo e poi per indice di griglia
    """
    if not 0 <= c < math.pi / 2:
        raise DomainError(f"c = {c} fuori da [0, pi/2)")
    if k_max < 0:
        raise DomainError(f"k_max negativo: {k_max}")
    if variable not in VARIABLES:
        raise DomainError(f"Variabile sconosciuta: {variable}")

    grid = np.atleast_1d(np.asarray(grid, dtype=float))
    if variable == 'C' and np.any(grid < 0):
        raise DomainError("C deve essere >= 0")
    if variable == 'r' and np.any(grid < R_SINGULAR):
        raise DomainError("r deve essere >= 9/4")

    dataset = Dataset(name='branches', columns=[variable, 'branch', 'f', 'residual'],
                      metadata={'c': c, 'k_max': k_max, 'variable': variable})
    for k in range(k_max + 1):
        for x in grid:
            rhs = 24.0 * x if variable == 'C' else rhs_of(x)
            try:
                root = solve_tan_equation(rhs, c, k)
            except EmptyWindowError as e:
                logger.warning(f"Ramo {k} saltato in {variable} = {x:g}: {e}")
                continue
            dataset.add_row(float(x), k, root.f, root.residual)
    logger.debug(f"Sweep rami: c = {c}, k <= {k_max}, {len(dataset)} righe")
    return dataset
