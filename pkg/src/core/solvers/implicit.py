"""
Soluzioni Implicite Deformate (BGGG)
====================================

Famiglia di soluzioni dell'equazione

    24 f tan(f/3 + c) = 16 r^2 - 81

per l'ansatz A = f(r) e1+ sulla struttura BGGG.

Finestre di ramo (c >= 0, k >= 0):

    f in [max(0, 3(k pi - c)), 3(k pi + pi/2 - c))

dove tan(f/3 + c) >= 0 e f -> 24 f tan(f/3 + c) cresce da 0 a +inf.
Il bracketing usa la forma senza poli

    h(f) = (-1)^k (24 f sin(f/3 + c) - RHS cos(f/3 + c))

che cambia segno una sola volta nella finestra. Per c < 0 si usa la
simmetria f(r; -c) = -f(r; c).
"""

from dataclasses import dataclass, asdict
from functools import lru_cache
from typing import Tuple
import math
import logging

import numpy as np
from scipy.optimize import brentq

from src.core.calculus.radial import RadialScalar, Interval
from src.core.exceptions import DomainError, EmptyWindowError
from src.data.constants import DG2

logger = logging.getLogger(__name__)

R_SINGULAR = DG2.Geometria.BGGG_R_SINGOLARE


@dataclass(frozen=True)
class BranchedRoot:
    """Radice dell'equazione implicita con il suo ramo"""
    f: float
    branch: int
    window: Tuple[float, float]
    converged: bool
    residual: float
    r: float = math.nan
    c: float = math.nan

    def to_dict(self):
        return asdict(self)


def branch_window(c: float, branch: int) -> Tuple[float, float]:
    """
    Finestra (lower, upper) del ramo per c >= 0.

    Raises:
        EmptyWindowError: se la finestra e' vuota (es. ramo 0 con c >= pi/2)
    """
    if branch < 0:
        raise DomainError(f"Indice di ramo negativo: {branch}")
    lower = max(0.0, 3.0 * (branch * math.pi - c))
    upper = 3.0 * (branch * math.pi + math.pi / 2 - c)
    if not upper > lower:
        raise EmptyWindowError(f"Finestra vuota per ramo {branch}, c = {c}")
    return lower, upper


def rhs_of(r: float) -> float:
    """Membro destro 16 r^2 - 81"""
    return 16.0 * r * r - 81.0


def tan_residual(f: float, rhs: float, c: float) -> float:
    """Residuo relativo |24 f tan(f/3 + c) - RHS| / max(1, |RHS|)"""
    return abs(24.0 * f * math.tan(f / 3.0 + c) - rhs) / max(1.0, abs(rhs))


@lru_cache(maxsize=65536)
def _solve_nonnegative(rhs: float, c: float, branch: int) -> Tuple[float, float, float, bool]:
    lower, upper = branch_window(c, branch)
    if rhs == 0.0:
        return lower, lower, upper, True

    sign = -1.0 if branch % 2 else 1.0

    def h(f):
        theta = f / 3.0 + c
        return sign * (24.0 * f * math.sin(theta) - rhs * math.cos(theta))

    h_low, h_up = h(lower), h(upper)
    if h_low == 0.0:
        return lower, lower, upper, True
    if h_up == 0.0:
        return upper, lower, upper, True
    if h_low * h_up > 0:
        raise EmptyWindowError(
            f"Nessun cambio di segno nel ramo {branch} (RHS = {rhs:g}, c = {c:g})")

    root, info = brentq(h, lower, upper,
                        xtol=DG2.Solver.RADICE_XTOL,
                        rtol=DG2.Solver.RADICE_RTOL,
                        maxiter=DG2.Solver.RADICE_MAXITER,
                        full_output=True, disp=False)
    return root, lower, upper, bool(info.converged)


def solve_tan_equation(rhs: float, c: float, branch: int = 0) -> BranchedRoot:
    """
    Radice di 24 f tan(f/3 + c) = rhs nel ramo indicato (rhs >= 0).

    Raises:
        DomainError: rhs < 0
        EmptyWindowError: finestra di ramo vuota
    """
    if rhs < 0:
        raise DomainError(f"Membro destro negativo: {rhs}")
    flip = c < 0
    c_eff = -c if flip else c
    root, lower, upper, converged = _solve_nonnegative(float(rhs), float(c_eff), int(branch))
    if flip:
        root, lower, upper = -root, -upper, -lower
    residual = tan_residual(root, rhs, c)
    if not converged:
        logger.warning(f"Radice non convergente: ramo {branch}, RHS = {rhs:g}, c = {c:g}")
    return BranchedRoot(root, branch, (lower, upper), converged, residual, c=c)


def solve_tan_implicit(r: float, c: float, branch: int = 0) -> BranchedRoot:
    """
    Radice f(r) di 24 f tan(f/3 + c) = 16 r^2 - 81.

    Args:
        r: raggio, r >= 9/4
        c: costante di integrazione (c < 0 tramite simmetria)
        branch: indice di ramo k >= 0

    Raises:
        DomainError: r < 9/4
        EmptyWindowError: finestra vuota
    """
    if r < R_SINGULAR:
        raise DomainError(f"r = {r} < 9/4")
    root = solve_tan_equation(rhs_of(r), c, branch)
    return BranchedRoot(root.f, root.branch, root.window, root.converged,
                        root.residual, r=float(r), c=float(c))


def implicit_derivative(r, f, c: float):
    """f' = 2304 r f / ((16r^2-81)(16r^2-9) + 576 f^2), con f'(9/4) = 3 cot c"""
    r = np.asarray(r, dtype=float)
    f = np.asarray(f, dtype=float)
    denominator = (16 * r ** 2 - 81) * (16 * r ** 2 - 9) + 576 * f ** 2
    at_endpoint = (r == R_SINGULAR) & (f == 0)
    with np.errstate(divide='ignore', invalid='ignore'):
        fp = np.where(at_endpoint, 3.0 / math.tan(c) if c != 0 else np.inf,
                      2304 * r * f / np.where(at_endpoint, 1.0, denominator))
    return fp if fp.ndim else float(fp)


def implicit_second_derivative(r, f, c: float):
    """f'' dalla derivata del quoziente; in 9/4 da f = a z + b z^2, b = -(7a + a^3)/9"""
    r = np.asarray(r, dtype=float)
    f = np.asarray(f, dtype=float)
    fp = np.asarray(implicit_derivative(r, f, c))
    P = (16 * r ** 2 - 81) * (16 * r ** 2 - 9)
    dP = 32 * r * (16 * r ** 2 - 9) + 32 * r * (16 * r ** 2 - 81)
    D = P + 576 * f ** 2
    dD = dP + 1152 * f * fp
    N = 2304 * r * f
    dN = 2304 * (f + r * fp)
    at_endpoint = (r == R_SINGULAR) & (f == 0)
    a = 3.0 / math.tan(c) if c != 0 else np.inf
    with np.errstate(divide='ignore', invalid='ignore'):
        fpp = np.where(at_endpoint, -2.0 * (7 * a + a ** 3) / 9.0,
                       (dN * D - N * dD) / np.where(at_endpoint, 1.0, D) ** 2)
    return fpp if fpp.ndim else float(fpp)


def endpoint_slope(c: float, step: float = DG2.Solver.PASSO_DERIVATA_ESTREMO) -> float:
    """
    f'(9/4) del ramo 0 dalle radici, differenza unilaterale del secondo ordine.

    Errore di troncamento O(step^2): da confrontare con 3 cot c.
    """
    f0, f1, f2 = (solve_tan_implicit(R_SINGULAR + k * step, c).f for k in range(3))
    return (-3.0 * f0 + 4.0 * f1 - f2) / (2.0 * step)


def principal_profile(c: float, branch: int = 0) -> RadialScalar:
    """
    Profilo f_c(r) del ramo principale come RadialScalar su [9/4, inf).

    Raises:
        DomainError: c fuori da (0, pi/2) per il ramo 0
    """
    if branch == 0 and not 0 < c < math.pi / 2:
        raise DomainError(f"c = {c} fuori da (0, pi/2)")

    def value(r):
        if np.ndim(r):
            return np.array([solve_tan_implicit(x, c, branch).f for x in np.ravel(r)]
                            ).reshape(np.shape(r))
        return solve_tan_implicit(float(r), c, branch).f

    def derivative(r):
        return implicit_derivative(r, value(r), c)

    def second(r):
        return implicit_second_derivative(r, value(r), c)

    return RadialScalar.from_pair(value, derivative, Interval(R_SINGULAR),
                                  label=f"f_c(c={c:g})", second=second)
