"""
Istantoni Deformati sul Cono
============================

Per l'ansatz f_i = a_i f sul cono di Bryant-Salamon, con S = sum a_i^2:

    f' (r^4 + 27/4 S f^2) = 2 f r^3
    log(c f) f^2 = 2 r^4 / (27 S)
    f = (1/c) exp(W(4 c^2 r^4 / (27 S)) / 2)
"""

from typing import Sequence
import math
import logging

import numpy as np

from src.core.calculus.radial import RadialScalar, Interval
from src.core.exceptions import DomainError
from src.core.solvers.lambert import lambert_w0

logger = logging.getLogger(__name__)

CONE_DOMAIN = Interval(0.0, open_lower=True)


def _sum_of_squares(a: Sequence[float]) -> float:
    S = float(np.sum(np.square(np.asarray(a, dtype=float))))
    if len(a) != 3 or S == 0:
        raise DomainError(f"Terna a non valida: {a}")
    return S


def cone_value(r, cone_c: float, a: Sequence[float]):
    S = _sum_of_squares(a)
    r = np.asarray(r, dtype=float)
    w = lambert_w0(4.0 * cone_c ** 2 * r ** 4 / (27.0 * S))
    return np.exp(0.5 * np.asarray(w)) / cone_c


def cone_derivative(r, f, a: Sequence[float]):
    """f' = 2 r^3 f / (r^4 + 27/4 S f^2)"""
    S = _sum_of_squares(a)
    r = np.asarray(r, dtype=float)
    return 2.0 * r ** 3 * f / (r ** 4 + 6.75 * S * f ** 2)


def cone_profile(cone_c: float, a: Sequence[float]) -> RadialScalar:
    """
    Profilo f come RadialScalar su (0, inf).

    Raises:
        DomainError: c <= 0 oppure a = (0, 0, 0)
    """
    if not cone_c > 0:
        raise DomainError(f"Costante del cono non positiva: {cone_c}")
    a = tuple(float(x) for x in a)
    _sum_of_squares(a)

    def value(r):
        f = cone_value(r, cone_c, a)
        return f if np.ndim(r) else float(f)

    def derivative(r):
        d = cone_derivative(r, cone_value(r, cone_c, a), a)
        return d if np.ndim(r) else float(d)

    return RadialScalar.from_pair(value, derivative, CONE_DOMAIN,
                                  label=f"cono(c={cone_c:g})")


def cone_implicit_residual(r, cone_c: float, a: Sequence[float]):
    """Scarto relativo della relazione log(c f) f^2 = 2 r^4 / (27 S)"""
    S = _sum_of_squares(a)
    r = np.asarray(r, dtype=float)
    f = cone_value(r, cone_c, a)
    target = 2.0 * r ** 4 / (27.0 * S)
    return np.abs(np.log(cone_c * f) * f ** 2 - target) / np.maximum(1.0, target)


def loglog_slope(f: RadialScalar, r_low: float, r_high: float) -> float:
    """Pendenza log-log di f tra due raggi"""
    return (math.log(f.value(r_high)) - math.log(f.value(r_low))) / \
        (math.log(r_high) - math.log(r_low))
