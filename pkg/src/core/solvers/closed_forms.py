"""
Istantoni G2 in Forma Chiusa
============================

Le equazioni G2 sono lineari e separabili, f'/f = R(r) con R razionale.
La quadratura e' esatta tramite fratti semplici:

    f = c * exp(k r) * prod_j |q_j(r)|^{m_j}

Cono:           R = 2/r                               -> f = c r^2
BS completa:    R = (2r^3+1)/(r^4-r)
                  = -1/r + 1/(r-1) + (2r+1)/(r^2+r+1)  -> f = c (r^3-1)/r
BGGG f1:        R = 2304 r / ((16r^2-81)(16r^2-9))
                  = 32r/(16r^2-81) - 32r/(16r^2-9)     -> f = c (16r^2-81)/(16r^2-9)
BGGG f2, f3:    R = (4r+3)(4r^2-9r+27/2) / (r(16r^2-81))
                  = 1 - 1/(2r) + 1/(r-9/4) - 2/(r+9/4)
                                                       -> f = c e^r (r-9/4) / (sqrt(r) (r+9/4)^2)
"""

from dataclasses import dataclass
from typing import Sequence, Tuple
import logging

from src.core.calculus.radial import RadialScalar, polynomial, exp
from src.core.geometry.profiles import Geometry, make_profiles

logger = logging.getLogger(__name__)


@dataclass(frozen=True)
class PartialFractions:
    """Primitiva di R: k r + sum_j m_j log|q_j(r)|"""
    linear: float
    factors: Tuple[Tuple[float, Tuple[float, ...]], ...]   # (m_j, coefficienti di q_j)

    def profile(self, c: float, domain) -> RadialScalar:
        f = RadialScalar.const(c, domain)
        for power, coefficients in self.factors:
            f = f * polynomial(coefficients, domain) ** power
        if self.linear:
            f = f * exp(RadialScalar.identity(domain) * self.linear)
        return f


CONE = PartialFractions(0.0, ((2, (0.0, 1.0)),))
BS_COMPLETE = PartialFractions(0.0, (
    (-1, (0.0, 1.0)),
    (1, (-1.0, 1.0)),
    (1, (1.0, 1.0, 1.0)),
))
BGGG_F1 = PartialFractions(0.0, (
    (1, (-81.0, 0.0, 16.0)),
    (-1, (-9.0, 0.0, 16.0)),
))
BGGG_COMPANION = PartialFractions(1.0, (
    (-0.5, (0.0, 1.0)),
    (1, (-9 / 4, 1.0)),
    (-2, (9 / 4, 1.0)),
))


def g2_closed_form(tag, c0: float = 1.0,
                   companion: Sequence[float] = (0.0, 0.0)) -> Tuple[RadialScalar, ...]:
    """
    Profili (f1, f2, f3) degli istantoni G2 espliciti.

    Args:
        tag: geometria
        c0: costante moltiplicativa (tutte le componenti per cono e BS,
            solo f1 per BGGG)
        companion: costanti di f2, f3 per BGGG

    Returns:
        tripla di RadialScalar sul dominio della geometria
    """
    geometry = Geometry.parse(tag)
    domain = make_profiles(geometry).domain

    if geometry is Geometry.BS_CONE:
        f = CONE.profile(c0, domain)
        return f, f, f
    if geometry is Geometry.BS_COMPLETE:
        f = BS_COMPLETE.profile(c0, domain)
        return f, f, f

    k2, k3 = companion
    return (BGGG_F1.profile(c0, domain),
            BGGG_COMPANION.profile(k2, domain),
            BGGG_COMPANION.profile(k3, domain))
