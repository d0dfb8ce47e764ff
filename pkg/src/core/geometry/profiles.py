"""
Profili delle Strutture G2
==========================

Funzioni A1, A2, B1, B2 e warp w = ds/dr delle tre strutture G2
invarianti su R^4 x S^3:

- BGGG (ALC), orbita singolare r = 9/4
- Bryant-Salamon completa (AC), scala c > 0, orbita singolare r = c
- cono di Bryant-Salamon (c = 0)

Per BGGG sono disponibili due varianti:

- default: dati senza torsione, B2 = sqrt((r+9/4)(r-3/4)/3) e
  w = sqrt((r-3/4)(r+3/4)) / sqrt((r-9/4)(r+9/4)), per cui w*A1 = 1;
- as_printed=True: B2 = A2 e w = sqrt((r-3/4)(r+3/4)) / ((r-9/4)(r+9/4)),
  che non soddisfa dphi = 0 (la verifica di torsione lo segnala).
"""

from dataclasses import dataclass
from enum import Enum
from typing import Callable, Dict, Optional
import logging

import numpy as np

from src.core.calculus.radial import RadialScalar, Interval, sqrt
from src.core.exceptions import DomainError
from src.core.validation import ValidationResult
from src.data.constants import DG2

logger = logging.getLogger(__name__)


class Geometry(Enum):
    """Selettore di geometria"""
    BGGG = 'bggg'
    BS_COMPLETE = 'bs'
    BS_CONE = 'cone'

    @classmethod
    def parse(cls, value) -> 'Geometry':
        if isinstance(value, cls):
            return value
        key = str(value).strip().lower().replace('-', '_')
        aliases = {'bs_complete': 'bs', 'bryant_salamon': 'bs', 'bs_cone': 'cone'}
        key = aliases.get(key, key)
        for member in cls:
            if member.value == key:
                return member
        raise DomainError(f"Geometria sconosciuta: {value}")


@dataclass(frozen=True)
class ProfileSet:
    """Funzioni di profilo di una struttura G2 coomogenea di grado uno"""
    A1: RadialScalar
    A2: RadialScalar
    B1: RadialScalar
    B2: RadialScalar
    warp: RadialScalar
    domain: Interval
    geometry: Geometry
    scale: float = 0.0
    as_printed: bool = False

    @property
    def singular_radius(self) -> float:
        """Raggio dell'orbita singolare (estremo inferiore del dominio)"""
        return self.domain.lower

    def interior_grid(self, count: int = DG2.Griglia.PUNTI_DEFAULT,
                      r_max: float = DG2.Griglia.R_MAX_DEFAULT,
                      offset: Optional[float] = None,
                      spacing: str = 'log') -> np.ndarray:
        """
        Griglia interna al dominio che non tocca l'orbita singolare.

        Per il cono l'offset e' il raggio minimo R_MIN_CONO.
        """
        if self.geometry is Geometry.BS_CONE:
            start = offset if offset is not None else DG2.Griglia.R_MIN_CONO
            return (np.geomspace(start, r_max, count) if spacing == 'log'
                    else np.linspace(start, r_max, count))
        if offset is None:
            offset = DG2.Geometria.OFFSET_SINGOLARE
        return self.domain.interior_grid(count, r_max, offset, spacing)

    def metric_diagonal(self):
        """Coefficienti ((2A1)^2, (2A2)^2, (2A2)^2, (2B1)^2, (2B2)^2, (2B2)^2)"""
        a1, a2, b1, b2 = 2 * self.A1, 2 * self.A2, 2 * self.B1, 2 * self.B2
        return (a1 ** 2, a2 ** 2, a2 ** 2, b1 ** 2, b2 ** 2, b2 ** 2)


# =============================================================================
# COSTRUTTORI
# =============================================================================

def _bggg(scale: float, as_printed: bool) -> ProfileSet:
    r0 = DG2.Geometria.BGGG_R_SINGOLARE
    q = DG2.Geometria.BGGG_R_AUSILIARIO
    domain = Interval(r0)
    r = RadialScalar.identity(domain)

    A1 = sqrt((r - r0) * (r + r0)) / sqrt((r - q) * (r + q))
    A2 = sqrt((r - r0) * (r + q) / 3)
    B1 = 2 * r / 3
    if as_printed:
        B2 = A2
        warp = sqrt((r - q) * (r + q)) / ((r - r0) * (r + r0))
    else:
        B2 = sqrt((r + r0) * (r - q) / 3)
        warp = sqrt((r - q) * (r + q)) / sqrt((r - r0) * (r + r0))

    return ProfileSet(A1, A2, B1, B2, warp, domain, Geometry.BGGG,
                      scale=0.0, as_printed=as_printed)


def _bryant_salamon(scale: float, as_printed: bool) -> ProfileSet:
    if scale < 0:
        raise DomainError(f"Scala di Bryant-Salamon negativa: {scale}")
    if scale == 0:
        return _cone(0.0, as_printed)

    domain = Interval(scale)
    r = RadialScalar.identity(domain)
    collapse = 1 - scale ** 3 / r ** 3
    A = r / 3 * sqrt(collapse)
    B = r / np.sqrt(3.0)
    warp = collapse ** -0.5
    return ProfileSet(A, A, B, B, warp, domain, Geometry.BS_COMPLETE, scale=scale)


def _cone(scale: float, as_printed: bool) -> ProfileSet:
    domain = Interval(0.0, open_lower=True)
    r = RadialScalar.identity(domain)
    A = r / 3
    B = r / np.sqrt(3.0)
    warp = RadialScalar.const(1.0, domain)
    return ProfileSet(A, A, B, B, warp, domain, Geometry.BS_CONE, scale=0.0)


_BUILDERS: Dict[Geometry, Callable[[float, bool], ProfileSet]] = {
    Geometry.BGGG: _bggg,
    Geometry.BS_COMPLETE: _bryant_salamon,
    Geometry.BS_CONE: _cone,
}


def make_profiles(tag, scale: Optional[float] = None,
                  as_printed: bool = False) -> ProfileSet:
    """
    Costruisce il ProfileSet di una geometria.

    Args:
        tag: Geometry o stringa ('bggg', 'bs', 'cone')
        scale: scala c della famiglia di Bryant-Salamon (default 1 per 'bs');
               ignorata per BGGG e cono
        as_printed: solo BGGG, usa i dati B2 = A2 e il warp non integrabile

    Returns:
        ProfileSet
    """
    geometry = Geometry.parse(tag)
    if scale is None:
        scale = (DG2.Geometria.BS_SCALA_COMPLETA if geometry is Geometry.BS_COMPLETE
                 else DG2.Geometria.BS_SCALA_CONO)
    profiles = _BUILDERS[geometry](float(scale), as_printed)
    logger.debug(f"Profili {geometry.value} su {profiles.domain}"
                 f"{' (come stampati)' if as_printed else ''}")
    return profiles


# =============================================================================
# VALIDAZIONE
# =============================================================================

def validate_profiles(p: ProfileSet, r_grid=None) -> ValidationResult:
    """
    Verifica gli invarianti di un ProfileSet su una griglia.

    - A_i >= 0 e B_i > 0 sul dominio, warp > 0 all'interno
    - BGGG come stampato: A2 == B2 puntualmente
    """
    result = ValidationResult(is_valid=True)
    grid = p.interior_grid() if r_grid is None else np.asarray(r_grid, dtype=float)

    try:
        values = {name: getattr(p, name).value(grid)
                  for name in ('A1', 'A2', 'B1', 'B2', 'warp')}
    except DomainError as e:
        result.add_error(f"Griglia fuori dominio: {e}")
        return result

    for name in ('A1', 'A2'):
        if np.any(values[name] < 0):
            result.add_error(f"{name} negativo su parte della griglia")
    for name in ('B1', 'B2'):
        if np.any(values[name] <= 0):
            result.add_error(f"{name} non positivo su parte della griglia")
    if np.any(~np.isfinite(values['warp'])) or np.any(values['warp'] <= 0):
        result.add_error("warp non positivo o non finito all'interno")

    if p.geometry is Geometry.BGGG and p.as_printed:
        gap = np.max(np.abs(values['A2'] - values['B2']))
        if gap > 1e-14 * max(1.0, float(np.max(values['A2']))):
            result.add_error(f"A2 != B2 (scarto {gap:.2e})")
        result.add_warning("Profili BGGG come stampati: struttura con torsione")

    if p.domain.lower > 0 and not p.domain.open_lower:
        B_min = min(float(getattr(p, n).value(p.domain.lower)) for n in ('B1', 'B2'))
        if B_min <= 0:
            result.add_warning(f"B_i nullo sull'orbita singolare r = {p.domain.lower:g}")

    return result
