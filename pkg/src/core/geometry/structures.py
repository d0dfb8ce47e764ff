"""
Strutture SU(3) e G2
====================

Dalle funzioni di profilo alle forme invarianti:

    omega = 4 A1 B1 m1p1 + 4 A2 B2 (m2p2 + m3p3)
    Omega+ = 8 B1 B2^2 m1m2m3 - 8 A1 A2 B2 (p1p2m3 + p1m2p3) - 8 A2^2 B1 m1p2p3
    Omega- = -8 A2^2 A1 p1p2p3 + 8 B1 B2 A2 (m1m2p3 + m1p2m3) + 8 A1 B2^2 p1m2m3

    phi = w dr^omega + Omega+
    psi = 1/2 omega^omega - w dr^Omega-

e verifica dphi = 0 = dpsi sulle griglie radiali.
"""

from dataclasses import dataclass, field
from typing import Dict, Iterator, Tuple
import logging

import numpy as np

from src.core.calculus.forms import (
    InvariantForm, wedge, exterior_derivative, coefficient_envelope,
    coframe, DR, P1, P2, P3, M1, M2, M3,
)
from src.core.calculus.radial import RadialScalar
from src.core.geometry.profiles import ProfileSet, Geometry
from src.data.constants import DG2

logger = logging.getLogger(__name__)


@dataclass(frozen=True)
class SU3Structure:
    """(omega, Omega+, Omega-, h) su una ipersuperficie r = cost"""
    omega: InvariantForm
    omega_plus: InvariantForm
    omega_minus: InvariantForm
    h: Tuple[RadialScalar, ...]

    def __iter__(self) -> Iterator:
        return iter((self.omega, self.omega_plus, self.omega_minus, self.h))


@dataclass(frozen=True)
class G2Forms:
    """3-forma phi e 4-forma psi = *phi"""
    phi: InvariantForm
    psi: InvariantForm

    def __iter__(self) -> Iterator:
        return iter((self.phi, self.psi))


def su3_structure(p: ProfileSet) -> SU3Structure:
    """Forme omega, Omega+, Omega- e diagonale della metrica h"""
    A1, A2, B1, B2 = p.A1, p.A2, p.B1, p.B2

    omega = InvariantForm(2, {
        (M1, P1): 4 * A1 * B1,
        (M2, P2): 4 * A2 * B2,
        (M3, P3): 4 * A2 * B2,
    })

    mixed_plus = -8 * A1 * A2 * B2
    omega_plus = InvariantForm(3, {
        (M1, M2, M3): 8 * B1 * B2 ** 2,
        (P1, P2, M3): mixed_plus,
        (P1, M2, P3): mixed_plus,
        (M1, P2, P3): -8 * A2 ** 2 * B1,
    })

    mixed_minus = 8 * B1 * B2 * A2
    omega_minus = InvariantForm(3, {
        (P1, P2, P3): -8 * A2 ** 2 * A1,
        (M1, M2, P3): mixed_minus,
        (M1, P2, M3): mixed_minus,
        (P1, M2, M3): 8 * A1 * B2 ** 2,
    })

    return SU3Structure(omega, omega_plus, omega_minus, p.metric_diagonal())


def g2_forms(p: ProfileSet) -> G2Forms:
    """phi = w dr^omega + Omega+,  psi = 1/2 omega^omega - w dr^Omega-"""
    omega, omega_plus, omega_minus, _ = su3_structure(p)
    dr = coframe(DR)
    phi = wedge(dr, omega) * p.warp + omega_plus
    psi = wedge(omega, omega) * 0.5 - wedge(dr, omega_minus) * p.warp
    return G2Forms(phi, psi)


def spatial_part(a: InvariantForm) -> InvariantForm:
    """Parte di a senza dr (restrizione alle orbite principali)"""
    return InvariantForm(a.degree, {k: v for k, v in a.coefficients.items() if DR not in k})


# =============================================================================
# TORSIONE
# =============================================================================

@dataclass
class TorsionResult:
    """Residui di torsione su una griglia radiale"""
    geometry: str
    dphi_max: float
    dpsi_max: float
    dphi_normalized: float
    dpsi_normalized: float
    half_flat_max: float
    r_min: float
    r_max: float
    points: int
    as_printed: bool = False
    notes: list = field(default_factory=list)

    def passed(self, tolerance: float = DG2.Tolleranze.TORSIONE) -> bool:
        return max(self.dphi_normalized, self.dpsi_normalized,
                   self.half_flat_max) < tolerance

    def __iter__(self):
        return iter((self.dphi_max, self.dpsi_max))

    def to_dict(self) -> Dict:
        return {
            'geometry': self.geometry,
            'as_printed': self.as_printed,
            'dphi_max': self.dphi_max,
            'dpsi_max': self.dpsi_max,
            'dphi_normalized': self.dphi_normalized,
            'dpsi_normalized': self.dpsi_normalized,
            'half_flat_max': self.half_flat_max,
            'grid': {'r_min': self.r_min, 'r_max': self.r_max, 'points': self.points},
            'notes': list(self.notes),
        }


def torsion_residual(p: ProfileSet, r_grid=None) -> TorsionResult:
    """
    Massimi |dphi|, |dpsi| sulla griglia.

    I valori normalizzati dividono, punto per punto, per
    max(1, coefficiente massimo di phi e psi). Il controllo half-flat
    riguarda le parti senza dr di d(omega^2) e d(Omega+).
    """
    grid = p.interior_grid() if r_grid is None else np.asarray(r_grid, dtype=float)
    phi, psi = g2_forms(p)
    omega, omega_plus, _, _ = su3_structure(p)

    dphi = exterior_derivative(phi)
    dpsi = exterior_derivative(psi)

    scale = np.maximum(1.0, np.maximum(coefficient_envelope(phi, grid),
                                       coefficient_envelope(psi, grid)))
    env_dphi = coefficient_envelope(dphi, grid)
    env_dpsi = coefficient_envelope(dpsi, grid)

    half_flat = np.maximum(
        coefficient_envelope(spatial_part(exterior_derivative(wedge(omega, omega))), grid),
        coefficient_envelope(spatial_part(exterior_derivative(omega_plus)), grid))

    result = TorsionResult(
        geometry=p.geometry.value,
        dphi_max=float(np.max(env_dphi)),
        dpsi_max=float(np.max(env_dpsi)),
        dphi_normalized=float(np.max(env_dphi / scale)),
        dpsi_normalized=float(np.max(env_dpsi / scale)),
        half_flat_max=float(np.max(half_flat / scale)),
        r_min=float(grid[0]),
        r_max=float(grid[-1]),
        points=len(grid),
        as_printed=p.as_printed,
    )

    if p.geometry is Geometry.BGGG and p.as_printed:
        result.notes.append("Dati BGGG come stampati: torsione non nulla attesa")

    logger.debug(f"Torsione {result.geometry}: dphi={result.dphi_max:.2e}, "
                 f"dpsi={result.dpsi_max:.2e}")
    return result
