"""
Integratore dei Sistemi Radiali
===============================

Integrazione adattiva (Runge-Kutta esplicito, scipy.integrate.solve_ivp)
dei sistemi M(r, f) f' = b(r, f) con f' = M^-1 b.

Dati iniziali:
- 'explicit': (r0, f0) in un punto regolare
- 'endpoint': orbita singolare BGGG, f(9/4) = 0, f'(9/4) = 3 cot c,
  passo di Taylor del secondo ordine fino a r0 = 9/4 + h
- 'series':  seme dalla serie di potenze in z = r - 9/4

La stima dell'errore locale si ottiene ripetendo l'integrazione con
tolleranza rilassata di un fattore 100.
"""

from dataclasses import dataclass, field
from typing import Optional, Sequence, Dict, List
import math
import logging

import numpy as np
from scipy.integrate import solve_ivp

from src.core.exceptions import DomainError, SingularPointError
from src.core.geometry.profiles import Geometry, make_profiles
from src.core.instanton.connection import Mode
from src.core.instanton.odes import check_regular, derivative_from_system, normalized_residual
from src.core.solvers.series import SeriesExpansion
from src.data.constants import DG2

logger = logging.getLogger(__name__)

R_SINGULAR = DG2.Geometria.BGGG_R_SINGOLARE
ERROR_PROBE_FACTOR = 100.0


@dataclass(frozen=True)
class InitialData:
    """Dato iniziale (r0, f0) con la sua provenienza"""
    r0: float
    f0: tuple
    kind: str = 'explicit'

    @classmethod
    def explicit(cls, r0: float, f0: Sequence[float]) -> 'InitialData':
        if len(f0) != 3:
            raise DomainError("Servono tre componenti iniziali")
        return cls(float(r0), tuple(float(x) for x in f0), 'explicit')

    @classmethod
    def endpoint(cls, tan_c: float, step: float = DG2.Solver.PASSO_TAYLOR) -> 'InitialData':
        """f = a z + b z^2 con a = 3 cot c, b = -(7a + a^3)/9"""
        if not 0 < tan_c < math.pi / 2:
            raise DomainError(f"c = {tan_c} fuori da (0, pi/2)")
        if step <= 0:
            raise DomainError(f"Passo di Taylor non positivo: {step}")
        a = 3.0 / math.tan(tan_c)
        b = -(7 * a + a ** 3) / 9.0
        return cls(R_SINGULAR + step, (a * step + b * step ** 2, 0.0, 0.0), 'endpoint')

    @classmethod
    def from_series(cls, series: SeriesExpansion,
                    step: float = DG2.Solver.PASSO_TAYLOR) -> 'InitialData':
        if step <= 0:
            raise DomainError(f"Passo non positivo: {step}")
        return cls(R_SINGULAR + step, (series.value_at_radius(R_SINGULAR + step), 0.0, 0.0),
                   'series')


@dataclass
class SampledProfile:
    """Profilo campionato (f1, f2, f3) con diagnostica dell'integrazione"""
    r: np.ndarray
    f: np.ndarray                 # (3, N)
    fp: np.ndarray                # (3, N)
    success: bool = True
    message: str = ''
    error_estimate: float = math.nan
    nfev: int = 0
    initial: Optional[InitialData] = None
    metadata: Dict = field(default_factory=dict)

    @property
    def points(self) -> int:
        return len(self.r)

    def component(self, i: int) -> np.ndarray:
        return self.f[i]

    def max_deviation(self, reference, component: int = 0) -> float:
        """max |f_i - reference(r)| sui punti campionati"""
        if not self.points:
            return math.nan
        ref = np.array([reference(x) for x in self.r], dtype=float)
        return float(np.max(np.abs(self.f[component] - ref)))

    def records(self) -> List[Dict]:
        out = []
        for n, r in enumerate(self.r):
            out.append({
                'r': float(r),
                'f1': float(self.f[0, n]), 'f2': float(self.f[1, n]), 'f3': float(self.f[2, n]),
                'df1': float(self.fp[0, n]), 'df2': float(self.fp[1, n]), 'df3': float(self.fp[2, n]),
            })
        return out


def _grid(r0: float, r_grid, r_end, count: int) -> np.ndarray:
    if r_grid is not None:
        grid = np.asarray(r_grid, dtype=float)
    else:
        if r_end is None or not r_end > r0:
            raise DomainError(f"Estremo finale non valido: {r_end}")
        grid = np.geomspace(r0, r_end, count)
    if grid.ndim != 1 or len(grid) < 2 or np.any(np.diff(grid) <= 0):
        raise DomainError("La griglia deve essere strettamente crescente con almeno due punti")
    if grid[0] < r0:
        raise DomainError(f"La griglia inizia prima di r0 = {r0}")
    return grid


def _run(geometry, mode, initial, grid, rtol, atol, variant):
    def rhs(r, y):
        return derivative_from_system(geometry, mode, r, y, variant)

    return solve_ivp(rhs, (initial.r0, grid[-1]), np.array(initial.f0, dtype=float),
                     method=DG2.Solver.INTEGRATORE_METODO, t_eval=grid,
                     rtol=rtol, atol=atol, first_step=None)


def integrate_profile(tag, mode, initial: InitialData, r_grid=None,
                      r_end: Optional[float] = None,
                      count: int = DG2.Griglia.PUNTI_DEFAULT,
                      rtol: float = DG2.Solver.INTEGRATORE_RTOL,
                      atol: float = DG2.Solver.INTEGRATORE_ATOL,
                      variant: str = 'symmetric',
                      estimate_error: bool = True) -> SampledProfile:
    """
    Integra il sistema radiale a partire da un dato iniziale.

    Args:
        tag: geometria
        mode: G2 o DEFORMED
        initial: dato iniziale (r0 regolare)
        r_grid: punti di uscita (crescenti, >= r0); altrimenti griglia
            logaritmica di `count` punti fino a r_end
        variant: variante del sistema BGGG

    Returns:
        SampledProfile; se il passo collassa il profilo e' parziale
        (success=False) con il messaggio dell'integratore

    Raises:
        DomainError: r0 fuori dominio o griglia non valida
        SingularPointError: r0 su un punto singolare
    """
    geometry = Geometry.parse(tag)
    mode = Mode.parse(mode)
    make_profiles(geometry).domain.check(initial.r0)
    check_regular(geometry, initial.r0, tolerance=1e-12)
    grid = _grid(initial.r0, r_grid, r_end, count)

    logger.debug(f"Integrazione {geometry.value}/{mode.value} da r0 = {initial.r0:.6g} "
                 f"({initial.kind}) fino a {grid[-1]:.6g}")

    try:
        sol = _run(geometry, mode, initial, grid, rtol, atol, variant)
    except (np.linalg.LinAlgError, SingularPointError) as e:
        logger.warning(f"Integrazione interrotta: {e}")
        return SampledProfile(np.empty(0), np.empty((3, 0)), np.empty((3, 0)),
                              success=False, message=str(e), initial=initial)

    f = np.asarray(sol.y, dtype=float).reshape(3, -1)
    r = np.asarray(sol.t, dtype=float)
    fp = np.array([derivative_from_system(geometry, mode, x, f[:, n], variant)
                   for n, x in enumerate(r)]).T.reshape(3, -1)

    profile = SampledProfile(r, f, fp, success=bool(sol.success), message=sol.message,
                             nfev=int(sol.nfev), initial=initial,
                             metadata={'geometry': geometry.value, 'mode': mode.value,
                                       'variant': variant, 'rtol': rtol, 'atol': atol})
    if not sol.success:
        logger.warning(f"Integratore: risultato parziale fino a r = {r[-1] if len(r) else initial.r0:.6g} "
                       f"({sol.message})")
        return profile

    if estimate_error:
        probe = _run(geometry, mode, initial, grid,
                     rtol * ERROR_PROBE_FACTOR, atol * ERROR_PROBE_FACTOR, variant)
        if probe.success and probe.y.shape == sol.y.shape:
            profile.error_estimate = float(np.max(np.abs(probe.y - sol.y)))
    return profile


def profile_residual(profile: SampledProfile, variant: str = 'symmetric') -> float:
    """Massimo residuo normalizzato del sistema sui punti del profilo"""
    if not profile.points:
        return math.nan
    geometry = profile.metadata['geometry']
    mode = profile.metadata['mode']
    res = normalized_residual(geometry, mode, profile.f, profile.fp, profile.r, variant)
    return float(np.max(res))
