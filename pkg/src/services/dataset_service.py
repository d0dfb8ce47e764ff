"""
DatasetService - Emissione Dati
===============================

Produce i dataset tabellari dei target di emissione:
branches, profile, cone, series, chern-simons, limit, torsion.

L'output dipende solo dalla configurazione (nessun timestamp, seme fisso).
"""

from typing import Callable, Dict, List, Optional
import math
import logging

import numpy as np

from src.core.analysis.branches import branch_sweep
from src.core.analysis.chern_simons import chern_simons_density
from src.core.analysis.limit import scaling_limit_error
from src.core.calculus.forms import coefficient_envelope, exterior_derivative
from src.core.geometry.profiles import Geometry, make_profiles
from src.core.geometry.structures import g2_forms
from src.core.instanton.connection import ConnectionAnsatz, Mode
from src.core.instanton.odes import normalized_residual, cone_reduced_residual
from src.core.models.dataset import Dataset
from src.core.models.run_config import RunConfig
from src.core.solvers.cone import cone_profile
from src.core.solvers.implicit import (
    principal_profile, solve_tan_implicit, implicit_derivative,
)
from src.core.solvers.series import series_expand
from src.io.dataset_writer import DatasetWriter
from src.data.constants import DG2

logger = logging.getLogger(__name__)

TARGETS = ('branches', 'profile', 'cone', 'series', 'chern-simons', 'limit', 'torsion')


class DatasetService:
    """
    Servizio di emissione dei dataset.

    Esempio d'uso:
        service = DatasetService(RunConfig(tan_c=0.7))
        paths = service.emit('profile')
    """

    VERSION = "1.0.0"

    def __init__(self, config: Optional[RunConfig] = None,
                 writer: Optional[DatasetWriter] = None):
        self.config = config or RunConfig()
        self.writer = writer or DatasetWriter(self.config.output_dir)
        self._builders: Dict[str, Callable[[], Dataset]] = {
            'branches': self.branches,
            'profile': self.profile,
            'cone': self.cone,
            'series': self.series,
            'chern-simons': self.chern_simons,
            'limit': self.limit,
            'torsion': self.torsion,
        }
        logger.info(f"DatasetService inizializzato - v{self.VERSION}")

    def build(self, target: str) -> Dataset:
        if target not in self._builders:
            raise ValueError(f"Target sconosciuto: {target}")
        logger.info(f"=== EMISSIONE {target.upper()} ===")
        dataset = self._builders[target]()
        dataset.metadata.setdefault('target', target)
        return dataset

    def emit(self, target: str) -> List:
        """Costruisce e scrive il dataset; restituisce i percorsi scritti"""
        dataset = self.build(target)
        return self.writer.save_dataset(dataset, self.config.output_format,
                                        stem=target.replace('-', '_'))

    # --- Griglie ---------------------------------------------------------------

    def _grid(self, default_min: float) -> np.ndarray:
        return self.config.grid.build(default_min)

    # --- Target ----------------------------------------------------------------

    def branches(self) -> Dataset:
        grid = np.linspace(0.0, self.config.c_max, self.config.grid.count)
        return branch_sweep(self.config.tan_c, self.config.k_max, grid, variable='C')

    def profile(self) -> Dataset:
        cfg = self.config
        r0 = DG2.Geometria.BGGG_R_SINGOLARE
        grid = self._grid(r0 + DG2.Geometria.OFFSET_SINGOLARE)
        if cfg.branch == 0:
            f = principal_profile(cfg.tan_c)
            dual = f.dual(grid)
            values, derivatives = np.asarray(dual.val), np.asarray(dual.der)
        else:
            values = np.array([solve_tan_implicit(r, cfg.tan_c, cfg.branch).f for r in grid])
            derivatives = np.asarray(implicit_derivative(grid, values, cfg.tan_c))

        zeros = np.zeros_like(grid)
        f3 = np.array([values, zeros, zeros])
        fp3 = np.array([derivatives, zeros, zeros])
        residual = normalized_residual(Geometry.BGGG, Mode.DEFORMED, f3, fp3, grid)[0]

        dataset = Dataset('profile', ['r', 'f', 'df', 'residual'],
                          metadata={'tan_c': cfg.tan_c, 'branch': cfg.branch,
                                    'grid': cfg.grid.describe()})
        for row in zip(grid, values, derivatives, residual):
            dataset.add_row(*(float(x) for x in row))
        return dataset

    def cone(self) -> Dataset:
        cfg = self.config
        grid = self._grid(DG2.Griglia.R_MIN_CONO)
        f = cone_profile(cfg.cone_c, cfg.a)
        dual = f.dual(grid)
        S = float(np.sum(np.square(cfg.a)))
        residual = np.abs(cone_reduced_residual(cfg.a, dual.val, dual.der, grid)) / (
            1.0 + np.abs(dual.der * (grid ** 4 + 6.75 * S * dual.val ** 2))
            + np.abs(2 * dual.val * grid ** 3))

        dataset = Dataset('cone', ['r', 'f', 'df', 'residual'],
                          metadata={'cone_c': cfg.cone_c, 'a': list(cfg.a),
                                    'grid': cfg.grid.describe()})
        for row in zip(grid, dual.val, dual.der, residual):
            dataset.add_row(*(float(x) for x in row))
        return dataset

    def series(self) -> Dataset:
        cfg = self.config
        series = series_expand(cfg.series_a, cfg.order)
        dataset = Dataset('series', ['n', 'coefficient', 'value'],
                          metadata={'a': str(series.leading), 'order': cfg.order})
        for n, value in enumerate(series.numeric_coefficients()):
            dataset.add_row(n, repr(series.coefficient(n)), str(value))
        return dataset

    def chern_simons(self) -> Dataset:
        cfg = self.config
        p = make_profiles(Geometry.BGGG)
        grid = self._grid(p.domain.lower + DG2.Geometria.OFFSET_SINGOLARE)
        f = principal_profile(cfg.tan_c)
        density = chern_simons_density(ConnectionAnsatz.of(f, 0.0, 0.0, domain=p.domain), p)
        values = np.broadcast_to(density.value(grid), grid.shape)

        dataset = Dataset('chern-simons', ['r', 'density'],
                          metadata={'tan_c': cfg.tan_c, 'grid': cfg.grid.describe()})
        for r, v in zip(grid, values):
            dataset.add_row(float(r), float(v))
        return dataset

    def limit(self) -> Dataset:
        cfg = self.config
        grid = self._grid(DG2.Geometria.BGGG_R_SINGOLARE + DG2.Geometria.OFFSET_SINGOLARE)
        epsilons = sorted({1e-1, 1e-2, 1e-3, cfg.epsilon}, reverse=True)

        dataset = Dataset('limit', ['epsilon', 'c', 'sup_error', 'fixed_c'],
                          metadata={'grid': cfg.grid.describe()})
        c_fixed = math.atan(1.0 / epsilons[0])
        for eps in epsilons:
            report = scaling_limit_error(eps, grid)
            dataset.add_row(eps, report.c_of_eps, report.sup_error, False)
        for eps in epsilons:
            report = scaling_limit_error(eps, grid, tan_c=c_fixed)
            dataset.add_row(eps, report.c_of_eps, report.sup_error, True)
        return dataset

    def torsion(self) -> Dataset:
        cfg = self.config
        geometry = Geometry.BGGG if cfg.geometry == 'all' else Geometry.parse(cfg.geometry)
        p = make_profiles(geometry, scale=cfg.bs_scale if geometry is Geometry.BS_COMPLETE else None)
        grid = (p.interior_grid(cfg.grid.count, cfg.grid.r_max, spacing=cfg.grid.spacing)
                if cfg.grid.r_min is None else self._grid(cfg.grid.r_min))

        phi, psi = g2_forms(p)
        scale = np.maximum(1.0, np.maximum(coefficient_envelope(phi, grid),
                                           coefficient_envelope(psi, grid)))
        dphi = coefficient_envelope(exterior_derivative(phi), grid) / scale
        dpsi = coefficient_envelope(exterior_derivative(psi), grid) / scale

        dataset = Dataset('torsion', ['r', 'dphi', 'dpsi'],
                          metadata={'geometry': geometry.value, 'grid': cfg.grid.describe()})
        for row in zip(grid, dphi, dpsi):
            dataset.add_row(*(float(x) for x in row))
        return dataset
