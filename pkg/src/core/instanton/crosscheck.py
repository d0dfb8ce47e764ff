"""
Verifica di Equivalenza ODE <-> Forme
=====================================

Confronta, punto per punto, i coefficienti della 6-forma residua con le
righe del sistema ODE. La riga i corrisponde ai monomi in cui manca
m_i (dr^p1^p2^p3^m_j^m_k); tutti gli altri monomi devono annullarsi
identicamente.

Su piu' ansatz casuali il fattore di proporzionalita' kappa_i(r) tra
coefficiente di forma e riga ODE e' stimato ai minimi quadrati; lo
scarto dal modello c_i = kappa_i o_i misura se l'equivalenza vale.
"""

from dataclasses import dataclass, field
from typing import Dict, List, Optional, Sequence, Union
import logging

import numpy as np

from src.core.calculus.forms import (
    evaluate_form, monomial_name, DR, P1, P2, P3, M1, M2, M3,
)
from src.core.calculus.radial import RadialScalar, polynomial
from src.core.geometry.profiles import ProfileSet, Geometry
from src.core.instanton.connection import ConnectionAnsatz, Mode, form_residual
from src.core.instanton.odes import (
    ode_residual, residual_scale, cone_reduced_residual,
)
from src.data.constants import DG2

logger = logging.getLogger(__name__)

ROW_MONOMIALS = (
    (DR, P1, P2, P3, M2, M3),
    (DR, P1, P2, P3, M1, M3),
    (DR, P1, P2, P3, M1, M2),
)


@dataclass
class EquivalenceReport:
    """Esito del confronto forma / ODE"""
    geometry: str
    mode: str
    variant: str
    ansatz_count: int
    points: int
    factors: np.ndarray                 # kappa_i(r), forma (3, N)
    mismatch: np.ndarray                # scarto normalizzato per riga
    extra_monomials: Dict[str, float] = field(default_factory=dict)
    notes: List[str] = field(default_factory=list)

    @property
    def max_mismatch(self) -> float:
        return float(np.max(self.mismatch)) if self.mismatch.size else 0.0

    @property
    def max_extra(self) -> float:
        return max(self.extra_monomials.values(), default=0.0)

    def passed(self, tolerance: float = DG2.Tolleranze.EQUIVALENZA) -> bool:
        return self.max_mismatch < tolerance and self.max_extra < tolerance

    def factor_signs(self) -> List[int]:
        """Segno di kappa_i (costante sulla griglia se l'equivalenza vale)"""
        signs = []
        for row in self.factors:
            finite = row[np.isfinite(row) & (row != 0)]
            signs.append(int(np.sign(np.median(finite))) if finite.size else 0)
        return signs

    def to_dict(self) -> Dict:
        return {
            'geometry': self.geometry,
            'mode': self.mode,
            'variant': self.variant,
            'ansatz_count': self.ansatz_count,
            'points': self.points,
            'max_mismatch': self.max_mismatch,
            'mismatch_per_row': [float(np.max(m)) for m in self.mismatch],
            'factor_signs': self.factor_signs(),
            'extra_monomials': dict(self.extra_monomials),
            'notes': list(self.notes),
        }


def _row_data(a: ConnectionAnsatz, p: ProfileSet, mode: Mode, r_grid, variant: str):
    """Coefficienti di forma, righe ODE e scale per un ansatz"""
    residual = form_residual(a, p, mode)
    table = evaluate_form(residual, r_grid)
    form_rows = np.array([table.get(m, np.zeros_like(r_grid)) for m in ROW_MONOMIALS])
    f, fp = a.values(r_grid)
    ode_rows = ode_residual(p.geometry, mode, f, fp, r_grid, variant)
    scales = residual_scale(p.geometry, mode, f, fp, r_grid, variant)
    extra = {monomial_name(k): v for k, v in table.items() if k not in ROW_MONOMIALS}
    return form_rows, ode_rows, scales, extra


def crosscheck_equivalence(ansatze: Union[ConnectionAnsatz, Sequence[ConnectionAnsatz]],
                           p: ProfileSet, r_grid, mode=Mode.DEFORMED,
                           variant: str = 'printed') -> EquivalenceReport:
    """
    Confronta form_residual con ode_residual sulla griglia.

    Con un solo ansatz kappa_i = c_i / o_i e lo scarto e' nullo per
    costruzione; con piu' ansatz kappa_i e' stimato ai minimi quadrati e
    lo scarto e' |c_i - kappa_i o_i| / (1 + |c_i| + |kappa_i| scala_i).
    """
    mode = Mode.parse(mode)
    if isinstance(ansatze, ConnectionAnsatz):
        ansatze = [ansatze]
    r_grid = np.asarray(r_grid, dtype=float)

    forms, odes, scales = [], [], []
    extra_max: Dict[str, float] = {}
    for a in ansatze:
        c, o, s, extra = _row_data(a, p, mode, r_grid, variant)
        forms.append(c)
        odes.append(o)
        scales.append(s)
        for name, values in extra.items():
            extra_max[name] = max(extra_max.get(name, 0.0), float(np.max(np.abs(values))))

    C = np.array(forms)        # (n, 3, N)
    O = np.array(odes)
    S = np.array(scales)

    denominator = np.sum(O * O, axis=0)
    with np.errstate(divide='ignore', invalid='ignore'):
        kappa = np.where(denominator > 0, np.sum(C * O, axis=0) / denominator, 0.0)
    misfit = np.abs(C - kappa[np.newaxis] * O) / (
        1.0 + np.abs(C) + np.abs(kappa)[np.newaxis] * S)
    mismatch = np.max(misfit, axis=0)

    report = EquivalenceReport(
        geometry=p.geometry.value,
        mode=mode.value,
        variant=variant,
        ansatz_count=len(ansatze),
        points=len(r_grid),
        factors=kappa,
        mismatch=mismatch,
        extra_monomials=extra_max,
    )

    # righe ODE identicamente nulle con coefficienti di forma non nulli
    silent = (np.max(np.abs(O), axis=0) == 0) & (np.max(np.abs(C), axis=0) > 0)
    if np.any(silent):
        report.notes.append("Coefficienti di forma non nulli dove la riga ODE e' nulla")
        report.mismatch = np.maximum(report.mismatch, silent.astype(float))

    logger.debug(f"Equivalenza {report.geometry}/{report.mode}/{variant}: "
                 f"scarto {report.max_mismatch:.2e}")
    return report


# =============================================================================
# ANSATZ CASUALI
# =============================================================================

def random_ansatze(p: ProfileSet, count: int = DG2.Griglia.ANSATZ_CASUALI,
                   seed: int = DG2.Griglia.SEED, degree: int = 2,
                   components: int = 3) -> List[ConnectionAnsatz]:
    """Ansatz polinomiali con coefficienti casuali riproducibili"""
    rng = np.random.default_rng(seed)
    result = []
    for _ in range(count):
        fs = []
        for i in range(3):
            if i < components:
                fs.append(polynomial(rng.uniform(-1.0, 1.0, degree + 1), p.domain))
            else:
                fs.append(RadialScalar.const(0.0, p.domain))
        result.append(ConnectionAnsatz(*fs))
    return result


def compare_variants(p: ProfileSet, r_grid, count: int = DG2.Griglia.ANSATZ_CASUALI,
                     seed: int = DG2.Griglia.SEED) -> Dict[str, EquivalenceReport]:
    """Confronta le varianti 'printed' e 'symmetric' del sistema deformato"""
    ansatze = random_ansatze(p, count, seed)
    return {variant: crosscheck_equivalence(ansatze, p, r_grid, Mode.DEFORMED, variant)
            for variant in ('printed', 'symmetric')}


@dataclass
class ConeReductionReport:
    """Confronto dell'equazione ridotta del cono nelle due normalizzazioni"""
    a: tuple
    sum_of_squares: float
    mismatch_sigma: float
    mismatch_unit: float

    @property
    def supported(self) -> str:
        return 'sigma' if self.mismatch_sigma <= self.mismatch_unit else 'unit'

    def to_dict(self) -> Dict:
        return {'a': list(self.a), 'sum_of_squares': self.sum_of_squares,
                'mismatch_sigma': self.mismatch_sigma,
                'mismatch_unit': self.mismatch_unit, 'supported': self.supported}


def cone_reduction_check(a: Sequence[float], p: ProfileSet, r_grid,
                         count: int = 10, seed: int = DG2.Griglia.SEED) -> ConeReductionReport:
    """
    Per f_i = a_i f confronta la riga della 6-forma con a_i volte la
    ODE ridotta con S = sum a_i^2 e con S = 1.
    """
    r_grid = np.asarray(r_grid, dtype=float)
    rng = np.random.default_rng(seed)
    a = tuple(float(x) for x in a)
    row = int(np.argmax(np.abs(a)))

    forms, sigma_rows, unit_rows = [], [], []
    for _ in range(count):
        f = polynomial(rng.uniform(0.1, 1.0, 3), p.domain)
        ansatz = ConnectionAnsatz.proportional(f, a)
        table = evaluate_form(form_residual(ansatz, p, Mode.DEFORMED), r_grid)
        forms.append(table.get(ROW_MONOMIALS[row], np.zeros_like(r_grid)))
        dual = f.dual(r_grid)
        sigma_rows.append(a[row] * cone_reduced_residual(a, dual.val, dual.der, r_grid))
        unit_rows.append(a[row] * cone_reduced_residual(a, dual.val, dual.der, r_grid,
                                                        normalized=True))

    def misfit(C, O):
        C, O = np.array(C), np.array(O)
        kappa = np.sum(C * O, axis=0) / np.maximum(np.sum(O * O, axis=0), 1e-300)
        return float(np.max(np.abs(C - kappa * O) / (1.0 + np.abs(C) + np.abs(kappa * O))))

    return ConeReductionReport(a, float(np.sum(np.square(a))),
                               misfit(forms, sigma_rows), misfit(forms, unit_rows))
