"""
VerificationService - Suite di Verifica
=======================================

Service layer che esegue le verifiche numeriche sulle tre geometrie:
- torsione delle strutture G2 (dphi = 0 = dpsi)
- equivalenza tra residui di forma e sistemi ODE
- istantoni G2 in forma chiusa e identita' del duale di Killing
- soluzioni implicite deformate BGGG e serie nell'orbita singolare
- funzionale di Chern-Simons e limite di scala
- soluzioni deformate sul cono (W di Lambert)
- integratore numerico contro gli oracoli impliciti

Ogni suite e' isolata: un'eccezione viene registrata nel report e non
interrompe le suite successive.
"""

from dataclasses import dataclass, field
from fractions import Fraction
from typing import Callable, Dict, List, Optional
import math
import logging

import numpy as np

from src.core.analysis.chern_simons import chern_simons_value, normalized_density
from src.core.analysis.limit import scaling_limit_error, scaled_form_residual
from src.core.calculus.radial import polynomial, sin, exp, RadialScalar
from src.core.exceptions import ConvergenceError, G2Error
from src.core.geometry.profiles import Geometry, make_profiles, validate_profiles
from src.core.geometry.structures import torsion_residual
from src.core.instanton.connection import ConnectionAnsatz, Mode, killing_dual_ansatz
from src.core.instanton.crosscheck import (
    crosscheck_equivalence, random_ansatze, compare_variants, cone_reduction_check,
)
from src.core.instanton.odes import normalized_residual, cone_reduced_residual
from src.core.models.run_config import RunConfig, SUITES
from src.core.solvers.closed_forms import g2_closed_form
from src.core.solvers.cone import cone_profile, cone_implicit_residual, loglog_slope
from src.core.solvers.implicit import endpoint_slope, principal_profile, solve_tan_implicit
from src.core.solvers.integrator import InitialData, integrate_profile
from src.core.solvers.lambert import lambert_w0
from src.core.solvers.series import (
    series_expand, printed_coefficients, residual_slope, SLOPE_TOLERANCE,
)
from src.data.constants import DG2

logger = logging.getLogger(__name__)

TAN_C_VALUES = (0.3, 0.7, 1.2)
EPSILON_VALUES = (1e-1, 1e-2, 1e-3)
CONE_CASES = ((1.0, (1.0, 0.0, 0.0)), (2.0, (1.0, 1.0, 1.0)))
SERIES_ORDERS = (3, 4, 5)

# Suite applicabili per geometria
APPLICABLE = {
    Geometry.BGGG: ('torsion', 'crosscheck', 'closed-form', 'implicit', 'series',
                    'chern-simons', 'limit', 'integrator'),
    Geometry.BS_COMPLETE: ('torsion', 'crosscheck', 'closed-form'),
    Geometry.BS_CONE: ('torsion', 'crosscheck', 'closed-form', 'cone', 'integrator'),
}


@dataclass
class CheckOutcome:
    """Esito di un singolo controllo"""
    suite: str
    geometry: str
    name: str
    passed: bool
    value: float = math.nan
    tolerance: float = math.nan
    details: Dict = field(default_factory=dict)
    informative: bool = False       # riportato ma non bloccante

    def to_dict(self) -> Dict:
        return {
            'suite': self.suite,
            'geometry': self.geometry,
            'name': self.name,
            'passed': self.passed,
            'value': self.value,
            'tolerance': self.tolerance,
            'informative': self.informative,
            'details': self.details,
        }


@dataclass
class VerificationReport:
    """Report completo di verifica"""
    checks: List[CheckOutcome] = field(default_factory=list)
    errors: List[str] = field(default_factory=list)
    warnings: List[str] = field(default_factory=list)
    non_converged: bool = False
    config: Dict = field(default_factory=dict)

    @property
    def failed(self) -> List[CheckOutcome]:
        return [c for c in self.checks if not c.passed and not c.informative]

    @property
    def passed(self) -> bool:
        return not self.failed and not self.errors

    @property
    def exit_code(self) -> int:
        """0 superata, 1 controllo fallito, 3 mancata convergenza"""
        if self.non_converged:
            return 3
        return 0 if self.passed else 1

    def to_dict(self) -> Dict:
        return {
            'passed': self.passed,
            'exit_code': self.exit_code,
            'summary': {
                'checks': len(self.checks),
                'failed': len(self.failed),
                'informative': sum(1 for c in self.checks if c.informative),
            },
            'checks': [c.to_dict() for c in self.checks],
            'errors': list(self.errors),
            'warnings': list(self.warnings),
            'config': self.config,
        }

    def summary_lines(self) -> List[str]:
        lines = []
        for c in self.checks:
            status = 'INFO' if c.informative else ('OK' if c.passed else 'FALLITO')
            lines.append(f"[{status:>7}] {c.geometry:<5} {c.suite:<13} {c.name}: "
                         f"{c.value:.3e} (tol {c.tolerance:.1e})")
        for e in self.errors:
            lines.append(f"[ ERRORE] {e}")
        lines.append(f"Esito: {'SUPERATA' if self.passed else 'NON SUPERATA'} "
                     f"({len(self.checks) - len(self.failed)}/{len(self.checks)} controlli)")
        return lines


class VerificationService:
    """
    Servizio che esegue le suite di verifica.

    Esempio d'uso:
        service = VerificationService(RunConfig(geometry='bggg'))
        report = service.run()
        print('\\n'.join(report.summary_lines()))
    """

    VERSION = "1.0.0"

    def __init__(self, config: Optional[RunConfig] = None):
        self.config = config or RunConfig()
        self._suites: Dict[str, Callable[[Geometry, VerificationReport], None]] = {
            'torsion': self._suite_torsion,
            'crosscheck': self._suite_crosscheck,
            'closed-form': self._suite_closed_form,
            'implicit': self._suite_implicit,
            'series': self._suite_series,
            'chern-simons': self._suite_chern_simons,
            'limit': self._suite_limit,
            'cone': self._suite_cone,
            'integrator': self._suite_integrator,
        }
        logger.info(f"VerificationService inizializzato - v{self.VERSION}")

    # -------------------------------------------------------------------------

    def geometries(self) -> List[Geometry]:
        if self.config.geometry == 'all':
            return list(Geometry)
        return [Geometry.parse(self.config.geometry)]

    def run(self, suites: Optional[List[str]] = None) -> VerificationReport:
        """Esegue le suite richieste su tutte le geometrie selezionate"""
        logger.info("=== INIZIO VERIFICA ===")
        report = VerificationReport(config=self.config.to_dict())
        suites = list(suites or self.config.suites or SUITES)

        for geometry in self.geometries():
            for name in suites:
                if name not in APPLICABLE[geometry]:
                    logger.debug(f"Suite {name} non applicabile a {geometry.value}")
                    continue
                logger.info(f"Suite {name} su {geometry.value}")
                try:
                    self._suites[name](geometry, report)
                except ConvergenceError as e:
                    report.non_converged = True
                    report.errors.append(f"{geometry.value}/{name}: mancata convergenza: {e}")
                    logger.error(f"Suite {name} ({geometry.value}): {e}")
                except (G2Error, ArithmeticError, ValueError, np.linalg.LinAlgError) as e:
                    report.errors.append(f"{geometry.value}/{name}: {e}")
                    logger.error(f"Suite {name} ({geometry.value}): {e}")
                except Exception as e:
                    report.errors.append(f"{geometry.value}/{name}: errore interno "
                                         f"{type(e).__name__}: {e}")
                    logger.exception(f"Suite {name} ({geometry.value}) interrotta")

        for check in report.failed:
            logger.warning(f"Controllo fallito: {check.geometry}/{check.suite}/{check.name} "
                           f"= {check.value:.3e}")
        logger.info(f"=== FINE VERIFICA: {'SUPERATA' if report.passed else 'NON SUPERATA'} ===")
        return report

    # --- Utilita' -------------------------------------------------------------

    def _tol(self, key: str, default: float) -> float:
        return self.config.tolerances.get(key, default)

    def _profiles(self, geometry: Geometry, as_printed: bool = False):
        scale = self.config.bs_scale if geometry is Geometry.BS_COMPLETE else None
        return make_profiles(geometry, scale=scale, as_printed=as_printed)

    def _grid(self, p) -> np.ndarray:
        grid = self.config.grid
        if grid.r_min is None:
            return p.interior_grid(grid.count, grid.r_max, spacing=grid.spacing)
        return grid.build(grid.r_min)

    @staticmethod
    def _add(report: VerificationReport, suite: str, geometry: Geometry, name: str,
             value, tolerance, passed: Optional[bool] = None, informative: bool = False,
             details: Optional[Dict] = None):
        value = float(value)
        ok = (value < tolerance) if passed is None else bool(passed)
        report.checks.append(CheckOutcome(suite, geometry.value, name, ok, value,
                                          float(tolerance), dict(details or {}), informative))

    # --- Suite ----------------------------------------------------------------

    def _suite_torsion(self, geometry: Geometry, report: VerificationReport):
        p = self._profiles(geometry)
        grid = self._grid(p)
        tol = self._tol('torsion', DG2.Tolleranze.TORSIONE)

        validation = validate_profiles(p, grid)
        report.warnings.extend(validation.warnings)
        if not validation.is_valid:
            report.errors.extend(validation.errors)

        result = torsion_residual(p, grid)
        self._add(report, 'torsion', geometry, 'dphi', result.dphi_normalized, tol,
                  details={'absolute': result.dphi_max})
        self._add(report, 'torsion', geometry, 'dpsi', result.dpsi_normalized, tol,
                  details={'absolute': result.dpsi_max})
        self._add(report, 'torsion', geometry, 'half-flat', result.half_flat_max, tol)

        if geometry is Geometry.BGGG:
            printed = torsion_residual(self._profiles(geometry, as_printed=True), grid)
            self._add(report, 'torsion', geometry, 'dati come stampati',
                      max(printed.dphi_normalized, printed.dpsi_normalized), tol,
                      informative=True, details={'notes': printed.notes})
            report.warnings.append(
                "BGGG: i dati come stampati (B2 = A2) hanno torsione "
                f"{max(printed.dphi_normalized, printed.dpsi_normalized):.2e}; "
                "si usano i profili corretti")

    def _suite_crosscheck(self, geometry: Geometry, report: VerificationReport):
        p = self._profiles(geometry)
        grid = self._grid(p)
        tol = self._tol('equivalence', DG2.Tolleranze.EQUIVALENZA)
        ansatze = random_ansatze(p, self.config.ansatz_count, self.config.seed)

        g2 = crosscheck_equivalence(ansatze, p, grid, Mode.G2, 'printed')
        self._add(report, 'crosscheck', geometry, 'G2 forme <-> ODE',
                  max(g2.max_mismatch, g2.max_extra), tol, details=g2.to_dict())

        if geometry is Geometry.BGGG:
            variants = compare_variants(p, grid, self.config.ansatz_count, self.config.seed)
            symmetric, printed = variants['symmetric'], variants['printed']
            self._add(report, 'crosscheck', geometry, 'deformato forme <-> ODE (18 f_i^2)',
                      max(symmetric.max_mismatch, symmetric.max_extra), tol,
                      details=symmetric.to_dict())
            self._add(report, 'crosscheck', geometry, 'deformato variante stampata (18 f_2^2)',
                      max(printed.max_mismatch, printed.max_extra), tol,
                      informative=True, details=printed.to_dict())
        else:
            deformed = crosscheck_equivalence(ansatze, p, grid, Mode.DEFORMED)
            self._add(report, 'crosscheck', geometry, 'deformato forme <-> ODE',
                      max(deformed.max_mismatch, deformed.max_extra), tol,
                      details=deformed.to_dict())

        if geometry is Geometry.BS_CONE:
            for _, a in CONE_CASES:
                reduction = cone_reduction_check(a, p, grid, seed=self.config.seed)
                self._add(report, 'crosscheck', geometry,
                          f"ODE ridotta del cono con sum a^2, a = {a}",
                          reduction.mismatch_sigma, tol,
                          passed=reduction.mismatch_sigma < tol and reduction.supported == 'sigma',
                          details=reduction.to_dict())

    def _suite_closed_form(self, geometry: Geometry, report: VerificationReport):
        p = self._profiles(geometry)
        grid = self._grid(p)
        tol = self._tol('closed_form', DG2.Tolleranze.FORMA_CHIUSA)

        companion = (1.0, 1.0) if geometry is Geometry.BGGG else (0.0, 0.0)
        ansatz = ConnectionAnsatz(*g2_closed_form(geometry, self.config.c0, companion))
        f, fp = ansatz.values(grid)
        residual = normalized_residual(geometry, Mode.G2, f, fp, grid)
        self._add(report, 'closed-form', geometry, 'residuo ODE G2', np.max(residual), tol)

        if geometry is Geometry.BGGG:
            killing = killing_dual_ansatz(p).f1.value(grid)
            target = (16 * grid ** 2 - 81) / (16 * grid ** 2 - 9)
            self._add(report, 'closed-form', geometry, 'duale di Killing A1^2',
                      np.max(np.abs(killing - target)), DG2.Tolleranze.IDENTITA_KILLING)

    def _suite_implicit(self, geometry: Geometry, report: VerificationReport):
        tol = self._tol('implicit', DG2.Tolleranze.RESIDUO_IMPLICITO)
        r0 = DG2.Geometria.BGGG_R_SINGOLARE
        grid = np.geomspace(r0 + DG2.Geometria.OFFSET_SINGOLARE, 1e3, self.config.grid.count)

        for c in sorted(set(TAN_C_VALUES + (self.config.tan_c,))):
            if not 0 < c < math.pi / 2:
                continue
            f = principal_profile(c)
            ansatz = ConnectionAnsatz.of(f, 0.0, 0.0, domain=f.domain)
            values, derivatives = ansatz.values(grid)
            residual = normalized_residual(geometry, Mode.DEFORMED, values, derivatives, grid)
            self._add(report, 'implicit', geometry, f"residuo ODE c = {c:g}",
                      np.max(residual), tol)

            f0 = f.value(r0)
            self._add(report, 'implicit', geometry, f"f(9/4) = 0, c = {c:g}",
                      abs(f0), math.inf, passed=f0 == 0.0)

            slope = endpoint_slope(c)
            self._add(report, 'implicit', geometry, f"f'(9/4) = 3 cot c, c = {c:g}",
                      abs(slope - 3.0 / math.tan(c)), DG2.Tolleranze.DERIVATA_ESTREMO)

            tail = f.value(1e6)
            self._add(report, 'implicit', geometry, f"asintoto 3pi/2 - 3c, c = {c:g}",
                      abs(tail - (1.5 * math.pi - 3 * c)), DG2.Tolleranze.ASINTOTO)

            mirrored = solve_tan_implicit(10.0, -c).f + solve_tan_implicit(10.0, c).f
            self._add(report, 'implicit', geometry, f"simmetria c -> -c, c = {c:g}",
                      abs(mirrored), 1e-12)

    def _suite_series(self, geometry: Geometry, report: VerificationReport):
        a = Fraction(3)
        series = series_expand(a, order=max(SERIES_ORDERS + (self.config.order,)))
        expected = printed_coefficients()
        mismatched = [n for n, c in enumerate(expected) if series.coefficient(n) != c]
        self._add(report, 'series', geometry, 'primi cinque coefficienti esatti',
                  len(mismatched), 1, passed=not mismatched,
                  details={'mismatched': mismatched})

        for order in SERIES_ORDERS:
            slope = residual_slope(series, order)
            self._add(report, 'series', geometry, f"pendenza residuo ordine {order}",
                      abs(slope - order), SLOPE_TOLERANCE, details={'slope': slope})

    def _suite_chern_simons(self, geometry: Geometry, report: VerificationReport):
        p = self._profiles(geometry)
        tol_density = self._tol('chern_simons', DG2.Tolleranze.DENSITA_CS)
        grid = np.geomspace(p.domain.lower + DG2.Geometria.OFFSET_SINGOLARE, 1e3,
                            self.config.grid.count)
        r_range = (p.domain.lower, 100.0)

        r = RadialScalar.identity(p.domain)
        test_profiles = {f"f_c, c = {c:g}": principal_profile(c) for c in TAN_C_VALUES}
        test_profiles.update({
            'r': r,
            'r^2 - 1': polynomial((-1.0, 0.0, 1.0), p.domain),
            'sin(r) exp(-r)': sin(r) * exp(-r),
        })

        for label, f in test_profiles.items():
            ansatz = ConnectionAnsatz.of(f, 0.0, 0.0, domain=p.domain)
            density = normalized_density(ansatz, p, grid)
            self._add(report, 'chern-simons', geometry, f"densita' {label}",
                      np.max(density), tol_density)
            value = chern_simons_value(ansatz, p, r_range)
            self._add(report, 'chern-simons', geometry, f"integrale {label}",
                      abs(value.value), DG2.Tolleranze.INTEGRALE_CS,
                      passed=value.converged and abs(value.value) < DG2.Tolleranze.INTEGRALE_CS,
                      details=value.to_dict())

        three = ConnectionAnsatz.of(test_profiles['r'], polynomial((0.5, 1.0), p.domain),
                                    0.0, domain=p.domain)
        value = chern_simons_value(three, p, r_range)
        self._add(report, 'chern-simons', geometry, 'integrale (f1, f2, 0)',
                  abs(value.value), DG2.Tolleranze.INTEGRALE_CS,
                  informative=True, details=value.to_dict())

    def _suite_limit(self, geometry: Geometry, report: VerificationReport):
        grid = np.geomspace(DG2.Geometria.BGGG_R_SINGOLARE + DG2.Geometria.OFFSET_SINGOLARE,
                            DG2.Griglia.R_MAX_DEFAULT, self.config.grid.count)
        reports = [scaling_limit_error(eps, grid) for eps in EPSILON_VALUES]
        errors = [rep.sup_error for rep in reports]
        decreasing = all(b < a for a, b in zip(errors, errors[1:]))
        self._add(report, 'limit', geometry, 'errore eps = 1e-3', errors[-1],
                  DG2.Tolleranze.LIMITE_SCALA_MAX,
                  passed=decreasing and errors[-1] < DG2.Tolleranze.LIMITE_SCALA_MAX,
                  details={'errors': errors, 'decreasing': decreasing})

        control = [scaling_limit_error(eps, grid, tan_c=reports[0].c_of_eps).sup_error
                   for eps in EPSILON_VALUES]
        self._add(report, 'limit', geometry, 'controllo negativo (c fisso)', control[-1],
                  DG2.Tolleranze.LIMITE_SCALA_MAX,
                  passed=control[-1] >= DG2.Tolleranze.LIMITE_SCALA_MAX,
                  details={'errors': control})

        coarse = grid[::max(1, len(grid) // 40)]
        for eps in EPSILON_VALUES:
            self._add(report, 'limit', geometry, f"residuo scalato eps = {eps:g}",
                      scaled_form_residual(eps, r_grid=coarse), DG2.Tolleranze.RESIDUO_SCALATO)

    def _suite_cone(self, geometry: Geometry, report: VerificationReport):
        x = np.linspace(-0.9, 10.0, 1000)
        self._add(report, 'cone', geometry, 'W(x e^x) = x',
                  np.max(np.abs(lambert_w0(x * np.exp(x)) - x)),
                  DG2.Tolleranze.LAMBERT_AUTOCONSISTENZA)

        grid = np.geomspace(DG2.Griglia.R_MIN_CONO, DG2.Griglia.R_MAX_DEFAULT,
                            self.config.grid.count)
        tol = self._tol('cone', DG2.Tolleranze.RESIDUO_CONO)
        low, high = DG2.Tolleranze.PENDENZA_CONO
        for c, a in CONE_CASES:
            f = cone_profile(c, a)
            self._add(report, 'cone', geometry, f"relazione implicita c = {c:g}, a = {a}",
                      np.max(cone_implicit_residual(grid, c, a)),
                      DG2.Tolleranze.RELAZIONE_IMPLICITA_CONO)

            dual = f.dual(grid)
            residual = cone_reduced_residual(a, dual.val, dual.der, grid)
            S = float(np.sum(np.square(a)))
            scale = 1.0 + np.abs(dual.der * (grid ** 4 + 6.75 * S * dual.val ** 2)) + \
                np.abs(2 * dual.val * grid ** 3)
            self._add(report, 'cone', geometry, f"residuo ODE c = {c:g}, a = {a}",
                      np.max(np.abs(residual) / scale), tol)

            dense = np.geomspace(DG2.Griglia.R_MIN_CONO, 1e6, 1001)
            increasing = bool(np.all(np.diff(f.value(dense)) > 0))
            self._add(report, 'cone', geometry, f"monotonia c = {c:g}, a = {a}",
                      float(not increasing), 1.0, passed=increasing)

            slope = loglog_slope(f, 1e3, 1e6)
            self._add(report, 'cone', geometry, f"pendenza log-log c = {c:g}, a = {a}",
                      slope, high, passed=low < slope < high)

    def _suite_integrator(self, geometry: Geometry, report: VerificationReport):
        tol = self._tol('integrator', DG2.Tolleranze.INTEGRATORE)
        step = DG2.Solver.PASSO_TAYLOR

        if geometry is Geometry.BS_CONE:
            r0 = DG2.Griglia.R_MIN_CONO
            for c, a in CONE_CASES:
                f = cone_profile(c, a)
                initial = InitialData.explicit(r0, [ai * f.value(r0) for ai in a])
                profile = integrate_profile(geometry, Mode.DEFORMED, initial,
                                            r_end=DG2.Griglia.R_MAX_DEFAULT,
                                            count=self.config.grid.count)
                k = int(np.argmax(np.abs(a)))
                deviation = profile.max_deviation(lambda x: a[k] * f.value(x), component=k)
                self._add(report, 'integrator', geometry, f"cono c = {c:g}, a = {a}",
                          deviation, tol, passed=profile.success and deviation < tol,
                          details={'error_estimate': profile.error_estimate,
                               'message': profile.message})
            return

        r0 = DG2.Geometria.BGGG_R_SINGOLARE
        c = self.config.tan_c if 0 < self.config.tan_c < math.pi / 2 else 0.7
        grid = np.geomspace(r0 + step, 100.0, self.config.grid.count)

        f = principal_profile(c)
        seeds = {
            'radice esatta': InitialData.explicit(r0 + step, (f.value(r0 + step), 0.0, 0.0)),
            'Taylor in 9/4': InitialData.endpoint(c, step),
        }
        for label, initial in seeds.items():
            profile = integrate_profile(geometry, Mode.DEFORMED, initial, r_grid=grid)
            deviation = profile.max_deviation(f.value)
            self._add(report, 'integrator', geometry, f"{label}, c = {c:g}",
                      deviation, tol, passed=profile.success and deviation < tol,
                      details={'error_estimate': profile.error_estimate,
                               'message': profile.message})

        # ramo k = 1: f(9/4) = 3(pi - c) != 0, seme dalla serie
        series = series_expand(3.0 * (math.pi - c), order=5)
        profile = integrate_profile(geometry, Mode.DEFORMED,
                                    InitialData.from_series(series, step), r_grid=grid)
        deviation = profile.max_deviation(lambda x: solve_tan_implicit(x, c, 1).f)
        self._add(report, 'integrator', geometry, f"seme in serie, ramo 1, c = {c:g}",
                  deviation, tol, passed=profile.success and deviation < tol,
                  details={'error_estimate': profile.error_estimate,
                           'message': profile.message})

        zero = integrate_profile(geometry, Mode.DEFORMED,
                                 InitialData.explicit(r0 + step, (0.0, 0.0, 0.0)),
                                 r_grid=grid, estimate_error=False)
        self._add(report, 'integrator', geometry, 'dato nullo -> profilo nullo',
                  float(np.max(np.abs(zero.f))) if zero.points else math.nan, 1e-300,
                  passed=zero.success and zero.points > 0 and not np.any(zero.f))
