"""
Modello Configurazione di Esecuzione
Parametri di una verifica o di un'emissione dati
"""

from dataclasses import dataclass, field, fields, asdict
from typing import Dict, List, Optional, Tuple, Any
import math
import os

import numpy as np

from src.core.exceptions import ConfigError
from src.core.validation import ValidationResult
from src.data.constants import DG2


SUITES = ('torsion', 'crosscheck', 'closed-form', 'implicit', 'series',
          'chern-simons', 'limit', 'cone', 'integrator')

DEFAULT_TOLERANCES = {
    'torsion': DG2.Tolleranze.TORSIONE,
    'equivalence': DG2.Tolleranze.EQUIVALENZA,
    'closed_form': DG2.Tolleranze.FORMA_CHIUSA,
    'implicit': DG2.Tolleranze.RESIDUO_IMPLICITO,
    'chern_simons': DG2.Tolleranze.DENSITA_CS,
    'cone': DG2.Tolleranze.RESIDUO_CONO,
    'integrator': DG2.Tolleranze.INTEGRATORE,
}


@dataclass
class GridSpec:
    """Griglia radiale: estremi, numero di punti, spaziatura"""
    r_min: Optional[float] = None
    r_max: float = DG2.Griglia.R_MAX_DEFAULT
    count: int = DG2.Griglia.PUNTI_DEFAULT
    spacing: str = 'log'

    def build(self, default_min: float) -> np.ndarray:
        start = default_min if self.r_min is None else self.r_min
        if self.spacing == 'log':
            return np.geomspace(start, self.r_max, self.count)
        return np.linspace(start, self.r_max, self.count)

    def describe(self) -> str:
        start = 'auto' if self.r_min is None else f"{self.r_min:g}"
        return f"{self.spacing}[{start}, {self.r_max:g}] x {self.count}"


@dataclass
class RunConfig:
    """Configurazione completa (default < file < flag)"""
    geometry: str = 'bggg'
    mode: str = 'deformed'
    variant: str = 'printed'

    # parametri delle soluzioni
    bs_scale: float = DG2.Geometria.BS_SCALA_COMPLETA
    tan_c: float = 0.7
    cone_c: float = 1.0
    a: Tuple[float, float, float] = (1.0, 0.0, 0.0)
    c0: float = 1.0
    epsilon: float = 1e-2
    branch: int = 0
    k_max: int = 3
    order: int = 5
    series_a: float = 3.0
    c_max: float = 20.0
    r: Optional[float] = None

    grid: GridSpec = field(default_factory=GridSpec)
    tolerances: Dict[str, float] = field(default_factory=lambda: dict(DEFAULT_TOLERANCES))

    # campionamento
    ansatz_count: int = DG2.Griglia.ANSATZ_CASUALI
    seed: int = DG2.Griglia.SEED

    # output
    suites: List[str] = field(default_factory=lambda: list(SUITES))
    output_dir: str = field(default_factory=lambda: os.environ.get(
        DG2.Output.ENV_OUTPUT_DIR, DG2.Output.OUTPUT_DIR_DEFAULT))
    output_format: str = 'csv'
    pdf: Optional[str] = None

    # chiavi piatte accettate da file e flag
    GRID_KEYS = {'r_min': 'r_min', 'rmin': 'r_min', 'r_max': 'r_max', 'rmax': 'r_max',
                 'count': 'count', 'points': 'count', 'spacing': 'spacing'}

    def update(self, values: Dict[str, Any]) -> 'RunConfig':
        """
        Applica valori (stringhe da file o tipi nativi da flag).

        Raises:
            ConfigError: chiave sconosciuta o valore non convertibile
        """
        known = {f.name: f for f in fields(self)}
        for raw_key, value in values.items():
            if value is None:
                continue
            key = raw_key.strip().lower().replace('-', '_')
            try:
                if key in self.GRID_KEYS:
                    name = self.GRID_KEYS[key]
                    caster = {'r_min': float, 'r_max': float, 'count': int, 'spacing': str}[name]
                    setattr(self.grid, name, caster(value))
                elif key.startswith('tol_'):
                    self.tolerances[key[4:]] = float(value)
                elif key in known and key not in ('grid', 'tolerances'):
                    setattr(self, key, _coerce(key, value, getattr(self, key)))
                else:
                    raise ConfigError(f"Chiave di configurazione sconosciuta: {raw_key}")
            except (TypeError, ValueError) as e:
                if isinstance(e, ConfigError):
                    raise
                raise ConfigError(f"Valore non valido per {raw_key}: {value!r}") from e
        return self

    def to_dict(self) -> Dict:
        data = asdict(self)
        data['a'] = list(self.a)
        return data


def _coerce(key: str, value: Any, current: Any) -> Any:
    if key == 'a':
        if isinstance(value, str):
            value = [x for x in value.replace(' ', '').split(',') if x]
        triple = tuple(float(x) for x in value)
        if len(triple) != 3:
            raise ValueError("servono tre componenti")
        return triple
    if key == 'suites':
        if isinstance(value, str):
            value = [x.strip() for x in value.split(',') if x.strip()]
        return list(value)
    if key in ('r', 'pdf'):
        return None if value in ('', 'none') else (float(value) if key == 'r' else str(value))
    if isinstance(current, bool):
        return str(value).lower() in ('1', 'true', 'yes')
    if isinstance(current, int):
        return int(value)
    if isinstance(current, float):
        return float(value)
    return str(value)


def validate_run_config(config: RunConfig) -> ValidationResult:
    """Verifica la coerenza della configurazione"""
    result = ValidationResult()
    grid = config.grid

    if config.geometry not in ('bggg', 'bs', 'cone', 'all'):
        result.add_error(f"Geometria sconosciuta: {config.geometry}")
    if config.mode not in ('g2', 'deformed'):
        result.add_error(f"Modo sconosciuto: {config.mode}")
    if config.variant not in ('printed', 'symmetric'):
        result.add_error(f"Variante sconosciuta: {config.variant}")

    if grid.r_min is not None and not grid.r_min < grid.r_max:
        result.add_error(f"Griglia: r_min ({grid.r_min}) deve essere < r_max ({grid.r_max})")
    if grid.count < 2:
        result.add_error(f"Griglia: servono almeno 2 punti ({grid.count})")
    if grid.spacing not in DG2.Griglia.SPAZIATURE:
        result.add_error(f"Spaziatura sconosciuta: {grid.spacing}")
    if grid.spacing == 'log' and grid.r_min is not None and grid.r_min <= 0:
        result.add_error("Griglia logaritmica con r_min <= 0")

    for name, tol in config.tolerances.items():
        if not tol > 0:
            result.add_error(f"Tolleranza {name} non positiva: {tol}")

    if config.cone_c <= 0:
        result.add_error(f"cone_c deve essere positivo: {config.cone_c}")
    if not any(config.a):
        result.add_error("La terna a non puo' essere nulla")
    if config.epsilon <= 0:
        result.add_error(f"eps deve essere positivo: {config.epsilon}")
    if config.branch < 0 or config.k_max < 0:
        result.add_error("Indici di ramo negativi")
    if config.order < 1:
        result.add_error(f"Ordine della serie non valido: {config.order}")
    if config.ansatz_count < 1:
        result.add_error(f"Numero di ansatz non valido: {config.ansatz_count}")

    if config.branch == 0 and not 0 < config.tan_c < math.pi / 2:
        result.add_warning(f"tan_c = {config.tan_c} fuori da (0, pi/2): ramo principale non liscio")
    if config.output_format not in DG2.Output.FORMATI:
        result.add_error(f"Formato di output sconosciuto: {config.output_format}")
    unknown = [s for s in config.suites if s not in SUITES]
    if unknown:
        result.add_error(f"Suite sconosciute: {', '.join(unknown)}")
    return result
