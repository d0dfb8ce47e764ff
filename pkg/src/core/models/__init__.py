"""Modelli dati: configurazione di esecuzione e dataset"""

from .dataset import Dataset
from .run_config import RunConfig, GridSpec, validate_run_config
