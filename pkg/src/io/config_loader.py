"""
Lettura file di configurazione
Formato: una coppia "chiave = valore" per riga, commenti con #
"""

import logging
from pathlib import Path
from typing import Dict

from src.core.exceptions import ConfigError

logger = logging.getLogger(__name__)


def load_config_file(path: str) -> Dict[str, str]:
    """
    Legge il file e restituisce le coppie come stringhe

    Raises:
        ConfigError: file mancante o riga senza '='
    """
    path = Path(path)
    if not path.exists():
        raise ConfigError(f"File di configurazione non trovato: {path}")

    values: Dict[str, str] = {}
    with open(path, 'r', encoding='utf-8') as f:
        for number, line in enumerate(f, start=1):
            line = line.split('#', 1)[0].strip()
            if not line:
                continue
            if '=' not in line:
                raise ConfigError(f"{path}:{number}: attesa 'chiave = valore'")
            key, value = (part.strip() for part in line.split('=', 1))
            if not key:
                raise ConfigError(f"{path}:{number}: chiave vuota")
            values[key] = value
    logger.debug(f"Configurazione {path}: {len(values)} chiavi")
    return values
