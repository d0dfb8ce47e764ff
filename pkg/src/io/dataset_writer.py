"""
Scrittura dataset CSV / JSON
Serializzazione deterministica a 17 cifre significative
"""

import csv
import json
import logging
import os
from pathlib import Path
from typing import Dict, List, Optional, Any

import numpy as np

from src.core.models.dataset import Dataset
from src.data.constants import DG2

logger = logging.getLogger(__name__)


def format_number(value: Any) -> str:
    """Rappresentazione decimale a 17 cifre significative (stabile)"""
    if isinstance(value, (bool, np.bool_)):
        return 'true' if value else 'false'
    if isinstance(value, (int, np.integer)):
        return str(int(value))
    if isinstance(value, (float, np.floating)):
        return f"{float(value):.{DG2.Output.CIFRE_SIGNIFICATIVE}g}"
    return str(value)


class DatasetWriter:
    """Gestore scrittura dataset - file .csv e .json"""

    VERSION = "1.0"

    def __init__(self, output_dir: Optional[str] = None):
        self.output_dir = Path(output_dir or os.environ.get(
            DG2.Output.ENV_OUTPUT_DIR, DG2.Output.OUTPUT_DIR_DEFAULT))
        self.last_error = None

    def save_dataset(self, dataset: Dataset, fmt: str = 'csv',
                     stem: Optional[str] = None) -> List[Path]:
        """
        Salva un dataset

        Args:
            dataset: tabella da scrivere
            fmt: 'csv', 'json' o 'both'
            stem: nome file senza estensione (default: dataset.name)

        Returns:
            percorsi scritti

        Raises:
            OSError: cartella di output non scrivibile
        """
        if fmt not in DG2.Output.FORMATI:
            raise ValueError(f"Formato sconosciuto: {fmt}")
        stem = stem or dataset.name
        try:
            self.output_dir.mkdir(parents=True, exist_ok=True)
            written = []
            if fmt in ('csv', 'both'):
                written.append(self._write_csv(dataset, self.output_dir / f"{stem}.csv"))
            if fmt in ('json', 'both'):
                written.append(self._write_json(dataset, self.output_dir / f"{stem}.json"))
            self.last_error = None
            for path in written:
                logger.info(f"Dataset scritto: {path}")
            return written
        except OSError as e:
            self.last_error = f"Errore scrittura: {e}"
            logger.error(self.last_error)
            raise

    def _write_csv(self, dataset: Dataset, path: Path) -> Path:
        with open(path, 'w', encoding='utf-8', newline='') as f:
            writer = csv.writer(f, lineterminator='\n')
            writer.writerow(dataset.columns)
            for row in dataset.rows:
                writer.writerow([format_number(v) for v in row])
        return path

    def _write_json(self, dataset: Dataset, path: Path) -> Path:
        data = {
            'name': dataset.name,
            'columns': list(dataset.columns),
            'records': [
                {k: self._prepare_value(v) for k, v in record.items()}
                for record in dataset.records()
            ],
            'parameters': self._prepare_value(dataset.metadata),
            '_metadata': {
                'version': self.VERSION,
                'software': DG2.SOFTWARE,
                'software_version': DG2.VERSION,
            },
        }
        with open(path, 'w', encoding='utf-8') as f:
            json.dump(data, f, indent=2, ensure_ascii=False, sort_keys=False)
            f.write('\n')
        return path

    def _prepare_value(self, value: Any) -> Any:
        """Prepara singolo valore per serializzazione"""
        if value is None or isinstance(value, (str, bool)):
            return value
        if isinstance(value, np.bool_):
            return bool(value)
        if isinstance(value, (int, np.integer)):
            return int(value)
        if isinstance(value, (float, np.floating)):
            value = float(value)
            if not np.isfinite(value):
                return str(value)
            return float(format_number(value))
        if isinstance(value, dict):
            return {str(k): self._prepare_value(v) for k, v in value.items()}
        if isinstance(value, (list, tuple, np.ndarray)):
            return [self._prepare_value(item) for item in value]
        if hasattr(value, 'to_dict'):
            return self._prepare_value(value.to_dict())
        return str(value)

    def load_dataset(self, path: str) -> Optional[Dict]:
        """Rilegge un dataset JSON scritto da save_dataset"""
        try:
            with open(path, 'r', encoding='utf-8') as f:
                data = json.load(f)
            data.pop('_metadata', None)
            self.last_error = None
            return data
        except (OSError, json.JSONDecodeError) as e:
            self.last_error = f"Errore caricamento: {e}"
            logger.error(self.last_error)
            return None


def write_report_json(report: Dict, path: str) -> Path:
    """Report di verifica in JSON (chiavi nell'ordine di inserimento)"""
    path = Path(path)
    path.parent.mkdir(parents=True, exist_ok=True)
    with open(path, 'w', encoding='utf-8') as f:
        json.dump(DatasetWriter()._prepare_value(report), f, indent=2, ensure_ascii=False)
        f.write('\n')
    return path
