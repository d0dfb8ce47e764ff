"""
Modello Dataset
Tabella di record ordinati con intestazione fissa
"""

from dataclasses import dataclass, field
from typing import Dict, List, Sequence


@dataclass
class Dataset:
    """Dataset tabellare prodotto dalle analisi"""
    name: str
    columns: List[str]
    rows: List[Sequence] = field(default_factory=list)
    metadata: Dict = field(default_factory=dict)

    def add_row(self, *values):
        if len(values) != len(self.columns):
            raise ValueError(f"Attese {len(self.columns)} colonne, ricevute {len(values)}")
        self.rows.append(tuple(values))

    def column(self, name: str) -> list:
        k = self.columns.index(name)
        return [row[k] for row in self.rows]

    def records(self) -> List[Dict]:
        return [dict(zip(self.columns, row)) for row in self.rows]

    def __len__(self):
        return len(self.rows)
