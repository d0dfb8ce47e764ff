# src/data - Modulo dati e costanti
"""
Modulo per la gestione centralizzata di:
- Tolleranze delle verifiche
- Parametri dei risolutori e delle griglie
- Costanti geometriche
"""

from .constants import DG2
