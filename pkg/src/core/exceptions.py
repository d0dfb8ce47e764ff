"""
Eccezioni del motore di calcolo
===============================

Gerarchia comune a tutti i moduli di `src.core`:

- G2Error: base
- DomainError: argomento fuori dominio (r, c, x < -1/e, grado > 7)
- TrivialBranchError: serie con a = 0 (ramo p = 0)
- SingularPointError: r su un punto singolare dei coefficienti ODE
- SolverError: fallimento numerico (finestra vuota, non convergenza)
- ConfigError: configurazione di esecuzione non valida
"""


class G2Error(Exception):
    """Errore base del pacchetto"""


class DomainError(G2Error, ValueError):
    """Argomento fuori dal dominio ammesso"""


class SingularPointError(DomainError):
    """Valutazione su un punto singolare dei coefficienti stampati"""

    def __init__(self, message: str, r: float = float('nan')):
        super().__init__(message)
        self.r = r


class SolverError(G2Error, RuntimeError):
    """Fallimento di un risolutore numerico"""


class EmptyWindowError(SolverError):
    """Nessuna radice possibile nella finestra di ramo richiesta"""


class ConvergenceError(SolverError):
    """Iterazione o integrazione non convergente"""

    def __init__(self, message: str, partial=None):
        super().__init__(message)
        self.partial = partial


class ConfigError(G2Error, ValueError):
    """Configurazione di esecuzione non valida"""


class TrivialBranchError(DomainError):
    """Serie con valore iniziale nullo: solo la soluzione identicamente nulla"""
