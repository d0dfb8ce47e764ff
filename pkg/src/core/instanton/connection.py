"""
Connessioni Invarianti e Curvatura
==================================

Ansatz abeliano A = f1 e1+ + f2 e2+ + f3 e3+ con curvatura F = dA, e
residui delle equazioni di istantone a livello di forme:

    G2:        F ^ psi
    deformato: (eps^2 / 6) F^3 - F ^ psi     (eps = 1 nel caso standard)
"""

from dataclasses import dataclass
from enum import Enum
from typing import Iterator, Optional, Sequence, Tuple
import logging

import numpy as np

from src.core.calculus.forms import (
    InvariantForm, coframe, wedge, exterior_derivative, PLUS,
)
from src.core.calculus.radial import RadialScalar, Interval, FULL_LINE
from src.core.exceptions import DomainError
from src.core.geometry.profiles import ProfileSet
from src.core.geometry.structures import g2_forms

logger = logging.getLogger(__name__)


class Mode(Enum):
    """Equazione di istantone"""
    G2 = 'g2'
    DEFORMED = 'deformed'

    @classmethod
    def parse(cls, value) -> 'Mode':
        if isinstance(value, cls):
            return value
        key = str(value).strip().lower()
        for member in cls:
            if member.value == key or member.name.lower() == key:
                return member
        raise DomainError(f"Modo sconosciuto: {value}")


@dataclass(frozen=True)
class ConnectionAnsatz:
    """Coefficienti (f1, f2, f3) della connessione A = sum f_i e_i+"""
    f1: RadialScalar
    f2: RadialScalar
    f3: RadialScalar

    @classmethod
    def of(cls, f1=0.0, f2=0.0, f3=0.0, domain: Interval = FULL_LINE) -> 'ConnectionAnsatz':
        """Da scalari radiali o costanti"""
        return cls(*(RadialScalar.coerce(f, domain) for f in (f1, f2, f3)))

    @classmethod
    def zero(cls, domain: Interval = FULL_LINE) -> 'ConnectionAnsatz':
        return cls.of(domain=domain)

    @classmethod
    def proportional(cls, f: RadialScalar, a: Sequence[float]) -> 'ConnectionAnsatz':
        """Ansatz f_i = a_i f"""
        a1, a2, a3 = (float(x) for x in a)
        return cls(f * a1, f * a2, f * a3)

    def __iter__(self) -> Iterator[RadialScalar]:
        return iter((self.f1, self.f2, self.f3))

    @property
    def domain(self) -> Interval:
        return self.f1.domain.intersect(self.f2.domain).intersect(self.f3.domain)

    def restrict(self, domain: Interval) -> 'ConnectionAnsatz':
        return ConnectionAnsatz(*(f.restrict(domain) for f in self))

    def as_form(self) -> InvariantForm:
        """La 1-forma A"""
        return InvariantForm(1, {(i,): f for i, f in zip(PLUS, self)})

    def values(self, r) -> Tuple[np.ndarray, np.ndarray]:
        """(f, f') impilati: array di forma (3,) + shape(r)"""
        duals = [f.dual(r) for f in self]
        return (np.array([d.val for d in duals], dtype=float),
                np.array([d.der for d in duals], dtype=float))

    def extends_smoothly(self, r_min: Optional[float] = None,
                         tolerance: float = 1e-12) -> bool:
        """Criterio di estensione: f_i(r_min) = 0 per ogni i"""
        r0 = self.domain.lower if r_min is None else r_min
        if self.domain.open_lower and r_min is None:
            return False
        f, _ = self.values(r0)
        return bool(np.all(np.abs(f) <= tolerance))


def curvature(a: ConnectionAnsatz) -> InvariantForm:
    """F = dA (gruppo di gauge abeliano)"""
    return exterior_derivative(a.as_form())


def form_residual(a: ConnectionAnsatz, p: ProfileSet, mode=Mode.DEFORMED,
                  epsilon: float = 1.0) -> InvariantForm:
    """
    6-forma il cui annullarsi equivale all'equazione di istantone.

    Args:
        a: ansatz
        p: profili della struttura G2
        mode: Mode.G2 -> F^psi; Mode.DEFORMED -> (eps^2/6) F^3 - F^psi
        epsilon: parametro di scala del termine cubico

    Returns:
        InvariantForm di grado 6
    """
    mode = Mode.parse(mode)
    a = a.restrict(p.domain)
    F = curvature(a)
    psi = g2_forms(p).psi
    linear = wedge(F, psi)
    if mode is Mode.G2:
        return linear
    cubic = wedge(F, F, F) * (epsilon ** 2 / 6.0)
    return cubic - linear


def chern_simons_form(a: ConnectionAnsatz, p: ProfileSet) -> InvariantForm:
    """7-forma -1/2 A ^ (F^psi - F^3/12), densita' del funzionale con A0 = 0"""
    a = a.restrict(p.domain)
    F = curvature(a)
    psi = g2_forms(p).psi
    inner = wedge(F, psi) - wedge(F, F, F) * (1.0 / 12.0)
    return wedge(a.as_form(), inner) * -0.5


def killing_dual_ansatz(p: ProfileSet, c0: float = 1.0) -> ConnectionAnsatz:
    """X^b = c0 A1^2 e1+ (duale del campo di Killing T1+)"""
    return ConnectionAnsatz.of(c0 * p.A1 ** 2, 0.0, 0.0, domain=p.domain)
