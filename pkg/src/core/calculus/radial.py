"""
Scalari Radiali
===============

Funzioni della sola coordinata radiale r con derivata esatta.

Ogni RadialScalar e' una mappa Dual -> Dual: valutata sul duale (r, 1)
restituisce (f(r), f'(r)). Somme, prodotti, quozienti, potenze e
composizioni propagano la derivata con le regole del calcolo
(forward-mode), senza differenze finite.

Le valutazioni accettano scalari o array numpy (griglie).
"""

from dataclasses import dataclass
from typing import Callable, Optional, Union
import math
import logging

import numpy as np

from src.core.exceptions import DomainError

logger = logging.getLogger(__name__)

Number = Union[int, float, np.ndarray]


# =============================================================================
# INTERVALLO DI DEFINIZIONE
# =============================================================================

@dataclass(frozen=True)
class Interval:
    """Intervallo [lower, upper) (o (lower, upper) se open_lower)"""
    lower: float = 0.0
    upper: float = math.inf
    open_lower: bool = False

    def __post_init__(self):
        if self.lower < 0:
            raise DomainError(f"Estremo inferiore negativo: {self.lower}")
        if not self.upper > self.lower:
            raise DomainError(f"Intervallo vuoto: [{self.lower}, {self.upper})")

    def contains(self, r: Number) -> np.ndarray:
        """Maschera booleana di appartenenza"""
        r = np.asarray(r, dtype=float)
        above = r > self.lower if self.open_lower else r >= self.lower
        return above & (r < self.upper)

    def check(self, r: Number):
        """Solleva DomainError se qualche r e' fuori dall'intervallo"""
        mask = self.contains(r)
        if not np.all(mask):
            bad = np.asarray(r, dtype=float)[~mask] if np.ndim(r) else r
            raise DomainError(f"r fuori dominio {self}: {np.atleast_1d(bad)[:3]}")

    def intersect(self, other: 'Interval') -> 'Interval':
        """Intersezione di due intervalli"""
        if self.lower > other.lower:
            lower, open_lower = self.lower, self.open_lower
        elif other.lower > self.lower:
            lower, open_lower = other.lower, other.open_lower
        else:
            lower, open_lower = self.lower, self.open_lower or other.open_lower
        return Interval(lower, min(self.upper, other.upper), open_lower)

    def interior_grid(self, count: int, r_max: Optional[float] = None,
                      offset: float = 0.0, spacing: str = 'log') -> np.ndarray:
        """Griglia interna [lower + offset, r_max]"""
        start = self.lower + offset
        stop = r_max if r_max is not None else self.upper
        if spacing == 'log':
            return np.geomspace(start, stop, count)
        return np.linspace(start, stop, count)

    def __str__(self):
        left = '(' if self.open_lower else '['
        return f"{left}{self.lower:g}, {self.upper:g})"


FULL_LINE = Interval(0.0)


# =============================================================================
# NUMERI DUALI
# =============================================================================

class Dual:
    """
    Coppia (valore, derivata) per la differenziazione in avanti.

    val e der possono essere a loro volta Dual: il duale annidato
    Dual(Dual(r, 1), Dual(1, 0)) porta anche la derivata seconda.
    """

    __slots__ = ('val', 'der')

    # array numpy a sinistra delegano agli operatori riflessi
    __array_ufunc__ = None

    def __init__(self, val, der=0.0):
        self.val = val
        self.der = der

    @staticmethod
    def lift(x) -> 'Dual':
        return x if isinstance(x, Dual) else Dual(x, 0.0)

    def __add__(self, other):
        other = Dual.lift(other)
        return Dual(self.val + other.val, self.der + other.der)

    __radd__ = __add__

    def __sub__(self, other):
        other = Dual.lift(other)
        return Dual(self.val - other.val, self.der - other.der)

    def __rsub__(self, other):
        return Dual.lift(other) - self

    def __neg__(self):
        return Dual(-self.val, -self.der)

    def __mul__(self, other):
        other = Dual.lift(other)
        return Dual(self.val * other.val,
                    self.der * other.val + self.val * other.der)

    __rmul__ = __mul__

    def __truediv__(self, other):
        other = Dual.lift(other)
        return Dual(self.val / other.val,
                    (self.der * other.val - self.val * other.der) / (other.val * other.val))

    def __rtruediv__(self, other):
        return Dual.lift(other) / self

    def __pow__(self, p):
        if isinstance(p, Dual):
            return exp(p * log(self))
        if p == 0:
            return Dual(1.0 + 0.0 * self.val, 0.0 * self.der)
        if p == 1:
            return self
        return Dual(self.val ** p, p * self.val ** (p - 1) * self.der)

    def __repr__(self):
        return f"Dual({self.val!r}, {self.der!r})"


# =============================================================================
# SCALARE RADIALE
# =============================================================================

class RadialScalar:
    """
    Funzione radiale r -> f(r) con derivata esatta.

    Esempio:
        r = RadialScalar.identity()
        f = r ** 3 - 2 * r
        f.value(2.0)        # 4.0
        f.derivative(2.0)   # 10.0
    """

    __slots__ = ('_fn', 'domain', 'constant', 'label')

    __array_ufunc__ = None

    def __init__(self, fn: Callable[[Dual], Dual], domain: Interval = FULL_LINE,
                 constant: Optional[float] = None, label: str = ''):
        self._fn = fn
        self.domain = domain
        self.constant = constant
        self.label = label

    # --- Costruttori ---

    @classmethod
    def identity(cls, domain: Interval = FULL_LINE) -> 'RadialScalar':
        """La coordinata r"""
        return cls(lambda x: x, domain, label='r')

    @classmethod
    def const(cls, c: float, domain: Interval = FULL_LINE) -> 'RadialScalar':
        """Funzione costante"""
        c = float(c)
        return cls(lambda x: Dual(c + 0.0 * x.val, 0.0 * x.der), domain, constant=c)

    @classmethod
    def from_pair(cls, value: Callable, derivative: Callable,
                  domain: Interval = FULL_LINE, label: str = '',
                  second: Optional[Callable] = None) -> 'RadialScalar':
        """
        Da coppia di funzioni numeriche (valore, derivata) gia' note.

        Senza `second` la derivata seconda vale NaN: basta per d(d a),
        dove i termini in f'' moltiplicano dr^dr e vengono scartati.
        """
        def second_or_nan(v):
            if second is not None:
                return second(v)
            return np.full_like(v, np.nan) if np.ndim(v) else math.nan

        def fn(x: Dual) -> Dual:
            if isinstance(x.val, Dual):
                # duale annidato r + s e1 + t e2 + u e1e2
                r, s = x.val.val, x.val.der
                t, u = Dual.lift(x.der).val, Dual.lift(x.der).der
                f1 = derivative(r)
                return Dual(Dual(value(r), f1 * s),
                            Dual(f1 * t, second_or_nan(r) * s * t + f1 * u))
            return Dual(value(x.val), derivative(x.val) * x.der)
        return cls(fn, domain, label=label)

    @staticmethod
    def coerce(x, domain: Interval = FULL_LINE) -> 'RadialScalar':
        if isinstance(x, RadialScalar):
            return x
        return RadialScalar.const(x, domain)

    # --- Valutazione ---

    def dual(self, r: Number, check: bool = True) -> Dual:
        """Valuta (f(r), f'(r))"""
        r = np.asarray(r, dtype=float) if np.ndim(r) else np.float64(r)
        if check:
            self.domain.check(r)
        one = np.ones_like(r) if np.ndim(r) else 1.0
        with np.errstate(divide="ignore", invalid="ignore"):
            out = self._fn(Dual(r, one))
        if np.ndim(r):
            return Dual(np.broadcast_to(out.val, np.shape(r)).astype(float),
                        np.broadcast_to(out.der, np.shape(r)).astype(float))
        return out

    def value(self, r: Number) -> Number:
        return self.dual(r).val

    def derivative(self, r: Number) -> Number:
        return self.dual(r).der

    __call__ = value

    @property
    def is_zero(self) -> bool:
        return self.constant == 0.0

    def diff(self) -> 'RadialScalar':
        """Derivata f' come nuovo RadialScalar (valutata con duali annidati)"""
        if self.constant is not None:
            return RadialScalar.const(0.0, self.domain)
        f = self._fn

        def fn(x: Dual) -> Dual:
            return Dual.lift(f(Dual(x, Dual(1.0, 0.0))).der)
        return RadialScalar(fn, self.domain, label=f"{self.label or 'f'}'")

    # --- Algebra ---

    def _binary(self, other, op, const_op) -> 'RadialScalar':
        other = RadialScalar.coerce(other, self.domain)
        domain = self.domain.intersect(other.domain)
        if self.constant is not None and other.constant is not None:
            return RadialScalar.const(const_op(self.constant, other.constant), domain)
        f, g = self._fn, other._fn
        return RadialScalar(lambda x: op(f(x), g(x)), domain)

    def __add__(self, other):
        if isinstance(other, (int, float)) and other == 0:
            return self
        if isinstance(other, RadialScalar) and other.is_zero:
            return self._restrict(other.domain)
        if self.is_zero and isinstance(other, RadialScalar):
            return other._restrict(self.domain)
        return self._binary(other, lambda a, b: a + b, lambda a, b: a + b)

    __radd__ = __add__

    def __sub__(self, other):
        return self + (-RadialScalar.coerce(other, self.domain))

    def __rsub__(self, other):
        return RadialScalar.coerce(other, self.domain) - self

    def __neg__(self):
        if self.constant is not None:
            return RadialScalar.const(-self.constant, self.domain)
        f = self._fn
        return RadialScalar(lambda x: -f(x), self.domain)

    def __mul__(self, other):
        other = RadialScalar.coerce(other, self.domain)
        if self.is_zero or other.is_zero:
            return RadialScalar.const(0.0, self.domain.intersect(other.domain))
        if other.constant == 1.0:
            return self._restrict(other.domain)
        if self.constant == 1.0:
            return other._restrict(self.domain)
        return self._binary(other, lambda a, b: a * b, lambda a, b: a * b)

    __rmul__ = __mul__

    def __truediv__(self, other):
        other = RadialScalar.coerce(other, self.domain)
        if other.constant == 0.0:
            raise DomainError("Divisione per lo scalare nullo")
        return self._binary(other, lambda a, b: a / b, lambda a, b: a / b)

    def __rtruediv__(self, other):
        return RadialScalar.coerce(other, self.domain) / self

    def __pow__(self, p: float):
        if self.constant is not None:
            return RadialScalar.const(self.constant ** p, self.domain)
        f = self._fn
        return RadialScalar(lambda x: f(x) ** p, self.domain)

    def apply(self, fn: Callable[[Dual], Dual]) -> 'RadialScalar':
        """Compone con una funzione elementare sui duali (sqrt, exp, ...)"""
        if self.constant is not None:
            return RadialScalar.const(float(fn(Dual(self.constant, 0.0)).val), self.domain)
        f = self._fn
        return RadialScalar(lambda x: fn(f(x)), self.domain)

    def restrict(self, domain: Interval) -> 'RadialScalar':
        """Stessa funzione su un dominio ristretto"""
        return self._restrict(domain)

    def _restrict(self, domain: Interval) -> 'RadialScalar':
        new_domain = self.domain.intersect(domain)
        if new_domain == self.domain:
            return self
        return RadialScalar(self._fn, new_domain, self.constant, self.label)

    def __repr__(self):
        if self.constant is not None:
            return f"RadialScalar(const={self.constant:g}, domain={self.domain})"
        return f"RadialScalar({self.label or 'f'}, domain={self.domain})"


# =============================================================================
# FUNZIONI ELEMENTARI
# =============================================================================

def _elementary(name: str, f: Callable, df: Callable):
    """
    Estende f a float, duali (anche annidati) e scalari radiali.

    df riceve l'argomento gia' nel tipo corrente, quindi va scritta con
    le funzioni di questo modulo.
    """
    def op(x):
        if isinstance(x, RadialScalar):
            return x.apply(op)
        if isinstance(x, Dual):
            return Dual(op(x.val), df(x.val) * x.der)
        return f(x)
    op.__name__ = name
    return op


sqrt = _elementary('sqrt', np.sqrt, lambda v: 0.5 / sqrt(v))
exp = _elementary('exp', np.exp, lambda v: exp(v))
log = _elementary('log', np.log, lambda v: 1.0 / v)
sin = _elementary('sin', np.sin, lambda v: cos(v))
cos = _elementary('cos', np.cos, lambda v: -sin(v))
tan = _elementary('tan', np.tan, lambda v: 1.0 / cos(v) ** 2)
arctan = _elementary('arctan', np.arctan, lambda v: 1.0 / (1.0 + v * v))


def polynomial(coefficients, domain: Interval = FULL_LINE) -> RadialScalar:
    """Polinomio sum_k c_k r^k (schema di Horner)"""
    coefficients = [float(c) for c in coefficients]

    def fn(x: Dual) -> Dual:
        acc = Dual(0.0 * x.val + coefficients[-1], 0.0 * x.der)
        for c in reversed(coefficients[:-1]):
            acc = acc * x + c
        return acc
    return RadialScalar(fn, domain, label='poly')


def central_difference(f: RadialScalar, r: Number, h: float = 1e-5) -> Number:
    """Differenza centrale (solo per confronti nei test)"""
    return (f.value(np.asarray(r) + h) - f.value(np.asarray(r) - h)) / (2 * h)
