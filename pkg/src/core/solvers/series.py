"""
Serie di Potenze nell'Orbita Singolare
======================================

Con z = r - 9/4 l'equazione deformata BGGG per A = p(z) e1+ diventa

    (4/9 z^4 + 4 z^3 + 11 z^2 + 9 z + p^2) p' = (4z + 9) p

e per p(0) = a != 0 i coefficienti di p = sum c_n z^n seguono da

    c_{n+1} = [9 c_n + 4 c_{n-1} - sum_{k=1..n} (D_k + Q_k)(n-k+1) c_{n-k+1}] / ((n+1) a^2)

con D = (0, 9, 11, 4, 4/9) e Q_k i coefficienti di p^2.

I coefficienti sono polinomi di Laurent in a a coefficienti razionali
(aritmetica esatta con fractions.Fraction).
"""

from dataclasses import dataclass, field
from fractions import Fraction
from typing import Dict, List, Union
import math
import logging

from src.core.exceptions import DomainError, TrivialBranchError
from src.data.constants import DG2

logger = logging.getLogger(__name__)

Exact = Union[int, Fraction]

def as_exact(a):
    """Fraction per interi, Fraction e float uguali al proprio letterale decimale (1.5); None altrimenti"""
    if isinstance(a, bool):
        return None
    if isinstance(a, (int, Fraction)):
        return Fraction(a)
    if isinstance(a, float) and math.isfinite(a):
        exact = Fraction(a)
        if exact == Fraction(repr(float(a))):
            return exact
    return None


# Coefficienti di 4/9 z^4 + 4 z^3 + 11 z^2 + 9 z
D_COEFFICIENTS = (Fraction(0), Fraction(9), Fraction(11), Fraction(4), Fraction(4, 9))


class LaurentPoly:
    """Polinomio di Laurent in a: {potenza: coefficiente razionale}"""

    __slots__ = ('terms',)

    def __init__(self, terms: Dict[int, Exact] = None):
        self.terms: Dict[int, Fraction] = {
            int(k): Fraction(v) for k, v in (terms or {}).items() if v != 0}

    @classmethod
    def monomial(cls, power: int, coefficient: Exact = 1) -> 'LaurentPoly':
        return cls({power: coefficient})

    def __add__(self, other: 'LaurentPoly') -> 'LaurentPoly':
        other = _lift(other)
        terms = dict(self.terms)
        for k, v in other.terms.items():
            terms[k] = terms.get(k, Fraction(0)) + v
        return LaurentPoly(terms)

    __radd__ = __add__

    def __neg__(self):
        return LaurentPoly({k: -v for k, v in self.terms.items()})

    def __sub__(self, other):
        return self + (-_lift(other))

    def __mul__(self, other) -> 'LaurentPoly':
        other = _lift(other)
        terms: Dict[int, Fraction] = {}
        for i, u in self.terms.items():
            for j, v in other.terms.items():
                terms[i + j] = terms.get(i + j, Fraction(0)) + u * v
        return LaurentPoly(terms)

    __rmul__ = __mul__

    def shift(self, power: int) -> 'LaurentPoly':
        """Moltiplica per a^power"""
        return LaurentPoly({k + power: v for k, v in self.terms.items()})

    def evaluate(self, a):
        """Valore in a (esatto se as_exact(a) lo consente)"""
        exact = as_exact(a)
        if exact is not None:
            a = exact
            return sum((v * a ** k for k, v in self.terms.items()), Fraction(0))
        a = float(a)
        return sum(float(v) * a ** k for k, v in self.terms.items())

    def __eq__(self, other):
        return isinstance(other, (LaurentPoly, int, Fraction)) and \
            self.terms == _lift(other).terms

    def __hash__(self):
        return hash(tuple(sorted(self.terms.items())))

    def __repr__(self):
        if not self.terms:
            return '0'
        parts = [f"{v}*a^{k}" for k, v in sorted(self.terms.items(), reverse=True)]
        return ' + '.join(parts)


def _lift(x) -> LaurentPoly:
    if isinstance(x, LaurentPoly):
        return x
    return LaurentPoly({0: x})


@dataclass
class SeriesExpansion:
    """Serie troncata p(z) = sum_{n<=order} c_n z^n attorno a r = 9/4"""
    leading: Union[Fraction, float]
    order: int
    coefficients: List[LaurentPoly] = field(default_factory=list)
    base_point: Fraction = Fraction(9, 4)

    def coefficient(self, n: int) -> LaurentPoly:
        """c_n come polinomio di Laurent in a"""
        return self.coefficients[n]

    def numeric_coefficients(self) -> list:
        """c_n valutati in a (Fraction se a e' esatto)"""
        return [c.evaluate(self.leading) for c in self.coefficients]

    def evaluate(self, z, order: int = None):
        """p(z) troncata all'ordine indicato"""
        coefficients = self.numeric_coefficients()[:(self.order if order is None else order) + 1]
        total = 0
        for c in reversed(coefficients):
            total = total * z + c
        return total

    def derivative(self, z, order: int = None):
        """p'(z) della serie troncata"""
        coefficients = self.numeric_coefficients()[:(self.order if order is None else order) + 1]
        total = 0
        for n in range(len(coefficients) - 1, 0, -1):
            total = total * z + n * coefficients[n]
        return total

    def value_at_radius(self, r: float, order: int = None) -> float:
        return float(self.evaluate(r - float(self.base_point), order))

    def ode_residual(self, z, order: int = None):
        """(4/9 z^4 + 4z^3 + 11z^2 + 9z + p^2) p' - (4z + 9) p della serie troncata"""
        p = self.evaluate(z, order)
        dp = self.derivative(z, order)
        poly = 0
        for d in reversed(D_COEFFICIENTS):
            poly = poly * z + (d if isinstance(z, Fraction) else float(d))
        return (poly + p * p) * dp - (4 * z + 9) * p

    def to_dict(self) -> Dict:
        return {
            'leading': str(self.leading),
            'order': self.order,
            'coefficients': [repr(c) for c in self.coefficients],
            'numeric': [str(c) if isinstance(c, Fraction) else repr(c)
                        for c in self.numeric_coefficients()],
        }


def series_coefficients(order: int) -> List[LaurentPoly]:
    """Coefficienti c_0..c_order come polinomi di Laurent in a"""
    c: List[LaurentPoly] = [LaurentPoly.monomial(1)]
    for n in range(order):
        # Q_k = sum_{i+j=k} c_i c_j
        def q(k):
            total = LaurentPoly()
            for i in range(k + 1):
                total = total + c[i] * c[k - i]
            return total

        numerator = c[n] * 9
        if n >= 1:
            numerator = numerator + c[n - 1] * 4
        for k in range(1, n + 1):
            d_k = D_COEFFICIENTS[k] if k < len(D_COEFFICIENTS) else Fraction(0)
            numerator = numerator - (q(k) + d_k) * c[n - k + 1] * (n - k + 1)
        c.append(numerator.shift(-2) * Fraction(1, n + 1))
    return c


def series_expand(a, order: int = 5) -> SeriesExpansion:
    """
    Serie di p(z) con p(0) = a.

    Raises:
        TrivialBranchError: a = 0 (solo p = 0)
        DomainError: order < 1
    """
    if order < 1:
        raise DomainError(f"Ordine della serie non valido: {order}")
    if a == 0:
        raise TrivialBranchError("a = 0: la serie si riduce alla soluzione nulla")
    exact = as_exact(a)
    if exact is not None:
        a = exact
    coefficients = series_coefficients(order)
    logger.debug(f"Serie in 9/4: a = {a}, ordine {order}")
    return SeriesExpansion(leading=a, order=order, coefficients=coefficients)


def printed_coefficients() -> List[LaurentPoly]:
    """I primi cinque coefficienti nella forma chiusa nota"""
    return [
        LaurentPoly({1: 1}),
        LaurentPoly({-1: 9}),
        LaurentPoly({-1: 2, -3: -81}),
        LaurentPoly({-3: -63, -5: 1458}),
        LaurentPoly({-3: -22, -5: 1944, -7: -32805}),
    ]


def residual_slope(series: SeriesExpansion, order: int,
                   z_small: Fraction = Fraction(1, 10 ** 4),
                   z_large: Fraction = Fraction(1, 10 ** 3)) -> float:
    """Pendenza log-log del residuo della serie troncata all'ordine dato"""
    small = abs(series.ode_residual(z_small, order))
    large = abs(series.ode_residual(z_large, order))
    return (math.log(float(large)) - math.log(float(small))) / \
        (math.log(float(z_large)) - math.log(float(z_small)))


SLOPE_TOLERANCE = DG2.Tolleranze.PENDENZA_SERIE
