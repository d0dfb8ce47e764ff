"""
Forme Invarianti
================

Algebra esterna sul cobase invariante di R+ x S^3 x S^3:

    indice:  0    1     2     3     4     5     6
    forma:   dr   e1+   e2+   e3+   e1-   e2-   e3-

Le forme sono memorizzate in modo sparso: multi-indice crescente ->
coefficiente RadialScalar (indice assente = coefficiente nullo).

Il differenziale esterno usa le equazioni di struttura (convenzione di
somma sugli indici ripetuti):

    d e_i+ = - eps_ijk (e_j+ e_k+ + e_j- e_k-)
    d e_i- = - 2 eps_ijk e_j- e_k+
"""

from functools import lru_cache
from itertools import permutations
from typing import Dict, Iterable, List, Optional, Tuple, Union
import logging

import numpy as np

from src.core.exceptions import DomainError
from src.core.calculus.radial import RadialScalar, Interval, FULL_LINE, Number

logger = logging.getLogger(__name__)

MultiIndex = Tuple[int, ...]
Scalar = Union[RadialScalar, int, float]

DIMENSION = 7

DR = 0
P1, P2, P3 = 1, 2, 3
M1, M2, M3 = 4, 5, 6

PLUS = (P1, P2, P3)
MINUS = (M1, M2, M3)

COFRAME_NAMES = ('dr', 'p1', 'p2', 'p3', 'm1', 'm2', 'm3')


# =============================================================================
# SEGNI E NORMALIZZAZIONE
# =============================================================================

def sort_with_sign(indices: Iterable[int]) -> Tuple[int, MultiIndex]:
    """
    Riordina un multi-indice e restituisce (segno, indice ordinato).

    Il segno e' la parita' della permutazione (conteggio inversioni);
    indici ripetuti danno segno 0.
    """
    idx = tuple(indices)
    if len(set(idx)) != len(idx):
        return 0, tuple(sorted(idx))
    inversions = sum(1 for a in range(len(idx)) for b in range(a + 1, len(idx))
                     if idx[a] > idx[b])
    return (-1 if inversions % 2 else 1), tuple(sorted(idx))


def levi_civita(i: int, j: int, k: int) -> int:
    """Simbolo di Levi-Civita su {1, 2, 3}"""
    sign, _ = sort_with_sign((i, j, k))
    return sign if sorted((i, j, k)) == [1, 2, 3] else 0


def monomial_name(index: MultiIndex) -> str:
    """Nome leggibile del monomio, es. (0, 1, 5) -> 'dr^p1^m2'"""
    return '^'.join(COFRAME_NAMES[i] for i in index) if index else '1'


# =============================================================================
# FORMA INVARIANTE
# =============================================================================

class InvariantForm:
    """
    Forma differenziale di grado fisso con coefficienti radiali.

    Esempio:
        a = coframe(P1)
        b = coframe(P2)
        wedge(a, b).coefficient((1, 2))    # costante 1
        wedge(b, a).coefficient((1, 2))    # costante -1
    """

    __slots__ = ('degree', '_coefficients')

    __array_ufunc__ = None

    def __init__(self, degree: int,
                 coefficients: Optional[Dict[Iterable[int], Scalar]] = None):
        if not 0 <= degree <= DIMENSION:
            raise DomainError(f"Grado {degree} fuori da 0..{DIMENSION}")
        self.degree = degree
        self._coefficients: Dict[MultiIndex, RadialScalar] = {}

        for raw_index, value in (coefficients or {}).items():
            raw_index = tuple(raw_index)
            if len(raw_index) != degree:
                raise DomainError(
                    f"Multi-indice {raw_index} incompatibile con grado {degree}")
            if any(not 0 <= i < DIMENSION for i in raw_index):
                raise DomainError(f"Indice di cobase non valido in {raw_index}")
            sign, index = sort_with_sign(raw_index)
            if sign == 0:
                continue
            self._accumulate(index, RadialScalar.coerce(value) * sign)

    def _accumulate(self, index: MultiIndex, value: RadialScalar):
        if value.is_zero:
            return
        if index in self._coefficients:
            total = self._coefficients[index] + value
            if total.is_zero:
                del self._coefficients[index]
            else:
                self._coefficients[index] = total
        else:
            self._coefficients[index] = value

    # --- Costruttori ---

    @classmethod
    def zero(cls, degree: int) -> 'InvariantForm':
        return cls(degree)

    @classmethod
    def scalar(cls, f: Scalar) -> 'InvariantForm':
        """0-forma"""
        return cls(0, {(): f})

    @classmethod
    def monomial(cls, index: Iterable[int], coefficient: Scalar = 1.0) -> 'InvariantForm':
        index = tuple(index)
        return cls(len(index), {index: coefficient})

    # --- Accesso ---

    def coefficient(self, index: Iterable[int]) -> RadialScalar:
        """Coefficiente del monomio (indice anche non ordinato, con segno)"""
        sign, key = sort_with_sign(index)
        value = self._coefficients.get(key)
        if sign == 0 or value is None:
            return RadialScalar.const(0.0)
        return value if sign > 0 else -value

    @property
    def coefficients(self) -> Dict[MultiIndex, RadialScalar]:
        return dict(self._coefficients)

    @property
    def monomials(self) -> List[MultiIndex]:
        return sorted(self._coefficients)

    @property
    def is_zero(self) -> bool:
        return not self._coefficients

    @property
    def domain(self) -> Interval:
        domain = FULL_LINE
        for value in self._coefficients.values():
            domain = domain.intersect(value.domain)
        return domain

    def __len__(self):
        return len(self._coefficients)

    # --- Algebra lineare ---

    def __add__(self, other: 'InvariantForm') -> 'InvariantForm':
        if not isinstance(other, InvariantForm):
            return NotImplemented
        if other.degree != self.degree:
            raise DomainError(
                f"Somma di forme di grado diverso: {self.degree} e {other.degree}")
        result = InvariantForm(self.degree)
        result._coefficients = dict(self._coefficients)
        for index, value in other._coefficients.items():
            result._accumulate(index, value)
        return result

    def __neg__(self) -> 'InvariantForm':
        return self * -1.0

    def __sub__(self, other: 'InvariantForm') -> 'InvariantForm':
        return self + (-other)

    def __mul__(self, f: Scalar) -> 'InvariantForm':
        if isinstance(f, InvariantForm):
            return NotImplemented
        f = RadialScalar.coerce(f)
        result = InvariantForm(self.degree)
        if f.is_zero:
            return result
        for index, value in self._coefficients.items():
            result._accumulate(index, value * f)
        return result

    __rmul__ = __mul__

    def wedge(self, other: 'InvariantForm') -> 'InvariantForm':
        return wedge(self, other)

    def d(self) -> 'InvariantForm':
        return exterior_derivative(self)

    def __repr__(self):
        terms = ', '.join(monomial_name(i) for i in self.monomials)
        return f"InvariantForm(deg={self.degree}, [{terms}])"


def coframe(i: int) -> InvariantForm:
    """1-forma del cobase invariante"""
    return InvariantForm.monomial((i,))


# =============================================================================
# PRODOTTO ESTERNO
# =============================================================================

def wedge(*forms: InvariantForm) -> InvariantForm:
    """
    Prodotto esterno di una o piu' forme.

    Raises:
        DomainError: se il grado totale supera 7
    """
    if not forms:
        return InvariantForm.scalar(1.0)
    result = forms[0]
    for b in forms[1:]:
        result = _wedge_pair(result, b)
    return result


def _wedge_pair(a: InvariantForm, b: InvariantForm) -> InvariantForm:
    degree = a.degree + b.degree
    if degree > DIMENSION:
        raise DomainError(f"Prodotto esterno di grado {degree} > {DIMENSION}")
    result = InvariantForm(degree)
    for ia, fa in a._coefficients.items():
        for ib, fb in b._coefficients.items():
            sign, index = sort_with_sign(ia + ib)
            if sign == 0:
                continue
            result._accumulate(index, fa * fb * sign)
    return result


# =============================================================================
# DIFFERENZIALE ESTERNO
# =============================================================================

def _build_structure() -> Dict[int, Dict[MultiIndex, float]]:
    """d e_i come combinazione di 2-forme costanti"""
    structure: Dict[int, Dict[MultiIndex, float]] = {DR: {}}
    for i in (1, 2, 3):
        plus: Dict[MultiIndex, float] = {}
        minus: Dict[MultiIndex, float] = {}
        for j, k in permutations((1, 2, 3), 2):
            eps = levi_civita(i, j, k)
            if eps == 0:
                continue
            for pair, coef, target in (
                    ((PLUS[j - 1], PLUS[k - 1]), -eps, plus),
                    ((MINUS[j - 1], MINUS[k - 1]), -eps, plus),
                    ((MINUS[j - 1], PLUS[k - 1]), -2 * eps, minus)):
                sign, key = sort_with_sign(pair)
                target[key] = target.get(key, 0.0) + sign * coef
        structure[PLUS[i - 1]] = {k: v for k, v in plus.items() if v != 0}
        structure[MINUS[i - 1]] = {k: v for k, v in minus.items() if v != 0}
    return structure


STRUCTURE_CONSTANTS = _build_structure()


@lru_cache(maxsize=None)
def _d_monomial(index: MultiIndex) -> Tuple[Tuple[MultiIndex, float], ...]:
    """d del monomio costante e_I (regola di Leibniz graduata)"""
    terms: Dict[MultiIndex, float] = {}
    for position, generator in enumerate(index):
        for pair, coef in STRUCTURE_CONSTANTS[generator].items():
            raw = index[:position] + pair + index[position + 1:]
            sign, key = sort_with_sign(raw)
            if sign == 0:
                continue
            terms[key] = terms.get(key, 0.0) + (-1) ** position * sign * coef
    return tuple((k, v) for k, v in sorted(terms.items()) if v != 0)


def exterior_derivative(a: InvariantForm) -> InvariantForm:
    """
    d(f e_I) = f' dr^e_I + f d(e_I)

    Raises:
        DomainError: se deg(a) = 7
    """
    if a.degree >= DIMENSION:
        raise DomainError("Differenziale di una forma di grado massimo")
    result = InvariantForm(a.degree + 1)
    for index, f in a._coefficients.items():
        if DR not in index:
            derivative = f.diff()
            if not derivative.is_zero:
                result._accumulate((DR,) + index, derivative)
        for key, coef in _d_monomial(index):
            result._accumulate(key, f * coef)
    return result


# =============================================================================
# VALUTAZIONE
# =============================================================================

def evaluate_form(a: InvariantForm, r: Number) -> Dict[MultiIndex, Number]:
    """
    Tabella numerica dei coefficienti in r (scalare o griglia).

    Raises:
        DomainError: se r e' fuori dal dominio di qualche coefficiente
    """
    return {index: a._coefficients[index].value(r) for index in a.monomials}


def max_abs_coefficient(a: InvariantForm, r: Number) -> float:
    """Massimo |coefficiente| su tutti i monomi e su tutta la griglia"""
    table = evaluate_form(a, r)
    if not table:
        return 0.0
    return float(max(np.max(np.abs(v)) for v in table.values()))


def coefficient_envelope(a: InvariantForm, r: Number) -> np.ndarray:
    """Massimo |coefficiente| per punto di griglia"""
    r = np.atleast_1d(np.asarray(r, dtype=float))
    table = evaluate_form(a, r)
    if not table:
        return np.zeros_like(r)
    return np.max(np.abs(np.vstack(list(table.values()))), axis=0)
