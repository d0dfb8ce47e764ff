"""Calcolo esterno invariante su R+ x S^3 x S^3"""

from src.core.calculus.radial import (
    Dual, Interval, RadialScalar, FULL_LINE,
    sqrt, exp, log, sin, cos, tan, arctan, polynomial,
)
from src.core.calculus.forms import (
    InvariantForm, coframe, wedge, exterior_derivative, evaluate_form,
    max_abs_coefficient, coefficient_envelope, monomial_name,
    DR, P1, P2, P3, M1, M2, M3, PLUS, MINUS,
)
