"""
Sistemi ODE degli Istantoni
===========================

Ogni sistema e' lineare nelle derivate:

    M(r, f) f' = b(r, f)

e il residuo M f' - b riproduce i membri sinistri dei sistemi nella
forma in cui sono scritti.

Cono:
    G2:        r f_i' - 2 f_i
    deformato: (r^4 + 27/4 f_i^2) f_i' + 27/4 f_i (f_j f_j' + f_k f_k') - 2 f_i r^3
Bryant-Salamon completa (c = 1):
    G2:        (r^4 - r) f_i' - (2r^3 + 1) f_i
    deformato: (r^4 + 27/4 f_i^2 - r) f_i' + 27/4 f_i (f_j f_j' + f_k f_k') - (2r^3 + 1) f_i
BGGG:
    G2:        (16r^2-81)(16r^2-9) f1' - 2304 r f1
               r(16r^2-81) f_i' - (4r+3)(4r^2-9r+27/2) f_i            (i = 2, 3)
    deformato: ((16r^2-81)(16r^2-9) + 576 f1^2) f1' + 576 (f2 f2' + f3 f3' - 4r) f1
               (16r^3 + 18 f_X^2 - 81r) f_i'
                 - ((4r+3)(4r^2-9r+27/2) - 18 (f1' f1 + f_j' f_j)) f_i   (i = 2, 3)

Nella seconda riga deformata BGGG la variante 'printed' usa f_X = f2
per entrambe le righe, la variante 'symmetric' usa f_X = f_i.
"""

from typing import Sequence, Tuple
import logging

import numpy as np

from src.core.exceptions import DomainError, SingularPointError
from src.core.geometry.profiles import Geometry
from src.core.instanton.connection import Mode

logger = logging.getLogger(__name__)

VARIANTS = ('printed', 'symmetric')

# Punti in cui si annullano i coefficienti di f'
SINGULAR_POINTS = {
    Geometry.BGGG: (0.0, 9 / 4),
    Geometry.BS_COMPLETE: (0.0, 1.0),
    Geometry.BS_CONE: (0.0,),
}

CONE_CUBIC = 27 / 4


def _bggg_linear_rows(r):
    P = (16 * r ** 2 - 81) * (16 * r ** 2 - 9)
    Q = (4 * r + 3) * (4 * r ** 2 - 9 * r + 27 / 2)
    return P, Q


def check_regular(tag, r, tolerance: float = 1e-14):
    """
    Raises:
        SingularPointError: se r coincide con un punto singolare del sistema
    """
    geometry = Geometry.parse(tag)
    r_arr = np.atleast_1d(np.asarray(r, dtype=float))
    for r0 in SINGULAR_POINTS[geometry]:
        hit = np.abs(r_arr - r0) <= tolerance * max(1.0, r0)
        if np.any(hit):
            raise SingularPointError(
                f"r = {r0:g} e' un punto singolare del sistema {geometry.value}", r=r0)


def ode_system(tag, mode, r, f, variant: str = 'printed') -> Tuple[np.ndarray, np.ndarray]:
    """
    Matrice M e termine noto b del sistema M f' = b.

    Args:
        tag: geometria
        mode: Mode.G2 o Mode.DEFORMED
        r: raggio (scalare o griglia)
        f: valori (f1, f2, f3), forma (3,) + shape(r)
        variant: 'printed' o 'symmetric' (solo BGGG deformato)

    Returns:
        (M, b) con forme (3, 3) + shape(r) e (3,) + shape(r)
    """
    geometry = Geometry.parse(tag)
    mode = Mode.parse(mode)
    if variant not in VARIANTS:
        raise DomainError(f"Variante sconosciuta: {variant}")

    r = np.asarray(r, dtype=float)
    f = np.asarray(f, dtype=float)
    if f.shape[0] != 3:
        raise DomainError("Servono tre componenti f1, f2, f3")
    shape = np.broadcast(r, f[0]).shape
    r = np.broadcast_to(r, shape)
    f = np.broadcast_to(f, (3,) + shape)

    M = np.zeros((3, 3) + shape)
    b = np.zeros((3,) + shape)

    if geometry is Geometry.BGGG:
        P, Q = _bggg_linear_rows(r)
        if mode is Mode.G2:
            M[0, 0] = P
            b[0] = 2304 * r * f[0]
            for i in (1, 2):
                M[i, i] = r * (16 * r ** 2 - 81)
                b[i] = Q * f[i]
        else:
            M[0, 0] = P + 576 * f[0] ** 2
            M[0, 1] = 576 * f[0] * f[1]
            M[0, 2] = 576 * f[0] * f[2]
            b[0] = 2304 * r * f[0]
            for i, j in ((1, 2), (2, 1)):
                fx = f[1] if variant == 'printed' else f[i]
                M[i, i] = 16 * r ** 3 + 18 * fx ** 2 - 81 * r
                M[i, 0] = 18 * f[0] * f[i]
                M[i, j] = 18 * f[j] * f[i]
                b[i] = Q * f[i]
        return M, b

    if geometry is Geometry.BS_COMPLETE:
        diagonal = r ** 4 - r
        source = 2 * r ** 3 + 1
    else:
        diagonal = r ** 4 if mode is Mode.DEFORMED else r
        source = 2 * r ** 3 if mode is Mode.DEFORMED else 2.0 + 0 * r

    for i in range(3):
        M[i, i] = diagonal
        b[i] = source * f[i]
    if mode is Mode.DEFORMED:
        for i in range(3):
            for j in range(3):
                M[i, j] = M[i, j] + CONE_CUBIC * f[i] * f[j]
    return M, b


def ode_residual(tag, mode, f, fp, r, variant: str = 'printed',
                 allow_singular: bool = False) -> np.ndarray:
    """
    Membri sinistri del sistema in r.

    Args:
        f, fp: valori e derivate (f1, f2, f3)

    Raises:
        SingularPointError: r su un punto singolare (salvo allow_singular)
    """
    if not allow_singular:
        check_regular(tag, r)
    M, b = ode_system(tag, mode, r, f, variant)
    fp = np.asarray(fp, dtype=float)
    return np.einsum('ij...,j...->i...', M, np.broadcast_to(fp, b.shape)) - b


def residual_scale(tag, mode, f, fp, r, variant: str = 'printed') -> np.ndarray:
    """Modulo del termine piu' grande di ogni riga"""
    M, b = ode_system(tag, mode, r, f, variant)
    fp = np.broadcast_to(np.asarray(fp, dtype=float), b.shape)
    terms = np.abs(M * fp[np.newaxis])
    return np.maximum(np.max(terms, axis=1), np.abs(b))


def normalized_residual(tag, mode, f, fp, r, variant: str = 'printed',
                        allow_singular: bool = False) -> np.ndarray:
    """|residuo| / (1 + termine piu' grande), riga per riga"""
    res = ode_residual(tag, mode, f, fp, r, variant, allow_singular)
    return np.abs(res) / (1.0 + residual_scale(tag, mode, f, fp, r, variant))


def derivative_from_system(tag, mode, r, f, variant: str = 'symmetric') -> np.ndarray:
    """f' = M^-1 b in un punto regolare (r scalare)"""
    M, b = ode_system(tag, mode, r, f, variant)
    return np.linalg.solve(M, b)


def cone_reduced_residual(a: Sequence[float], f, fp, r, normalized: bool = False):
    """
    Equazione ridotta del cono per f_i = a_i f:

        f' (r^4 + 27/4 S f^2) - 2 f r^3,   S = a1^2 + a2^2 + a3^2

    Con normalized=True si usa S = 1 (forma senza dipendenza da a).
    """
    S = 1.0 if normalized else float(np.sum(np.square(a)))
    r = np.asarray(r, dtype=float)
    f = np.asarray(f, dtype=float)
    fp = np.asarray(fp, dtype=float)
    return fp * (r ** 4 + CONE_CUBIC * S * f ** 2) - 2 * f * r ** 3
