"""
Test per i sistemi ODE degli istantoni
"""

import unittest
import sys
import os

import numpy as np

sys.path.insert(0, os.path.join(os.path.dirname(__file__), '..', '..'))

from src.core.exceptions import DomainError, SingularPointError
from src.core.instanton.connection import Mode
from src.core.instanton.odes import (
    ode_system, ode_residual, normalized_residual, derivative_from_system,
    cone_reduced_residual, check_regular,
)


class TestSingularPoints(unittest.TestCase):
    """Test punti singolari"""

    def test_bggg(self):
        with self.assertRaises(SingularPointError):
            check_regular('bggg', 2.25)
        check_regular('bggg', 2.5)

    def test_bs(self):
        with self.assertRaises(SingularPointError):
            ode_residual('bs', Mode.G2, np.zeros(3), np.zeros(3), 1.0)

    def test_allow_singular(self):
        res = ode_residual('bggg', Mode.G2, np.zeros(3), np.zeros(3), 2.25,
                           allow_singular=True)
        np.testing.assert_array_equal(res, np.zeros(3))


class TestConeSystem(unittest.TestCase):
    """Test sistemi sul cono"""

    def test_g2_closed_form(self):
        """r f' - 2f = 0 per f = r^2"""
        r = np.linspace(0.5, 3.0, 6)
        f = np.array([r ** 2] * 3)
        fp = np.array([2 * r] * 3)
        np.testing.assert_allclose(ode_residual('cone', Mode.G2, f, fp, r), 0.0, atol=1e-12)

    def test_deformed_coupling(self):
        """La matrice deformata contiene 27/4 f_i f_j"""
        M, _ = ode_system('cone', Mode.DEFORMED, 2.0, np.array([1.0, 2.0, 0.0]))
        self.assertAlmostEqual(M[0, 1], 6.75 * 2.0)
        self.assertAlmostEqual(M[0, 0], 16.0 + 6.75)

    def test_reduced_equation(self):
        """Per f_i = a_i f la riga i e' a_i volte l'equazione ridotta"""
        a = (1.0, 2.0, 2.0)
        r, f, fp = 1.3, 0.7, 0.4
        rows = ode_residual('cone', Mode.DEFORMED, np.multiply(a, f), np.multiply(a, fp), r)
        reduced = cone_reduced_residual(a, f, fp, r)
        np.testing.assert_allclose(rows, np.multiply(a, reduced), rtol=1e-12)

    def test_normalized_reduction(self):
        a = (1.0, 1.0, 1.0)
        self.assertNotAlmostEqual(cone_reduced_residual(a, 1.0, 1.0, 1.0),
                                  cone_reduced_residual(a, 1.0, 1.0, 1.0, normalized=True))


class TestBGGGSystem(unittest.TestCase):
    """Test sistemi BGGG"""

    def test_killing_dual(self):
        """f1 = (16r^2-81)/(16r^2-9) risolve la prima riga G2"""
        r = np.linspace(2.5, 10.0, 8)
        f1 = (16 * r ** 2 - 81) / (16 * r ** 2 - 9)
        fp1 = 32 * r * 72 / (16 * r ** 2 - 9) ** 2
        f = np.array([f1, 0 * r, 0 * r])
        fp = np.array([fp1, 0 * r, 0 * r])
        self.assertLess(np.max(normalized_residual('bggg', Mode.G2, f, fp, r)), 1e-12)

    def test_variants_agree_when_f2_equals_f3(self):
        f = np.array([0.3, 0.5, 0.5])
        M_p, b_p = ode_system('bggg', Mode.DEFORMED, 3.0, f, 'printed')
        M_s, b_s = ode_system('bggg', Mode.DEFORMED, 3.0, f, 'symmetric')
        np.testing.assert_allclose(M_p, M_s)
        np.testing.assert_allclose(b_p, b_s)

    def test_variants_differ(self):
        f = np.array([0.3, 0.5, -1.0])
        M_p, _ = ode_system('bggg', Mode.DEFORMED, 3.0, f, 'printed')
        M_s, _ = ode_system('bggg', Mode.DEFORMED, 3.0, f, 'symmetric')
        self.assertNotAlmostEqual(M_p[2, 2], M_s[2, 2])

    def test_unknown_variant(self):
        with self.assertRaises(DomainError):
            ode_system('bggg', Mode.DEFORMED, 3.0, np.zeros(3), 'mirrored')

    def test_derivative_from_system(self):
        """f' = M^-1 b annulla il residuo"""
        f = np.array([0.4, -0.2, 0.1])
        fp = derivative_from_system('bggg', Mode.DEFORMED, 4.0, f)
        res = ode_residual('bggg', Mode.DEFORMED, f, fp, 4.0, 'symmetric')
        np.testing.assert_allclose(res, 0.0, atol=1e-9)

    def test_wrong_component_count(self):
        with self.assertRaises(DomainError):
            ode_system('bggg', Mode.G2, 3.0, np.zeros(2))


if __name__ == '__main__':
    unittest.main(verbosity=2)
