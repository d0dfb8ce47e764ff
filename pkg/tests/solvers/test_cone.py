"""
Test per le soluzioni deformate sul cono
"""

import unittest
import sys
import os
import math

import numpy as np

sys.path.insert(0, os.path.join(os.path.dirname(__file__), '..', '..'))

from src.core.exceptions import DomainError
from src.core.instanton.odes import cone_reduced_residual
from src.core.solvers.cone import (
    cone_value, cone_profile, cone_implicit_residual, loglog_slope,
)


class TestConeProfile(unittest.TestCase):
    """Test profilo deformato sul cono"""

    def setUp(self):
        self.grid = np.geomspace(0.1, 50.0, 100)

    def test_origin_limit(self):
        """f -> 1/c per r -> 0"""
        self.assertAlmostEqual(cone_value(1e-6, 2.0, (1.0, 0.0, 0.0)), 0.5, places=12)

    def test_implicit_relation(self):
        for c, a in ((1.0, (1.0, 0.0, 0.0)), (2.0, (1.0, 1.0, 1.0))):
            self.assertLess(np.max(cone_implicit_residual(self.grid, c, a)), 1e-12)

    def test_reduced_ode(self):
        a = (1.0, 1.0, 1.0)
        f = cone_profile(2.0, a)
        dual = f.dual(self.grid)
        residual = cone_reduced_residual(a, dual.val, dual.der, self.grid)
        scale = 1.0 + np.abs(2 * dual.val * self.grid ** 3)
        self.assertLess(np.max(np.abs(residual) / scale), 1e-9)

    def test_monotone(self):
        f = cone_profile(1.0, (1.0, 0.0, 0.0))
        self.assertTrue(np.all(np.diff(f.value(np.geomspace(0.1, 1e6, 200))) > 0))

    def test_loglog_slope(self):
        """Crescita appena sotto r^2"""
        slope = loglog_slope(cone_profile(1.0, (1.0, 0.0, 0.0)), 1e3, 1e6)
        self.assertTrue(1.8 < slope < 2.0, slope)

    def test_scalar_value(self):
        self.assertIsInstance(cone_profile(1.0, (1.0, 0.0, 0.0)).value(1.0), float)

    def test_invalid_parameters(self):
        with self.assertRaises(DomainError):
            cone_profile(0.0, (1.0, 0.0, 0.0))
        with self.assertRaises(DomainError):
            cone_profile(1.0, (0.0, 0.0, 0.0))
        with self.assertRaises(DomainError):
            cone_profile(1.0, (1.0, 0.0))

    def test_open_domain(self):
        with self.assertRaises(DomainError):
            cone_profile(1.0, (1.0, 0.0, 0.0)).value(0.0)

    def test_sum_of_squares_rescaling(self):
        """f(r; a) dipende da a solo tramite S"""
        self.assertAlmostEqual(cone_value(3.0, 1.0, (1.0, 1.0, 1.0)),
                               cone_value(3.0, 1.0, (math.sqrt(3.0), 0.0, 0.0)))


if __name__ == '__main__':
    unittest.main(verbosity=2)
