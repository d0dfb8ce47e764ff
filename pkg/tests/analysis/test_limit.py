"""
Test per il limite di scala eps -> 0
"""

import unittest
import sys
import os
import math

import numpy as np

sys.path.insert(0, os.path.join(os.path.dirname(__file__), '..', '..'))

from src.core.analysis.limit import (
    limit_profile, c_of_epsilon, scaling_limit_error, scaled_form_residual, LIMIT_C0,
)
from src.core.exceptions import DomainError

GRID = np.geomspace(2.251, 50.0, 40)


class TestLimitProfile(unittest.TestCase):
    """Test profilo limite"""

    def test_values(self):
        self.assertEqual(limit_profile(2.25), 0.0)
        self.assertAlmostEqual(float(limit_profile(1e8)), LIMIT_C0)

    def test_c_of_epsilon(self):
        self.assertAlmostEqual(c_of_epsilon(1.0), math.pi / 4)
        self.assertLess(c_of_epsilon(1e-3), math.pi / 2)
        with self.assertRaises(DomainError):
            c_of_epsilon(0.0)


class TestScalingLimit(unittest.TestCase):
    """Test convergenza al limite G2"""

    def test_error_decreases(self):
        errors = [scaling_limit_error(eps, GRID).sup_error for eps in (1e-1, 1e-2, 1e-3)]
        self.assertTrue(all(b < a for a, b in zip(errors, errors[1:])), errors)
        self.assertLess(errors[-1], 1e-2)

    def test_fixed_c_does_not_converge(self):
        """Con c fisso il riscalamento diverge"""
        c = c_of_epsilon(1e-1)
        report = scaling_limit_error(1e-3, GRID, tan_c=c)
        self.assertTrue(report.fixed_c)
        self.assertGreater(report.sup_error, 1e-2)

    def test_report(self):
        report = scaling_limit_error(1e-2, GRID)
        self.assertEqual(len(report.errors), len(GRID))
        self.assertEqual(report.to_dict()['epsilon'], 1e-2)

    def test_scaled_residual(self):
        """B = A_c / eps risolve l'equazione con parametro eps"""
        self.assertLess(scaled_form_residual(1e-2, r_grid=GRID[::4]), 1e-9)

    def test_invalid_epsilon(self):
        with self.assertRaises(DomainError):
            scaling_limit_error(-1.0, GRID)


if __name__ == '__main__':
    unittest.main(verbosity=2)
