"""
Test per i dati dei rami dell'equazione implicita
"""

import unittest
import sys
import os
import math

import numpy as np

sys.path.insert(0, os.path.join(os.path.dirname(__file__), '..', '..'))

from src.core.analysis.branches import branch_sweep, asymptote_value
from src.core.exceptions import DomainError


class TestAsymptote(unittest.TestCase):
    """Test asintoti dei rami"""

    def test_values(self):
        self.assertAlmostEqual(asymptote_value(0.0, 0), 1.5 * math.pi)
        self.assertAlmostEqual(asymptote_value(0.5, 2), 7.5 * math.pi - 1.5)

    def test_invalid(self):
        with self.assertRaises(DomainError):
            asymptote_value(math.pi / 2, 0)
        with self.assertRaises(DomainError):
            asymptote_value(0.5, -1)


class TestBranchSweep(unittest.TestCase):
    """Test tabella dei rami"""

    def test_c_zero(self):
        """c = 0: 4 rami per ogni valore di C"""
        grid = np.linspace(0.0, 20.0, 11)
        dataset = branch_sweep(0.0, 3, grid)
        self.assertEqual(dataset.columns, ['C', 'branch', 'f', 'residual'])
        self.assertEqual(len(dataset), 44)
        self.assertEqual(dataset.column('branch')[:11], [0] * 11)
        self.assertLess(max(dataset.column('residual')), 1e-9)

    def test_roots_below_asymptote(self):
        dataset = branch_sweep(0.3, 2, np.linspace(0.5, 50.0, 20))
        for row in dataset.records():
            self.assertLess(row['f'], asymptote_value(0.3, row['branch']))

    def test_c_zero_at_origin(self):
        """C = 0 con c = 0: radici 3 k pi"""
        dataset = branch_sweep(0.0, 2, [0.0])
        np.testing.assert_allclose(dataset.column('f'), [0.0, 3 * math.pi, 6 * math.pi])

    def test_radius_variable(self):
        dataset = branch_sweep(0.7, 0, [2.25, 3.0], variable='r')
        self.assertEqual(dataset.columns[0], 'r')
        self.assertEqual(dataset.column('f')[0], 0.0)

    def test_metadata(self):
        dataset = branch_sweep(0.1, 1, [1.0])
        self.assertEqual(dataset.metadata['k_max'], 1)

    def test_invalid(self):
        with self.assertRaises(DomainError):
            branch_sweep(0.1, 1, [-1.0])
        with self.assertRaises(DomainError):
            branch_sweep(0.1, 1, [2.0], variable='r')
        with self.assertRaises(DomainError):
            branch_sweep(0.1, 1, [1.0], variable='y')
        with self.assertRaises(DomainError):
            branch_sweep(2.0, 1, [1.0])


if __name__ == '__main__':
    unittest.main(verbosity=2)
