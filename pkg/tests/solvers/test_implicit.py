"""
Test per le soluzioni implicite deformate BGGG
"""

import unittest
import sys
import os
import math

import numpy as np

sys.path.insert(0, os.path.join(os.path.dirname(__file__), '..', '..'))

from src.core.exceptions import DomainError, EmptyWindowError
from src.core.solvers.implicit import (
    branch_window, solve_tan_equation, solve_tan_implicit, implicit_derivative,
    implicit_second_derivative, endpoint_slope, principal_profile, tan_residual,
)


class TestBranchWindow(unittest.TestCase):
    """Test finestre di ramo"""

    def test_principal(self):
        lower, upper = branch_window(0.7, 0)
        self.assertEqual(lower, 0.0)
        self.assertAlmostEqual(upper, 3 * (math.pi / 2 - 0.7))

    def test_higher_branch(self):
        lower, upper = branch_window(0.7, 2)
        self.assertAlmostEqual(lower, 3 * (2 * math.pi - 0.7))
        self.assertAlmostEqual(upper - lower, 1.5 * math.pi)

    def test_empty(self):
        """Ramo 0 vuoto per c >= pi/2"""
        with self.assertRaises(EmptyWindowError):
            branch_window(math.pi / 2, 0)
        with self.assertRaises(EmptyWindowError):
            branch_window(2.0, 0)

    def test_negative_branch(self):
        with self.assertRaises(DomainError):
            branch_window(0.5, -1)


class TestSolveTan(unittest.TestCase):
    """Test radici dell'equazione implicita"""

    def test_singular_orbit(self):
        """f(9/4) = 0 sul ramo principale"""
        root = solve_tan_implicit(2.25, 0.7)
        self.assertEqual(root.f, 0.0)
        self.assertTrue(root.converged)

    def test_residual(self):
        for r in (2.3, 3.0, 10.0, 1e3):
            for c in (0.3, 0.7, 1.2):
                root = solve_tan_implicit(r, c)
                self.assertLess(root.residual, 1e-9)
                self.assertTrue(root.window[0] <= root.f <= root.window[1])

    def test_branch_value_at_singular_orbit(self):
        """Ramo k: f(9/4) = 3(k pi - c)"""
        root = solve_tan_implicit(2.25, 0.7, branch=1)
        self.assertAlmostEqual(root.f, 3 * (math.pi - 0.7))
        self.assertEqual(root.branch, 1)

    def test_asymptote(self):
        """f -> 3 pi/2 - 3c"""
        self.assertAlmostEqual(solve_tan_implicit(1e6, 0.7).f, 1.5 * math.pi - 2.1, places=5)

    def test_symmetry(self):
        """f(r; -c) = -f(r; c)"""
        self.assertAlmostEqual(solve_tan_implicit(5.0, -0.7).f, -solve_tan_implicit(5.0, 0.7).f)

    def test_negative_rhs(self):
        with self.assertRaises(DomainError):
            solve_tan_equation(-1.0, 0.5)

    def test_below_singular_orbit(self):
        with self.assertRaises(DomainError):
            solve_tan_implicit(2.0, 0.5)

    def test_tan_residual(self):
        f = 1.0
        rhs = 24 * f * math.tan(f / 3 + 0.2)
        self.assertLess(tan_residual(f, rhs, 0.2), 1e-15)


class TestImplicitDerivatives(unittest.TestCase):
    """Test derivate del profilo implicito"""

    def test_endpoint_slope_formula(self):
        """f'(9/4) = 3 cot c"""
        self.assertAlmostEqual(implicit_derivative(2.25, 0.0, 0.7), 3 / math.tan(0.7))

    def test_endpoint_second_derivative(self):
        """f''(9/4) = 2b, b = -(7a + a^3)/9"""
        a = 3 / math.tan(0.7)
        self.assertAlmostEqual(implicit_second_derivative(2.25, 0.0, 0.7),
                               -2 * (7 * a + a ** 3) / 9)

    def test_profile_derivative(self):
        """Derivata esatta contro differenza centrale"""
        f = principal_profile(0.7)
        r, h = 4.0, 1e-5
        numeric = (f.value(r + h) - f.value(r - h)) / (2 * h)
        self.assertAlmostEqual(f.derivative(r), numeric, places=7)

    def test_profile_on_grid(self):
        f = principal_profile(0.3)
        grid = np.array([2.25, 3.0, 5.0])
        values = f.value(grid)
        self.assertEqual(values.shape, (3,))
        self.assertTrue(np.all(np.diff(values) > 0))

    def test_endpoint_slope_from_roots(self):
        """f'(9/4) = 3 cot c dalle radici, anche per c piccolo (f'' grande)"""
        for c in (0.3, 0.7, 1.2):
            self.assertAlmostEqual(endpoint_slope(c), 3.0 / math.tan(c), delta=1e-6)

    def test_endpoint_slope_beats_forward_difference(self):
        """La differenza in avanti al primo ordine sbaglia di circa f'' h / 2"""
        c, h = 0.3, 1e-6
        exact = 3.0 / math.tan(c)
        forward = solve_tan_implicit(2.25 + h, c).f / h
        self.assertGreater(abs(forward - exact), 5e-5)
        self.assertLess(abs(endpoint_slope(c, h) - exact), 1e-6)

    def test_profile_invalid_c(self):
        with self.assertRaises(DomainError):
            principal_profile(0.0)
        with self.assertRaises(DomainError):
            principal_profile(2.0)


if __name__ == '__main__':
    unittest.main(verbosity=2)
