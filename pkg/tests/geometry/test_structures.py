"""
Test per strutture SU(3), forme G2 e torsione
"""

import unittest
import sys
import os
import math

import numpy as np

sys.path.insert(0, os.path.join(os.path.dirname(__file__), '..', '..'))

from src.core.calculus.forms import DR, P1, P2, P3, M1, M2, M3
from src.core.geometry.profiles import make_profiles
from src.core.geometry.structures import (
    su3_structure, g2_forms, spatial_part, torsion_residual,
)


class TestSU3Structure(unittest.TestCase):
    """Test forme omega, Omega+, Omega-"""

    def test_cone_omega(self):
        """omega_(m1 p1) = 4 A1 B1 = 4 r^2 / (3 sqrt 3)"""
        omega = su3_structure(make_profiles('cone')).omega
        r = 2.0
        self.assertAlmostEqual(omega.coefficient((M1, P1)).value(r),
                               4 * r ** 2 / (3 * math.sqrt(3)))

    def test_degrees(self):
        omega, omega_plus, omega_minus, h = su3_structure(make_profiles('bggg'))
        self.assertEqual(omega.degree, 2)
        self.assertEqual(omega_plus.degree, 3)
        self.assertEqual(omega_minus.degree, 3)
        self.assertEqual(len(h), 6)

    def test_g2_forms(self):
        """phi contiene w dr^omega, psi il termine -w dr^Omega-"""
        p = make_profiles('cone')
        phi, psi = g2_forms(p)
        self.assertEqual(phi.degree, 3)
        self.assertEqual(psi.degree, 4)
        r = 1.5
        self.assertAlmostEqual(phi.coefficient((DR, M1, P1)).value(r),
                               4 * r ** 2 / (3 * math.sqrt(3)))
        self.assertAlmostEqual(psi.coefficient((DR, P1, P2, P3)).value(r),
                               8 * (r / 3) ** 3)

    def test_spatial_part(self):
        phi = g2_forms(make_profiles('cone')).phi
        spatial = spatial_part(phi)
        self.assertTrue(all(DR not in k for k in spatial.coefficients))
        self.assertIn((M1, M2, M3), spatial.coefficients)


class TestTorsion(unittest.TestCase):
    """Test dphi = 0 = dpsi"""

    def test_bggg_torsion_free(self):
        p = make_profiles('bggg')
        result = torsion_residual(p, p.interior_grid(60))
        self.assertTrue(result.passed(), result.to_dict())

    def test_bs_torsion_free(self):
        p = make_profiles('bs', scale=1.0)
        self.assertTrue(torsion_residual(p, p.interior_grid(60)).passed())

    def test_cone_torsion_free(self):
        p = make_profiles('cone')
        result = torsion_residual(p, p.interior_grid(60))
        self.assertLess(result.dphi_max, 1e-9)
        self.assertLess(result.dpsi_max, 1e-9)

    def test_bggg_as_printed_has_torsion(self):
        """I dati come stampati non sono chiusi"""
        p = make_profiles('bggg', as_printed=True)
        result = torsion_residual(p, p.interior_grid(60))
        self.assertFalse(result.passed())
        self.assertGreater(max(result.dphi_normalized, result.dpsi_normalized), 1e-6)
        self.assertTrue(result.notes)

    def test_to_dict(self):
        p = make_profiles('cone')
        data = torsion_residual(p, p.interior_grid(10)).to_dict()
        self.assertEqual(data['geometry'], 'cone')
        self.assertEqual(data['grid']['points'], 10)


if __name__ == '__main__':
    unittest.main(verbosity=2)
