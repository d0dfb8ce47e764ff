"""
Test per i profili delle strutture G2
"""

import unittest
import sys
import os
import math

import numpy as np

sys.path.insert(0, os.path.join(os.path.dirname(__file__), '..', '..'))

from src.core.geometry.profiles import Geometry, make_profiles, validate_profiles
from src.core.exceptions import DomainError


class TestGeometryParse(unittest.TestCase):
    """Test selettore di geometria"""

    def test_aliases(self):
        self.assertIs(Geometry.parse('bggg'), Geometry.BGGG)
        self.assertIs(Geometry.parse('BS'), Geometry.BS_COMPLETE)
        self.assertIs(Geometry.parse('bryant-salamon'), Geometry.BS_COMPLETE)
        self.assertIs(Geometry.parse('bs_cone'), Geometry.BS_CONE)
        self.assertIs(Geometry.parse(Geometry.BS_CONE), Geometry.BS_CONE)

    def test_unknown(self):
        with self.assertRaises(DomainError):
            Geometry.parse('taub-nut')


class TestBGGGProfiles(unittest.TestCase):
    """Test profili BGGG"""

    def setUp(self):
        self.p = make_profiles('bggg')
        self.grid = self.p.interior_grid(50)

    def test_domain(self):
        """Orbita singolare in 9/4 inclusa nel dominio"""
        self.assertEqual(self.p.singular_radius, 2.25)
        self.assertFalse(self.p.domain.open_lower)
        self.assertGreater(self.grid[0], 2.25)

    def test_collapse_at_singular_orbit(self):
        """A1 e A2 si annullano in 9/4, B1 e B2 no"""
        self.assertEqual(self.p.A1.value(2.25), 0.0)
        self.assertEqual(self.p.A2.value(2.25), 0.0)
        self.assertAlmostEqual(self.p.B1.value(2.25), 1.5)
        self.assertGreater(self.p.B2.value(2.25), 0.0)

    def test_killing_identity(self):
        """A1^2 = (16r^2 - 81)/(16r^2 - 9)"""
        r = self.grid
        np.testing.assert_allclose(self.p.A1.value(r) ** 2,
                                   (16 * r ** 2 - 81) / (16 * r ** 2 - 9), rtol=1e-13)

    def test_warp_times_A1(self):
        """Dati corretti: w A1 = 1"""
        np.testing.assert_allclose(self.p.warp.value(self.grid) * self.p.A1.value(self.grid),
                                   1.0, rtol=1e-13)

    def test_asymptotics(self):
        """A1 -> 1, B1 = 2r/3"""
        self.assertAlmostEqual(self.p.A1.value(1e6), 1.0, places=9)
        self.assertAlmostEqual(self.p.B1.value(3.0), 2.0)

    def test_validation(self):
        result = validate_profiles(self.p, self.grid)
        self.assertTrue(result.is_valid)
        self.assertEqual(result.warnings, [])

    def test_out_of_domain(self):
        with self.assertRaises(DomainError):
            self.p.A2.value(2.0)


class TestBGGGAsPrinted(unittest.TestCase):
    """Test dati BGGG come stampati"""

    def test_b2_equals_a2(self):
        p = make_profiles('bggg', as_printed=True)
        grid = p.interior_grid(20)
        np.testing.assert_array_equal(p.A2.value(grid), p.B2.value(grid))
        self.assertTrue(p.as_printed)

    def test_validation_warns(self):
        p = make_profiles('bggg', as_printed=True)
        result = validate_profiles(p, p.interior_grid(20))
        self.assertTrue(result.is_valid)
        self.assertTrue(any('torsione' in w for w in result.warnings))


class TestBryantSalamon(unittest.TestCase):
    """Test famiglia di Bryant-Salamon"""

    def test_default_scale(self):
        p = make_profiles('bs')
        self.assertEqual(p.scale, 1.0)
        self.assertEqual(p.singular_radius, 1.0)

    def test_profiles(self):
        """A = r/3 sqrt(1 - c^3/r^3), B = r/sqrt(3)"""
        p = make_profiles('bs', scale=2.0)
        r = 4.0
        self.assertAlmostEqual(p.A1.value(r), r / 3 * math.sqrt(1 - 8 / 64))
        self.assertAlmostEqual(p.B2.value(r), r / math.sqrt(3))
        self.assertAlmostEqual(p.warp.value(r), 1 / math.sqrt(1 - 8 / 64))

    def test_zero_scale_is_cone(self):
        self.assertIs(make_profiles('bs', scale=0.0).geometry, Geometry.BS_CONE)

    def test_negative_scale(self):
        with self.assertRaises(DomainError):
            make_profiles('bs', scale=-1.0)


class TestCone(unittest.TestCase):
    """Test cono"""

    def test_open_domain(self):
        p = make_profiles('cone')
        self.assertTrue(p.domain.open_lower)
        with self.assertRaises(DomainError):
            p.A1.value(0.0)

    def test_grid_starts_at_r_min(self):
        grid = make_profiles('cone').interior_grid(10)
        self.assertAlmostEqual(grid[0], 0.1)

    def test_metric_diagonal(self):
        """(2A)^2 = 4r^2/9, (2B)^2 = 4r^2/3"""
        h = make_profiles('cone').metric_diagonal()
        self.assertAlmostEqual(h[0].value(3.0), 4.0)
        self.assertAlmostEqual(h[5].value(3.0), 12.0)


if __name__ == '__main__':
    unittest.main(verbosity=2)
