"""
Test per RunConfig
"""

import unittest
import sys
import os

sys.path.insert(0, os.path.join(os.path.dirname(__file__), '..', '..'))

from src.core.exceptions import ConfigError
from src.core.models.run_config import RunConfig, GridSpec, validate_run_config


class TestGridSpec(unittest.TestCase):
    """Test griglia"""

    def test_build(self):
        grid = GridSpec(r_min=1.0, r_max=100.0, count=3).build(0.5)
        self.assertAlmostEqual(grid[1], 10.0)
        grid = GridSpec(r_max=3.0, count=3, spacing='linear').build(1.0)
        self.assertEqual(list(grid), [1.0, 2.0, 3.0])

    def test_describe(self):
        self.assertEqual(GridSpec(count=5).describe(), 'log[auto, 50] x 5')


class TestRunConfig(unittest.TestCase):
    """Test aggiornamento e validazione"""

    def test_update_from_strings(self):
        config = RunConfig().update({'tan-c': '0.3', 'a': '1, 2, 2', 'points': '30',
                                     'rmin': '2.5', 'tol_torsion': '1e-6', 'r': 'none'})
        self.assertEqual(config.tan_c, 0.3)
        self.assertEqual(config.a, (1.0, 2.0, 2.0))
        self.assertEqual(config.grid.count, 30)
        self.assertEqual(config.grid.r_min, 2.5)
        self.assertEqual(config.tolerances['torsion'], 1e-6)
        self.assertIsNone(config.r)

    def test_update_native(self):
        config = RunConfig().update({'suites': ['torsion'], 'k_max': 5, 'branch': None})
        self.assertEqual(config.suites, ['torsion'])
        self.assertEqual(config.k_max, 5)
        self.assertEqual(config.branch, 0)

    def test_unknown_key(self):
        with self.assertRaises(ConfigError):
            RunConfig().update({'colour': 'red'})
        with self.assertRaises(ConfigError):
            RunConfig().update({'grid': '3'})

    def test_bad_value(self):
        with self.assertRaises(ConfigError):
            RunConfig().update({'k_max': 'many'})
        with self.assertRaises(ConfigError):
            RunConfig().update({'a': '1,2'})

    def test_output_dir_env(self):
        os.environ['DG2_OUTPUT_DIR'] = '/tmp/dg2-test'
        try:
            self.assertEqual(RunConfig().output_dir, '/tmp/dg2-test')
        finally:
            del os.environ['DG2_OUTPUT_DIR']

    def test_valid_default(self):
        self.assertTrue(validate_run_config(RunConfig()).is_valid)

    def test_invalid_grid(self):
        config = RunConfig().update({'rmin': '10', 'rmax': '5'})
        result = validate_run_config(config)
        self.assertFalse(result.is_valid)

    def test_invalid_values(self):
        for values in ({'geometry': 'taub-nut'}, {'count': '1'}, {'tol_cone': '0'},
                       {'cone_c': '-1'}, {'a': '0,0,0'}, {'epsilon': '0'},
                       {'suites': 'torsion,spectrum'}, {'output_format': 'xlsx'}):
            self.assertFalse(validate_run_config(RunConfig().update(values)).is_valid, values)

    def test_warning_for_c_outside_range(self):
        result = validate_run_config(RunConfig(tan_c=2.0))
        self.assertTrue(result.is_valid)
        self.assertTrue(result.warnings)

    def test_to_dict(self):
        data = RunConfig().to_dict()
        self.assertEqual(data['a'], [1.0, 0.0, 0.0])
        self.assertEqual(data['grid']['count'], 200)


if __name__ == '__main__':
    unittest.main(verbosity=2)
