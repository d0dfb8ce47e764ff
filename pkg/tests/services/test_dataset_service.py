"""
Test per DatasetService
"""

import unittest
import sys
import os
import tempfile
import math

sys.path.insert(0, os.path.join(os.path.dirname(__file__), '..', '..'))

from src.core.models.run_config import RunConfig, GridSpec
from src.io.dataset_writer import DatasetWriter
from src.services.dataset_service import DatasetService, TARGETS


class TestDatasetService(unittest.TestCase):
    """Test costruzione ed emissione dataset"""

    def setUp(self):
        self.tmp = tempfile.TemporaryDirectory()
        self.config = RunConfig(grid=GridSpec(count=12), output_dir=self.tmp.name)
        self.service = DatasetService(self.config)

    def tearDown(self):
        self.tmp.cleanup()

    def test_branches(self):
        self.config.k_max = 2
        dataset = self.service.build('branches')
        self.assertEqual(len(dataset), 36)
        self.assertEqual(dataset.metadata['target'], 'branches')

    def test_profile(self):
        dataset = self.service.build('profile')
        self.assertEqual(dataset.columns, ['r', 'f', 'df', 'residual'])
        self.assertLess(max(dataset.column('residual')), 1e-9)

    def test_profile_higher_branch(self):
        self.config.branch = 1
        dataset = self.service.build('profile')
        self.assertGreater(min(dataset.column('f')), 3 * (math.pi - self.config.tan_c) - 1e-9)

    def test_cone(self):
        self.config.a = (1.0, 1.0, 1.0)
        dataset = self.service.build('cone')
        self.assertLess(max(dataset.column('residual')), 1e-9)

    def test_series(self):
        dataset = self.service.build('series')
        self.assertEqual(len(dataset), self.config.order + 1)
        self.assertEqual(dataset.column('value')[2], '-7/3')

    def test_chern_simons(self):
        self.assertEqual(set(self.service.build('chern-simons').column('density')), {0.0})

    def test_torsion(self):
        self.config.geometry = 'cone'
        dataset = self.service.build('torsion')
        self.assertEqual(dataset.metadata['geometry'], 'cone')
        self.assertLess(max(dataset.column('dphi')), 1e-9)

    def test_unknown_target(self):
        with self.assertRaises(ValueError):
            self.service.build('spectrum')

    def test_targets(self):
        self.assertIn('chern-simons', TARGETS)

    def test_emit_deterministic(self):
        """Due emissioni con la stessa configurazione danno file identici"""
        self.config.output_format = 'both'
        first = [open(p, encoding='utf-8').read() for p in self.service.emit('branches')]
        second = [open(p, encoding='utf-8').read()
                  for p in DatasetService(self.config, DatasetWriter(self.tmp.name)).emit('branches')]
        self.assertEqual(first, second)

    def test_emit_file_name(self):
        paths = self.service.emit('chern-simons')
        self.assertEqual(os.path.basename(paths[0]), 'chern_simons.csv')


if __name__ == '__main__':
    unittest.main(verbosity=2)
