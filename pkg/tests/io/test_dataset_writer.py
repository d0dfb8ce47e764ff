"""
Test per DatasetWriter
"""

import unittest
import sys
import os
import json
import tempfile

import numpy as np

sys.path.insert(0, os.path.join(os.path.dirname(__file__), '..', '..'))

from src.core.models.dataset import Dataset
from src.io.dataset_writer import DatasetWriter, format_number, write_report_json


class TestFormatNumber(unittest.TestCase):
    """Test formattazione numerica"""

    def test_seventeen_digits(self):
        self.assertEqual(format_number(0.1), '0.10000000000000001')
        self.assertEqual(float(format_number(1 / 3)), 1 / 3)

    def test_integers_and_bools(self):
        self.assertEqual(format_number(np.int64(7)), '7')
        self.assertEqual(format_number(True), 'true')
        self.assertEqual(format_number('-7/3'), '-7/3')


class TestDatasetWriter(unittest.TestCase):
    """Test scrittura e rilettura"""

    def setUp(self):
        self.tmp = tempfile.TemporaryDirectory()
        self.writer = DatasetWriter(self.tmp.name)
        self.dataset = Dataset('demo', ['r', 'f'], metadata={'c': 0.7})
        self.dataset.add_row(2.5, 0.125)
        self.dataset.add_row(3.0, np.float64(0.25))

    def tearDown(self):
        self.tmp.cleanup()

    def test_csv(self):
        path, = self.writer.save_dataset(self.dataset, 'csv')
        with open(path, encoding='utf-8') as f:
            lines = f.read().splitlines()
        self.assertEqual(lines, ['r,f', '2.5,0.125', '3,0.25'])

    def test_json_round_trip(self):
        path, = self.writer.save_dataset(self.dataset, 'json', stem='demo_json')
        self.assertTrue(str(path).endswith('demo_json.json'))
        with open(path, encoding='utf-8') as f:
            raw = json.load(f)
        self.assertEqual(raw['_metadata']['software_version'], '1.0.0')
        data = self.writer.load_dataset(path)
        self.assertNotIn('_metadata', data)
        self.assertEqual(data['records'][1], {'r': 3.0, 'f': 0.25})
        self.assertEqual(data['parameters'], {'c': 0.7})

    def test_both(self):
        self.assertEqual(len(self.writer.save_dataset(self.dataset, 'both')), 2)

    def test_unknown_format(self):
        with self.assertRaises(ValueError):
            self.writer.save_dataset(self.dataset, 'xlsx')

    def test_load_missing(self):
        self.assertIsNone(self.writer.load_dataset(os.path.join(self.tmp.name, 'nope.json')))
        self.assertIsNotNone(self.writer.last_error)

    def test_prepare_non_finite(self):
        self.assertEqual(self.writer._prepare_value(float('inf')), 'inf')

    def test_report_json(self):
        path = write_report_json({'passed': True, 'values': np.array([1.0, 2.0])},
                                 os.path.join(self.tmp.name, 'sub', 'report.json'))
        with open(path, encoding='utf-8') as f:
            self.assertEqual(json.load(f), {'passed': True, 'values': [1.0, 2.0]})


class TestDataset(unittest.TestCase):
    """Test modello Dataset"""

    def test_column_mismatch(self):
        with self.assertRaises(ValueError):
            Dataset('x', ['a', 'b']).add_row(1)


if __name__ == '__main__':
    unittest.main(verbosity=2)
