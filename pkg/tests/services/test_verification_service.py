"""
Test per VerificationService
"""

import unittest
import sys
import os

sys.path.insert(0, os.path.join(os.path.dirname(__file__), '..', '..'))

from src.core.geometry.profiles import Geometry
from src.core.models.run_config import RunConfig, GridSpec
from src.services.verification_service import (
    VerificationService, VerificationReport, CheckOutcome, APPLICABLE,
)


def small_config(**kwargs):
    config = RunConfig(grid=GridSpec(count=20), ansatz_count=4, **kwargs)
    return config


class TestVerificationReport(unittest.TestCase):
    """Test esito complessivo"""

    def test_passed(self):
        report = VerificationReport(checks=[CheckOutcome('torsion', 'cone', 'dphi', True)])
        self.assertTrue(report.passed)
        self.assertEqual(report.exit_code, 0)

    def test_failed(self):
        report = VerificationReport(checks=[CheckOutcome('torsion', 'cone', 'dphi', False)])
        self.assertEqual(report.exit_code, 1)
        self.assertEqual(len(report.failed), 1)

    def test_informative_does_not_fail(self):
        report = VerificationReport(checks=[
            CheckOutcome('torsion', 'bggg', 'dati come stampati', False, informative=True)])
        self.assertTrue(report.passed)
        self.assertIn('INFO', report.summary_lines()[0])

    def test_non_converged_precedence(self):
        report = VerificationReport(checks=[CheckOutcome('cone', 'cone', 'x', False)],
                                    non_converged=True)
        self.assertEqual(report.exit_code, 3)

    def test_errors_fail(self):
        report = VerificationReport(errors=['bggg/limit: errore'])
        self.assertFalse(report.passed)
        self.assertEqual(report.to_dict()['exit_code'], 1)


class TestVerificationService(unittest.TestCase):
    """Test esecuzione delle suite"""

    def test_geometries(self):
        self.assertEqual(VerificationService(RunConfig(geometry='all')).geometries(),
                         list(Geometry))
        self.assertEqual(VerificationService(RunConfig(geometry='cone')).geometries(),
                         [Geometry.BS_CONE])

    def test_cone_torsion(self):
        report = VerificationService(small_config(geometry='cone')).run(['torsion'])
        self.assertTrue(report.passed, report.summary_lines())
        self.assertEqual({c.suite for c in report.checks}, {'torsion'})

    def test_bggg_torsion_flags_printed_data(self):
        report = VerificationService(small_config(geometry='bggg')).run(['torsion'])
        self.assertTrue(report.passed, report.summary_lines())
        informative = [c for c in report.checks if c.informative]
        self.assertEqual(len(informative), 1)
        self.assertFalse(informative[0].passed)
        self.assertTrue(report.warnings)

    def test_closed_forms(self):
        report = VerificationService(small_config(geometry='all')).run(['closed-form'])
        self.assertTrue(report.passed, report.summary_lines())
        self.assertEqual({c.geometry for c in report.checks}, {'bggg', 'bs', 'cone'})

    def test_series(self):
        report = VerificationService(small_config(geometry='bggg')).run(['series'])
        self.assertTrue(report.passed, report.summary_lines())
        self.assertEqual(len(report.checks), 4)

    def test_cone_suite(self):
        report = VerificationService(small_config(geometry='cone')).run(['cone'])
        self.assertTrue(report.passed, report.summary_lines())

    def test_not_applicable_skipped(self):
        self.assertNotIn('cone', APPLICABLE[Geometry.BGGG])
        report = VerificationService(small_config(geometry='bs')).run(['series', 'limit'])
        self.assertEqual(report.checks, [])
        self.assertTrue(report.passed)

    def test_config_in_report(self):
        report = VerificationService(small_config(geometry='cone')).run(['torsion'])
        self.assertEqual(report.to_dict()['config']['geometry'], 'cone')


class TestFullRun(unittest.TestCase):
    """Test esecuzione completa per geometria"""

    def assert_full_run(self, geometry):
        report = VerificationService(small_config(geometry=geometry)).run()
        self.assertEqual(report.errors, [], report.summary_lines())
        self.assertTrue(report.passed, report.summary_lines())
        self.assertEqual({c.suite for c in report.checks},
                         set(APPLICABLE[Geometry.parse(geometry)]))

    def test_bggg(self):
        self.assert_full_run('bggg')

    def test_bs(self):
        self.assert_full_run('bs')

    def test_cone(self):
        self.assert_full_run('cone')

    def test_crosscheck_details(self):
        report = VerificationService(small_config(geometry='cone')).run(['crosscheck'])
        self.assertEqual(report.errors, [])
        first = report.checks[0]
        self.assertEqual(first.geometry, 'cone')
        self.assertEqual(first.details['geometry'], 'cone')

    def test_chern_simons_details(self):
        report = VerificationService(small_config(geometry='bggg')).run(['chern-simons'])
        self.assertEqual(report.errors, [])
        integrals = [c for c in report.checks if c.name.startswith('integrale')]
        self.assertTrue(integrals)
        for check in integrals:
            self.assertIn('value', check.details)

    def test_suite_failure_isolated(self):
        """Eccezione inattesa in una suite: errore registrato, le altre proseguono"""
        service = VerificationService(small_config(geometry='cone'))

        def broken(geometry, report):
            raise TypeError("argomento inatteso")

        service._suites['torsion'] = broken
        report = service.run(['torsion', 'closed-form'])
        self.assertEqual(len(report.errors), 1)
        self.assertIn('TypeError', report.errors[0])
        self.assertEqual({c.suite for c in report.checks}, {'closed-form'})
        self.assertFalse(report.passed)
        self.assertEqual(report.exit_code, 1)


if __name__ == '__main__':
    unittest.main(verbosity=2)
