import os
import tempfile
from pathlib import Path
from unittest import mock

from django.test import SimpleTestCase, override_settings

from combinatorics.exceptions import ConsistencyError, PreconditionError
from combinatorics.inequalities import check_det_nonneg
from combinatorics.report import VerificationReport, single_check
from combinatorics.tables import StirlingKind, StirlingTable
from suites import tasks
from suites.reports import render_csv, render_text
from suites.services import (
    ConjectureService, InequalitySuiteService, RecurrenceSuiteService, SuiteRunner, _check,
)
from suites.utils import cache_path, get_table, resolve_cache_dir


class SuiteServiceTests(SimpleTestCase):

    def setUp(self):
        self._cache = tempfile.TemporaryDirectory()
        self.cache_dir = self._cache.name

    def tearDown(self):
        self._cache.cleanup()

    def test_cross_engine(self):
        report = RecurrenceSuiteService.cross_engine(12, self.cache_dir)
        self.assertEqual(report.instances, 13 * 14 // 2)
        self.assertTrue(report.passed)

    def test_bell_identity(self):
        report = RecurrenceSuiteService.bell_identity(6, self.cache_dir)
        self.assertTrue(report.passed, report.failures)
        self.assertEqual(report.instances, 28 + 7 + 36)

    def test_first_kind_diagonal(self):
        self.assertTrue(RecurrenceSuiteService.first_kind_diagonal(15, self.cache_dir).passed)

    def test_library_errors_become_failures(self):
        report = VerificationReport(suite='demo')

        def broken():
            raise ConsistencyError('row 3 sums to 4')

        self.assertFalse(_check(report, {'n': 3}, broken))
        self.assertEqual(report.failures, [{'params': {'n': '3'}, 'witness': {'error': 'row 3 sums to 4'}}])

    def test_inequality_suites(self):
        self.assertTrue(InequalitySuiteService.sibuya(20, self.cache_dir).passed)
        self.assertTrue(InequalitySuiteService.log_convexity(20, 4, self.cache_dir).passed)
        self.assertEqual(InequalitySuiteService.log_convexity(1, 4, self.cache_dir).instances, 0)
        self.assertTrue(InequalitySuiteService.product_inequality(50, 3, self.cache_dir).passed)

    def test_hankel_signed_determinants_are_checked_on_their_own(self):
        with mock.patch('suites.services.check_det_nonneg', wraps=check_det_nonneg) as checker:
            report = InequalitySuiteService.hankel_determinants(2, 1, max_entry=2, cache_dir=self.cache_dir)
        self.assertTrue(report.passed, report.failures)
        self.assertEqual(report.instances, 3 + 6)
        signed = [call.args[0].signed for call in checker.call_args_list]
        self.assertEqual(signed.count(True), report.instances)
        self.assertEqual(signed.count(False), report.instances)

    def test_hankel_failing_signed_determinant_fails_the_instance(self):
        def signed_negative(spec, table):
            return single_check('hankel-determinant', spec.as_dict(), not spec.signed, {'det': 1})

        with mock.patch('suites.services.check_det_nonneg', side_effect=signed_negative):
            report = InequalitySuiteService.hankel_determinants(1, 1, max_entry=1, cache_dir=self.cache_dir)
        self.assertEqual((report.instances, report.passes), (2, 0))

    def test_report_config_keeps_integers(self):
        report = RecurrenceSuiteService.enumeration_oracle(4, self.cache_dir)
        data = report.as_dict()
        self.assertEqual(data['config'], {'max_n': 4, 'set_partition_max_n': 4, 'permutation_max_n': 4})
        self.assertEqual(data['instances'], 2 * 15)

    def test_asserted_monotonicity_suites(self):
        self.assertTrue(ConjectureService.theorem3(25, self.cache_dir).passed)
        self.assertTrue(ConjectureService.suffice_inequality(25, self.cache_dir).passed)

    def test_runner(self):
        result = SuiteRunner.run('sibuya', {'max_n': 6, 'cache_dir': self.cache_dir})
        self.assertEqual(list(result), ['suite', 'config', 'instances', 'passes', 'failures', 'wall_time_ms'])
        self.assertIsNone(result['wall_time_ms'])
        timed = SuiteRunner.run('sibuya', {'max_n': 6, 'cache_dir': self.cache_dir}, timing=True)
        self.assertIsInstance(timed['wall_time_ms'], int)
        with self.assertRaises(PreconditionError):
            SuiteRunner.run('nonexistent', {})


class DispatchTests(SimpleTestCase):

    def setUp(self):
        self._cache = tempfile.TemporaryDirectory()
        self.jobs = [
            ('sibuya', {'max_n': 5, 'cache_dir': self._cache.name}),
            ('first-kind-diagonal', {'max_n': 4, 'cache_dir': self._cache.name}),
        ]

    def tearDown(self):
        self._cache.cleanup()

    @override_settings(CELERY_TASK_ALWAYS_EAGER=True)
    def test_in_process_keeps_job_order(self):
        results = tasks.dispatch(self.jobs)
        self.assertEqual([result['suite'] for result in results], ['sibuya', 'first-kind-diagonal'])

    @override_settings(CELERY_TASK_ALWAYS_EAGER=False)
    def test_workers_get_a_group(self):
        with mock.patch.object(tasks, 'group') as group:
            group.return_value.apply_async.return_value.get.return_value = ['first', 'second']
            self.assertEqual(tasks.dispatch(self.jobs), ['first', 'second'])
        signatures = list(group.call_args.args[0])
        self.assertEqual([signature.args[0] for signature in signatures], ['sibuya', 'first-kind-diagonal'])


class TableCacheTests(SimpleTestCase):

    def setUp(self):
        self._cache = tempfile.TemporaryDirectory()
        self.cache_dir = self._cache.name

    def tearDown(self):
        self._cache.cleanup()

    def test_cache_directory_precedence(self):
        with override_settings(STIRLING={'CACHE_DIR': '/from/env'}):
            self.assertEqual(resolve_cache_dir('/from/flag'), Path('/from/flag'))
            self.assertEqual(resolve_cache_dir(), Path('/from/env'))
        with override_settings(STIRLING={'CACHE_DIR': None}):
            with mock.patch.dict(os.environ, {'XDG_CACHE_HOME': '/xdg'}):
                self.assertEqual(resolve_cache_dir(), Path('/xdg/stirling_lab'))
            with mock.patch.dict(os.environ, {'XDG_CACHE_HOME': ''}):
                self.assertEqual(resolve_cache_dir(), Path.home() / '.cache' / 'stirling_lab')

    def test_cache_is_reused_when_large_enough(self):
        get_table(StirlingKind.SECOND, 10, self.cache_dir)
        with mock.patch.object(StirlingTable, 'build') as build:
            table = get_table(StirlingKind.SECOND, 6, self.cache_dir)
        build.assert_not_called()
        self.assertEqual(table.max_n, 10)
        self.assertEqual(table(5, 3), 25)

    def test_small_cache_is_rebuilt(self):
        get_table(StirlingKind.FIRST, 4, self.cache_dir)
        table = get_table(StirlingKind.FIRST, 9, self.cache_dir)
        self.assertEqual(table.max_n, 9)
        reloaded = StirlingTable.load(cache_path(self.cache_dir, StirlingKind.FIRST))
        self.assertEqual(reloaded.max_n, 9)

    def test_broken_cache_is_replaced(self):
        path = cache_path(self.cache_dir, StirlingKind.SECOND)
        path.write_text('2 0 0 1\n2 1 1 1\n', encoding='utf-8')
        with self.assertLogs('suites', level='WARNING'):
            table = get_table(StirlingKind.SECOND, 3, self.cache_dir)
        self.assertEqual(table(3, 2), 3)


class ReportRenderingTests(SimpleTestCase):

    def payload(self):
        report = VerificationReport(suite='sibuya', config={'max_n': 3})
        report.record(True, {'n': 2, 'k': 2})
        report.record(False, {'n': 3, 'k': 2}, {'ratio': 1})
        return {'command': 'inequalities', 'config': {'max_n': 3}, 'passed': False, 'suites': [report.as_dict()]}

    def test_csv(self):
        self.assertEqual(
            render_csv(self.payload()).splitlines(),
            ['suite,instances,passes,failures,wall_time_ms', 'sibuya,2,1,1,'],
        )

    def test_text(self):
        lines = render_text(self.payload()).splitlines()
        self.assertEqual(lines[0], 'inequalities: FAILED')
        self.assertIn('1/2 passed', lines[2])
        self.assertEqual(lines[3], '    FAIL {"n":"3","k":"2"} -> {"ratio":"1"}')
