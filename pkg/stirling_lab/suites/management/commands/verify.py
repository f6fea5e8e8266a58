"""
Management command to cross-check every Stirling engine
"""
import logging

from django.core.management.base import CommandError

from suites.management.base import ASSERTION_FAILURE, SuiteCommand, build_payload
from suites.services import RecurrenceSuiteService
from suites.tasks import dispatch
from suites.utils import RunConfig

logger = logging.getLogger(__name__)

RECURRENCE_SUITES = ('cross-engine', 'enumeration-oracle', 'bell-identity', 'first-kind-diagonal')


class Command(SuiteCommand):
    help = 'Run the cross-engine, oracle, Bell-identity and first-kind diagonal suites'

    def add_arguments(self, parser):
        parser.add_argument('target', type=str, choices=['recurrences'], help='What to verify')
        super().add_arguments(parser)
        self.add_timing_argument(parser)

    def handle(self, *args, **options):
        config = RunConfig.from_options('verify', options)
        jobs = [(name, {'max_n': config.max_n, 'cache_dir': config.cache_dir}) for name in RECURRENCE_SUITES]
        try:
            suites = dispatch(jobs, timing=config.timing)
            experimental = RecurrenceSuiteService.compact_form_reports(config.max_n, config.cache_dir)
        except Exception as e:
            logger.error(f"Error running recurrence suites: {str(e)}")
            raise CommandError(f"Recurrence suites did not complete: {str(e)}", returncode=ASSERTION_FAILURE)

        payload = build_payload(config, suites, experimental=experimental)
        failed = [report['suite'] for report in suites if report['failures']]
        self.finish(config, payload, f"Failed suites: {', '.join(failed)}")
