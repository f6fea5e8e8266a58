"""
Management command to build, cache and print a Stirling table
"""
import logging

from django.core.management.base import CommandError

from combinatorics.exceptions import StirlingLabError
from suites.management.base import ASSERTION_FAILURE, SuiteCommand
from suites.utils import RunConfig, get_table

logger = logging.getLogger(__name__)


class Command(SuiteCommand):
    help = 'Build the Stirling triangle of one kind, write the cache file and print it'

    def add_arguments(self, parser):
        super().add_arguments(parser)
        parser.add_argument('--kind', type=int, default=2, help='1 for signed first kind, 2 for second kind')

    def handle(self, *args, **options):
        config = RunConfig.from_options('table', options, kind=options['kind'])
        try:
            table = get_table(config.kind, config.max_n, config.cache_dir)
        except StirlingLabError as e:
            logger.error(f"Error building kind {config.kind} table: {str(e)}")
            raise CommandError(str(e), returncode=ASSERTION_FAILURE)

        cells = [
            {'n': n, 'k': k, 'value': str(table.value(n, k))}
            for n in range(config.max_n + 1)
            for k in range(n + 1)
        ]
        payload = {
            'command': 'table',
            'kind': config.kind,
            'max_n': config.max_n,
            'passed': True,
            'cells': cells,
        }
        self.finish(config, payload, '')
