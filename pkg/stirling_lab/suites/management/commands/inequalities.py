"""
Management command to verify the determinant, product, log-convexity and Sibuya inequalities
"""
import logging

from django.conf import settings
from django.core.management.base import CommandError

from suites.management.base import ASSERTION_FAILURE, SuiteCommand, build_payload
from suites.services import HANKEL_MAX_ENTRY
from suites.tasks import dispatch
from suites.utils import RunConfig

logger = logging.getLogger(__name__)


class Command(SuiteCommand):
    help = 'Run the inequality suites over exact rationals'

    def add_arguments(self, parser):
        super().add_arguments(parser)
        parser.add_argument('--max-k', type=int, default=12, help='Largest column k')
        parser.add_argument('--det-order', type=int, default=4, help='Largest Hankel determinant order')
        parser.add_argument('--trials', type=int, default=200, help='Random product-inequality instances')
        parser.add_argument('--seed', type=int, default=None, help='Seed of the instance generator')
        self.add_timing_argument(parser)

    def handle(self, *args, **options):
        seed = options['seed'] if options['seed'] is not None else settings.STIRLING['DEFAULT_SEED']
        config = RunConfig.from_options(
            'inequalities', options,
            max_k=options['max_k'], det_order=options['det_order'], trials=options['trials'], seed=seed,
        )
        cache_dir = config.cache_dir
        jobs = [
            ('hankel-determinant', {'det_order': config.det_order, 'max_k': config.max_k,
                                    'max_entry': HANKEL_MAX_ENTRY, 'cache_dir': cache_dir}),
            ('product-inequality', {'trials': config.trials, 'seed': config.seed, 'cache_dir': cache_dir}),
            ('log-convexity', {'max_n': config.max_n, 'max_k': config.max_k, 'cache_dir': cache_dir}),
            ('sibuya', {'max_n': config.max_n, 'cache_dir': cache_dir}),
        ]
        try:
            suites = dispatch(jobs, timing=config.timing)
        except Exception as e:
            logger.error(f"Error running inequality suites: {str(e)}")
            raise CommandError(f"Inequality suites did not complete: {str(e)}", returncode=ASSERTION_FAILURE)

        payload = build_payload(config, suites)
        failed = [report['suite'] for report in suites if report['failures']]
        self.finish(config, payload, f"Failed suites: {', '.join(failed)}")
