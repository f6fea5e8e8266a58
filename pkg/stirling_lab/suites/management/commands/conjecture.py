"""
Management command to sweep the nested log-concavity conjecture
"""
import logging

from django.conf import settings
from django.core.management.base import CommandError

from combinatorics.monotonicity import VERIFIED, ClaimResult, level_slices, merge_claim_results
from suites.management.base import ASSERTION_FAILURE, SuiteCommand, build_payload
from suites.tasks import dispatch
from suites.utils import USAGE_ERROR, RunConfig, parse_claims

logger = logging.getLogger(__name__)

ASSERTED_SUITES = ('theorem3', 'suffice-inequality')


class Command(SuiteCommand):
    help = 'Sweep the conjecture claims and report counterexamples as findings'

    def add_arguments(self, parser):
        super().add_arguments(parser)
        parser.add_argument('--claims', type=str, default='1,2,3,4,5,6', help='Comma separated claim ids')
        parser.add_argument('--max-k', type=int, default=None, help='Largest column k (default --max-n)')
        parser.add_argument('--max-ell', type=int, default=4, help='Largest nesting level')
        parser.add_argument('--max-findings', type=int, default=None,
                            help='Findings listed per claim (default STIRLING_MAX_FINDINGS)')
        self.add_timing_argument(parser)

    def handle(self, *args, **options):
        max_k = options['max_k'] if options['max_k'] is not None else max(options['max_n'] or 0, 1)
        max_findings = options['max_findings']
        if max_findings is None:
            max_findings = settings.STIRLING['MAX_FINDINGS']
        if max_findings < 0:
            raise CommandError(f"--max-findings must not be negative, got {max_findings}", returncode=USAGE_ERROR)
        config = RunConfig.from_options(
            'conjecture', options, max_k=max_k, ell_max=options['max_ell'], claims=parse_claims(options['claims']))

        jobs = [(name, {'max_n': config.max_n, 'cache_dir': config.cache_dir}) for name in ASSERTED_SUITES]
        for claim in config.claims:
            for ell_min, ell_max in level_slices(claim, config.ell_max):
                jobs.append(('conjecture-claim', {
                    'claim': claim, 'max_n': config.max_n, 'max_k': config.max_k,
                    'ell_min': ell_min, 'ell_max': ell_max, 'max_findings': max_findings,
                    'cache_dir': config.cache_dir,
                }))
        try:
            results = dispatch(jobs, timing=config.timing)
        except Exception as e:
            logger.error(f"Error running the conjecture sweep: {str(e)}")
            raise CommandError(f"Conjecture sweep did not complete: {str(e)}", returncode=ASSERTION_FAILURE)

        suites = results[:len(ASSERTED_SUITES)]
        parts = {}
        for part in results[len(ASSERTED_SUITES):]:
            parts.setdefault(part['claim'], []).append(ClaimResult.from_dict(part))
        claims = [merge_claim_results(parts[claim], max_findings).as_dict() for claim in config.claims]

        guard = None
        if 3 in parts:
            level_one = parts[3][0]
            guard = {
                'claim': 3,
                'ell': 1,
                'status': level_one.status,
                'violations': level_one.violations,
                'witness': level_one.witness,
            }

        payload = build_payload(config, suites, claims=claims, claim3_level1=guard)
        failed = [report['suite'] for report in suites if report['failures']]
        if guard is not None and guard['status'] != VERIFIED:
            logger.error(f"Claim 3 at level 1 has a counterexample: {guard['witness']}")
            payload['passed'] = False
            failed.append('claim 3 at level 1')
        self.finish(config, payload, f"Asserted checks failed: {', '.join(failed)}")
