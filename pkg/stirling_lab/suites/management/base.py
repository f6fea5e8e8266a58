"""
Shared plumbing for the suite management commands
"""
import logging
from pathlib import Path

from django.core.management.base import BaseCommand, CommandError

from suites.models import VerificationRun
from suites.reports import render_payload

logger = logging.getLogger(__name__)

ASSERTION_FAILURE = 1


class SuiteCommand(BaseCommand):
    """Common options, report emission and the optional run ledger"""

    def add_arguments(self, parser):
        parser.add_argument('--max-n', type=int, required=True, help='Largest row index n')
        parser.add_argument('--format', type=str, default=None,
                            help='Report format: text, csv or json (default from STIRLING_DEFAULT_FORMAT)')
        parser.add_argument('--output', type=str, default=None, help='Write the report to this path')
        parser.add_argument('--cache-dir', type=str, default=None, help='Directory of the table cache files')
        parser.add_argument('--record', action='store_true', help='Store a VerificationRun for this run')

    def add_timing_argument(self, parser):
        parser.add_argument('--timing', action='store_true',
                            help='Fill wall_time_ms (reports are no longer byte-identical across runs)')

    def emit(self, config, payload):
        """Write the rendered payload to --output or stdout"""
        text = render_payload(payload, config.output_format)
        if config.output:
            try:
                path = Path(config.output)
                path.parent.mkdir(parents=True, exist_ok=True)
                path.write_text(text + '\n', encoding='utf-8')
            except OSError as e:
                logger.error(f"Error writing report to {config.output}: {str(e)}")
                raise CommandError(f"Cannot write report to {config.output}: {str(e)}", returncode=ASSERTION_FAILURE)
            self.stderr.write(self.style.SUCCESS(f"Report written to {config.output}"))
        else:
            self.stdout.write(text)

    def record(self, config, payload):
        if not config.record:
            return None
        summary = [
            {
                'suite': report['suite'],
                'instances': report['instances'],
                'passes': report['passes'],
                'failures': len(report['failures']),
            }
            for report in payload.get('suites', [])
        ]
        summary += [
            {'claim': result['claim'], 'status': result['status'], 'violations': result['violations']}
            for result in payload.get('claims', [])
        ]
        run = VerificationRun.objects.create(
            command=config.command, config=config.as_dict(), summary=summary, passed=payload['passed'])
        logger.info(f"Recorded {run}")
        return run

    def finish(self, config, payload, failure_message):
        """Emit, record, then fail with exit status 1 when an asserted suite failed"""
        self.emit(config, payload)
        self.record(config, payload)
        if not payload['passed']:
            raise CommandError(failure_message, returncode=ASSERTION_FAILURE)


def build_payload(config, suites, **extra):
    """Top-level report: command, config, overall verdict, suite reports"""
    passed = all(not report['failures'] and report['passes'] == report['instances'] for report in suites)
    payload = {
        'command': config.command,
        'config': config.as_dict(),
        'passed': passed,
        'suites': suites,
    }
    payload.update(extra)
    return payload
