"""
Celery Tasks for Suite Runs
Each task runs one named suite; dispatch fans a job list out and collects
the results in job order.
"""
import logging

from celery import group, shared_task
from django.conf import settings

from .services import SuiteRunner

logger = logging.getLogger(__name__)


@shared_task
def run_suite(name, params, timing=False):
    """Run one named suite and return its report as a JSON-ready dict"""
    return SuiteRunner.run(name, params, timing)


def dispatch(jobs, timing=False):
    """Run (name, params) jobs; results come back in job order either way"""
    jobs = list(jobs)
    if settings.CELERY_TASK_ALWAYS_EAGER:
        return [run_suite(name, params, timing) for name, params in jobs]
    logger.info(f"Sending {len(jobs)} suite jobs to celery workers")
    return group(run_suite.s(name, params, timing) for name, params in jobs).apply_async().get()
